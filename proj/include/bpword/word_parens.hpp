// Copyright 2026 The bpword Authors. All rights reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * @brief Branch-free parenthesis kernels on a single 64-bit word.
 *
 * find_close_in_word() locates the parenthesis matching an open parenthesis in
 * bit 0. far_count_pyramid() and select_far_closed() count and select the
 * parentheses of a word whose match lies outside the word ("far" ones).
 *
 * Everything in this header is straight-line code; the fixed number of phases
 * is unrolled through templates. Checked wrappers that validate preconditions
 * live in word_parens_checked.hpp.
 */

#pragma once

#include "bpword/broadword.hpp"

#include <array>
#include <cstdint>

namespace bpword {

/// Returned by find_close_in_word() when the match is not inside the word.
inline constexpr int kNoMatchInWord = 127;

namespace detail {

// Byte i holds 8 * (i + 1): the position at which byte i samples the excess.
inline constexpr Word kSampleOffsets = 0x4038302820181008ULL;

// 0x7F in every byte whose low seven bits are zero, 0x80 in every other byte.
constexpr Word zero_sample_mask(Word b) noexcept {
	return (((((b | kH8) - kL8) >> 7) & kL8) | kH8) - kL8;
}

// Moves the excess samples back by the two bits at offsets Hi and Hi - 1 of
// every byte, then records candidate Hi - 2 in the bytes that hit zero.
template <unsigned Hi>
constexpr void sample_round(Word x, Word& b, Word& z) noexcept {
	constexpr Word two = kL8 << 1;
	b -= kL8 * 2 - (((x >> (Hi - 1)) & two) + ((x >> (Hi - 2)) & two));
	const Word u = zero_sample_mask(b);
	z = (z & ~u) | (((kH8 >> 1) | kL8 * (Hi - 2)) & u);
}

} // namespace detail

/**
 * Position of the closed parenthesis matching the open parenthesis at bit 0.
 *
 * Returns an odd position in [1, 63], or kNoMatchInWord when the match lies
 * beyond bit 63. Bit 0 of x must be set; the result is unspecified otherwise.
 *
 * The closed excess is sampled at the end of every byte, then every byte is
 * scanned backwards two bits at a time in parallel. z keeps, per byte, a flag
 * (0x40) and the candidate offset of the earliest zero of the excess seen in
 * that byte; the lowest flagged byte gives the answer.
 */
constexpr int find_close_in_word(Word x) noexcept {
	// Opens per byte.
	Word b = x - ((x & 0xAAAAAAAAAAAAAAAAULL) >> 1);
	b = (b & 0x3333333333333333ULL) + ((b >> 2) & 0x3333333333333333ULL);
	b = (b + (b >> 4)) & 0x0F0F0F0F0F0F0F0FULL;
	// Twice the opens up to and including each byte.
	b = byte_prefix_sums(b) << 1;
	// excess(8(i+1)) = 8(i+1) - 2 * opens. Each byte holds 0x80 + excess, so the
	// sample lives in the low seven bits and bit 7 absorbs any borrow or carry.
	b = sub_parallel_positive(kH8 | detail::kSampleOffsets, b, SubwordWidth::k8) ^ kH8;

	Word z = ((kH8 >> 1) | kL8 * 7) & detail::zero_sample_mask(b);
	detail::sample_round<7>(x, b, z);
	detail::sample_round<5>(x, b, z);
	detail::sample_round<3>(x, b, z);

	const int p = lsb((z >> 6) & kL8);
	// p == -1 turns p >> 8 into all ones, hence 127.
	return ((p + static_cast<int>((z >> (p & 63)) & 0x3F)) | (p >> 8)) & 0x7F;
}

/**
 * Far open and far closed counts for every 2^k-bit block of a word.
 *
 * open[k] / closed[k], k in [1, 5], pack one count per 2^k-bit block at the
 * block's own offset. open[6] / closed[6] are the counts for the whole word.
 * Index 0 is unused.
 */
struct FarCountPyramid {
	std::array<Word, 7> open{};
	std::array<Word, 7> closed{};
};

namespace detail {

// Pairs (bit 2i, bit 2i+1) map to far counts:
//   "((" -> 2 open, ")(" -> 1 open 1 closed, "()" -> none, "))" -> 2 closed.
constexpr void bootstrap_pairs(Word x, FarCountPyramid& f) noexcept {
	const Word first = x & 0x5555555555555555ULL;
	const Word second = (x & 0xAAAAAAAAAAAAAAAAULL) >> 1;
	const Word crossed = (first ^ second) & second;
	f.open[1] = ((first & second) << 1) | crossed;
	f.closed[1] = (((first | second) ^ 0x5555555555555555ULL) << 1) | crossed;
}

// Merges adjacent 2^K-bit blocks t (low) and u (high):
//   open(tu)   = open(u)   + max(open(t) - closed(u), 0)
//   closed(tu) = closed(t) + max(closed(u) - open(t), 0)
template <unsigned K>
constexpr void merge_level(FarCountPyramid& f) noexcept {
	constexpr unsigned half = 1u << K;
	constexpr Word low = mu_const(K);
	constexpr auto width = static_cast<SubwordWidth>(2 * half);
	const Word o = f.open[K];
	const Word c = f.closed[K];
	const Word open_t = o & low;
	const Word closed_u = (c & (low << half)) >> half;
	f.open[K + 1] = ((o & (low << half)) >> half) + truncated_diff(open_t, closed_u, width);
	f.closed[K + 1] = (c & low) + truncated_diff(closed_u, open_t, width);
}

template <unsigned... K>
constexpr FarCountPyramid build_pyramid(Word x) noexcept {
	FarCountPyramid f;
	bootstrap_pairs(x, f);
	(merge_level<K>(f), ...);
	return f;
}

// One step of the backward search: the interval [s, s + 2^(K+1)) is cut in
// halves and p is moved into the half holding its far closed parenthesis.
template <unsigned K>
constexpr void descend(const FarCountPyramid& f, Word& p, Word& s) noexcept {
	constexpr Word block = (Word{1} << (1u << K)) - 1;
	const Word closed_low = (f.closed[K] >> s) & block;
	// All ones when p >= closed_low (go to the upper half), zero otherwise.
	const Word b = ((p - closed_low) >> 63) - 1;
	const Word m = b & block;
	p -= (f.closed[K] >> s) & m;
	p += (f.open[K] >> s) & m;
	s += (Word{1} << K) & b;
}

} // namespace detail

constexpr FarCountPyramid far_count_pyramid(Word x) noexcept {
	return detail::build_pyramid<1, 2, 3, 4, 5>(x);
}

/// Closed parentheses of x whose match is not in x.
constexpr unsigned count_far_closed(Word x) noexcept {
	return static_cast<unsigned>(far_count_pyramid(x).closed[6]);
}

/// Open parentheses of x whose match is not in x.
constexpr unsigned count_far_open(Word x) noexcept {
	return static_cast<unsigned>(far_count_pyramid(x).open[6]);
}

/**
 * Position of the far closed parenthesis of rank p (0-based) in x.
 * Requires p < count_far_closed(x); the result is unspecified otherwise.
 */
constexpr unsigned select_far_closed(Word x, unsigned p) noexcept {
	const FarCountPyramid f = detail::build_pyramid<1, 2, 3, 4>(x);
	Word rank = p;
	Word s = 0;
	detail::descend<5>(f, rank, s);
	detail::descend<4>(f, rank, s);
	detail::descend<3>(f, rank, s);
	detail::descend<2>(f, rank, s);
	detail::descend<1>(f, rank, s);
	return static_cast<unsigned>(s + rank + (((x >> s) & ((rank << 1) | 1)) << 1));
}

} // namespace bpword
