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
 * @brief Subword-parallel (broadword) primitives on 64-bit words.
 *
 * A word is viewed as 64/k independent k-bit subwords. Every operation here is
 * straight-line integer arithmetic: no branches, no tests, no loops. All
 * arithmetic wraps modulo 2^64.
 *
 * Parenthesis strings use a single bit order throughout the library: string
 * position i lives in bit i of the word (least significant first), 1 is an
 * open parenthesis and 0 a closed one.
 */

#pragma once

#include <bit>
#include <cstdint>

namespace bpword {

using Word = std::uint64_t;

inline constexpr unsigned kWordBits = 64;

/// Width in bits of the subwords a word is split into.
enum class SubwordWidth : unsigned {
	k2 = 2,
	k4 = 4,
	k8 = 8,
	k16 = 16,
	k32 = 32,
	k64 = 64,
};

inline constexpr SubwordWidth kAllSubwordWidths[] = {
	SubwordWidth::k2, SubwordWidth::k4, SubwordWidth::k8,
	SubwordWidth::k16, SubwordWidth::k32, SubwordWidth::k64,
};

constexpr unsigned bits(SubwordWidth k) noexcept { return static_cast<unsigned>(k); }

/// L_k: lowest bit of every k-bit subword set.
constexpr Word l_const(SubwordWidth k) noexcept {
	// ~0 >> (64 - k) is the all-ones k-bit value; for k = 64 the quotient is 1.
	return ~Word{0} / (~Word{0} >> (kWordBits - bits(k)));
}

/// H_k: highest bit of every k-bit subword set.
constexpr Word h_const(SubwordWidth k) noexcept { return l_const(k) << (bits(k) - 1); }

/// Lower 2^j bits of every 2^(j+1)-bit block set, j in [0, 5].
/// Equals (2^64 - 1) / (2^(2^j) + 1).
constexpr Word mu_const(unsigned j) noexcept {
	return ~Word{0} / ((Word{1} << (1u << j)) + 1);
}

inline constexpr Word kL8 = l_const(SubwordWidth::k8);
inline constexpr Word kH8 = h_const(SubwordWidth::k8);

/// Subword-wise (x - y) mod 2^k; borrows never cross subword boundaries.
constexpr Word sub_parallel(Word x, Word y, SubwordWidth k) noexcept {
	const Word h = h_const(k);
	return ((x | h) - (y & ~h)) ^ ((x ^ ~y) & h);
}

/**
 * Subword-wise x - y for the restricted case where every subword of y is at
 * most the matching subword of x and the top bit of each x subword is free.
 * Not checked; the result is unspecified otherwise.
 */
constexpr Word sub_parallel_positive(Word x, Word y, SubwordWidth k) noexcept {
	const Word h = h_const(k);
	return ((x | h) - y) ^ h;
}

/// Sets the top bit of every k-bit subword of x that is nonzero; all other bits are 0.
constexpr Word nonzero_blocks(Word x, SubwordWidth k) noexcept {
	const Word h = h_const(k);
	return (((x | h) - l_const(k)) | x) & h;
}

/**
 * Subword-wise max(x - y, 0). Every subword of x and y must be below
 * 2^(k-1), i.e. its top bit must be free (unchecked).
 */
constexpr Word truncated_diff(Word x, Word y, SubwordWidth k) noexcept {
	const Word d = sub_parallel(x, y, k);
	const Word l = l_const(k);
	// 1 in the low bit of each negative block; decrementing gives 0 there, all ones elsewhere.
	const Word keep = sub_parallel((d >> (bits(k) - 1)) & l, l, k);
	return d & keep;
}

/// Index of the least significant set bit, or -1 when x == 0.
constexpr int lsb(Word x) noexcept {
	const int tz = std::countr_zero(x);
	// tz == 64 only for x == 0; tz >> 6 is then 1.
	return tz | -(tz >> 6);
}

/// v replicated into every byte.
constexpr Word spread_byte(std::uint8_t v) noexcept { return Word{v} * kL8; }

/// Byte i of the result is the sum of bytes 0..i of x. The total must fit a byte.
constexpr Word byte_prefix_sums(Word x) noexcept { return x * kL8; }

} // namespace bpword
