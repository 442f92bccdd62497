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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bpword/broadword.hpp"
#include "bpword/splitmix64.hpp"
#include "test_util.hpp"

#include <bit>

using namespace bpword;
using bpword::test::get_subword;
using bpword::test::per_subword;
using bpword::test::set_subword;
using bpword::test::subword_mask;

namespace {

constexpr std::size_t kTrials = 1'000'000;

SubwordWidth random_width(SplitMix64& rng) { return kAllSubwordWidths[rng.next_below(6)]; }

} // namespace

TEST_CASE("subword constants") {
	CHECK(l_const(SubwordWidth::k8) == 0x0101010101010101ULL);
	CHECK(l_const(SubwordWidth::k64) == 1);
	CHECK(l_const(SubwordWidth::k2) == 0x5555555555555555ULL);
	CHECK(h_const(SubwordWidth::k8) == 0x8080808080808080ULL);
	CHECK(h_const(SubwordWidth::k64) == 0x8000000000000000ULL);
	CHECK(h_const(SubwordWidth::k2) == 0xAAAAAAAAAAAAAAAAULL);
	CHECK(mu_const(0) == 0x5555555555555555ULL);
	CHECK(mu_const(1) == 0x3333333333333333ULL);
	CHECK(mu_const(2) == 0x0F0F0F0F0F0F0F0FULL);
	CHECK(mu_const(3) == 0x00FF00FF00FF00FFULL);
	CHECK(mu_const(5) == 0x00000000FFFFFFFFULL);

	for (SubwordWidth k : kAllSubwordWidths) {
		CAPTURE(bits(k));
		for (unsigned j = 0; j < 64; ++j) {
			CHECK(((l_const(k) >> j) & 1) == (j % bits(k) == 0));
			CHECK(((h_const(k) >> j) & 1) == (j % bits(k) == bits(k) - 1));
		}
	}
	for (unsigned j = 0; j <= 5; ++j)
		for (unsigned b = 0; b < 64; ++b)
			CHECK(((mu_const(j) >> b) & 1) == (b % (2u << j) < (1u << j)));
}

TEST_CASE("sub_parallel") {
	CHECK(sub_parallel(0x0503, 0x0301, SubwordWidth::k8) == 0x0202);
	CHECK(sub_parallel(0x0001, 0x0002, SubwordWidth::k8) == 0x00FF);

	SplitMix64 rng(1);
	for (std::size_t i = 0; i < kTrials; ++i) {
		const Word x = rng.next(), y = rng.next();
		const SubwordWidth k = random_width(rng);
		const unsigned kb = bits(k);
		const Word expected = per_subword(x, y, kb, [&](Word a, Word b) { return (a - b) & subword_mask(kb); });
		REQUIRE(sub_parallel(x, y, k) == expected);
	}
}

TEST_CASE("sub_parallel: every byte pair") {
	for (Word a = 0; a < 256; ++a)
		for (Word b = 0; b < 256; ++b) {
			// Spread the pair into alternating bytes so neighbours differ.
			const Word x = a * 0x0001000100010001ULL | (255 - a) << 8;
			const Word y = b * 0x0001000100010001ULL | (255 - b) << 8;
			const Word expected = per_subword(x, y, 8, [](Word p, Word q) { return (p - q) & 0xFF; });
			REQUIRE(sub_parallel(x, y, SubwordWidth::k8) == expected);
		}
}

TEST_CASE("sub_parallel_positive") {
	CHECK(sub_parallel_positive(0x4038302820181008ULL, 0x0202020202020202ULL, SubwordWidth::k8) ==
	      0x3E362E261E160E06ULL);

	SplitMix64 rng(2);
	for (std::size_t i = 0; i < kTrials; ++i) {
		const SubwordWidth k = random_width(rng);
		const unsigned kb = bits(k);
		// Valid pair: x below the top bit, y <= x in every subword.
		Word x = rng.next() & ~h_const(k);
		Word y = 0;
		for (unsigned s = 0; s < 64 / kb; ++s)
			y = set_subword(y, kb, s, rng.next_below(get_subword(x, kb, s) + 1));
		REQUIRE(sub_parallel_positive(x, y, k) == sub_parallel(x, y, k));
		REQUIRE(sub_parallel_positive(x, x, k) == 0);
	}
}

TEST_CASE("nonzero_blocks") {
	for (SubwordWidth k : kAllSubwordWidths)
		CHECK(nonzero_blocks(0, k) == 0);
	CHECK(nonzero_blocks(0x0000000000000100ULL, SubwordWidth::k8) == 0x0000000000008000ULL);

	SplitMix64 rng(3);
	for (std::size_t i = 0; i < kTrials; ++i) {
		const SubwordWidth k = random_width(rng);
		const unsigned kb = bits(k);
		// Clear random subwords so zero blocks are common.
		Word x = rng.next() & rng.next();
		const Word holes = rng.next();
		for (unsigned s = 0; s < 64 / kb; ++s)
			if ((holes >> s) & 1)
				x = set_subword(x, kb, s, 0);
		Word expected = 0;
		int nonzero = 0;
		for (unsigned s = 0; s < 64 / kb; ++s)
			if (get_subword(x, kb, s) != 0) {
				expected |= Word{1} << (s * kb + kb - 1);
				++nonzero;
			}
		const Word got = nonzero_blocks(x, k);
		REQUIRE(got == expected);
		REQUIRE((got & ~h_const(k)) == 0);
		REQUIRE(std::popcount(got) == nonzero);
	}
}

TEST_CASE("truncated_diff") {
	CHECK(truncated_diff(0x0503, 0x0305, SubwordWidth::k8) == 0x0200);

	SplitMix64 rng(4);
	for (std::size_t i = 0; i < kTrials; ++i) {
		const SubwordWidth k = random_width(rng);
		const unsigned kb = bits(k);
		const Word x = rng.next() & ~h_const(k);
		const Word y = rng.next() & ~h_const(k);
		const Word expected = per_subword(x, y, kb, [](Word a, Word b) { return a > b ? a - b : 0; });
		REQUIRE(truncated_diff(x, y, k) == expected);
		REQUIRE(truncated_diff(x, x, k) == 0);
	}
}

TEST_CASE("lsb") {
	CHECK(lsb(0) == -1);
	CHECK(lsb(1) == 0);
	CHECK(lsb(0x8000000000000000ULL) == 63);
	static_assert(lsb(0x10) == 4);

	SplitMix64 rng(5);
	for (std::size_t i = 0; i < 100'000; ++i) {
		const Word x = rng.next() >> rng.next_below(64) << rng.next_below(64);
		const int p = lsb(x);
		if (x == 0) {
			REQUIRE(p == -1);
		} else {
			REQUIRE(p >= 0);
			REQUIRE((x & (Word{1} << p)) != 0);
			REQUIRE((x & ((Word{1} << p) - 1)) == 0);
		}
	}
}

TEST_CASE("spread_byte") {
	CHECK(spread_byte(0x12) == 0x1212121212121212ULL);
	CHECK(spread_byte(0) == 0);
	CHECK(spread_byte(0xFF) == 0xFFFFFFFFFFFFFFFFULL);
}

TEST_CASE("byte_prefix_sums") {
	const Word sums = byte_prefix_sums(0x030702);
	CHECK((sums & 0xFFFFFF) == 0x0C0902);
	CHECK(byte_prefix_sums(0) == 0);

	SplitMix64 rng(6);
	for (std::size_t i = 0; i < kTrials; ++i) {
		// At most 15 per byte: a, b and a + b all total below 256.
		Word a = 0, b = 0;
		for (unsigned s = 0; s < 8; ++s) {
			a = set_subword(a, 8, s, rng.next_below(16));
			b = set_subword(b, 8, s, rng.next_below(16));
		}
		Word expected = 0;
		unsigned running = 0;
		for (unsigned s = 0; s < 8; ++s) {
			running += static_cast<unsigned>(get_subword(a, 8, s));
			expected = set_subword(expected, 8, s, running);
		}
		REQUIRE(byte_prefix_sums(a) == expected);
		REQUIRE(byte_prefix_sums(a) + byte_prefix_sums(b) == byte_prefix_sums(a + b));
	}
}
