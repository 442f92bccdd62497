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

#include "bpword/bp_vector.hpp"
#include "bpword/paren_gen.hpp"
#include "bpword/splitmix64.hpp"

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

using namespace bpword;

namespace {

std::string mountain(std::size_t k) { return std::string(k, '(') + std::string(k, ')'); }

} // namespace

TEST_CASE("from_bits and get") {
	const std::vector<std::uint8_t> none;
	CHECK(BitString::from_bits(none).size() == 0);
	CHECK(BitString::from_bits(none).words().empty());

	const std::vector<std::uint8_t> bits = {1, 1, 0, 0};
	const BitString s = BitString::from_bits(bits);
	CHECK(s.size() == 4);
	REQUIRE(s.words().size() == 1);
	CHECK(s.words()[0] == 3);
	CHECK(s.get(0));
	CHECK_FALSE(s.get(3));
	CHECK_THROWS_AS(s.get(4), std::out_of_range);

	const std::vector<std::uint8_t> bad = {1, 2};
	CHECK_THROWS_AS(BitString::from_bits(bad), std::invalid_argument);
	CHECK_THROWS_AS(BitString::from_string("(x)"), std::invalid_argument);
	CHECK(BitString::from_string("(())") == s);
	CHECK(BitString::from_string("1100") == s);
}

TEST_CASE("from_bits round-trips random sequences") {
	SplitMix64 rng(31);
	for (int t = 0; t < 200; ++t) {
		std::vector<std::uint8_t> bits(rng.next_below(300));
		for (auto& b : bits)
			b = rng.next() & 1;
		const BitString s = BitString::from_bits(bits);
		REQUIRE(s.size() == bits.size());
		for (std::size_t i = 0; i < bits.size(); ++i)
			REQUIRE(s.get(i) == (bits[i] == 1));
		if (bits.size() % 64 != 0 && !s.words().empty())
			REQUIRE((s.words().back() >> (bits.size() % 64)) == 0);
	}
}

TEST_CASE("from_words validates padding and size") {
	CHECK_NOTHROW(BitString::from_words({1}, 2));
	CHECK_THROWS_AS(BitString::from_words({0b101}, 2), std::invalid_argument);
	CHECK_THROWS_AS(BitString::from_words({1, 0}, 2), std::invalid_argument);
	CHECK_THROWS_AS(BitString::from_words({0, 0}, 128, 100), std::invalid_argument);
}

TEST_CASE("is_balanced") {
	CHECK(BitString::from_string("(())").is_balanced());
	CHECK(BitString::from_string("()").is_balanced());
	CHECK(BitString::from_string("").is_balanced());
	CHECK_FALSE(BitString::from_string(")(").is_balanced());
	CHECK(BitString::from_string("()()").is_balanced());
	CHECK_FALSE(BitString::from_string("())(").is_balanced());
	CHECK_FALSE(BitString::from_string("(()").is_balanced());
	CHECK(BitString::from_string(mountain(100)).is_balanced());
}

TEST_CASE("max_depth") {
	CHECK(BitString::from_string("").max_depth() == 0);
	CHECK(BitString::from_string("()()").max_depth() == 1);
	CHECK(BitString::from_string(mountain(70)).max_depth() == 70);
}

TEST_CASE("find_close: small strings") {
	const BitString s = BitString::from_string("(())");
	CHECK(s.find_close(0) == 3u);
	CHECK(s.find_close(1) == 2u);
	CHECK_FALSE(s.find_close(2).has_value());
	CHECK_THROWS_AS(s.find_close(4), std::out_of_range);
	CHECK_FALSE(BitString::from_string("((").find_close(0).has_value());
	CHECK_FALSE(BitString::from_string("(((").find_close(1, FindCloseImpl::forloop).has_value());
}

TEST_CASE("find_close: 64 opens then 64 closes") {
	const BitString s = BitString::from_string(mountain(64));
	CHECK(s.find_close(0) == 127u);
	CHECK(s.find_close(63) == 64u);
	for (std::size_t i = 0; i < 64; ++i) {
		CHECK(s.find_close(i) == 127 - i);
		CHECK(s.find_close(i, FindCloseImpl::forloop) == 127 - i);
	}
}

TEST_CASE("find_close: match exactly at the last bit of the string") {
	// Zero padding after n must not produce a match.
	for (std::size_t k : {30u, 31u, 32u, 33u, 40u}) {
		const BitString s = BitString::from_string(mountain(k));
		CHECK(s.find_close(0) == 2 * k - 1);
		const BitString open = BitString::from_string(std::string(k, '('));
		CHECK_FALSE(open.find_close(0).has_value());
		CHECK_FALSE(open.find_close(k - 1).has_value());
	}
}

TEST_CASE("find_close: word boundary offsets 62 and 63") {
	// The open at 63 has a one-bit suffix in its word.
	for (std::size_t lead : {62u, 63u}) {
		const std::string text = std::string(lead, '(') + "()" + std::string(lead, ')');
		const BitString s = BitString::from_string(text);
		const ParenView v = s.view();
		for (std::size_t i = 0; i < s.size(); ++i)
			if (s.get(i))
				REQUIRE(s.find_close(i) == naive_find_close(v, i));
	}
}

TEST_CASE("find_close: generated strings against the oracle") {
	for (double t : {1.0, 0.75, 0.5, 0.25}) {
		for (std::uint64_t seed = 0; seed < 5; ++seed) {
			const BitString s = generate({4096, t, seed});
			REQUIRE(s.is_balanced());
			const ParenView v = s.view();
			for (std::size_t i = 0; i < s.size(); ++i) {
				if (!s.get(i))
					continue;
				const auto expected = naive_find_close(v, i);
				REQUIRE(expected.has_value());
				const auto got = s.find_close(i);
				REQUIRE(got == expected);
				REQUIRE(s.find_close(i, FindCloseImpl::forloop) == expected);
				// The match is closed and i..j is balanced.
				CHECK_FALSE(s.get(*got));
				CHECK(excess(v, *got + 1) == excess(v, i));
			}
		}
	}
}

TEST_CASE("serialization") {
	const BitString s = BitString::from_string("()");
	std::ostringstream out;
	s.write(out);
	const std::string bytes = out.str();
	REQUIRE(bytes.size() == 16);
	CHECK(bytes == std::string("\x02\0\0\0\0\0\0\0\x01\0\0\0\0\0\0\0", 16));

	SplitMix64 rng(32);
	for (int t = 0; t < 20; ++t) {
		const BitString g = generate({2 * rng.next_below(500), 0.5, rng.next()});
		std::stringstream io;
		g.write(io);
		CHECK(BitString::read(io) == g);
	}

	std::istringstream truncated(std::string("\x80\0\0\0\0\0\0\0\x01\0\0", 11));
	CHECK_THROWS_AS(BitString::read(truncated), std::runtime_error);
	std::istringstream empty;
	CHECK_THROWS_AS(BitString::read(empty), std::runtime_error);
	std::istringstream dirty(std::string("\x02\0\0\0\0\0\0\0\x05\0\0\0\0\0\0\0", 16));
	CHECK_THROWS_AS(BitString::read(dirty), std::runtime_error);
}
