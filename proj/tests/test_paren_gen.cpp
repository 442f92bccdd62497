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

#include "bpword/paren_gen.hpp"

#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

using namespace bpword;

namespace {

std::string to_text(const BitString& s) {
	std::string out;
	for (std::size_t i = 0; i < s.size(); ++i)
		out += s.get(i) ? '(' : ')';
	return out;
}

} // namespace

TEST_CASE("close_probability") {
	for (std::uint64_t k = 1; k < 50; ++k)
		CHECK(close_probability(k, k) == 1.0);
	for (std::uint64_t k = 2; k < 50; k += 2)
		CHECK(close_probability(0, k) == 0.0);
	CHECK(close_probability(1, 3) == doctest::Approx(0.5).epsilon(1e-15));
	CHECK(close_probability(2, 6) == doctest::Approx(0.5 * 2 * 10 / (6.0 * 3)));

	// Strictly below 1 whenever the close is not forced.
	for (std::uint64_t k = 1; k < 400; ++k)
		for (std::uint64_t r = k % 2; r < k; r += 2) {
			const double p = close_probability(r, k);
			REQUIRE(p >= 0.0);
			REQUIRE(p < 1.0);
		}

	CHECK_THROWS_AS(close_probability(0, 0), std::invalid_argument);
	CHECK_THROWS_AS(close_probability(5, 3), std::invalid_argument);
	CHECK_THROWS_AS(close_probability(1, 4), std::invalid_argument);
}

TEST_CASE("twisted_probability") {
	CHECK(twisted_probability(4, 4, 0.0) == 1.0);
	CHECK(twisted_probability(1, 3, 1.0) == close_probability(1, 3));
	CHECK(twisted_probability(1, 3, 0.5) == doctest::Approx(0.25).epsilon(1e-15));
	CHECK(twisted_probability(3, 7, 0.0) == 0.0);
	CHECK_THROWS_AS(twisted_probability(1, 3, 1.5), std::invalid_argument);
	CHECK_THROWS_AS(twisted_probability(1, 3, -0.1), std::invalid_argument);
	CHECK_THROWS_AS(twisted_probability(1, 3, std::nan("")), std::invalid_argument);
}

TEST_CASE("generate: forced moves") {
	CHECK(generate({0, 1.0, 0}).size() == 0);
	for (std::uint64_t seed = 0; seed < 20; ++seed)
		for (double t : {0.0, 0.25, 1.0})
			CHECK(to_text(generate({2, t, seed})) == "()");
	// Twist 0 never closes unless forced.
	CHECK(to_text(generate({8, 0.0, 3})) == "(((())))");
	CHECK_THROWS_AS(generate({3, 1.0, 0}), std::invalid_argument);
	CHECK_THROWS_AS(generate({4, 2.0, 0}), std::invalid_argument);
}

TEST_CASE("generate: uniform over balanced strings at twist 1") {
	// There are 2 balanced strings of length 4 and 5 of length 6.
	for (auto [n, count] : {std::pair<std::size_t, int>{4, 2}, {6, 5}}) {
		std::map<std::string, int> freq;
		const int draws = 50'000;
		for (int seed = 0; seed < draws; ++seed)
			++freq[to_text(generate({n, 1.0, static_cast<std::uint64_t>(seed)}))];
		REQUIRE(freq.size() == static_cast<std::size_t>(count));
		const double expected = static_cast<double>(draws) / count;
		for (const auto& [text, seen] : freq) {
			CAPTURE(text);
			// Five standard deviations of a binomial count.
			CHECK(std::abs(seen - expected) < 5 * std::sqrt(expected));
		}
	}
}

TEST_CASE("generate: balanced and deterministic") {
	for (double t : {1.0, 0.75, 0.5, 0.25})
		for (std::uint64_t seed = 0; seed < 10; ++seed) {
			const BitString a = generate({10'000, t, seed});
			CHECK(a.size() == 10'000);
			CHECK(a.is_balanced());
			CHECK(a == generate({10'000, t, seed}));
		}
	CHECK_FALSE(generate({10'000, 0.5, 1}) == generate({10'000, 0.5, 2}));
}

TEST_CASE("generate: frozen output for a fixed seed") {
	// Pins the PRNG stream and the comparison rule across platforms.
	CHECK(to_text(generate({16, 1.0, 42})) == "(())(()()()())()");
	const BitString s = generate({128, 1.0, 7});
	REQUIRE(s.words().size() == 2);
	CHECK(s.words()[0] == 0x9a8f8658a63bf4bbULL);
	CHECK(s.words()[1] == 0x0058763cca8b9a7aULL);
	const BitString deep = generate({128, 0.25, 7});
	CHECK(deep.words()[0] == 0xffdfcfdef7bff7fbULL);
	CHECK(deep.words()[1] == 0x00000000000002ffULL);
}

TEST_CASE("generate: lower twist nests deeper") {
	double previous = 0;
	for (double t : {1.0, 0.75, 0.5, 0.25}) {
		double total = 0;
		for (std::uint64_t seed = 0; seed < 20; ++seed)
			total += static_cast<double>(generate({10'000, t, seed}).max_depth());
		const double mean = total / 20;
		CAPTURE(t);
		CHECK(mean > previous);
		previous = mean;
	}
}
