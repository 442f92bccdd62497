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

#include "bpword/paren_gen.hpp"

#include "bpword/splitmix64.hpp"

#include <cassert>
#include <stdexcept>
#include <string>
#include <vector>

namespace bpword {

namespace {

void check_state(std::uint64_t r, std::uint64_t k) {
	if (k == 0)
		throw std::invalid_argument("close_probability: no symbols left (k = 0)");
	if (r > k || (r ^ k) & 1)
		throw std::invalid_argument("close_probability: invalid state r = " + std::to_string(r) +
		                            ", k = " + std::to_string(k));
}

void check_twist(double twist) {
	if (!(twist >= 0.0 && twist <= 1.0))
		throw std::invalid_argument("twist must lie in [0, 1], got " + std::to_string(twist));
}

double unchecked_close_probability(std::uint64_t r, std::uint64_t k) {
	const double rd = static_cast<double>(r);
	const double kd = static_cast<double>(k);
	// For r < k: r (k + r + 2) < 2k (r + 1)  <=>  (r + 2)(r - k) < 0, so P < 1.
	const double p = 0.5 * (rd * (kd + rd + 2.0)) / (kd * (rd + 1.0));
	assert(p >= 0.0 && p <= 1.0);
	return p;
}

} // namespace

double close_probability(std::uint64_t r, std::uint64_t k) {
	check_state(r, k);
	return unchecked_close_probability(r, k);
}

double twisted_probability(std::uint64_t r, std::uint64_t k, double twist) {
	check_state(r, k);
	check_twist(twist);
	if (r == k)
		return 1.0;
	return twist * unchecked_close_probability(r, k);
}

BitString generate(const TwistedGenParams& params) {
	if (params.n % 2 != 0)
		throw std::invalid_argument("generate: length must be even, got " + std::to_string(params.n));
	if (params.n > BitString::kDefaultMaxBits)
		throw std::invalid_argument("generate: length " + std::to_string(params.n) + " exceeds maximum");
	check_twist(params.twist);

	SplitMix64 rng(params.seed);
	std::vector<Word> words((params.n + kWordBits - 1) / kWordBits);
	std::uint64_t r = 0;
	for (std::uint64_t k = params.n, i = 0; k > 0; --k, ++i) {
		bool close;
		if (r == k) {
			close = true;
		} else if (r == 0) {
			close = false;
		} else {
			close = rng.next_double() < params.twist * unchecked_close_probability(r, k);
		}
		if (close) {
			--r;
		} else {
			++r;
			words[i / kWordBits] |= Word{1} << (i % kWordBits);
		}
	}
	return BitString::from_words(std::move(words), params.n);
}

} // namespace bpword
