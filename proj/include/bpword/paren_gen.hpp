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
 * @brief Random balanced parentheses (Arnold and Sleep) with a twist.
 *
 * The string is built left to right. With r parentheses still open and k
 * symbols left to emit, a closed parenthesis is emitted with probability
 *
 *     P(r, k) = 1/2 * r (k + r + 2) / (k (r + 1))
 *
 * which yields uniformly random balanced strings. The twist t in [0, 1]
 * scales that probability to t * P(r, k) except when the close is forced
 * (r == k), biasing the output towards deeper nesting as t decreases.
 */

#pragma once

#include "bpword/bp_vector.hpp"

#include <cstddef>
#include <cstdint>

namespace bpword {

struct TwistedGenParams {
	std::size_t n = 0; ///< Even number of parentheses.
	double twist = 1.0; ///< In [0, 1]; 1 is the unbiased generator.
	std::uint64_t seed = 0;
};

/// P(r, k). Throws std::invalid_argument unless 0 < k, r <= k and r, k have the same parity.
double close_probability(std::uint64_t r, std::uint64_t k);

/// 1 when r == k, otherwise twist * P(r, k). Also rejects twist outside [0, 1].
double twisted_probability(std::uint64_t r, std::uint64_t k, double twist);

/// Deterministic in params. Throws std::invalid_argument for odd n, a twist
/// outside [0, 1], or n above BitString::kDefaultMaxBits.
BitString generate(const TwistedGenParams& params);

} // namespace bpword
