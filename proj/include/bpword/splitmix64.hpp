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

#pragma once

#include <cstdint>

namespace bpword {

/**
 * SplitMix64 (Steele, Lea, Flood): a Weyl sequence passed through an
 * xor-shift-multiply finalizer. It is the only random source in the project,
 * so generated strings and sampled positions are identical on every platform.
 */
class SplitMix64 {
public:
	explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

	constexpr std::uint64_t next() noexcept {
		std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
		z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
		z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
		return z ^ (z >> 31);
	}

	/// Uniform in [0, 1) with 53 random bits.
	constexpr double next_double() noexcept {
		return static_cast<double>(next() >> 11) * 0x1.0p-53;
	}

	/// Uniform in [0, bound) by multiply-shift; bias is below 2^-64 * bound.
	constexpr std::uint64_t next_below(std::uint64_t bound) noexcept {
		__extension__ using u128 = unsigned __int128;
		return static_cast<std::uint64_t>((static_cast<u128>(next()) * bound) >> 64);
	}

	constexpr std::uint64_t state() const noexcept { return state_; }

private:
	std::uint64_t state_;
};

} // namespace bpword
