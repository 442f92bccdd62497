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
 * @brief Plain for-loop versions of the parenthesis queries.
 *
 * These are the differential-testing oracle for the broadword kernels and
 * the for-loop baseline of the benchmark. They walk the string one
 * parenthesis at a time with a single counter and no auxiliary structure.
 */

#pragma once

#include "bpword/broadword.hpp"

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>

namespace bpword {

/// Read-only view of a parenthesis string, either a single word or packed words.
class ParenView {
public:
	/// The first `size` bits of one word, size <= 64.
	explicit ParenView(Word word, std::size_t size = kWordBits);
	/// `size` bits packed least significant first in `words`.
	ParenView(std::span<const Word> words, std::size_t size);

	std::size_t size() const noexcept { return size_; }

	bool operator[](std::size_t i) const noexcept {
		const Word* data = words_.empty() ? &single_ : words_.data();
		return (data[i / kWordBits] >> (i % kWordBits)) & 1;
	}

private:
	std::span<const Word> words_;
	Word single_ = 0;
	std::size_t size_ = 0;
};

struct FarCounts {
	std::size_t open = 0;
	std::size_t closed = 0;

	friend bool operator==(const FarCounts&, const FarCounts&) = default;
};

/// Closed excess: closed minus open parentheses at positions < i. Throws
/// std::out_of_range if i > s.size().
std::int64_t excess(const ParenView& s, std::size_t i);

/// Matching closed parenthesis of the open one at i, if any. Throws
/// std::out_of_range if i is out of range and std::invalid_argument if s[i]
/// is a closed parenthesis.
std::optional<std::size_t> naive_find_close(const ParenView& s, std::size_t i);

FarCounts naive_far_counts(const ParenView& s) noexcept;

/// Position of the far closed parenthesis of rank p (0-based). Throws
/// std::out_of_range if there are not more than p of them.
std::size_t naive_select_far_closed(const ParenView& s, std::size_t p);

inline constexpr std::size_t kNoPosition = std::numeric_limits<std::size_t>::max();

/**
 * Benchmark baseline: tuned for-loop matching-close search on packed words.
 * Reads each word once and walks its bits with a shift, exiting as soon as
 * the depth returns to zero. s[i] must be open; returns kNoPosition when the
 * match is not within the first n bits.
 */
std::size_t forloop_find_close(std::span<const Word> words, std::size_t n, std::size_t i) noexcept;

} // namespace bpword
