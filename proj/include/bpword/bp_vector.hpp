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
 * @brief Packed balanced-parentheses string with a word-scanning find_close.
 *
 * There is no auxiliary index. find_close() first probes the word holding
 * the query with find_close_in_word(); if the match is further away it
 * walks the following words, using the far-parenthesis counts to skip whole
 * words and select_far_closed() to pin the answer in the final one.
 */

#pragma once

#include "bpword/broadword.hpp"
#include "bpword/reference_oracle.hpp"

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace bpword {

/// Which find_close implementation to run.
enum class FindCloseImpl {
	broadword,
	forloop,
};

std::string_view to_string(FindCloseImpl impl) noexcept;

class BitString {
public:
	static constexpr std::size_t kDefaultMaxBits = std::size_t{1} << 32;

	BitString() = default;

	/// Packs a sequence of 0/1 values. Throws std::invalid_argument on any other value.
	static BitString from_bits(std::span<const std::uint8_t> bits);
	/// Parses "(" / ")" or "1" / "0" characters; any other character is rejected.
	static BitString from_string(std::string_view parens);
	/// Adopts packed words. Bits at positions >= size must be zero.
	static BitString from_words(std::vector<Word> words, std::size_t size,
	                            std::size_t max_bits = kDefaultMaxBits);

	std::size_t size() const noexcept { return size_; }
	bool empty() const noexcept { return size_ == 0; }
	std::span<const Word> words() const noexcept { return words_; }
	ParenView view() const { return ParenView(std::span<const Word>(words_), size_); }

	/// Throws std::out_of_range if i >= size().
	bool get(std::size_t i) const;

	/// Closed excess never positive and zero at the end: every closed
	/// parenthesis has a match. Forests such as "()()" are balanced.
	bool is_balanced() const noexcept;

	/// Largest nesting depth (open minus closed over any prefix, at least 0).
	std::size_t max_depth() const noexcept;

	/**
	 * Position of the closed parenthesis matching the open one at i. Empty if
	 * position i holds a closed parenthesis or its match is missing (the
	 * string is not balanced). Throws std::out_of_range if i >= size().
	 */
	std::optional<std::size_t> find_close(std::size_t i,
	                                      FindCloseImpl impl = FindCloseImpl::broadword) const;

	/// Broadword find_close without argument checks. Position i must be open;
	/// returns kNoPosition when no match exists.
	std::size_t find_close_broadword(std::size_t i) const noexcept;

	/// For-loop baseline with the same contract as find_close_broadword().
	std::size_t find_close_forloop(std::size_t i) const noexcept {
		return forloop_find_close(words_, size_, i);
	}

	/// 8-byte little-endian bit count, then the words as little-endian 64-bit values.
	void write(std::ostream& out) const;
	static BitString read(std::istream& in, std::size_t max_bits = kDefaultMaxBits);

	friend bool operator==(const BitString&, const BitString&) = default;

private:
	BitString(std::vector<Word> words, std::size_t size) : words_(std::move(words)), size_(size) {}

	std::vector<Word> words_;
	std::size_t size_ = 0;
};

} // namespace bpword
