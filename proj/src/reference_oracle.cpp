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

#include "bpword/reference_oracle.hpp"

#include <stdexcept>
#include <string>

namespace bpword {

ParenView::ParenView(Word word, std::size_t size) : single_(word), size_(size) {
	if (size > kWordBits)
		throw std::invalid_argument("ParenView: a single word holds at most 64 parentheses");
}

ParenView::ParenView(std::span<const Word> words, std::size_t size) : words_(words), size_(size) {
	if (size > words.size() * kWordBits)
		throw std::invalid_argument("ParenView: size exceeds the packed words");
}

std::int64_t excess(const ParenView& s, std::size_t i) {
	if (i > s.size())
		throw std::out_of_range("excess: position " + std::to_string(i) + " past end");
	std::int64_t e = 0;
	for (std::size_t j = 0; j < i; ++j)
		e += s[j] ? -1 : 1;
	return e;
}

std::optional<std::size_t> naive_find_close(const ParenView& s, std::size_t i) {
	if (i >= s.size())
		throw std::out_of_range("naive_find_close: position " + std::to_string(i) + " past end");
	if (!s[i])
		throw std::invalid_argument("naive_find_close: position " + std::to_string(i) +
		                            " is a closed parenthesis");
	std::size_t depth = 1;
	for (std::size_t j = i + 1; j < s.size(); ++j) {
		if (s[j]) {
			++depth;
		} else if (--depth == 0) {
			return j;
		}
	}
	return std::nullopt;
}

FarCounts naive_far_counts(const ParenView& s) noexcept {
	FarCounts far;
	for (std::size_t j = 0; j < s.size(); ++j) {
		if (s[j])
			++far.open;
		else if (far.open > 0)
			--far.open;
		else
			++far.closed;
	}
	return far;
}

std::size_t naive_select_far_closed(const ParenView& s, std::size_t p) {
	std::size_t pending = 0;
	std::size_t seen = 0;
	for (std::size_t j = 0; j < s.size(); ++j) {
		if (s[j]) {
			++pending;
		} else if (pending > 0) {
			--pending;
		} else if (seen++ == p) {
			return j;
		}
	}
	throw std::out_of_range("naive_select_far_closed: only " + std::to_string(seen) +
	                        " far closed parentheses, rank " + std::to_string(p) + " requested");
}

std::size_t forloop_find_close(std::span<const Word> words, std::size_t n, std::size_t i) noexcept {
	std::size_t w = i / kWordBits;
	Word cur = words[w] >> (i % kWordBits);
	unsigned left = kWordBits - i % kWordBits;
	std::size_t j = i;
	std::int64_t depth = 0;
	for (;;) {
		for (; left != 0; --left, cur >>= 1, ++j) {
			depth += static_cast<std::int64_t>(cur & 1) * 2 - 1;
			if (depth == 0)
				return j < n ? j : kNoPosition;
		}
		if (++w == words.size())
			return kNoPosition;
		cur = words[w];
		left = kWordBits;
	}
}

} // namespace bpword
