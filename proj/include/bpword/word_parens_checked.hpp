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

#include "bpword/word_parens.hpp"

#include <optional>

namespace bpword {

/// find_close_in_word() with its precondition checked. Empty when bit 0 is a
/// closed parenthesis or when the match is outside the word.
constexpr std::optional<unsigned> find_close_in_word_checked(Word x) noexcept {
	if ((x & 1) == 0)
		return std::nullopt;
	const int r = find_close_in_word(x);
	if (r >= static_cast<int>(kWordBits))
		return std::nullopt;
	return static_cast<unsigned>(r);
}

/// select_far_closed() with the rank checked against count_far_closed().
constexpr std::optional<unsigned> select_far_closed_checked(Word x, unsigned p) noexcept {
	if (p >= count_far_closed(x))
		return std::nullopt;
	return select_far_closed(x, p);
}

} // namespace bpword
