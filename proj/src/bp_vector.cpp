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

#include "bpword/bp_vector.hpp"

#include "bpword/word_parens.hpp"

#include <algorithm>
#include <array>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

namespace bpword {

namespace {

std::size_t words_for(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

void put_u64(std::ostream& out, std::uint64_t v) {
	std::array<char, 8> buf;
	for (std::size_t i = 0; i < buf.size(); ++i)
		buf[i] = static_cast<char>((v >> (8 * i)) & 0xFF);
	out.write(buf.data(), buf.size());
}

bool get_u64(std::istream& in, std::uint64_t& v) {
	std::array<unsigned char, 8> buf;
	if (!in.read(reinterpret_cast<char*>(buf.data()), buf.size()))
		return false;
	v = 0;
	for (std::size_t i = 0; i < buf.size(); ++i)
		v |= std::uint64_t{buf[i]} << (8 * i);
	return true;
}

} // namespace

std::string_view to_string(FindCloseImpl impl) noexcept {
	switch (impl) {
	case FindCloseImpl::broadword: return "broadword";
	case FindCloseImpl::forloop: return "forloop";
	}
	return "unknown";
}

BitString BitString::from_bits(std::span<const std::uint8_t> bits) {
	std::vector<Word> words(words_for(bits.size()));
	for (std::size_t i = 0; i < bits.size(); ++i) {
		if (bits[i] > 1)
			throw std::invalid_argument("BitString::from_bits: value at " + std::to_string(i) +
			                            " is not 0 or 1");
		words[i / kWordBits] |= Word{bits[i]} << (i % kWordBits);
	}
	return BitString(std::move(words), bits.size());
}

BitString BitString::from_string(std::string_view parens) {
	std::vector<std::uint8_t> bits;
	bits.reserve(parens.size());
	for (char ch : parens) {
		switch (ch) {
		case '(': case '1': bits.push_back(1); break;
		case ')': case '0': bits.push_back(0); break;
		default:
			throw std::invalid_argument(std::string("BitString::from_string: unexpected character '") +
			                            ch + "'");
		}
	}
	return from_bits(bits);
}

BitString BitString::from_words(std::vector<Word> words, std::size_t size, std::size_t max_bits) {
	if (size > max_bits)
		throw std::invalid_argument("BitString: " + std::to_string(size) + " bits exceeds the maximum of " +
		                            std::to_string(max_bits));
	if (words.size() != words_for(size))
		throw std::invalid_argument("BitString: " + std::to_string(words.size()) +
		                            " words do not hold exactly " + std::to_string(size) + " bits");
	if (size % kWordBits != 0 && (words.back() >> (size % kWordBits)) != 0)
		throw std::invalid_argument("BitString: bits past the end must be zero");
	return BitString(std::move(words), size);
}

bool BitString::get(std::size_t i) const {
	if (i >= size_)
		throw std::out_of_range("BitString::get: position " + std::to_string(i) + " past end " +
		                        std::to_string(size_));
	return (words_[i / kWordBits] >> (i % kWordBits)) & 1;
}

bool BitString::is_balanced() const noexcept {
	std::int64_t e = 0;
	for (std::size_t i = 0; i < size_; ++i) {
		e += ((words_[i / kWordBits] >> (i % kWordBits)) & 1) ? -1 : 1;
		if (e > 0)
			return false;
	}
	return e == 0;
}

std::size_t BitString::max_depth() const noexcept {
	std::int64_t depth = 0;
	std::int64_t deepest = 0;
	for (std::size_t i = 0; i < size_; ++i) {
		depth += ((words_[i / kWordBits] >> (i % kWordBits)) & 1) ? 1 : -1;
		deepest = std::max(deepest, depth);
	}
	return static_cast<std::size_t>(deepest);
}

std::optional<std::size_t> BitString::find_close(std::size_t i, FindCloseImpl impl) const {
	if (!get(i))
		return std::nullopt;
	const std::size_t j = impl == FindCloseImpl::broadword ? find_close_broadword(i) : find_close_forloop(i);
	if (j == kNoPosition)
		return std::nullopt;
	return j;
}

std::size_t BitString::find_close_broadword(std::size_t i) const noexcept {
	const std::size_t w = i / kWordBits;
	const unsigned offset = i % kWordBits;
	const Word word = words_[w];

	// The shift fills the top with zeros (closed parentheses), so a match is
	// only real if it falls inside the bits that came from this word.
	const int r = find_close_in_word(word >> offset);
	if (r < static_cast<int>(kWordBits - offset) && i + r < size_)
		return i + r;

	// Clearing the bits below i turns them into far closed parentheses, which
	// leaves the far opens of the suffix unchanged. The open at i is the
	// leftmost of them, so its match is the last far closed parenthesis that
	// the following words supply for this suffix.
	std::size_t d = count_far_open(word & (~Word{0} << offset)) - 1;
	for (std::size_t j = w + 1; j < words_.size(); ++j) {
		const FarCountPyramid far = far_count_pyramid(words_[j]);
		const std::size_t closed = far.closed[6];
		if (d < closed)
			return j * kWordBits + select_far_closed(words_[j], static_cast<unsigned>(d));
		d = d - closed + far.open[6];
	}
	return kNoPosition;
}

void BitString::write(std::ostream& out) const {
	put_u64(out, size_);
	for (Word w : words_)
		put_u64(out, w);
	if (!out)
		throw std::runtime_error("BitString::write: output stream failed");
}

BitString BitString::read(std::istream& in, std::size_t max_bits) {
	std::uint64_t size = 0;
	if (!get_u64(in, size))
		throw std::runtime_error("BitString::read: missing length header");
	if (size > max_bits)
		throw std::runtime_error("BitString::read: length " + std::to_string(size) + " exceeds maximum");
	std::vector<Word> words(words_for(size));
	for (Word& w : words)
		if (!get_u64(in, w))
			throw std::runtime_error("BitString::read: truncated word data");
	try {
		return from_words(std::move(words), size, max_bits);
	} catch (const std::invalid_argument& e) {
		throw std::runtime_error(e.what());
	}
}

} // namespace bpword
