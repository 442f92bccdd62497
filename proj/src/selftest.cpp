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

#include "bpword/selftest.hpp"

#include "bpword/bench.hpp"
#include "bpword/bp_vector.hpp"
#include "bpword/paren_gen.hpp"
#include "bpword/reference_oracle.hpp"
#include "bpword/splitmix64.hpp"
#include "bpword/word_parens.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace bpword {

namespace {

int default_find_close(Word x) { return find_close_in_word(x); }
unsigned default_far_open(Word x) { return count_far_open(x); }
unsigned default_far_closed(Word x) { return count_far_closed(x); }
unsigned default_select(Word x, unsigned p) { return select_far_closed(x, p); }

std::string hex(Word x) {
	std::ostringstream os;
	os << "0x" << std::hex << std::setw(16) << std::setfill('0') << x;
	return os.str();
}

// Times a suite body and fills in name and duration.
template <typename Body>
SuiteReport timed(std::string name, Body&& body) {
	const auto start = std::chrono::steady_clock::now();
	SuiteReport report;
	report.name = std::move(name);
	body(report);
	report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
	return report;
}

void fail(SuiteReport& r, const std::string& detail) {
	r.passed = false;
	r.detail = detail;
}

} // namespace

SuiteReport check_find_close_in_word(std::size_t random_words, std::uint64_t seed, FindCloseKernel kernel) {
	if (!kernel)
		kernel = &default_find_close;
	return timed("find_close_in_word", [&](SuiteReport& r) {
		auto check = [&](Word x) {
			const auto match = naive_find_close(ParenView(x), 0);
			const int expected = match ? static_cast<int>(*match) : kNoMatchInWord;
			const int actual = kernel(x);
			++r.checks;
			if (actual != expected) {
				fail(r, "word " + hex(x) + ": expected " + std::to_string(expected) + ", got " +
				            std::to_string(actual));
				return false;
			}
			return true;
		};
		for (Word low = 0; low < (Word{1} << 15); ++low)
			if (!check(~Word{0} << 16 | low << 1 | 1))
				return;
		SplitMix64 rng(seed);
		for (std::size_t i = 0; i < random_words; ++i)
			if (!check(rng.next() | 1))
				return;
	});
}

SuiteReport check_far_counts(std::size_t random_words, std::uint64_t seed, FarCountKernel far_open,
                             FarCountKernel far_closed) {
	if (!far_open)
		far_open = &default_far_open;
	if (!far_closed)
		far_closed = &default_far_closed;
	return timed("far_counts", [&](SuiteReport& r) {
		SplitMix64 rng(seed);
		for (std::size_t i = 0; i < random_words + 2; ++i) {
			// The two extreme words first.
			const Word x = i == 0 ? Word{0} : i == 1 ? ~Word{0} : rng.next();
			const FarCounts expected = naive_far_counts(ParenView(x));
			const unsigned o = far_open(x);
			const unsigned c = far_closed(x);
			r.checks += 2;
			if (o != expected.open || c != expected.closed) {
				fail(r, "word " + hex(x) + ": expected (open " + std::to_string(expected.open) + ", closed " +
				            std::to_string(expected.closed) + "), got (open " + std::to_string(o) +
				            ", closed " + std::to_string(c) + ")");
				return;
			}
			if (static_cast<int>(o) - static_cast<int>(c) != 2 * std::popcount(x) - 64) {
				fail(r, "word " + hex(x) + ": open - closed != 2 popcount - 64");
				return;
			}
		}
	});
}

SuiteReport check_select_far_closed(std::size_t random_words, std::uint64_t seed, SelectFarKernel kernel) {
	if (!kernel)
		kernel = &default_select;
	return timed("select_far_closed", [&](SuiteReport& r) {
		SplitMix64 rng(seed);
		for (std::size_t i = 0; i < random_words + 1; ++i) {
			const Word x = i == 0 ? Word{0} : rng.next();
			const ParenView view(x);
			const std::size_t total = naive_far_counts(view).closed;
			int previous = -1;
			for (unsigned p = 0; p < total; ++p) {
				const std::size_t expected = naive_select_far_closed(view, p);
				const unsigned actual = kernel(x, p);
				++r.checks;
				if (actual != expected) {
					fail(r, "word " + hex(x) + " rank " + std::to_string(p) + ": expected " +
					            std::to_string(expected) + ", got " + std::to_string(actual));
					return;
				}
				if (static_cast<int>(actual) <= previous) {
					fail(r, "word " + hex(x) + ": not increasing at rank " + std::to_string(p));
					return;
				}
				previous = static_cast<int>(actual);
			}
		}
	});
}

SuiteReport check_far_composition(std::size_t pairs, std::uint64_t seed) {
	return timed("far_composition", [&](SuiteReport& r) {
		SplitMix64 rng(seed);
		for (std::size_t i = 0; i < pairs; ++i) {
			const Word x = rng.next();
			const unsigned split = 2 * static_cast<unsigned>(rng.next_below(33)); // 0, 2, ..., 64
			const FarCounts t = naive_far_counts(ParenView(x, split));
			const FarCounts u = naive_far_counts(ParenView(split == 64 ? 0 : x >> split, 64 - split));
			const FarCounts tu = naive_far_counts(ParenView(x));
			const std::size_t open = u.open + (t.open > u.closed ? t.open - u.closed : 0);
			const std::size_t closed = t.closed + (u.closed > t.open ? u.closed - t.open : 0);
			++r.checks;
			if (open != tu.open || closed != tu.closed) {
				fail(r, "word " + hex(x) + " split " + std::to_string(split) + ": composed (" +
				            std::to_string(open) + ", " + std::to_string(closed) + ") != direct (" +
				            std::to_string(tu.open) + ", " + std::to_string(tu.closed) + ")");
				return;
			}
		}
		// The packed pyramid must agree with the oracle on every block of every level.
		for (std::size_t i = 0; i < pairs / 16 + 1; ++i) {
			const Word x = rng.next();
			const FarCountPyramid f = far_count_pyramid(x);
			for (unsigned k = 1; k <= 6; ++k) {
				const unsigned width = 1u << k;
				const Word mask = width == 64 ? ~Word{0} : (Word{1} << width) - 1;
				for (unsigned s = 0; s < 64; s += width) {
					const FarCounts expected = naive_far_counts(ParenView((x >> s) & mask, width));
					const Word o = (f.open[k] >> s) & mask;
					const Word c = (f.closed[k] >> s) & mask;
					++r.checks;
					if (o != expected.open || c != expected.closed) {
						fail(r, "word " + hex(x) + " level " + std::to_string(k) + " block at " +
						            std::to_string(s) + ": pyramid (" + std::to_string(o) + ", " +
						            std::to_string(c) + ") != oracle (" + std::to_string(expected.open) +
						            ", " + std::to_string(expected.closed) + ")");
						return;
					}
				}
			}
		}
	});
}

SuiteReport check_bp_find_close(const std::vector<std::size_t>& sizes, const std::vector<double>& twists,
                                std::size_t queries, std::size_t boundary_queries, std::uint64_t seed) {
	return timed("bp_find_close", [&](SuiteReport& r) {
		auto check = [&](const BitString& s, std::size_t i, const std::string& where) {
			const auto expected = naive_find_close(s.view(), i);
			const auto actual = s.find_close(i);
			++r.checks;
			if (actual != expected) {
				const Word w = s.words()[i / kWordBits];
				fail(r, where + " position " + std::to_string(i) + " (word " + hex(w) + "): expected " +
				            (expected ? std::to_string(*expected) : "none") + ", got " +
				            (actual ? std::to_string(*actual) : "none"));
				return false;
			}
			return true;
		};

		// Hand-built boundary strings: k opens then k closes, and the
		// "()" sequences with the deep open placed at a word edge.
		for (std::size_t k : {1u, 31u, 32u, 33u, 63u, 64u, 65u, 127u, 128u, 200u}) {
			std::string text(k, '(');
			text.append(k, ')');
			const BitString s = BitString::from_string(text);
			for (std::size_t i = 0; i < k; ++i)
				if (!check(s, i, "mountain k=" + std::to_string(k)))
					return;
		}
		for (std::size_t edge : {62u, 63u, 64u, 126u, 127u}) {
			std::string text = std::string(edge, '(') + "(" + std::string(70, '(') + std::string(70, ')') +
			                   ")" + std::string(edge, ')');
			const BitString s = BitString::from_string(text);
			for (std::size_t i = 0; i < s.size(); ++i)
				if (s.get(i) && !check(s, i, "edge=" + std::to_string(edge)))
					return;
		}

		for (std::size_t n : sizes) {
			for (double t : twists) {
				const std::uint64_t cell_seed = seed ^ (n * 0x9E3779B97F4A7C15ULL) ^ std::bit_cast<std::uint64_t>(t);
				const BitString s = generate({n, t, cell_seed});
				std::ostringstream where;
				where << "n=" << n << " twist=" << t << " seed=" << cell_seed;
				for (std::size_t i : sample_open_positions(s, queries, cell_seed + 1))
					if (!check(s, i, where.str()))
						return;

				std::vector<std::size_t> boundary;
				for (std::size_t i = 0; i < n; ++i) {
					const std::size_t off = i % kWordBits;
					if ((off == 0 || off == 62 || off == 63) && s.get(i))
						boundary.push_back(i);
				}
				SplitMix64 rng(cell_seed + 2);
				for (std::size_t q = 0; q < std::min(boundary_queries, boundary.size()); ++q) {
					// Random picks when there are more candidates than the budget.
					const std::size_t i = boundary.size() <= boundary_queries
					                          ? boundary[q]
					                          : boundary[rng.next_below(boundary.size())];
					if (!check(s, i, where.str() + " boundary"))
						return;
				}
			}
		}
	});
}

SelftestOptions SelftestOptions::quick() {
	SelftestOptions o;
	o.random_words = 10'000;
	o.select_words = 10'000;
	o.composition_pairs = 10'000;
	o.sweep_sizes = {std::size_t{1} << 10, std::size_t{1} << 14};
	o.sweep_queries = 1'000;
	o.boundary_queries = 200;
	return o;
}

std::vector<SuiteReport> run_selftest(const SelftestOptions& o, std::ostream* log) {
	std::vector<SuiteReport> reports;
	auto record = [&](SuiteReport r) {
		if (log)
			*log << format_report(r) << std::endl;
		reports.push_back(std::move(r));
	};
	record(check_find_close_in_word(o.random_words, o.seed));
	record(check_far_counts(o.random_words, o.seed + 1));
	record(check_select_far_closed(o.select_words, o.seed + 2));
	record(check_far_composition(o.composition_pairs, o.seed + 3));
	record(check_bp_find_close(o.sweep_sizes, o.sweep_twists, o.sweep_queries, o.boundary_queries, o.seed + 4));
	return reports;
}

std::string format_report(const SuiteReport& r) {
	std::ostringstream os;
	os << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.checks << " checks, " << std::fixed
	   << std::setprecision(2) << r.seconds << " s)";
	if (!r.passed)
		os << ": " << r.detail;
	return os.str();
}

} // namespace bpword
