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
 * @brief Differential suites: broadword kernels against the for-loop oracle.
 *
 * Each suite stops at the first mismatch and reports the offending input in
 * hex together with the expected and actual values. Kernels are passed as
 * function pointers so that a deliberately broken variant can be checked to
 * be caught.
 */

#pragma once

#include "bpword/broadword.hpp"

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace bpword {

struct SuiteReport {
	std::string name;
	bool passed = true;
	std::uint64_t checks = 0; ///< Individual comparisons performed.
	std::string detail;       ///< Counterexample on failure.
	double seconds = 0;
};

using FindCloseKernel = int (*)(Word);
using FarCountKernel = unsigned (*)(Word);
using SelectFarKernel = unsigned (*)(Word, unsigned);

/// All 2^15 words with bit 0 set, bits 1..15 free and bits 16..63 set, then
/// `random_words` seeded random words with bit 0 forced to 1.
SuiteReport check_find_close_in_word(std::size_t random_words, std::uint64_t seed,
                                     FindCloseKernel kernel = nullptr);

/// Far counts against the oracle, plus open - closed = 2 popcount - 64.
SuiteReport check_far_counts(std::size_t random_words, std::uint64_t seed,
                             FarCountKernel far_open = nullptr, FarCountKernel far_closed = nullptr);

/// Every valid rank of every word; also strict monotonicity in the rank.
SuiteReport check_select_far_closed(std::size_t random_words, std::uint64_t seed,
                                    SelectFarKernel kernel = nullptr);

/// Far counts of a concatenation tu from those of t and u, on random words
/// split at random even positions. Also checks the packed pyramid levels.
SuiteReport check_far_composition(std::size_t pairs, std::uint64_t seed);

/// BitString::find_close against naive_find_close on generated strings:
/// `queries` uniform open positions per (size, twist), plus up to
/// `boundary_queries` open positions with i mod 64 in {0, 62, 63}, plus a
/// fixed set of hand-built word-boundary strings.
SuiteReport check_bp_find_close(const std::vector<std::size_t>& sizes, const std::vector<double>& twists,
                                std::size_t queries, std::size_t boundary_queries, std::uint64_t seed);

struct SelftestOptions {
	std::size_t random_words = 1'000'000;
	std::size_t select_words = 100'000;
	std::size_t composition_pairs = 100'000;
	std::vector<std::size_t> sweep_sizes = {std::size_t{1} << 10, std::size_t{1} << 14,
	                                        std::size_t{1} << 17, std::size_t{1} << 20};
	std::vector<double> sweep_twists = {1.0, 0.75, 0.5, 0.25};
	std::size_t sweep_queries = 10'000;
	std::size_t boundary_queries = 1'000;
	std::uint64_t seed = 0xB0A7C0DE;

	/// 10^4 random words, small sweep; the exhaustive family is unchanged.
	static SelftestOptions quick();
};

/// Runs every suite, printing one PASS/FAIL line per suite to `log` if non-null.
std::vector<SuiteReport> run_selftest(const SelftestOptions& options, std::ostream* log = nullptr);

/// "PASS name (checks, seconds)" or "FAIL name: detail".
std::string format_report(const SuiteReport& report);

} // namespace bpword
