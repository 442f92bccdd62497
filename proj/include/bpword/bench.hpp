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
 * @brief find_close timing harness: broadword against the for-loop baseline.
 *
 * For every (size, twist) cell a balanced string is generated and a fixed
 * number of query positions (uniform over the open parentheses) is stored up
 * front. Each repeat then reads the positions in order, calls find_close and
 * folds the answers into a checksum, timed with a monotonic clock.
 */

#pragma once

#include "bpword/bp_vector.hpp"

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace bpword {

enum class BenchFormat {
	csv,
	table,
};

struct BenchConfig {
	std::vector<std::size_t> sizes = default_sizes();
	std::vector<double> twists = {1.0, 0.75, 0.50, 0.25};
	std::size_t queries = 1'000'000;
	std::size_t repeats = 10;
	std::uint64_t seed = 0x5EED;
	BenchFormat format = BenchFormat::csv;

	/// 2^10, 2^11, ..., 2^24.
	static std::vector<std::size_t> default_sizes();

	/// Throws std::invalid_argument when a field is out of range.
	void validate() const;
};

struct ImplTiming {
	double mean_ns = 0;       ///< Mean nanoseconds per query over the repeats.
	double sd_ns = 0;         ///< Standard deviation of the per-repeat means.
	std::uint64_t checksum = 0;
	bool stable_checksum = true; ///< Every repeat produced the same checksum.
};

struct BenchCell {
	std::size_t n = 0;
	double twist = 0;
	std::size_t max_depth = 0;
	ImplTiming broadword;
	ImplTiming forloop;
	std::string error; ///< Non-empty when the cell was aborted.

	bool ok() const noexcept { return error.empty(); }
	bool checksums_agree() const noexcept {
		return broadword.checksum == forloop.checksum && broadword.stable_checksum &&
		       forloop.stable_checksum;
	}
};

struct BenchResult {
	BenchConfig config;
	std::vector<BenchCell> cells; ///< Row-major: sizes outer, twists inner.

	/// Every cell completed and both implementations agreed.
	bool all_ok() const noexcept;
};

/// `count` positions drawn uniformly among the open parentheses of s.
/// Throws std::invalid_argument if s has no open parenthesis.
std::vector<std::size_t> sample_open_positions(const BitString& s, std::size_t count, std::uint64_t seed);

/// Times one implementation over the stored positions.
ImplTiming time_find_close(const BitString& s, std::span<const std::size_t> positions,
                           std::size_t repeats, FindCloseImpl impl);

/// Runs every cell; a cell that throws records its error and the rest proceed.
/// Progress lines go to `log` when it is non-null.
BenchResult run_bench(const BenchConfig& config, std::ostream* log = nullptr);

/// Header `n,twist,broadword_ns,forloop_ns,broadword_sd,forloop_sd`, one line per cell.
void write_csv(const BenchResult& result, std::ostream& out);

/// Sizes as rows, twists as columns, "broadword / forloop" ns in each cell.
void write_table(const BenchResult& result, std::ostream& out);

/// Methodology notes and per-cell checksums, each line prefixed with "# ".
void write_metadata(const BenchResult& result, std::ostream& out);

} // namespace bpword
