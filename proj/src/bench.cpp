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

#include "bpword/bench.hpp"

#include "bpword/paren_gen.hpp"
#include "bpword/splitmix64.hpp"

#include <bit>
#include <chrono>
#include <cmath>
#include <exception>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace bpword {

namespace {

// Keeps the compiler from dropping or hoisting the timed loop.
template <typename T>
inline void do_not_optimize(const T& value) {
	asm volatile("" : : "r,m"(value) : "memory");
}

template <FindCloseImpl Impl>
std::uint64_t fold_queries(const BitString& s, std::span<const std::size_t> positions) {
	std::uint64_t checksum = 0;
	for (std::size_t i : positions) {
		std::size_t j;
		if constexpr (Impl == FindCloseImpl::broadword)
			j = s.find_close_broadword(i);
		else
			j = s.find_close_forloop(i);
		checksum = std::rotl(checksum, 1) ^ j;
	}
	return checksum;
}

std::string format_twist(double t) {
	std::ostringstream os;
	os << std::setprecision(4) << t;
	return os.str();
}

} // namespace

std::vector<std::size_t> BenchConfig::default_sizes() {
	std::vector<std::size_t> sizes;
	for (unsigned e = 10; e <= 24; ++e)
		sizes.push_back(std::size_t{1} << e);
	return sizes;
}

void BenchConfig::validate() const {
	if (sizes.empty())
		throw std::invalid_argument("bench: no sizes given");
	for (std::size_t n : sizes)
		if (n < 2 || n % 2 != 0 || n > BitString::kDefaultMaxBits)
			throw std::invalid_argument("bench: size " + std::to_string(n) + " must be even, >= 2 and <= 2^32");
	if (twists.empty())
		throw std::invalid_argument("bench: no twists given");
	for (double t : twists)
		if (!(t >= 0.0 && t <= 1.0))
			throw std::invalid_argument("bench: twist " + format_twist(t) + " outside [0, 1]");
	if (queries < 1)
		throw std::invalid_argument("bench: queries must be >= 1");
	if (repeats < 1)
		throw std::invalid_argument("bench: repeats must be >= 1");
}

bool BenchResult::all_ok() const noexcept {
	for (const BenchCell& c : cells)
		if (!c.ok() || !c.checksums_agree())
			return false;
	return !cells.empty();
}

std::vector<std::size_t> sample_open_positions(const BitString& s, std::size_t count, std::uint64_t seed) {
	std::vector<std::size_t> opens;
	for (std::size_t w = 0; w < s.words().size(); ++w)
		for (Word bits = s.words()[w]; bits != 0; bits &= bits - 1)
			opens.push_back(w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits)));
	if (opens.empty())
		throw std::invalid_argument("sample_open_positions: string has no open parenthesis");

	SplitMix64 rng(seed);
	std::vector<std::size_t> positions(count);
	for (std::size_t& p : positions)
		p = opens[rng.next_below(opens.size())];
	return positions;
}

ImplTiming time_find_close(const BitString& s, std::span<const std::size_t> positions,
                           std::size_t repeats, FindCloseImpl impl) {
	using Clock = std::chrono::steady_clock;
	std::vector<double> per_query_ns;
	per_query_ns.reserve(repeats);
	ImplTiming timing;
	for (std::size_t rep = 0; rep < repeats; ++rep) {
		const auto start = Clock::now();
		const std::uint64_t checksum = impl == FindCloseImpl::broadword
		                                   ? fold_queries<FindCloseImpl::broadword>(s, positions)
		                                   : fold_queries<FindCloseImpl::forloop>(s, positions);
		do_not_optimize(checksum);
		const auto stop = Clock::now();
		const double ns = std::chrono::duration<double, std::nano>(stop - start).count();
		per_query_ns.push_back(ns / static_cast<double>(positions.size()));
		if (rep == 0)
			timing.checksum = checksum;
		else if (checksum != timing.checksum)
			timing.stable_checksum = false;
	}

	double sum = 0;
	for (double v : per_query_ns)
		sum += v;
	timing.mean_ns = sum / static_cast<double>(repeats);
	double sq = 0;
	for (double v : per_query_ns)
		sq += (v - timing.mean_ns) * (v - timing.mean_ns);
	timing.sd_ns = repeats > 1 ? std::sqrt(sq / static_cast<double>(repeats - 1)) : 0.0;
	return timing;
}

BenchResult run_bench(const BenchConfig& config, std::ostream* log) {
	config.validate();
	BenchResult result{config, {}};
	for (std::size_t n : config.sizes) {
		for (double t : config.twists) {
			BenchCell cell;
			cell.n = n;
			cell.twist = t;
			try {
				const BitString s = generate({n, t, config.seed});
				cell.max_depth = s.max_depth();
				const std::vector<std::size_t> positions =
				    sample_open_positions(s, config.queries, config.seed ^ n);
				cell.broadword = time_find_close(s, positions, config.repeats, FindCloseImpl::broadword);
				cell.forloop = time_find_close(s, positions, config.repeats, FindCloseImpl::forloop);
				if (!cell.checksums_agree())
					cell.error = "checksum mismatch between implementations or repeats";
			} catch (const std::exception& e) {
				cell.error = e.what();
			}
			if (log) {
				*log << "n=" << n << " twist=" << format_twist(t);
				if (cell.ok())
					*log << " broadword=" << cell.broadword.mean_ns << "ns forloop=" << cell.forloop.mean_ns
					     << "ns\n";
				else
					*log << " FAILED: " << cell.error << '\n';
			}
			result.cells.push_back(std::move(cell));
		}
	}
	return result;
}

void write_csv(const BenchResult& result, std::ostream& out) {
	out << "n,twist,broadword_ns,forloop_ns,broadword_sd,forloop_sd\n";
	for (const BenchCell& c : result.cells) {
		out << c.n << ',' << format_twist(c.twist) << ',';
		if (c.ok())
			out << std::fixed << std::setprecision(3) << c.broadword.mean_ns << ',' << c.forloop.mean_ns << ','
			    << c.broadword.sd_ns << ',' << c.forloop.sd_ns << std::defaultfloat << '\n';
		else
			out << ",,,\n";
	}
}

void write_table(const BenchResult& result, std::ostream& out) {
	const auto& twists = result.config.twists;
	out << std::setw(10) << "n";
	for (double t : twists)
		out << " | " << std::setw(17) << format_twist(t);
	out << '\n' << std::string(10 + twists.size() * 20, '-') << '\n';
	for (std::size_t row = 0; row < result.config.sizes.size(); ++row) {
		out << std::setw(10) << result.config.sizes[row];
		for (std::size_t col = 0; col < twists.size(); ++col) {
			const BenchCell& c = result.cells[row * twists.size() + col];
			std::ostringstream cell;
			if (c.ok())
				cell << std::fixed << std::setprecision(1) << c.broadword.mean_ns << " / " << c.forloop.mean_ns;
			else
				cell << "error";
			out << " | " << std::setw(17) << cell.str();
		}
		out << '\n';
	}
}

void write_metadata(const BenchResult& result, std::ostream& out) {
	const BenchConfig& cfg = result.config;
	out << "# find_close benchmark: mean ns per query, broadword / forloop\n"
	    << "# clock: std::chrono::steady_clock (monotonic wall time)\n"
	    << "# positions: " << cfg.queries << " per cell, uniform over open parentheses, stored before timing"
	    << " and read linearly\n"
	    << "# repeats: " << cfg.repeats << ", seed: " << cfg.seed << '\n'
	    << "# broadword: in-word probe, then word scan with far counts and far-closed select\n"
	    << "# forloop: bit-by-bit depth counter over packed words with early exit\n"
	    << "# no auxiliary index: far matches cost time linear in their distance\n";
	for (const BenchCell& c : result.cells) {
		out << "# cell n=" << c.n << " twist=" << format_twist(c.twist);
		if (c.ok())
			out << " max_depth=" << c.max_depth << " checksum=0x" << std::hex << c.broadword.checksum
			    << std::dec << (c.checksums_agree() ? " (match)" : " (MISMATCH)") << '\n';
		else
			out << " error: " << c.error << '\n';
	}
}

} // namespace bpword
