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

// bpword: generate balanced strings, run the oracle suites, time find_close.
//
// Exit codes: 0 success, 1 test or benchmark failure, 2 usage error.

#include "bpword/bench.hpp"
#include "bpword/paren_gen.hpp"
#include "bpword/selftest.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

int cmd_gen(std::size_t n, double twist, std::uint64_t seed, const std::string& out_path) {
	if (n % 2 != 0) {
		std::cerr << "gen: --n must be even, got " << n << '\n';
		return kExitUsage;
	}
	if (!(twist >= 0.0 && twist <= 1.0)) {
		std::cerr << "gen: --twist must lie in [0, 1]\n";
		return kExitUsage;
	}
	const bpword::BitString s = bpword::generate({n, twist, seed});
	std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
	if (!out) {
		std::cerr << "gen: cannot open " << out_path << " for writing\n";
		return kExitFailure;
	}
	try {
		s.write(out);
		out.close();
		if (!out)
			throw std::runtime_error("close failed");
	} catch (const std::exception& e) {
		std::cerr << "gen: writing " << out_path << ": " << e.what() << '\n';
		return kExitFailure;
	}
	std::cout << "n=" << n << " twist=" << twist << " seed=" << seed << " max_depth=" << s.max_depth() << '\n';
	return 0;
}

int cmd_selftest(bool quick) {
	const bpword::SelftestOptions options = quick ? bpword::SelftestOptions::quick() : bpword::SelftestOptions{};
	const auto reports = bpword::run_selftest(options, &std::cout);
	for (const auto& r : reports)
		if (!r.passed)
			return kExitFailure;
	std::cout << "all suites passed\n";
	return 0;
}

int cmd_bench(const bpword::BenchConfig& config, const std::string& out_path) {
	try {
		config.validate();
	} catch (const std::invalid_argument& e) {
		std::cerr << e.what() << '\n';
		return kExitUsage;
	}
	std::ofstream file;
	if (!out_path.empty()) {
		file.open(out_path, std::ios::trunc);
		if (!file) {
			std::cerr << "bench: cannot open " << out_path << " for writing\n";
			return kExitFailure;
		}
	}
	std::ostream& out = out_path.empty() ? std::cout : file;

	const bpword::BenchResult result = bpword::run_bench(config, &std::cerr);
	if (config.format == bpword::BenchFormat::csv) {
		bpword::write_csv(result, out);
		bpword::write_metadata(result, std::cerr);
	} else {
		bpword::write_metadata(result, out);
		bpword::write_table(result, out);
	}
	out.flush();
	if (!out) {
		std::cerr << "bench: write failed\n";
		return kExitFailure;
	}
	return result.all_ok() ? 0 : kExitFailure;
}

} // namespace

int main(int argc, char** argv) {
	CLI::App app{"Broadword balanced-parentheses kernels: generator, self-test and benchmark"};
	app.require_subcommand(1);

	auto* gen = app.add_subcommand("gen", "Write a random balanced string to a file");
	std::size_t gen_n = 0;
	double gen_twist = 1.0;
	std::uint64_t gen_seed = 0;
	std::string gen_out;
	gen->add_option("--n", gen_n, "Number of parentheses (even)")->required();
	gen->add_option("--twist", gen_twist, "Twist in [0, 1]; lower values nest deeper")->capture_default_str();
	gen->add_option("--seed", gen_seed, "PRNG seed")->capture_default_str();
	gen->add_option("--out", gen_out, "Output file")->required();

	auto* selftest = app.add_subcommand("selftest", "Check the kernels against the for-loop oracle");
	bool quick = false;
	selftest->add_flag("--quick", quick, "Use 10^4 random words instead of 10^6");

	auto* bench = app.add_subcommand("bench", "Time broadword against for-loop find_close");
	bpword::BenchConfig config;
	std::string bench_out;
	const std::map<std::string, bpword::BenchFormat> formats{{"csv", bpword::BenchFormat::csv},
	                                                         {"table", bpword::BenchFormat::table}};
	bench->add_option("--sizes", config.sizes, "Parenthesis counts, comma separated")->delimiter(',');
	bench->add_option("--twists", config.twists, "Twists, comma separated")->delimiter(',');
	bench->add_option("--queries", config.queries, "Stored query positions per cell")->capture_default_str();
	bench->add_option("--repeats", config.repeats, "Timed passes over the positions")->capture_default_str();
	bench->add_option("--seed", config.seed, "PRNG seed")->capture_default_str();
	bench->add_option("--format", config.format, "csv or table")
	    ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
	bench->add_option("--out", bench_out, "Output file (default: standard output)");

	try {
		app.parse(argc, argv);
	} catch (const CLI::ParseError& e) {
		const int code = app.exit(e);
		return code == 0 ? 0 : kExitUsage;
	}

	try {
		if (*gen)
			return cmd_gen(gen_n, gen_twist, gen_seed, gen_out);
		if (*selftest)
			return cmd_selftest(quick);
		return cmd_bench(config, bench_out);
	} catch (const std::invalid_argument& e) {
		std::cerr << e.what() << '\n';
		return kExitUsage;
	} catch (const std::exception& e) {
		std::cerr << "error: " << e.what() << '\n';
		return kExitFailure;
	}
}
