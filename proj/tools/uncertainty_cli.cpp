// Copyright 2026 The Uncertainty Authors

// Licensed under the Apache License, Version 2.0 (the License);
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

// http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an AS IS BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line driver.
//
//   uncertainty verify    --n 4 --rank 2 --trials 1000 --seed 7 [--out report.json]
//   uncertainty reproduce [--out goldens.json]
//   uncertainty saturate  --input pair.json --target mp3|mp6 [--out pair_out.json]
//
// Exit codes: 0 success, 1 usage/I-O/validation error, 2 invariant
// violation (or a failed golden / construction).

#include <fstream>
#include <iostream>
#include <thread>

#include "CLI11.hpp"

#include "uncertainty/uncertainty.hpp"

namespace {

using namespace uncertainty;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitViolation = 2;

void write_output(const std::string &path, const std::string &body) {
    if (path.empty() || path == "-") {
        std::cout << body;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open output file " + path);
    }
    out << body;
    if (!out) {
        throw std::runtime_error("failed writing " + path);
    }
}

Json read_json(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open input file " + path);
    }
    return Json::parse(in);
}

std::string render(const SuiteReport &report, const std::string &format) {
    return format == "csv" ? summary_csv(report) : serialize(report);
}

int report_failures(const SuiteReport &report) {
    for (const auto &f : report.summary.failures) {
        std::cerr << "FAIL " << f << '\n';
    }
    return report.ok() ? kExitOk : kExitViolation;
}

struct VerifyOptions {
    Index n{2};
    Index rank{0};
    Index trials{100};
    std::uint64_t seed{0};
    double tol_abs{Tolerance{}.absolute};
    double tol_rel{Tolerance{}.relative};
    std::string out;
    std::string format{"json"};
    unsigned threads{std::max(1U, std::thread::hardware_concurrency())};
};

int run_verify_command(const VerifyOptions &o) {
    const SampleConfig config{o.n, o.rank == 0 ? o.n : o.rank, o.seed, o.trials};
    const Tolerance tol{o.tol_abs, o.tol_rel};
    if (!(tol.absolute >= 0.0) || !(tol.relative >= 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "tolerances must be >= 0");
    }
    const SuiteReport report = run_verify(config, tol, o.threads);
    write_output(o.out, render(report, o.format));
    return report_failures(report);
}

int run_reproduce_command(const std::string &out, const std::string &format) {
    const SuiteReport report = run_reproduce();
    write_output(out, render(report, format));
    for (const auto &id : failed_goldens(report)) {
        std::cerr << "FAILED GOLDEN " << id << '\n';
    }
    return report_failures(report);
}

int run_saturate_command(const std::string &input, const std::string &target,
                         const std::string &out) {
    const auto [a, b] = observables_from_json(read_json(input));
    if (a.dim() != b.dim()) {
        throw Error(ErrorCode::DimensionMismatch, "A and B differ in size");
    }
    ConstructedPair pair = [&] {
        if (target == "mp6") {
            return construct_w_mp6(a, b);
        }
        return a.dim() == 2 ? construct_case1(a, b) : construct_case2(a, b);
    }();
    write_output(out, constructed_pair_to_json(pair).dump(2) + "\n");
    if (!pair.saturates()) {
        std::cerr << "construction did not saturate " << target << ": relative gap "
                  << pair.achieved_slack() << '\n';
        return kExitViolation;
    }
    return kExitOk;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Uncertainty relation checker"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kVersion));

    VerifyOptions verify;
    auto *verify_cmd = app.add_subcommand("verify", "Run the bound and saturation suite on random samples");
    verify_cmd->add_option("--n", verify.n, "Hilbert space dimension")->check(CLI::PositiveNumber);
    verify_cmd->add_option("--rank", verify.rank, "Density matrix rank (default: n)")
        ->check(CLI::NonNegativeNumber);
    verify_cmd->add_option("--trials", verify.trials, "Number of trials")->check(CLI::PositiveNumber);
    verify_cmd->add_option("--seed", verify.seed, "Master seed");
    verify_cmd->add_option("--tol-abs", verify.tol_abs, "Absolute tolerance");
    verify_cmd->add_option("--tol-rel", verify.tol_rel, "Relative tolerance");
    verify_cmd->add_option("--out", verify.out, "Output file (default: stdout)");
    verify_cmd->add_option("--format", verify.format, "Report format")
        ->check(CLI::IsMember({"json", "csv"}));
    verify_cmd->add_option("--threads", verify.threads, "Worker threads")->check(CLI::PositiveNumber);

    std::string reproduce_out;
    std::string reproduce_format{"json"};
    auto *reproduce_cmd = app.add_subcommand("reproduce", "Evaluate the closed-form golden instances");
    reproduce_cmd->add_option("--out", reproduce_out, "Output file (default: stdout)");
    reproduce_cmd->add_option("--format", reproduce_format, "Report format")
        ->check(CLI::IsMember({"json", "csv"}));

    std::string input;
    std::string target{"mp3"};
    std::string saturate_out;
    auto *saturate_cmd = app.add_subcommand("saturate", "Construct a saturating orthonormal pair");
    saturate_cmd->add_option("--input", input, "JSON file with matrices A and B")->required();
    saturate_cmd->add_option("--target", target, "Inequality to saturate")
        ->check(CLI::IsMember({"mp3", "mp6"}));
    saturate_cmd->add_option("--out", saturate_out, "Output file (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*verify_cmd) {
            return run_verify_command(verify);
        }
        if (*reproduce_cmd) {
            return run_reproduce_command(reproduce_out, reproduce_format);
        }
        return run_saturate_command(input, target, saturate_out);
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << '\n';
        const bool construction_failed = e.code() == ErrorCode::ZeroDeviation;
        return is_invariant_violation(e.code()) || construction_failed ? kExitViolation : kExitUsage;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}
