// Copyright 2026 The skewbound Authors
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

// skewbound: skew-information moments, equalities and state-independent bounds.
//
//   skewbound <moments|bound|channel-bound|verify|witness|weakvalue> <file> [flags]

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "skewbound/commands.hpp"
#include "skewbound/kernels.hpp"

namespace {

struct RawFlags {
    std::string file;
    std::string format = "text";
    std::optional<double> s;
    std::string nu;
    bool alpha_scan = false;
    std::optional<std::size_t> grid;
    std::optional<std::size_t> oracle;
    std::optional<std::uint64_t> seed;
    unsigned jobs = 1;
    std::string suite = "all";
    std::size_t seeds = 100;
};

std::vector<skewbound::MeanOrder> split_orders(const std::string& list)
{
    std::vector<skewbound::MeanOrder> out;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(skewbound::MeanOrder::parse(item));
    if (out.empty()) skewbound::fail(skewbound::ErrorCode::ParseError, "--nu needs at least one order");
    return out;
}

void add_common(CLI::App* sub, RawFlags& f, bool file_required)
{
    auto* file = sub->add_option("file", f.file, "problem file (JSON)");
    if (file_required) file->required();
    sub->add_option("--format", f.format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("--s", f.s, "Wigner-Yanase-Dyson parameter in (0, 1)");
    sub->add_option("--nu", f.nu, "comma-separated mean orders, e.g. 0,-1,-inf");
    sub->add_option("--seed", f.seed, "base seed for random sampling");
    sub->add_option("--jobs", f.jobs, "worker threads for scans and sampling")->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Skew-information uncertainty quantities and state-independent bounds"};
    app.require_subcommand(1);
    bool show_isa = false;
    app.add_flag("--isa", show_isa, "print the selected kernel variant to stderr");

    RawFlags f;
    auto* moments = app.add_subcommand("moments", "standard deviation and skew informations per operator");
    add_common(moments, f, true);

    auto* bound = app.add_subcommand("bound", "spectral lower bound for the operator set");
    add_common(bound, f, true);
    bound->add_flag("--alpha-scan", f.alpha_scan, "also run the pure-state alpha scans");
    bound->add_option("--grid", f.grid, "alpha grid points")->check(CLI::Range(2, 100000));
    bound->add_option("--oracle", f.oracle, "random states for the sampling check");

    auto* channel = app.add_subcommand("channel-bound", "coherence bound for a collection of channels");
    add_common(channel, f, true);
    channel->add_option("--oracle", f.oracle, "random states for the sampling check");

    auto* verify = app.add_subcommand("verify", "residual sweeps over random instances");
    add_common(verify, f, false);
    verify->add_option("--suite", f.suite, "equalities, qubit, weakvalue or all")
        ->check(CLI::IsMember({"equalities", "qubit", "weakvalue", "all"}));
    verify->add_option("--seeds", f.seeds, "random instances per suite");

    auto* witness = app.add_subcommand("witness", "variance-sum entanglement witness");
    add_common(witness, f, true);
    witness->add_option("--grid", f.grid, "alpha grid points")->check(CLI::Range(2, 100000));

    auto* weak = app.add_subcommand("weakvalue", "skew information from simulated weak values");
    add_common(weak, f, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return skewbound::kExitParse;
    }

    if (show_isa) std::cerr << "kernels: " << skewbound::kernels::isa_name(skewbound::kernels::active().isa) << '\n';

    skewbound::CommandOptions opt;
    try {
        opt.format = skewbound::parse_format(f.format);
        if (!f.nu.empty()) opt.nu = split_orders(f.nu);
    } catch (const skewbound::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return skewbound::kExitParse;
    }
    opt.s = f.s;
    opt.alpha_scan = f.alpha_scan;
    opt.grid = f.grid;
    opt.oracle = f.oracle;
    opt.seed = f.seed;
    opt.jobs = f.jobs;
    opt.suite = f.suite;
    opt.seeds = f.seeds;

    const std::string command = app.get_subcommands().front()->get_name();
    std::optional<std::string> file;
    if (!f.file.empty()) file = f.file;
    return skewbound::run_command(command, file, opt, std::cout, std::cerr);
}
