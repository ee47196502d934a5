/*
 Copyright 2026 The reachwarp Authors

 Licensed under the Apache License, Version 2.0 (the "License");
 you may not use this file except in compliance with the License.
 You may obtain a copy of the License at

      https://www.apache.org/licenses/LICENSE-2.0

 Unless required by applicable law or agreed to in writing, software
 distributed under the License is distributed on an "AS IS" BASIS,
 WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 See the License for the specific language governing permissions and
 limitations under the License.
*/
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"

int main(int argc, char** argv) {
    using namespace reachwarp::cli;

    CLI::App app{"Reachable-set warping by input-matrix selection"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    CommandOptions opts;
    std::size_t samples = 0;
    std::size_t steps = 0;
    std::size_t directions = 0;
    std::uint64_t seed = 0;

    auto add_common = [&](CLI::App* sub, bool with_b) {
        sub->add_option("--config", opts.config,
                        "Problem config JSON, or an embedded fixture name")
            ->required();
        sub->add_option("--steps", steps, "Integration steps over [0, T]");
        sub->add_option("--seed", seed, "Seed for direction fans and ball sampling");
        sub->add_option("--out", opts.out_dir, "Output directory")->capture_default_str();
        if (with_b) {
            sub->add_option("--B", opts.b_choice, "nominal | optimized | PATH to a JSON matrix")
                ->capture_default_str();
        }
    };

    auto* optimize = app.add_subcommand("optimize", "Select B* and report the growth metric");
    add_common(optimize, false);

    auto* boundary = app.add_subcommand("boundary", "Boundary point cloud as CSV");
    add_common(boundary, true);
    boundary->add_option("--directions", directions, "Number of sweep directions");

    auto* metric = app.add_subcommand("metric", "Directional growth metric for one B");
    add_common(metric, true);

    auto* verify = app.add_subcommand("verify", "Falsify B* against sampled members of the ball");
    add_common(verify, false);
    verify->add_option("--samples", samples, "Number of sampled matrices (default 1000)");

    auto* compare = app.add_subcommand("compare", "Nominal versus optimized support values");
    add_common(compare, false);
    compare->add_option("--directions", directions, "Number of sweep directions");

    auto* fixtures = app.add_subcommand("fixtures", "List embedded fixtures or write one out");
    fixtures->add_option("--emit", opts.emit, "Fixture name to write as <out>/<name>.json");
    fixtures->add_option("--out", opts.out_dir, "Output directory")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitBadInput;
    }

    for (auto* sub : app.get_subcommands()) {
        auto given = [sub](const std::string& name) {
            return sub->get_option_no_throw(name) != nullptr && sub->count(name) > 0;
        };
        if (given("--steps")) opts.steps = steps;
        if (given("--seed")) opts.seed = seed;
        if (given("--samples")) opts.samples = samples;
        if (given("--directions")) opts.directions = directions;
    }

    if (optimize->parsed()) return cmd_optimize(opts, std::cout, std::cerr);
    if (boundary->parsed()) return cmd_boundary(opts, std::cout, std::cerr);
    if (metric->parsed()) return cmd_metric(opts, std::cout, std::cerr);
    if (verify->parsed()) return cmd_verify(opts, std::cout, std::cerr);
    if (compare->parsed()) return cmd_compare(opts, std::cout, std::cerr);
    return cmd_fixtures(opts, std::cout, std::cerr);
}
