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
#include "commands.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "config.hpp"
#include "fixtures.hpp"
#include "reachwarp/oracle.hpp"
#include "reachwarp/reach.hpp"
#include "reachwarp/warp.hpp"

namespace reachwarp::cli {
namespace {

using nlohmann::json;
namespace fs = std::filesystem;

/// Everything a command needs, built once from the resolved config.
struct Problem {
    ProblemConfig config;
    LinearSystem system;
    ControlPolytope polytope;
    FrobeniusBall ball;
    Direction direction;

    explicit Problem(ProblemConfig cfg)
        : config(std::move(cfg)),
          system(config.system()),
          polytope(config.polytope()),
          ball(config.ball()),
          direction(config.unit_direction()) {}
};

ProblemConfig resolve_config(const CommandOptions& opts) {
    if (opts.config.empty()) throw ConfigError("--config", "a config path is required");
    ProblemConfig cfg;
    const fs::path path(opts.config);
    if (fs::exists(path)) {
        cfg = load_config_file(path);
    } else {
        std::string name = path.filename().string();
        if (name.size() > 5 && name.ends_with(".json")) name.resize(name.size() - 5);
        auto fixture = find_fixture(name);
        if (!fixture) {
            throw ConfigError(opts.config, "no such file and no embedded fixture of that name");
        }
        cfg = std::move(*fixture);
    }
    if (opts.steps) {
        if (*opts.steps < 1) throw ConfigError("--steps", "must be >= 1");
        cfg.steps = *opts.steps;
    }
    if (opts.directions) {
        if (*opts.directions < 1) throw ConfigError("--directions", "must be >= 1");
        cfg.directions = *opts.directions;
    }
    if (opts.seed) cfg.seed = *opts.seed;
    return cfg;
}

std::string fmt17(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

void write_text(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError(path.string(), "cannot open output file for writing");
    out << text;
}

void write_json(const fs::path& path, const json& doc) { write_text(path, doc.dump(2) + "\n"); }

json spectrum_json(const SpectrumReport& s) {
    json eigenvalues = json::array();
    for (const auto& ev : s.eigenvalues) eigenvalues.push_back({ev.real(), ev.imag()});
    return {{"eigenvalues", std::move(eigenvalues)},
            {"max_abs_imag", s.max_abs_imag},
            {"all_real", s.all_real}};
}

json assumptions_json(const AssumptionReport& r) {
    return {{"spectrum", spectrum_json(r.spectrum)},
            {"eigvec_mu", r.eigvec_mu},
            {"eigvec_residual", r.eigvec_residual},
            {"assumption1_holds", r.assumption1_holds},
            {"assumption2_holds", r.assumption2_holds},
            {"regime", std::string(to_string(r.regime))}};
}

json warp_json(const WarpResult& w, const Problem& p) {
    json candidates = json::array();
    for (const auto& c : w.candidates) {
        candidates.push_back({{"vertex", c.vertex},
                              {"u", vector_json(p.polytope.vertices()[c.vertex])},
                              {"B", matrix_json(c.b)},
                              {"objective", c.objective}});
    }
    return {{"sense", std::string(to_string(w.sense))},
            {"direction", vector_json(p.direction.vec())},
            {"steps", p.config.steps},
            {"P0", vector_json(w.p0)},
            {"i_star", w.i_star},
            {"u_star", vector_json(p.polytope.vertices()[w.i_star])},
            {"B_star", matrix_json(w.b_star)},
            {"G_nominal", w.g_nominal},
            {"G_optimized", w.g_optimized},
            {"degenerate", w.degenerate},
            {"candidates", std::move(candidates)},
            {"assumptions", assumptions_json(w.report)}};
}

json manifest(const std::string& command, const Problem& p, Regime regime,
              const std::vector<std::string>& outputs) {
    return {{"software", "reachwarp"},
            {"version", kVersion},
            {"command", command},
            {"config", to_json(p.config)},
            {"regime", std::string(to_string(regime))},
            {"outputs", outputs}};
}

void warn_problem(const Problem& p, Regime regime, std::ostream& err) {
    if (!p.polytope.contains_zero()) {
        err << "warning: 0 is not in the control set; the zero-input endpoint may lie "
               "outside the reachable set\n";
    }
    if (regime != Regime::theorem) {
        err << "THEOREM REGIME NOT SATISFIED: result is heuristic (" << to_string(regime)
            << ")\n";
    }
}

struct ChosenB {
    Mat b;
    std::string source;
};

ChosenB choose_b(const Problem& p, const std::string& choice) {
    if (choice == "nominal") return {p.ball.center(), "nominal"};
    if (choice == "optimized") {
        const WarpResult w = optimize_b(p.system, p.polytope, p.ball, p.direction,
                                        p.config.sense, p.config.steps, p.config.tolerances);
        return {w.b_star, "optimized"};
    }
    Mat b = load_matrix_file(choice);
    p.system.check_input_matrix(b);
    return {std::move(b), choice};
}

std::string csv_direction_header(Eigen::Index n) {
    std::string header = "dir_index";
    for (Eigen::Index i = 1; i <= n; ++i) header += ",d_" + std::to_string(i);
    return header;
}

int guarded(const std::function<int()>& body, std::ostream& out, std::ostream& err) {
    const auto start = std::chrono::steady_clock::now();
    int code = kExitOk;
    try {
        code = body();
    } catch (const NumericError& e) {
        err << "numeric error: " << e.what() << " (residual " << e.residual() << ")\n";
        return kExitNumeric;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const fs::filesystem_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char buf[64];
    std::snprintf(buf, sizeof buf, "wall_clock_s = %.3f\n", seconds);
    out << buf;
    return code;
}

fs::path prepare_out_dir(const CommandOptions& opts) {
    fs::create_directories(opts.out_dir);
    return opts.out_dir;
}

}  // namespace

int cmd_optimize(const CommandOptions& opts, std::ostream& out, std::ostream& err) {
    return guarded(
        [&] {
            const Problem p(resolve_config(opts));
            const WarpResult w = optimize_b(p.system, p.polytope, p.ball, p.direction,
                                            p.config.sense, p.config.steps,
                                            p.config.tolerances);
            warn_problem(p, w.report.regime, err);
            const fs::path dir = prepare_out_dir(opts);
            write_json(dir / "warp_result.json", warp_json(w, p));
            write_json(dir / "manifest.json",
                       manifest("optimize", p, w.report.regime,
                                {"warp_result.json", "manifest.json"}));
            out << "regime = " << to_string(w.report.regime) << "\n"
                << "i_star = " << w.i_star << "\n"
                << "G_nominal = " << fmt17(w.g_nominal) << "\n"
                << "G_optimized = " << fmt17(w.g_optimized) << "\n";
            return kExitOk;
        },
        out, err);
}

int cmd_boundary(const CommandOptions& opts, std::ostream& out, std::ostream& err) {
    return guarded(
        [&] {
            const Problem p(resolve_config(opts));
            const AssumptionReport report =
                check_assumptions(p.system, p.direction, p.config.tolerances.spec,
                                  p.config.tolerances.ev);
            warn_problem(p, report.regime, err);
            const ChosenB chosen = choose_b(p, opts.b_choice);
            const Eigen::Index n = p.system.state_dim();
            const auto dirs = direction_fan(n, p.config.sweep_count(), p.config.seed);
            const auto points =
                boundary_sweep(p.system, chosen.b, p.polytope, dirs, p.config.steps);

            std::string csv = csv_direction_header(n);
            for (Eigen::Index i = 1; i <= n; ++i) csv += ",x_" + std::to_string(i);
            csv += ",support_value\n";
            for (std::size_t k = 0; k < points.size(); ++k) {
                csv += std::to_string(k);
                for (Eigen::Index i = 0; i < n; ++i) csv += "," + fmt17(points[k].direction(i));
                for (Eigen::Index i = 0; i < n; ++i) csv += "," + fmt17(points[k].endpoint(i));
                csv += "," + fmt17(points[k].support_value) + "\n";
            }
            const fs::path dir = prepare_out_dir(opts);
            write_text(dir / "boundary.csv", csv);
            json m = manifest("boundary", p, report.regime, {"boundary.csv", "manifest.json"});
            m["B_source"] = chosen.source;
            m["B"] = matrix_json(chosen.b);
            write_json(dir / "manifest.json", m);
            out << "points = " << points.size() << "\n";
            return kExitOk;
        },
        out, err);
}

int cmd_metric(const CommandOptions& opts, std::ostream& out, std::ostream& err) {
    return guarded(
        [&] {
            const Problem p(resolve_config(opts));
            const AssumptionReport report =
                check_assumptions(p.system, p.direction, p.config.tolerances.spec,
                                  p.config.tolerances.ev);
            warn_problem(p, report.regime, err);
            const ChosenB chosen = choose_b(p, opts.b_choice);
            const GrowthReport g =
                growth_metric(p.system, chosen.b, p.polytope, p.direction, p.config.steps);
            const fs::path dir = prepare_out_dir(opts);
            write_json(dir / "metric.json",
                       {{"G_d", g.value},
                        {"B_source", chosen.source},
                        {"B", matrix_json(g.b)},
                        {"c0", vector_json(g.c0)},
                        {"X_dB", vector_json(g.endpoint)},
                        {"direction", vector_json(p.direction.vec())},
                        {"steps", p.config.steps}});
            write_json(dir / "manifest.json",
                       manifest("metric", p, report.regime, {"metric.json", "manifest.json"}));
            out << "G_d = " << fmt17(g.value) << "\n";
            return kExitOk;
        },
        out, err);
}

int cmd_verify(const CommandOptions& opts, std::ostream& out, std::ostream& err) {
    return guarded(
        [&] {
            const Problem p(resolve_config(opts));
            const std::size_t k = opts.samples.value_or(1000);
            if (k < 1) throw ConfigError("--samples", "must be >= 1");
            const SampleVerdict v =
                verify_optimality(p.system, p.polytope, p.ball, p.direction, p.config.sense,
                                  k, p.config.seed, p.config.steps, p.config.tolerances);
            warn_problem(p, v.regime, err);
            const bool required = v.regime == Regime::theorem;
            json doc = {{"samples", v.samples},
                        {"seed", p.config.seed},
                        {"steps", p.config.steps},
                        {"sense", std::string(to_string(v.sense))},
                        {"regime", std::string(to_string(v.regime))},
                        {"G_star", v.g_star},
                        {"B_star", matrix_json(v.b_star)},
                        {"best_sampled_G", v.best_sampled_g},
                        {"best_sampled_B", matrix_json(v.best_sampled_b)},
                        {"margin", v.margin},
                        {"tol_verify", p.config.tolerances.verify},
                        {"pass", v.pass},
                        {"pass_required", required}};
            if (!required) doc["note"] = "not-required";
            const fs::path dir = prepare_out_dir(opts);
            write_json(dir / "verdict.json", doc);
            write_json(dir / "manifest.json",
                       manifest("verify", p, v.regime, {"verdict.json", "manifest.json"}));
            out << "margin = " << fmt17(v.margin) << "\n"
                << "pass = " << (required ? (v.pass ? "true" : "false") : "not-required")
                << "\n";
            return (required && !v.pass) ? kExitVerifyFailed : kExitOk;
        },
        out, err);
}

int cmd_compare(const CommandOptions& opts, std::ostream& out, std::ostream& err) {
    return guarded(
        [&] {
            const Problem p(resolve_config(opts));
            const WarpResult w = optimize_b(p.system, p.polytope, p.ball, p.direction,
                                            p.config.sense, p.config.steps,
                                            p.config.tolerances);
            warn_problem(p, w.report.regime, err);
            const Eigen::Index n = p.system.state_dim();
            const auto dirs = direction_fan(n, p.config.sweep_count(), p.config.seed);
            const auto nominal =
                boundary_sweep(p.system, p.ball.center(), p.polytope, dirs, p.config.steps);
            const auto optimized =
                boundary_sweep(p.system, w.b_star, p.polytope, dirs, p.config.steps);

            std::size_t grown = 0;
            std::string csv = csv_direction_header(n) + ",support_nominal,support_optimized\n";
            for (std::size_t k = 0; k < dirs.size(); ++k) {
                if (optimized[k].support_value > nominal[k].support_value) ++grown;
                csv += std::to_string(k);
                for (Eigen::Index i = 0; i < n; ++i) csv += "," + fmt17(dirs[k].vec()(i));
                csv += "," + fmt17(nominal[k].support_value) + "," +
                       fmt17(optimized[k].support_value) + "\n";
            }
            const fs::path dir = prepare_out_dir(opts);
            write_text(dir / "comparison.csv", csv);
            json m = manifest("compare", p, w.report.regime, {"comparison.csv", "manifest.json"});
            m["B_star"] = matrix_json(w.b_star);
            m["G_nominal"] = w.g_nominal;
            m["G_optimized"] = w.g_optimized;
            m["directions_total"] = dirs.size();
            m["directions_grown"] = grown;
            write_json(dir / "manifest.json", m);
            out << "directions_grown = " << grown << " / " << dirs.size() << "\n";
            return kExitOk;
        },
        out, err);
}

int cmd_fixtures(const CommandOptions& opts, std::ostream& out, std::ostream& err) {
    return guarded(
        [&] {
            if (opts.emit.empty()) {
                for (const auto& f : fixtures()) {
                    out << f.name << "\t" << f.config.description << "\n";
                }
                return kExitOk;
            }
            const auto cfg = find_fixture(opts.emit);
            if (!cfg) throw ConfigError("--emit", "unknown fixture '" + opts.emit + "'");
            const fs::path dir = prepare_out_dir(opts);
            const fs::path file = dir / (opts.emit + ".json");
            write_json(file, to_json(*cfg));
            out << "wrote " << file.string() << "\n";
            return kExitOk;
        },
        out, err);
}

}  // namespace reachwarp::cli
