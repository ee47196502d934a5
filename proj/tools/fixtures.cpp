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
#include "fixtures.hpp"

#include <algorithm>

namespace reachwarp::cli {
namespace {

Mat admire_a() {
    Mat a(3, 3);
    a << -0.9967, 0.0, 0.6176,
          0.0, -0.5057, 0.0,
         -0.0939, 0.0, -0.2127;
    return a;
}

Mat admire_b() {
    Mat b(3, 4);
    b << 0.0, -4.2423, 4.2423, 1.4871,
         1.6532, -1.2735, -1.2735, 0.0024,
         0.0, -0.2805, 0.2805, -0.8820;
    return b;
}

ProblemConfig admire(Sense sense, const Vec& d, std::string description) {
    ProblemConfig cfg;
    cfg.description = std::move(description);
    cfg.a = admire_a();
    cfg.x0 = Vec::Zero(3);
    cfg.horizon = 2.0;
    cfg.control.kind = ControlSpec::Kind::box;
    cfg.control.lo = Vec::Constant(4, -0.1);
    cfg.control.hi = Vec::Constant(4, 0.1);
    cfg.center = admire_b();
    cfg.radius = 0.5;
    cfg.direction = d.normalized();
    cfg.sense = sense;
    return cfg;
}

ProblemConfig oscillator() {
    ProblemConfig cfg;
    cfg.description = "Damped oscillator with complex eigenvalues, inputs on both states, "
                      "U = [-1,1]^2, radius 0.5, T = 2, d = e1";
    cfg.a.resize(2, 2);
    cfg.a << 0.0, 1.0, -2.0, -0.8;
    cfg.x0 = Vec::Zero(2);
    cfg.horizon = 2.0;
    cfg.control.lo = Vec::Constant(2, -1.0);
    cfg.control.hi = Vec::Constant(2, 1.0);
    cfg.center.resize(2, 2);
    cfg.center << 0.0, 1.0, 1.0, 0.0;
    cfg.radius = 0.5;
    cfg.direction = Vec::Unit(2, 0);
    return cfg;
}

ProblemConfig scalar_analytic() {
    ProblemConfig cfg;
    cfg.description = "xdot = -x + b u, u in [-1,1], b in [0.5,1.5], T = 1; "
                      "G_nominal = 1 - e^-1, G_optimized = 1.5 (1 - e^-1)";
    cfg.a = Mat::Constant(1, 1, -1.0);
    cfg.x0 = Vec::Zero(1);
    cfg.horizon = 1.0;
    cfg.control.lo = Vec::Constant(1, -1.0);
    cfg.control.hi = Vec::Constant(1, 1.0);
    cfg.center = Mat::Constant(1, 1, 1.0);
    cfg.radius = 0.5;
    cfg.direction = Vec::Constant(1, 1.0);
    return cfg;
}

ProblemConfig diag3_theorem() {
    ProblemConfig cfg;
    cfg.description = "Diagonal A = diag(-1,-0.5,-0.2), two box inputs, d = e1: real "
                      "spectrum and d an eigenvector of A^T";
    cfg.a = Vec((Vec(3) << -1.0, -0.5, -0.2).finished()).asDiagonal();
    cfg.x0 = Vec::Zero(3);
    cfg.horizon = 2.0;
    cfg.control.lo = Vec::Constant(2, -1.0);
    cfg.control.hi = Vec::Constant(2, 1.0);
    cfg.center.resize(3, 2);
    cfg.center << 1.0, 0.5,
                  0.2, 1.0,
                  0.3, -0.4;
    cfg.radius = 0.5;
    cfg.direction = Vec::Unit(3, 0);
    return cfg;
}

// Pass through the JSON form so an emitted file reloads to the same bits.
ProblemConfig canonical(const ProblemConfig& cfg) { return parse_config(to_json(cfg)); }

std::vector<Fixture> build() {
    const Vec roll = Vec::Unit(3, 0);
    const Vec mixed = (Vec(3) << 0.3536, 0.6124, 0.7071).finished();
    std::vector<Fixture> all = {
        {"admire_grow_p",
         admire(Sense::grow, roll,
                "ADMIRE roll/pitch/yaw-rate model, four surfaces within +/-0.1 rad, "
                "radius 0.5, T = 2; grow along roll rate p")},
        {"admire_shrink_p",
         admire(Sense::shrink, roll,
                "ADMIRE rate model as admire_grow_p; shrink along roll rate p")},
        {"admire_mixed_d",
         admire(Sense::grow, mixed,
                "ADMIRE rate model; grow along [0.3536, 0.6124, 0.7071] "
                "(normalized to unit length)")},
        {"oscillator", oscillator()},
        {"scalar_analytic", scalar_analytic()},
        {"diag3_theorem", diag3_theorem()},
    };
    for (auto& f : all) f.config = canonical(f.config);
    return all;
}

}  // namespace

const std::vector<Fixture>& fixtures() {
    static const std::vector<Fixture> all = build();
    return all;
}

std::optional<ProblemConfig> find_fixture(std::string_view name) {
    const auto& all = fixtures();
    const auto it = std::find_if(all.begin(), all.end(),
                                 [&](const Fixture& f) { return f.name == name; });
    if (it == all.end()) return std::nullopt;
    return it->config;
}

}  // namespace reachwarp::cli
