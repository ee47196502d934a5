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
#include "reachwarp/warp.hpp"

#include <algorithm>
#include <string>

#include "reachwarp/errors.hpp"

namespace reachwarp {

std::string_view to_string(Regime regime) {
    switch (regime) {
        case Regime::theorem:
            return "theorem";
        case Regime::heuristic_real:
            return "heuristic-real";
        case Regime::heuristic_complex:
            return "heuristic-complex";
    }
    return "unknown";
}

Regime classify_regime(bool real_spectrum, bool eigenvector) {
    if (!real_spectrum) return Regime::heuristic_complex;
    return eigenvector ? Regime::theorem : Regime::heuristic_real;
}

AssumptionReport check_assumptions(const LinearSystem& sys, const Direction& d,
                                   double tol_spec, double tol_ev) {
    AssumptionReport report;
    report.spectrum = spectrum(sys.a(), tol_spec);
    const EigvecResidual ev = eigvec_residual(sys.a().transpose(), d.vec());
    report.eigvec_mu = ev.mu;
    report.eigvec_residual = ev.residual;
    report.assumption1_holds = report.spectrum.all_real;
    report.assumption2_holds = ev.residual <= tol_ev;
    report.regime = classify_regime(report.assumption1_holds, report.assumption2_holds);
    return report;
}

Vec initial_costate(const LinearSystem& sys, const Direction& d) {
    if (d.dim() != sys.state_dim()) {
        throw DimensionError("initial_costate: direction has dimension " +
                             std::to_string(d.dim()) + ", state dimension is " +
                             std::to_string(sys.state_dim()));
    }
    return mat_exp(sys.a().transpose() * sys.horizon()) * d.vec();
}

WarpResult optimize_b(const LinearSystem& sys, const ControlPolytope& u,
                      const FrobeniusBall& ball, const Direction& d, Sense sense,
                      std::size_t steps, const Tolerances& tol) {
    sys.check_input_matrix(ball.center());
    if (u.input_dim() != sys.input_dim()) {
        throw DimensionError("optimize_b: control set has dimension " +
                             std::to_string(u.input_dim()) + ", system expects " +
                             std::to_string(sys.input_dim()));
    }

    WarpResult result;
    result.sense = sense;
    result.p0 = initial_costate(sys, d);
    result.report = check_assumptions(sys, d, tol.spec, tol.ev);

    result.candidates.reserve(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
        const Vec& vertex = u.vertices()[i];
        Candidate c;
        c.vertex = i;
        c.b = ball_argmax(ball, result.p0 * vertex.transpose(), sense);
        c.objective = result.p0.dot(c.b * vertex);
        result.candidates.push_back(std::move(c));
    }

    result.degenerate = std::all_of(result.candidates.begin(), result.candidates.end(),
                                    [](const Candidate& c) { return c.objective == 0.0; });
    if (result.degenerate) {
        result.i_star = 0;
        result.b_star = ball.center();
    } else {
        std::size_t best = 0;
        for (std::size_t i = 1; i < result.candidates.size(); ++i) {
            if (result.candidates[i].objective > result.candidates[best].objective) best = i;
        }
        result.i_star = best;
        result.b_star = result.candidates[best].b;
    }

    result.g_nominal = growth_metric(sys, ball.center(), u, d, steps).value;
    result.g_optimized = growth_metric(sys, result.b_star, u, d, steps).value;
    return result;
}

}  // namespace reachwarp
