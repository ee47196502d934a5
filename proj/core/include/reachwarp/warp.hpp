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
#ifndef REACHWARP_WARP_HPP
#define REACHWARP_WARP_HPP

#include <cstddef>
#include <string_view>
#include <vector>

#include "reachwarp/linalg.hpp"
#include "reachwarp/model.hpp"
#include "reachwarp/reach.hpp"

namespace reachwarp {

struct Tolerances {
    double spec = kDefaultTolSpec;  // |Im(lambda)| treated as zero
    double ev = 1e-8;               // eigenvector residual treated as zero
    double verify = 1e-6;           // slack for sampled falsification
};

/// Which optimality argument covers the run.
enum class Regime {
    theorem,            // real spectrum and d an eigenvector of A^T
    heuristic_real,     // real spectrum, d not an eigenvector
    heuristic_complex,  // complex spectrum
};

std::string_view to_string(Regime regime);

struct AssumptionReport {
    SpectrumReport spectrum;
    double eigvec_mu = 0.0;
    double eigvec_residual = 0.0;
    bool assumption1_holds = false;  // A has real eigenvalues
    bool assumption2_holds = false;  // d is an eigenvector of A^T
    Regime regime = Regime::heuristic_complex;
};

Regime classify_regime(bool real_spectrum, bool eigenvector);

AssumptionReport check_assumptions(const LinearSystem& sys, const Direction& d,
                                   double tol_spec = kDefaultTolSpec,
                                   double tol_ev = Tolerances{}.ev);

/// P0 = exp(A^T T) d, the co-state at t = 0.
Vec initial_costate(const LinearSystem& sys, const Direction& d);

struct Candidate {
    std::size_t vertex = 0;
    Mat b;
    double objective = 0.0;  // P0^T B_i u_i
};

struct WarpResult {
    Mat b_star;
    std::size_t i_star = 0;
    std::vector<Candidate> candidates;
    Vec p0;
    double g_nominal = 0.0;
    double g_optimized = 0.0;
    AssumptionReport report;
    Sense sense = Sense::grow;
    /// Every candidate objective was exactly zero; B* falls back to the center.
    bool degenerate = false;
};

/**
 * @brief Selects the input matrix that warps the reachable set along d.
 *
 * For each vertex u_i the ball is extremized against the rank-one gradient
 * P0 u_i^T (maximized for grow, minimized for shrink). The winner is the
 * candidate with the largest Hamiltonian level P0^T B_i u_i in both senses:
 * the boundary trajectory always plays the maximizing vertex, so shrinking
 * means lowering the best level any vertex can still reach. Ties go to the
 * lowest vertex index.
 *
 * Under a real spectrum with d an eigenvector of A^T the grow result
 * maximizes G_d over the ball; otherwise the same procedure runs and
 * `report.regime` says why the guarantee is absent.
 */
WarpResult optimize_b(const LinearSystem& sys, const ControlPolytope& u,
                      const FrobeniusBall& ball, const Direction& d, Sense sense,
                      std::size_t steps = kDefaultSteps, const Tolerances& tol = {});

}  // namespace reachwarp

#endif  // REACHWARP_WARP_HPP
