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
#ifndef REACHWARP_ORACLE_HPP
#define REACHWARP_ORACLE_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "reachwarp/model.hpp"
#include "reachwarp/reach.hpp"
#include "reachwarp/warp.hpp"

namespace reachwarp {

/// k matrices uniformly distributed in the ball; deterministic in `seed`.
std::vector<Mat> sample_ball(const FrobeniusBall& ball, std::size_t k, std::uint64_t seed);

struct SampleVerdict {
    std::size_t samples = 0;
    double best_sampled_g = 0.0;
    Mat best_sampled_b;
    Mat b_star;
    double g_star = 0.0;
    /// grow: G* - max sampled G; shrink: min sampled G - G*.
    double margin = 0.0;
    bool pass = false;
    Sense sense = Sense::grow;
    Regime regime = Regime::heuristic_complex;
};

/**
 * Brute-force check of optimize_b: G_d of the returned B* against k sampled
 * members of the ball, all at the same step count. Passes when no sample
 * beats B* (in the requested sense) by more than tol_verify.
 */
SampleVerdict verify_optimality(const LinearSystem& sys, const ControlPolytope& u,
                                const FrobeniusBall& ball, const Direction& d,
                                Sense sense, std::size_t k, std::uint64_t seed,
                                std::size_t steps = kDefaultSteps,
                                const Tolerances& tol = {});

struct OracleComparison {
    std::size_t directions = 0;
    /// max over directions of |support_value - oracle| / (1 + |support_value|)
    double worst_scaled_defect = 0.0;
    std::vector<double> support_values;
    std::vector<double> oracle_values;
};

/// Runs boundary_sweep and support_oracle over the same directions.
OracleComparison compare_with_oracle(const LinearSystem& sys, const Mat& b,
                                     const ControlPolytope& u,
                                     const std::vector<Direction>& directions,
                                     std::size_t steps = kDefaultSteps,
                                     std::size_t quad_nodes = kDefaultQuadNodes);

}  // namespace reachwarp

#endif  // REACHWARP_ORACLE_HPP
