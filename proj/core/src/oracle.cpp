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
#include "reachwarp/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "reachwarp/errors.hpp"
#include "reachwarp/parallel.hpp"

namespace reachwarp {

std::vector<Mat> sample_ball(const FrobeniusBall& ball, std::size_t k, std::uint64_t seed) {
    if (k < 1) throw DomainError("sample_ball: k must be >= 1");
    const Mat& center = ball.center();
    const auto dim = static_cast<double>(center.size());

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    std::uniform_real_distribution<double> uniform(0.0, 1.0);

    std::vector<Mat> samples;
    samples.reserve(k);
    while (samples.size() < k) {
        Mat g(center.rows(), center.cols());
        for (Eigen::Index i = 0; i < g.size(); ++i) g(i) = normal(rng);
        const double norm = g.norm();
        const double radial = std::pow(uniform(rng), 1.0 / dim);
        if (norm < 1e-300) continue;
        samples.push_back(center + (ball.radius() * radial / norm) * g);
    }
    return samples;
}

SampleVerdict verify_optimality(const LinearSystem& sys, const ControlPolytope& u,
                                const FrobeniusBall& ball, const Direction& d,
                                Sense sense, std::size_t k, std::uint64_t seed,
                                std::size_t steps, const Tolerances& tol) {
    const WarpResult warp = optimize_b(sys, u, ball, d, sense, steps, tol);
    const std::vector<Mat> samples = sample_ball(ball, k, seed);

    std::vector<double> values(samples.size());
    parallel_for(samples.size(), [&](std::size_t i) {
        values[i] = growth_metric(sys, samples[i], u, d, steps).value;
    });

    std::size_t best = 0;
    for (std::size_t i = 1; i < values.size(); ++i) {
        const bool better = sense == Sense::grow ? values[i] > values[best]
                                                 : values[i] < values[best];
        if (better) best = i;
    }

    SampleVerdict verdict;
    verdict.samples = samples.size();
    verdict.best_sampled_g = values[best];
    verdict.best_sampled_b = samples[best];
    verdict.b_star = warp.b_star;
    verdict.g_star = warp.g_optimized;
    verdict.margin = sense == Sense::grow ? warp.g_optimized - values[best]
                                          : values[best] - warp.g_optimized;
    verdict.pass = verdict.margin >= -tol.verify;
    verdict.sense = sense;
    verdict.regime = warp.report.regime;
    return verdict;
}

OracleComparison compare_with_oracle(const LinearSystem& sys, const Mat& b,
                                     const ControlPolytope& u,
                                     const std::vector<Direction>& directions,
                                     std::size_t steps, std::size_t quad_nodes) {
    const std::vector<BoundaryPoint> points = boundary_sweep(sys, b, u, directions, steps);

    OracleComparison out;
    out.directions = directions.size();
    out.support_values.resize(directions.size());
    out.oracle_values.resize(directions.size());
    parallel_for(directions.size(), [&](std::size_t i) {
        out.oracle_values[i] = support_oracle(sys, b, u, directions[i], quad_nodes);
    });
    for (std::size_t i = 0; i < points.size(); ++i) {
        const double s = points[i].support_value;
        out.support_values[i] = s;
        out.worst_scaled_defect = std::max(
            out.worst_scaled_defect, std::abs(s - out.oracle_values[i]) / (1.0 + std::abs(s)));
    }
    return out;
}

}  // namespace reachwarp
