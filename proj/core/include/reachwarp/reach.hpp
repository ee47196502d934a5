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
#ifndef REACHWARP_REACH_HPP
#define REACHWARP_REACH_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "reachwarp/linalg.hpp"
#include "reachwarp/model.hpp"

namespace reachwarp {

inline constexpr std::size_t kDefaultSteps = 2000;
inline constexpr std::size_t kDefaultQuadNodes = 4000;

/// Co-state P(t) = exp(-A^T (t - T)) d, the solution of Pdot = -A^T P with P(T) = d.
class CostatePath {
public:
    CostatePath(const LinearSystem& sys, Direction d);

    /// Throws DomainError outside [0, T].
    Vec at(double t) const;

    const Direction& terminal() const noexcept { return d_; }

private:
    Mat a_transpose_;
    double horizon_;
    Direction d_;
};

Vec costate_at(const CostatePath& path, double t);

struct VertexChoice {
    std::size_t index = 0;
    Vec u;
};

/// First vertex (lowest index) maximizing P^T B u.
VertexChoice optimal_vertex(const Vec& p, const Mat& b, const ControlPolytope& u);

/// Exact flow of xdot = A x + B u over [0, h] for constant u.
Vec propagate_step(const Mat& a, const Mat& b, const Vec& u, const Vec& x, double h);

struct SwitchEvent {
    double time = 0.0;
    std::size_t vertex = 0;
};

struct BoundaryPoint {
    Vec direction;
    Vec endpoint;
    double support_value = 0.0;
    /// Run-length record of the per-step vertex: one entry at t = 0 and one
    /// at the start of every step whose vertex differs from the previous one.
    std::vector<SwitchEvent> switches;
    std::size_t steps = 0;
};

/**
 * @brief Boundary-trajectory integrator for a fixed (A, B, U, steps).
 *
 * Holds exp(A h), exp(A^T h), exp(A^T h / 2) and the forced response of
 * every vertex over one step, so each direction costs one backward co-state
 * recursion and one forward state recursion. Immutable after construction
 * and safe to share between threads.
 */
class BoundaryIntegrator {
public:
    BoundaryIntegrator(const LinearSystem& sys, const Mat& b, const ControlPolytope& u,
                       std::size_t steps);

    BoundaryPoint point(const Direction& d) const;

    std::size_t steps() const noexcept { return steps_; }

private:
    Mat b_;
    std::vector<Vec> vertices_;
    Vec x0_;
    double step_;
    std::size_t steps_;
    Mat state_step_;         // exp(A h)
    Mat costate_step_;       // exp(A^T h)
    Mat costate_half_step_;  // exp(A^T h / 2)
    std::vector<Vec> forced_;  // integral_0^h exp(A s) ds * B u_i
};

/// Boundary point with terminal co-state d, `steps` midpoint-selected
/// constant-vertex intervals, each propagated exactly.
BoundaryPoint boundary_point(const LinearSystem& sys, const Mat& b,
                             const ControlPolytope& u, const Direction& d,
                             std::size_t steps = kDefaultSteps);

/// c0 = exp(A T) x0, the endpoint of the uncontrolled trajectory.
Vec zero_input_endpoint(const LinearSystem& sys);

struct GrowthReport {
    double value = 0.0;  // G_d = d^T (X_dB - c0)
    Vec c0;
    Vec endpoint;
    Mat b;
};

GrowthReport growth_metric(const LinearSystem& sys, const Mat& b,
                           const ControlPolytope& u, const Direction& d,
                           std::size_t steps = kDefaultSteps);

/// One boundary point per direction, in input order. Directions are
/// evaluated in parallel; the result does not depend on the schedule.
std::vector<BoundaryPoint> boundary_sweep(const LinearSystem& sys, const Mat& b,
                                          const ControlPolytope& u,
                                          const std::vector<Direction>& directions,
                                          std::size_t steps = kDefaultSteps);

/**
 * Deterministic unit directions: equally spaced angles for n = 2, a
 * Fibonacci sphere for n = 3 and normalized seeded Gaussians for n >= 4.
 * Throws DomainError for count < 1.
 */
std::vector<Direction> direction_fan(Eigen::Index n, std::size_t count,
                                     std::uint64_t seed);

/**
 * @brief Support value d^T e^{AT} x0 + int_0^T max_i d^T e^{A(T-t)} B u_i dt.
 *
 * Composite Simpson rule with `quad_nodes` subintervals (rounded up to even),
 * evaluating a fresh matrix exponential at every node. Shares no code path
 * with BoundaryIntegrator beyond mat_exp.
 */
double support_oracle(const LinearSystem& sys, const Mat& b, const ControlPolytope& u,
                      const Direction& d, std::size_t quad_nodes = kDefaultQuadNodes);

}  // namespace reachwarp

#endif  // REACHWARP_REACH_HPP
