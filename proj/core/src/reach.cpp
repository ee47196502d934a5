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
#include "reachwarp/reach.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <string>

#include "reachwarp/errors.hpp"
#include "reachwarp/parallel.hpp"

namespace reachwarp {
namespace {

std::size_t first_maximizer(const Vec& gain, const std::vector<Vec>& vertices) {
    std::size_t best = 0;
    double best_value = gain.dot(vertices.front());
    for (std::size_t i = 1; i < vertices.size(); ++i) {
        const double value = gain.dot(vertices[i]);
        if (value > best_value) {
            best = i;
            best_value = value;
        }
    }
    return best;
}

void check_direction(const LinearSystem& sys, const Direction& d) {
    if (d.dim() != sys.state_dim()) {
        throw DimensionError("direction has dimension " + std::to_string(d.dim()) +
                             ", state dimension is " + std::to_string(sys.state_dim()));
    }
}

void check_controls(const Mat& b, const ControlPolytope& u) {
    if (u.input_dim() != b.cols()) {
        throw DimensionError("control set has dimension " + std::to_string(u.input_dim()) +
                             ", input matrix has " + std::to_string(b.cols()) + " columns");
    }
}

}  // namespace

CostatePath::CostatePath(const LinearSystem& sys, Direction d)
    : a_transpose_(sys.a().transpose()), horizon_(sys.horizon()), d_(std::move(d)) {
    check_direction(sys, d_);
}

Vec CostatePath::at(double t) const {
    if (!(t >= 0.0 && t <= horizon_)) {
        throw DomainError("costate_at: t = " + std::to_string(t) + " outside [0, " +
                          std::to_string(horizon_) + "]");
    }
    return mat_exp(a_transpose_ * (horizon_ - t)) * d_.vec();
}

Vec costate_at(const CostatePath& path, double t) { return path.at(t); }

VertexChoice optimal_vertex(const Vec& p, const Mat& b, const ControlPolytope& u) {
    if (u.size() == 0) throw GeometryError("optimal_vertex: empty vertex list");
    if (p.size() != b.rows()) {
        throw DimensionError("optimal_vertex: co-state has dimension " +
                             std::to_string(p.size()) + ", B has " +
                             std::to_string(b.rows()) + " rows");
    }
    check_controls(b, u);
    const Vec gain = b.transpose() * p;
    const std::size_t index = first_maximizer(gain, u.vertices());
    return {index, u.vertices()[index]};
}

Vec propagate_step(const Mat& a, const Mat& b, const Vec& u, const Vec& x, double h) {
    require_square(a, "propagate_step A");
    const Eigen::Index n = a.rows();
    if (b.rows() != n || b.cols() != u.size() || x.size() != n) {
        throw DimensionError("propagate_step: inconsistent A, B, u, x dimensions");
    }
    if (!(h > 0.0)) throw DomainError("propagate_step: step must be > 0");

    Mat augmented = Mat::Zero(n + 1, n + 1);
    augmented.topLeftCorner(n, n) = a;
    augmented.topRightCorner(n, 1) = b * u;
    const Mat flow = mat_exp(augmented * h);
    return flow.topLeftCorner(n, n) * x + flow.topRightCorner(n, 1);
}

BoundaryIntegrator::BoundaryIntegrator(const LinearSystem& sys, const Mat& b,
                                       const ControlPolytope& u, std::size_t steps)
    : b_(b), vertices_(u.vertices()), x0_(sys.x0()), steps_(steps) {
    sys.check_input_matrix(b);
    check_controls(b, u);
    if (steps < 1) throw DomainError("boundary_point: steps must be >= 1");
    if (vertices_.empty()) throw GeometryError("boundary_point: empty vertex list");

    step_ = sys.horizon() / static_cast<double>(steps);
    state_step_ = mat_exp(sys.a() * step_);
    costate_step_ = mat_exp(sys.a().transpose() * step_);
    costate_half_step_ = mat_exp(sys.a().transpose() * (0.5 * step_));

    const Vec origin = Vec::Zero(sys.state_dim());
    forced_.reserve(vertices_.size());
    for (const auto& vertex : vertices_) {
        forced_.push_back(propagate_step(sys.a(), b, vertex, origin, step_));
    }
}

BoundaryPoint BoundaryIntegrator::point(const Direction& d) const {
    if (d.dim() != x0_.size()) {
        throw DimensionError("boundary_point: direction has dimension " +
                             std::to_string(d.dim()) + ", state dimension is " +
                             std::to_string(x0_.size()));
    }
    // Co-state at step midpoints, recursed backwards from P(T) = d.
    Mat costate(x0_.size(), static_cast<Eigen::Index>(steps_));
    costate.col(static_cast<Eigen::Index>(steps_ - 1)).noalias() =
        costate_half_step_ * d.vec();
    for (std::size_t k = steps_ - 1; k-- > 0;) {
        costate.col(static_cast<Eigen::Index>(k)).noalias() =
            costate_step_ * costate.col(static_cast<Eigen::Index>(k + 1));
    }

    BoundaryPoint out;
    out.direction = d.vec();
    out.steps = steps_;
    Vec x = x0_;
    Vec next(x0_.size());
    Vec gain(b_.cols());
    for (std::size_t k = 0; k < steps_; ++k) {
        gain.noalias() = b_.transpose() * costate.col(static_cast<Eigen::Index>(k));
        const std::size_t vertex = first_maximizer(gain, vertices_);
        if (out.switches.empty() || out.switches.back().vertex != vertex) {
            out.switches.push_back({static_cast<double>(k) * step_, vertex});
        }
        next.noalias() = state_step_ * x;
        x = next + forced_[vertex];
    }
    if (!x.allFinite()) {
        throw NumericError("boundary_point: propagated state is not finite",
                           std::numeric_limits<double>::infinity());
    }
    out.support_value = d.vec().dot(x);
    out.endpoint = std::move(x);
    return out;
}

BoundaryPoint boundary_point(const LinearSystem& sys, const Mat& b,
                             const ControlPolytope& u, const Direction& d,
                             std::size_t steps) {
    check_direction(sys, d);
    return BoundaryIntegrator(sys, b, u, steps).point(d);
}

Vec zero_input_endpoint(const LinearSystem& sys) {
    return mat_exp(sys.a() * sys.horizon()) * sys.x0();
}

GrowthReport growth_metric(const LinearSystem& sys, const Mat& b,
                           const ControlPolytope& u, const Direction& d,
                           std::size_t steps) {
    BoundaryPoint bp = boundary_point(sys, b, u, d, steps);
    GrowthReport report;
    report.c0 = zero_input_endpoint(sys);
    report.value = d.vec().dot(bp.endpoint - report.c0);
    report.endpoint = std::move(bp.endpoint);
    report.b = b;
    return report;
}

std::vector<BoundaryPoint> boundary_sweep(const LinearSystem& sys, const Mat& b,
                                          const ControlPolytope& u,
                                          const std::vector<Direction>& directions,
                                          std::size_t steps) {
    if (directions.empty()) throw DomainError("boundary_sweep: no directions");
    for (const auto& d : directions) check_direction(sys, d);
    const BoundaryIntegrator integrator(sys, b, u, steps);
    std::vector<BoundaryPoint> points(directions.size());
    parallel_for(directions.size(),
                 [&](std::size_t i) { points[i] = integrator.point(directions[i]); });
    return points;
}

std::vector<Direction> direction_fan(Eigen::Index n, std::size_t count,
                                     std::uint64_t seed) {
    if (count < 1) throw DomainError("direction_fan: count must be >= 1");
    if (n < 1) throw DimensionError("direction_fan: dimension must be >= 1");

    std::vector<Direction> fan;
    fan.reserve(count);
    const auto total = static_cast<double>(count);
    if (n == 1) {
        // Only two unit vectors exist; alternate them.
        for (std::size_t k = 0; k < count; ++k) {
            fan.emplace_back(Vec::Constant(1, k % 2 == 0 ? 1.0 : -1.0));
        }
    } else if (n == 2) {
        for (std::size_t k = 0; k < count; ++k) {
            const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / total;
            Vec d(2);
            d << std::cos(angle), std::sin(angle);
            fan.push_back(Direction::normalized(d, 1e-9));
        }
    } else if (n == 3) {
        const double golden_angle = std::numbers::pi * (3.0 - std::sqrt(5.0));
        for (std::size_t k = 0; k < count; ++k) {
            const double z = 1.0 - (2.0 * static_cast<double>(k) + 1.0) / total;
            const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
            const double phi = golden_angle * static_cast<double>(k);
            Vec d(3);
            d << r * std::cos(phi), r * std::sin(phi), z;
            fan.push_back(Direction::normalized(d, 1e-9));
        }
    } else {
        std::mt19937_64 rng(seed);
        std::normal_distribution<double> normal(0.0, 1.0);
        while (fan.size() < count) {
            Vec d(n);
            for (Eigen::Index i = 0; i < n; ++i) d(i) = normal(rng);
            const double norm = d.norm();
            if (norm < 1e-12) continue;
            fan.push_back(Direction::normalized(d / norm, 1e-9));
        }
    }
    return fan;
}

double support_oracle(const LinearSystem& sys, const Mat& b, const ControlPolytope& u,
                      const Direction& d, std::size_t quad_nodes) {
    sys.check_input_matrix(b);
    check_controls(b, u);
    check_direction(sys, d);
    if (quad_nodes < 2) throw DomainError("support_oracle: quad_nodes must be >= 2");

    const std::size_t panels = quad_nodes + (quad_nodes % 2);
    const double horizon = sys.horizon();
    const double h = horizon / static_cast<double>(panels);

    auto integrand = [&](double t) {
        const Eigen::RowVectorXd row =
            d.vec().transpose() * mat_exp(sys.a() * (horizon - t)) * b;
        double best = -std::numeric_limits<double>::infinity();
        for (const auto& vertex : u.vertices()) best = std::max(best, row.dot(vertex));
        return best;
    };

    double sum = integrand(0.0) + integrand(horizon);
    for (std::size_t k = 1; k < panels; ++k) {
        const double weight = (k % 2 == 1) ? 4.0 : 2.0;
        sum += weight * integrand(static_cast<double>(k) * h);
    }
    const double drift = d.vec().dot(mat_exp(sys.a() * horizon) * sys.x0());
    return drift + sum * h / 3.0;
}

}  // namespace reachwarp
