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
#include "reachwarp/model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "reachwarp/errors.hpp"

namespace reachwarp {
namespace {

std::string shape(const Mat& m) {
    return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

bool same_point(const Vec& a, const Vec& b) {
    return a.size() == b.size() && (a.array() == b.array()).all();
}

}  // namespace

std::string_view to_string(Sense sense) {
    return sense == Sense::grow ? "grow" : "shrink";
}

LinearSystem::LinearSystem(Mat a, Vec x0, double horizon, Eigen::Index input_dim)
    : a_(std::move(a)), x0_(std::move(x0)), horizon_(horizon), input_dim_(input_dim) {
    require_square(a_, "LinearSystem A");
    require_finite(a_, "LinearSystem A");
    require_finite(x0_, "LinearSystem X0");
    if (x0_.size() != a_.rows()) {
        throw DimensionError("LinearSystem: X0 has dimension " +
                             std::to_string(x0_.size()) + " but A is " + shape(a_));
    }
    if (!(horizon_ > 0.0) || !std::isfinite(horizon_)) {
        throw DomainError("LinearSystem: horizon T must be finite and > 0");
    }
    if (input_dim_ < 1) {
        throw DimensionError("LinearSystem: input dimension must be >= 1");
    }
}

void LinearSystem::check_input_matrix(const Mat& b) const {
    if (b.rows() != state_dim() || b.cols() != input_dim_) {
        throw DimensionError("input matrix is " + shape(b) + ", expected " +
                             std::to_string(state_dim()) + "x" +
                             std::to_string(input_dim_));
    }
    require_finite(b, "input matrix");
}

Direction::Direction(Vec d) : d_(std::move(d)) {
    if (d_.size() < 1) throw DimensionError("Direction: empty vector");
    require_finite(d_, "Direction");
    if (std::abs(d_.norm() - 1.0) > 1e-12) {
        throw PreconditionError("Direction: vector must have unit norm");
    }
}

Direction Direction::normalized(const Vec& d, double tolerance) {
    require_finite(d, "Direction");
    const double norm = d.norm();
    if (std::abs(norm - 1.0) > tolerance) {
        throw PreconditionError("Direction: norm " + std::to_string(norm) +
                                " is not within " + std::to_string(tolerance) +
                                " of 1");
    }
    // Already unit up to rounding: keep the bits so reloading is idempotent.
    if (std::abs(norm - 1.0) <= 4.0 * std::numeric_limits<double>::epsilon()) {
        return Direction(d);
    }
    return Direction(d / norm);
}

ControlPolytope::ControlPolytope(std::vector<Vec> vertices, Eigen::Index input_dim,
                                 bool contains_zero)
    : vertices_(std::move(vertices)), input_dim_(input_dim), contains_zero_(contains_zero) {}

ControlPolytope ControlPolytope::box(const Vec& lo, const Vec& hi) {
    if (lo.size() != hi.size() || lo.size() < 1) {
        throw DimensionError("box: lo and hi must have the same positive dimension");
    }
    require_finite(lo, "box lo");
    require_finite(hi, "box hi");
    const Eigen::Index m = lo.size();
    for (Eigen::Index i = 0; i < m; ++i) {
        if (lo(i) > hi(i)) {
            throw GeometryError("box: lo[" + std::to_string(i) + "] > hi[" +
                                std::to_string(i) + "]");
        }
    }
    if (m >= 31) throw GeometryError("box: too many input coordinates to enumerate");

    const std::size_t count = std::size_t{1} << m;
    std::vector<Vec> vertices;
    vertices.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        Vec v(m);
        for (Eigen::Index j = 0; j < m; ++j) {
            v(j) = ((k >> j) & 1U) ? hi(j) : lo(j);
        }
        const bool duplicate = std::any_of(vertices.begin(), vertices.end(),
                                           [&](const Vec& w) { return same_point(v, w); });
        if (!duplicate) vertices.push_back(std::move(v));
    }
    const bool zero = (lo.array() <= 0.0).all() && (hi.array() >= 0.0).all();
    return ControlPolytope(std::move(vertices), m, zero);
}

ControlPolytope ControlPolytope::from_vertices(std::vector<Vec> vertices) {
    if (vertices.empty()) throw GeometryError("polytope: vertex list is empty");
    const Eigen::Index m = vertices.front().size();
    if (m < 1) throw DimensionError("polytope: vertices must have dimension >= 1");
    std::vector<Vec> unique;
    unique.reserve(vertices.size());
    for (auto& v : vertices) {
        if (v.size() != m) {
            throw DimensionError("polytope: vertices have mixed dimensions");
        }
        require_finite(v, "polytope vertex");
        const bool duplicate = std::any_of(unique.begin(), unique.end(),
                                           [&](const Vec& w) { return same_point(v, w); });
        if (!duplicate) unique.push_back(std::move(v));
    }
    const bool zero = hull_contains_origin(unique);
    return ControlPolytope(std::move(unique), m, zero);
}

FrobeniusBall::FrobeniusBall(Mat center, double radius)
    : center_(std::move(center)), radius_(radius) {
    if (center_.rows() < 1 || center_.cols() < 1) {
        throw DimensionError("FrobeniusBall: empty center");
    }
    require_finite(center_, "FrobeniusBall center");
    if (!(radius_ >= 0.0) || !std::isfinite(radius_)) {
        throw DomainError("FrobeniusBall: radius must be finite and >= 0");
    }
}

Mat ball_argmax(const FrobeniusBall& ball, const Mat& w, Sense sense) {
    const Mat& center = ball.center();
    if (w.rows() != center.rows() || w.cols() != center.cols()) {
        throw DimensionError("ball_argmax: gradient is " + shape(w) +
                             ", ball center is " + shape(center));
    }
    const double norm = w.norm();
    if (norm == 0.0) return center;
    const double step = sense == Sense::grow ? ball.radius() : -ball.radius();
    return center + (step / norm) * w;
}

bool ball_contains(const FrobeniusBall& ball, const Mat& m) {
    const Mat& center = ball.center();
    if (m.rows() != center.rows() || m.cols() != center.cols()) {
        throw DimensionError("ball_contains: matrix is " + shape(m) +
                             ", ball center is " + shape(center));
    }
    return (m - center).norm() <= ball.radius() + 1e-12;
}

bool hull_contains_origin(const std::vector<Vec>& points) {
    if (points.empty()) return false;
    // Phase-I simplex on  sum_i l_i p_i = 0, sum_i l_i = 1, l >= 0.
    // One artificial per row; feasible iff the artificial sum can reach zero.
    const auto n_pts = static_cast<Eigen::Index>(points.size());
    const Eigen::Index dim = points.front().size();
    const Eigen::Index rows = dim + 1;
    const Eigen::Index cols = n_pts + rows;  // + rhs column at index `cols`

    double scale = 1.0;
    for (const auto& p : points) scale = std::max(scale, p.cwiseAbs().maxCoeff());

    Mat tab = Mat::Zero(rows + 1, cols + 1);
    for (Eigen::Index j = 0; j < n_pts; ++j) {
        tab.block(0, j, dim, 1) = points[static_cast<std::size_t>(j)] / scale;
        tab(dim, j) = 1.0;
    }
    tab.block(0, n_pts, rows, rows).setIdentity();
    tab(dim, cols) = 1.0;
    for (Eigen::Index j = 0; j <= cols; ++j) {
        if (j >= n_pts && j < cols) continue;
        tab(rows, j) = -tab.col(j).head(rows).sum();
    }
    std::vector<Eigen::Index> basis(static_cast<std::size_t>(rows));
    for (Eigen::Index r = 0; r < rows; ++r) basis[static_cast<std::size_t>(r)] = n_pts + r;

    constexpr double eps = 1e-12;
    for (int iter = 0; iter < 10000; ++iter) {
        Eigen::Index enter = -1;
        for (Eigen::Index j = 0; j < cols; ++j) {
            if (tab(rows, j) < -eps) {
                enter = j;
                break;
            }
        }
        if (enter < 0) break;
        Eigen::Index leave = -1;
        double best = 0.0;
        for (Eigen::Index r = 0; r < rows; ++r) {
            if (tab(r, enter) <= eps) continue;
            const double ratio = tab(r, cols) / tab(r, enter);
            if (leave < 0 || ratio < best - eps ||
                (std::abs(ratio - best) <= eps &&
                 basis[static_cast<std::size_t>(r)] < basis[static_cast<std::size_t>(leave)])) {
                leave = r;
                best = ratio;
            }
        }
        if (leave < 0) break;  // unbounded cannot happen in phase I
        tab.row(leave) /= tab(leave, enter);
        for (Eigen::Index r = 0; r <= rows; ++r) {
            if (r != leave && tab(r, enter) != 0.0) {
                tab.row(r) -= tab(r, enter) * tab.row(leave);
            }
        }
        basis[static_cast<std::size_t>(leave)] = enter;
    }
    return -tab(rows, cols) <= 1e-9;
}

}  // namespace reachwarp
