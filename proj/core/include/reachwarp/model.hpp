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
#ifndef REACHWARP_MODEL_HPP
#define REACHWARP_MODEL_HPP

#include <cstddef>
#include <string_view>
#include <vector>

#include "reachwarp/linalg.hpp"

namespace reachwarp {

/// Whether the input matrix should enlarge or reduce the reachable set.
enum class Sense { grow, shrink };

std::string_view to_string(Sense sense);

/**
 * @brief Fixed dynamics xdot = A x + B u with initial state x0 and horizon T.
 *
 * B is the design variable and is therefore passed separately to every
 * operation; `input_dim` records the width it must have.
 */
class LinearSystem {
public:
    LinearSystem(Mat a, Vec x0, double horizon, Eigen::Index input_dim);

    const Mat& a() const noexcept { return a_; }
    const Vec& x0() const noexcept { return x0_; }
    double horizon() const noexcept { return horizon_; }
    Eigen::Index state_dim() const noexcept { return a_.rows(); }
    Eigen::Index input_dim() const noexcept { return input_dim_; }

    /// Throws DimensionError unless `b` is state_dim x input_dim.
    void check_input_matrix(const Mat& b) const;

private:
    Mat a_;
    Vec x0_;
    double horizon_;
    Eigen::Index input_dim_;
};

/// Unit vector in state space.
class Direction {
public:
    /// Requires | ||d|| - 1 | <= 1e-12.
    explicit Direction(Vec d);

    /// Rescales `d` to unit length if it is within `tolerance` of unit norm;
    /// throws PreconditionError otherwise.
    static Direction normalized(const Vec& d, double tolerance);

    const Vec& vec() const noexcept { return d_; }
    Eigen::Index dim() const noexcept { return d_.size(); }

private:
    Vec d_;
};

/**
 * @brief Compact convex control set stored by its vertices.
 *
 * Exact duplicate vertices are dropped at construction. Convexity of a
 * user-supplied vertex list is taken on trust; only `contains_zero` is
 * computed (exactly for boxes, by an LP feasibility test otherwise).
 */
class ControlPolytope {
public:
    /// Box prod_i [lo_i, hi_i]. Vertex k takes hi_j when bit j of k is set,
    /// so the first coordinate toggles fastest.
    static ControlPolytope box(const Vec& lo, const Vec& hi);

    static ControlPolytope from_vertices(std::vector<Vec> vertices);

    const std::vector<Vec>& vertices() const noexcept { return vertices_; }
    std::size_t size() const noexcept { return vertices_.size(); }
    Eigen::Index input_dim() const noexcept { return input_dim_; }
    bool contains_zero() const noexcept { return contains_zero_; }

private:
    ControlPolytope(std::vector<Vec> vertices, Eigen::Index input_dim,
                    bool contains_zero);

    std::vector<Vec> vertices_;
    Eigen::Index input_dim_;
    bool contains_zero_;
};

/// Admissible input matrices { M : ||M - center||_F <= radius }.
class FrobeniusBall {
public:
    FrobeniusBall(Mat center, double radius);

    const Mat& center() const noexcept { return center_; }
    double radius() const noexcept { return radius_; }

private:
    Mat center_;
    double radius_;
};

/**
 * Extremizes the linear functional M -> trace(W^T M) over the ball:
 * center +/- radius * W / ||W||_F, or the center itself when W = 0.
 */
Mat ball_argmax(const FrobeniusBall& ball, const Mat& w, Sense sense);

/// ||M - center||_F <= radius + 1e-12.
bool ball_contains(const FrobeniusBall& ball, const Mat& m);

/// True if 0 lies in the convex hull of the given points.
bool hull_contains_origin(const std::vector<Vec>& points);

}  // namespace reachwarp

#endif  // REACHWARP_MODEL_HPP
