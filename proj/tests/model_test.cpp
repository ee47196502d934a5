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

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "reachwarp/errors.hpp"
#include "test_support.hpp"

namespace reachwarp {
namespace {

using testing::random_matrix;

Vec vec(std::initializer_list<double> values) {
    Vec v(static_cast<Eigen::Index>(values.size()));
    Eigen::Index i = 0;
    for (double x : values) v(i++) = x;
    return v;
}

TEST(BoxPolytope, CanonicalOrderInTwoDimensions) {
    const auto box = ControlPolytope::box(vec({-1, -1}), vec({1, 1}));
    ASSERT_EQ(box.size(), 4U);
    EXPECT_EQ(box.vertices()[0], vec({-1, -1}));
    EXPECT_EQ(box.vertices()[1], vec({1, -1}));
    EXPECT_EQ(box.vertices()[2], vec({-1, 1}));
    EXPECT_EQ(box.vertices()[3], vec({1, 1}));
    EXPECT_TRUE(box.contains_zero());
    EXPECT_EQ(box.input_dim(), 2);
}

TEST(BoxPolytope, DegenerateBoxCollapsesToOneVertex) {
    const auto box = ControlPolytope::box(vec({0, 0}), vec({0, 0}));
    ASSERT_EQ(box.size(), 1U);
    EXPECT_EQ(box.vertices()[0], vec({0, 0}));
    EXPECT_TRUE(box.contains_zero());
}

TEST(BoxPolytope, FourSurfaceBoxHasSixteenVertices) {
    const auto box = ControlPolytope::box(Vec::Constant(4, -0.1), Vec::Constant(4, 0.1));
    EXPECT_EQ(box.size(), 16U);
}

TEST(BoxPolytope, InvertedBoundsAreGeometryError) {
    EXPECT_THROW(ControlPolytope::box(vec({0, 1}), vec({1, 0})), GeometryError);
}

TEST(BoxPolytope, ZeroMembershipFollowsBounds) {
    EXPECT_FALSE(ControlPolytope::box(vec({0.5, -1}), vec({1, 1})).contains_zero());
    EXPECT_TRUE(ControlPolytope::box(vec({0, -1}), vec({1, 0})).contains_zero());
}

TEST(BoxPolytope, VertexCountAndBoundsProperty) {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> coord(-2.0, 2.0);
    std::bernoulli_distribution collapse(0.3);
    for (int trial = 0; trial < 100; ++trial) {
        const Eigen::Index m = 1 + trial % 6;
        Vec lo(m), hi(m);
        int free_coords = 0;
        for (Eigen::Index i = 0; i < m; ++i) {
            const double a = coord(rng);
            if (collapse(rng)) {
                lo(i) = hi(i) = a;
            } else {
                const double b = coord(rng);
                lo(i) = std::min(a, b);
                hi(i) = std::max(a, b);
                if (lo(i) < hi(i)) ++free_coords;
            }
        }
        const auto box = ControlPolytope::box(lo, hi);
        EXPECT_EQ(box.size(), std::size_t{1} << free_coords);
        for (const auto& u : box.vertices()) {
            EXPECT_TRUE((u.array() >= lo.array()).all());
            EXPECT_TRUE((u.array() <= hi.array()).all());
        }
    }
}

TEST(VertexPolytope, DropsExactDuplicates) {
    const auto p = ControlPolytope::from_vertices(
        {vec({1, 0}), vec({-1, 1}), vec({1, 0}), vec({-1, -1})});
    ASSERT_EQ(p.size(), 3U);
    EXPECT_EQ(p.vertices()[2], vec({-1, -1}));
    EXPECT_TRUE(p.contains_zero());
}

TEST(VertexPolytope, OriginOutsideTriangle) {
    const auto p = ControlPolytope::from_vertices({vec({1, 1}), vec({2, 1}), vec({1, 3})});
    EXPECT_FALSE(p.contains_zero());
}

TEST(VertexPolytope, OriginOnEdgeCounts) {
    const auto p = ControlPolytope::from_vertices({vec({-1, 0}), vec({1, 0}), vec({0, 1})});
    EXPECT_TRUE(p.contains_zero());
}

TEST(VertexPolytope, SegmentAndPoint) {
    EXPECT_TRUE(ControlPolytope::from_vertices({vec({-2}), vec({0.5})}).contains_zero());
    EXPECT_FALSE(ControlPolytope::from_vertices({vec({0.1}), vec({0.5})}).contains_zero());
    EXPECT_TRUE(ControlPolytope::from_vertices({vec({0, 0, 0})}).contains_zero());
}

TEST(VertexPolytope, HullTestAgreesWithBoxRule) {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> coord(-1.0, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
        const Eigen::Index m = 1 + trial % 3;
        Vec lo(m), hi(m);
        for (Eigen::Index i = 0; i < m; ++i) {
            const double a = coord(rng), b = coord(rng);
            lo(i) = std::min(a, b);
            hi(i) = std::max(a, b);
        }
        const auto box = ControlPolytope::box(lo, hi);
        EXPECT_EQ(hull_contains_origin(box.vertices()), box.contains_zero()) << trial;
    }
}

TEST(VertexPolytope, RejectsEmptyAndMixedDimensions) {
    EXPECT_THROW(ControlPolytope::from_vertices({}), GeometryError);
    EXPECT_THROW(ControlPolytope::from_vertices({vec({1, 0}), vec({1})}), DimensionError);
}

TEST(BallArgmax, UnitGradient) {
    const FrobeniusBall ball(Mat::Zero(2, 2), 1.0);
    Mat w = Mat::Zero(2, 2);
    w(0, 0) = 1.0;
    EXPECT_EQ(ball_argmax(ball, w, Sense::grow), w);
}

TEST(BallArgmax, ZeroGradientReturnsCenter) {
    std::mt19937_64 rng(1);
    const FrobeniusBall ball(random_matrix(rng, 3, 2), 0.7);
    EXPECT_EQ(ball_argmax(ball, Mat::Zero(3, 2), Sense::grow), ball.center());
    EXPECT_EQ(ball_argmax(ball, Mat::Zero(3, 2), Sense::shrink), ball.center());
}

TEST(BallArgmax, ScalarExtremizersMatchSampling) {
    const FrobeniusBall ball(Mat::Zero(1, 1), 0.5);
    const Mat w = Mat::Constant(1, 1, -2.0);
    const double grow = ball_argmax(ball, w, Sense::grow)(0, 0);
    const double shrink = ball_argmax(ball, w, Sense::shrink)(0, 0);
    EXPECT_EQ(grow, -0.5);
    EXPECT_EQ(shrink, 0.5);

    // Brute force over 10^4 scalars in [-0.5, 0.5].
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> member(-0.5, 0.5);
    double best = -1e300, worst = 1e300;
    for (int i = 0; i < 10000; ++i) {
        const double b = member(rng);
        best = std::max(best, -2.0 * b);
        worst = std::min(worst, -2.0 * b);
    }
    EXPECT_GE(-2.0 * grow, best);
    EXPECT_LE(-2.0 * shrink, worst);
}

TEST(BallArgmax, DimensionMismatch) {
    const FrobeniusBall ball(Mat::Zero(2, 2), 1.0);
    EXPECT_THROW(ball_argmax(ball, Mat::Zero(2, 3), Sense::grow), DimensionError);
    EXPECT_THROW(ball_contains(ball, Mat::Zero(3, 2)), DimensionError);
}

TEST(BallArgmax, ExtremalOverSampledMembers) {
    std::mt19937_64 rng(29);
    std::normal_distribution<double> normal(0.0, 1.0);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
        const Eigen::Index n = 1 + trial % 4, m = 1 + trial % 3;
        const FrobeniusBall ball(random_matrix(rng, n, m, 2.0), 0.1 + unit(rng));
        const Mat w = random_matrix(rng, n, m);
        const double top = (w.transpose() * ball_argmax(ball, w, Sense::grow)).trace();
        const double bottom = (w.transpose() * ball_argmax(ball, w, Sense::shrink)).trace();
        for (int k = 0; k < 1000; ++k) {
            Mat g(n, m);
            for (Eigen::Index i = 0; i < g.size(); ++i) g(i) = normal(rng);
            const double r = ball.radius() * std::pow(unit(rng), 1.0 / static_cast<double>(n * m));
            const Mat member = ball.center() + (r / g.norm()) * g;
            const double value = (w.transpose() * member).trace();
            EXPECT_GE(top, value - 1e-10);
            EXPECT_LE(bottom, value + 1e-10);
        }
        EXPECT_TRUE(ball_contains(ball, ball_argmax(ball, w, Sense::grow)));
        EXPECT_NEAR((ball_argmax(ball, w, Sense::grow) - ball.center()).norm(), ball.radius(),
                    1e-12);
    }
}

TEST(BallContains, CenterBoundaryAndOutside) {
    Mat center(2, 2);
    center << 0.0, 1.0, 1.0, 0.0;
    const FrobeniusBall ball(center, 0.5);
    Mat e11 = Mat::Zero(2, 2);
    e11(0, 0) = 1.0;
    EXPECT_TRUE(ball_contains(ball, center));
    EXPECT_TRUE(ball_contains(ball, center + 0.5 * e11));
    EXPECT_FALSE(ball_contains(ball, center + 1.01 * 0.5 * e11));
}

TEST(FrobeniusBallTest, NegativeRadiusRejected) {
    EXPECT_THROW(FrobeniusBall(Mat::Zero(1, 1), -0.1), DomainError);
}

TEST(DirectionTest, UnitNormEnforced) {
    EXPECT_NO_THROW(Direction(vec({1, 0})));
    EXPECT_THROW(Direction(vec({1, 1})), PreconditionError);
}

TEST(DirectionTest, NormalizeWithinTolerance) {
    const Direction d = Direction::normalized(vec({1.0 + 5e-7, 0.0}), 1e-6);
    EXPECT_NEAR(d.vec().norm(), 1.0, 1e-15);
    EXPECT_THROW(Direction::normalized(vec({0.3536, 0.6124, 0.7071}), 1e-6),
                 PreconditionError);
}

TEST(DirectionTest, NormalizeIsIdempotent) {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 100; ++i) {
        const Vec v = testing::random_unit(rng, 3);
        const Direction once = Direction::normalized(v, 1e-6);
        const Direction twice = Direction::normalized(once.vec(), 1e-6);
        EXPECT_EQ(once.vec(), twice.vec());
    }
}

TEST(LinearSystemTest, Validation) {
    EXPECT_THROW(LinearSystem(Mat::Zero(2, 3), Vec::Zero(2), 1.0, 1), DimensionError);
    EXPECT_THROW(LinearSystem(Mat::Zero(2, 2), Vec::Zero(3), 1.0, 1), DimensionError);
    EXPECT_THROW(LinearSystem(Mat::Zero(2, 2), Vec::Zero(2), 0.0, 1), DomainError);
    EXPECT_THROW(LinearSystem(Mat::Zero(2, 2), Vec::Zero(2), -1.0, 1), DomainError);
    const LinearSystem sys(Mat::Zero(2, 2), Vec::Zero(2), 1.0, 3);
    EXPECT_EQ(sys.state_dim(), 2);
    EXPECT_EQ(sys.input_dim(), 3);
    EXPECT_THROW(sys.check_input_matrix(Mat::Zero(2, 2)), DimensionError);
    EXPECT_NO_THROW(sys.check_input_matrix(Mat::Zero(2, 3)));
}

}  // namespace
}  // namespace reachwarp
