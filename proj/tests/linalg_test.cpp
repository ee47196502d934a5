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
#include "reachwarp/linalg.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "reachwarp/errors.hpp"
#include "test_support.hpp"

namespace reachwarp {
namespace {

using testing::random_matrix;
using testing::taylor_exp;

Mat admire_a() {
    Mat a(3, 3);
    a << -0.9967, 0.0, 0.6176, 0.0, -0.5057, 0.0, -0.0939, 0.0, -0.2127;
    return a;
}

TEST(MatExp, ZeroIsIdentity) {
    EXPECT_EQ(mat_exp(Mat::Zero(2, 2)), Mat::Identity(2, 2));
}

TEST(MatExp, Diagonal) {
    const Mat m = Vec((Vec(2) << -1.0, -2.0).finished()).asDiagonal();
    const Mat e = mat_exp(m);
    EXPECT_NEAR(e(0, 0), std::exp(-1.0), 1e-15);
    EXPECT_NEAR(e(1, 1), std::exp(-2.0), 1e-15);
    EXPECT_EQ(e(0, 1), 0.0);
    EXPECT_EQ(e(1, 0), 0.0);
}

TEST(MatExp, NilpotentSeriesTerminates) {
    Mat n(2, 2);
    n << 0.0, 1.0, 0.0, 0.0;
    Mat expected(2, 2);
    expected << 1.0, 1.0, 0.0, 1.0;
    EXPECT_LE((mat_exp(n) - expected).cwiseAbs().maxCoeff(), 1e-15);
    EXPECT_EQ(mat_exp(n)(1, 0), 0.0);
}

TEST(MatExp, RotationGenerator) {
    for (const double theta : {0.3, 1.0, std::numbers::pi, 7.5}) {
        Mat m(2, 2);
        m << 0.0, theta, -theta, 0.0;
        Mat expected(2, 2);
        expected << std::cos(theta), std::sin(theta), -std::sin(theta), std::cos(theta);
        EXPECT_LE((mat_exp(m) - expected).cwiseAbs().maxCoeff(), 1e-13) << theta;
    }
}

TEST(MatExp, NonSquareIsDimensionError) {
    EXPECT_THROW(mat_exp(Mat::Zero(2, 3)), DimensionError);
}

TEST(MatExp, NonFiniteIsRejected) {
    Mat m = Mat::Zero(2, 2);
    m(0, 1) = std::nan("");
    EXPECT_THROW(mat_exp(m), PreconditionError);
}

TEST(MatExp, AgreesWithTaylorSeries) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        const Eigen::Index n = 1 + trial % 6;
        const double scale = 0.05 + 0.6 * (trial % 5);
        const Mat m = random_matrix(rng, n, n, scale);
        const Mat reference = taylor_exp(m);
        const Mat diff = mat_exp(m) - reference;
        EXPECT_LE(diff.cwiseAbs().maxCoeff(), 1e-12 * reference.cwiseAbs().maxCoeff())
            << "trial " << trial;
    }
}

TEST(MatExp, InverseProperty) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const Eigen::Index n = 1 + trial % 6;
        Mat m = random_matrix(rng, n, n);
        m *= (0.1 + 4.9 * (trial % 10) / 9.0) / m.norm();
        const Mat product = mat_exp(m) * mat_exp(-m);
        EXPECT_LE((product - Mat::Identity(n, n)).cwiseAbs().maxCoeff(), 1e-10);
    }
}

TEST(MatExp, SemigroupProperty) {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> time(0.0, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
        const Eigen::Index n = 1 + trial % 6;
        Mat m = random_matrix(rng, n, n);
        m *= 2.5 / m.norm();
        const double s = time(rng);
        const double t = time(rng);
        const Mat lhs = mat_exp(m * (s + t));
        const Mat rhs = mat_exp(m * s) * mat_exp(m * t);
        EXPECT_LE((lhs - rhs).cwiseAbs().maxCoeff(), 1e-10);
    }
}

TEST(MatExp, LargeNormUsesSquaring) {
    Mat m(2, 2);
    m << -20.0, 3.0, 0.5, -8.0;
    // e^{M} = (e^{M/8})^8, with e^{M/8} from the series.
    Mat reference = taylor_exp(m / 8.0, 60);
    for (int i = 0; i < 3; ++i) reference = reference * reference;
    const Mat diff = mat_exp(m) - reference;
    EXPECT_LE(diff.cwiseAbs().maxCoeff(), 1e-12 * reference.cwiseAbs().maxCoeff());
}

TEST(Spectrum, Diagonal) {
    const Vec lambdas = (Vec(4) << 0.7, -1.0, -2.0, 3.25).finished();
    const SpectrumReport s = spectrum(Mat(lambdas.asDiagonal()));
    ASSERT_EQ(s.eigenvalues.size(), 4U);
    EXPECT_TRUE(s.all_real);
    const double sorted[] = {3.25, 0.7, -1.0, -2.0};
    for (int i = 0; i < 4; ++i) {
        EXPECT_NEAR(s.eigenvalues[static_cast<std::size_t>(i)].real(), sorted[i], 1e-12);
        EXPECT_EQ(s.eigenvalues[static_cast<std::size_t>(i)].imag(), 0.0);
    }
}

TEST(Spectrum, OscillatorHasComplexPair) {
    Mat a(2, 2);
    a << 0.0, 1.0, -2.0, -0.8;
    const SpectrumReport s = spectrum(a);
    EXPECT_FALSE(s.all_real);
    // lambda = -0.4 +/- i sqrt(1.84)
    const double im = std::sqrt(1.84);
    EXPECT_NEAR(s.eigenvalues[0].real(), -0.4, 1e-12);
    EXPECT_NEAR(s.eigenvalues[0].imag(), im, 1e-12);
    EXPECT_NEAR(s.eigenvalues[1].imag(), -im, 1e-12);
    EXPECT_NEAR(s.max_abs_imag, im, 1e-12);
}

TEST(Spectrum, AdmireMatchesCharacteristicPolynomialRoots) {
    // Roots of (l + 0.5057)(l^2 + 1.2094 l + 0.9967*0.2127 + 0.6176*0.0939),
    // evaluated at 30 digits. The often-quoted -0.997, -0.506, -0.213 are the
    // diagonal entries, not the eigenvalues.
    const SpectrumReport s = spectrum(admire_a());
    ASSERT_EQ(s.eigenvalues.size(), 3U);
    EXPECT_TRUE(s.all_real);
    EXPECT_NEAR(s.eigenvalues[0].real(), -0.295392127484604750, 1e-12);
    EXPECT_NEAR(s.eigenvalues[1].real(), -0.5057, 1e-12);
    EXPECT_NEAR(s.eigenvalues[2].real(), -0.914007872515395250, 1e-12);
}

TEST(Spectrum, ToleranceControlsAllReal) {
    Mat a(2, 2);
    a << 0.0, 1e-6, -1e-6, 0.0;  // eigenvalues +/- 1e-6 i
    EXPECT_FALSE(spectrum(a, 1e-9).all_real);
    EXPECT_TRUE(spectrum(a, 1e-5).all_real);
}

TEST(Spectrum, NonConvergenceCarriesResidual) {
    std::mt19937_64 rng(3);
    const Mat m = random_matrix(rng, 8, 8);
    try {
        spectrum(m, kDefaultTolSpec, 1);
        FAIL() << "expected NumericError";
    } catch (const NumericError& e) {
        EXPECT_GT(e.residual(), 0.0);
    }
}

TEST(Spectrum, NonSquareIsDimensionError) {
    EXPECT_THROW(spectrum(Mat::Zero(3, 2)), DimensionError);
}

TEST(EigvecResidual, DiagonalBasisVector) {
    const Mat m = Vec((Vec(2) << -1.0, -2.0).finished()).asDiagonal();
    const EigvecResidual r = eigvec_residual(m, Vec::Unit(2, 0));
    EXPECT_EQ(r.mu, -1.0);
    EXPECT_EQ(r.residual, 0.0);
}

TEST(EigvecResidual, RotationGenerator) {
    Mat m(2, 2);
    m << 0.0, 1.0, -1.0, 0.0;
    const EigvecResidual r = eigvec_residual(m, Vec::Unit(2, 0));
    EXPECT_EQ(r.mu, 0.0);
    EXPECT_DOUBLE_EQ(r.residual, 1.0);
}

TEST(EigvecResidual, AdmireRollDirectionIsNotAnEigenvector) {
    // A^T e1 is the first row of A: [-0.9967, 0, 0.6176]. Removing the
    // Rayleigh component leaves [0, 0, 0.6176].
    const EigvecResidual r = eigvec_residual(admire_a().transpose(), Vec::Unit(3, 0));
    EXPECT_DOUBLE_EQ(r.mu, -0.9967);
    EXPECT_DOUBLE_EQ(r.residual, 0.6176);
}

TEST(EigvecResidual, NonUnitDirectionIsRejected) {
    EXPECT_THROW(eigvec_residual(Mat::Identity(2, 2), Vec::Constant(2, 1.0)),
                 PreconditionError);
}

TEST(EigvecResidual, SymmetricEigenbasisColumns) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        const Eigen::Index n = 2 + trial % 5;
        const Mat q = random_matrix(rng, n, n).householderQr().householderQ();
        const Vec lambdas = random_matrix(rng, n, 1, 3.0);
        const Mat s = q * lambdas.asDiagonal() * q.transpose();
        for (Eigen::Index j = 0; j < n; ++j) {
            const Vec col = q.col(j) / q.col(j).norm();
            const EigvecResidual r = eigvec_residual(s, col);
            EXPECT_LE(r.residual, 1e-12);
            EXPECT_NEAR(r.mu, lambdas(j), 1e-12);
        }
    }
}

}  // namespace
}  // namespace reachwarp
