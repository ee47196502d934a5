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

#include <algorithm>
#include <array>
#include <cmath>
#include <span>
#include <string>

#include <Eigen/Eigenvalues>

#include "reachwarp/errors.hpp"

namespace reachwarp {
namespace {

// Largest 1-norms for which the degree-m Pade approximant reaches unit
// roundoff backward error (Higham 2005, Table 2.3).
constexpr double kTheta3 = 1.495585217958292e-2;
constexpr double kTheta5 = 2.539398330063230e-1;
constexpr double kTheta7 = 9.504178996162932e-1;
constexpr double kTheta9 = 2.097847961257068e0;
constexpr double kTheta13 = 5.371920351148152e0;

constexpr std::array<double, 4> kPade3 = {120.0, 60.0, 12.0, 1.0};
constexpr std::array<double, 6> kPade5 = {30240.0, 15120.0, 3360.0,
                                          420.0,   30.0,    1.0};
constexpr std::array<double, 8> kPade7 = {17297280.0, 8648640.0, 1995840.0,
                                          277200.0,   25200.0,   1512.0,
                                          56.0,       1.0};
constexpr std::array<double, 10> kPade9 = {
    17643225600.0, 8821612800.0, 2075673600.0, 302702400.0, 30270240.0,
    2162160.0,     110880.0,     3960.0,       90.0,        1.0};
constexpr std::array<double, 14> kPade13 = {
    64764752532480000.0, 32382376266240000.0, 7771770303897600.0,
    1187353796428800.0,  129060195264000.0,   10559470521600.0,
    670442572800.0,      33522128640.0,       1323241920.0,
    40840800.0,          960960.0,            16380.0,
    182.0,               1.0};

struct PadeTerms {
    Mat u;  // odd part
    Mat v;  // even part
};

// Degrees 3..9: accumulate even powers once, split odd/even coefficients.
PadeTerms pade_low(const Mat& a, std::span<const double> b) {
    const Eigen::Index n = a.rows();
    const Mat ident = Mat::Identity(n, n);
    const Mat a2 = a * a;
    Mat power = ident;
    Mat odd = Mat::Zero(n, n);
    Mat even = Mat::Zero(n, n);
    for (std::size_t k = 0; 2 * k + 1 < b.size(); ++k) {
        even += b[2 * k] * power;
        odd += b[2 * k + 1] * power;
        power = power * a2;
    }
    return {a * odd, even};
}

PadeTerms pade13(const Mat& a) {
    const auto& b = kPade13;
    const Eigen::Index n = a.rows();
    const Mat ident = Mat::Identity(n, n);
    const Mat a2 = a * a;
    const Mat a4 = a2 * a2;
    const Mat a6 = a4 * a2;
    const Mat u_inner = a6 * (b[13] * a6 + b[11] * a4 + b[9] * a2) +
                        b[7] * a6 + b[5] * a4 + b[3] * a2 + b[1] * ident;
    Mat v = a6 * (b[12] * a6 + b[10] * a4 + b[8] * a2) + b[6] * a6 +
            b[4] * a4 + b[2] * a2 + b[0] * ident;
    return {a * u_inner, std::move(v)};
}

Mat pade_ratio(const PadeTerms& t) {
    return (t.v - t.u).partialPivLu().solve(t.v + t.u);
}

}  // namespace

void require_finite(const Mat& m, std::string_view what) {
    if (!m.allFinite()) {
        throw PreconditionError(std::string(what) + ": entries must be finite");
    }
}

void require_finite(const Vec& v, std::string_view what) {
    if (!v.allFinite()) {
        throw PreconditionError(std::string(what) + ": entries must be finite");
    }
}

void require_square(const Mat& m, std::string_view what) {
    if (m.rows() != m.cols() || m.rows() < 1) {
        throw DimensionError(std::string(what) + ": expected a square matrix, got " +
                             std::to_string(m.rows()) + "x" +
                             std::to_string(m.cols()));
    }
}

Mat mat_exp(const Mat& m) {
    require_square(m, "mat_exp");
    require_finite(m, "mat_exp");

    const double norm1 = m.cwiseAbs().colwise().sum().maxCoeff();
    if (norm1 <= kTheta3) return pade_ratio(pade_low(m, kPade3));
    if (norm1 <= kTheta5) return pade_ratio(pade_low(m, kPade5));
    if (norm1 <= kTheta7) return pade_ratio(pade_low(m, kPade7));
    if (norm1 <= kTheta9) return pade_ratio(pade_low(m, kPade9));

    const int squarings =
        std::max(0, static_cast<int>(std::ceil(std::log2(norm1 / kTheta13))));
    const Mat scaled = m * std::ldexp(1.0, -squarings);
    Mat result = pade_ratio(pade13(scaled));
    for (int i = 0; i < squarings; ++i) {
        result = (result * result).eval();
    }
    if (!result.allFinite()) {
        throw NumericError("mat_exp: result overflowed", norm1);
    }
    return result;
}

SpectrumReport spectrum(const Mat& m, double tol_spec, int max_iterations) {
    require_square(m, "spectrum");
    require_finite(m, "spectrum");

    const Eigen::Index n = m.rows();
    Eigen::RealSchur<Mat> schur(n);
    if (max_iterations > 0) schur.setMaxIterations(max_iterations);
    schur.compute(m, /*computeU=*/false);
    const Mat& t = schur.matrixT();

    if (schur.info() != Eigen::Success) {
        double worst = 0.0;
        for (Eigen::Index i = 0; i + 1 < n; ++i) {
            worst = std::max(worst, std::abs(t(i + 1, i)));
        }
        throw NumericError("spectrum: QR iteration did not converge", worst);
    }

    SpectrumReport report;
    report.eigenvalues.reserve(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n;) {
        if (i + 1 < n && t(i + 1, i) != 0.0) {
            // 2x2 block of a complex-conjugate pair.
            const double p = 0.5 * (t(i, i) + t(i + 1, i + 1));
            const double q = 0.5 * (t(i, i) - t(i + 1, i + 1));
            const double disc = q * q + t(i, i + 1) * t(i + 1, i);
            if (disc >= 0.0) {
                const double r = std::sqrt(disc);
                report.eigenvalues.emplace_back(p + r, 0.0);
                report.eigenvalues.emplace_back(p - r, 0.0);
            } else {
                const double w = std::sqrt(-disc);
                report.eigenvalues.emplace_back(p, w);
                report.eigenvalues.emplace_back(p, -w);
            }
            i += 2;
        } else {
            report.eigenvalues.emplace_back(t(i, i), 0.0);
            i += 1;
        }
    }

    std::sort(report.eigenvalues.begin(), report.eigenvalues.end(),
              [](const auto& a, const auto& b) {
                  if (a.real() != b.real()) return a.real() > b.real();
                  return a.imag() > b.imag();
              });
    for (const auto& ev : report.eigenvalues) {
        report.max_abs_imag = std::max(report.max_abs_imag, std::abs(ev.imag()));
    }
    report.all_real = report.max_abs_imag <= tol_spec;
    return report;
}

EigvecResidual eigvec_residual(const Mat& m, const Vec& d) {
    require_square(m, "eigvec_residual");
    if (d.size() != m.rows()) {
        throw DimensionError("eigvec_residual: direction has dimension " +
                             std::to_string(d.size()) + ", matrix is " +
                             std::to_string(m.rows()) + "x" +
                             std::to_string(m.cols()));
    }
    if (std::abs(d.norm() - 1.0) > 1e-12) {
        throw PreconditionError("eigvec_residual: direction must have unit norm");
    }
    const Vec md = m * d;
    const double mu = d.dot(md);
    return {mu, (md - mu * d).norm()};
}

}  // namespace reachwarp
