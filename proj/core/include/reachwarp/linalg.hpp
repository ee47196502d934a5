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
#ifndef REACHWARP_LINALG_HPP
#define REACHWARP_LINALG_HPP

#include <complex>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace reachwarp {

using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;

/// Default bound on |Im(lambda)| below which an eigenvalue counts as real.
inline constexpr double kDefaultTolSpec = 1e-9;

/// Throws PreconditionError if any entry is NaN or infinite.
void require_finite(const Mat& m, std::string_view what);
void require_finite(const Vec& v, std::string_view what);

/// Throws DimensionError unless `m` is square.
void require_square(const Mat& m, std::string_view what);

/**
 * @brief Matrix exponential e^M.
 *
 * Scaling and squaring with a diagonal Pade approximant whose degree (3, 5,
 * 7, 9 or 13) is chosen from the 1-norm of M so that the backward error stays
 * at unit roundoff.
 */
Mat mat_exp(const Mat& m);

struct SpectrumReport {
    /// Sorted by descending real part, then descending imaginary part.
    std::vector<std::complex<double>> eigenvalues;
    double max_abs_imag = 0.0;
    bool all_real = true;
};

/**
 * @brief Eigenvalues of a square matrix via Hessenberg reduction and
 * shifted QR iteration.
 *
 * `max_iterations` of 0 keeps the solver default (40 sweeps per eigenvalue).
 * Throws NumericError, carrying the largest unconverged subdiagonal entry,
 * when the iteration fails.
 */
SpectrumReport spectrum(const Mat& m, double tol_spec = kDefaultTolSpec,
                        int max_iterations = 0);

struct EigvecResidual {
    double mu = 0.0;        // Rayleigh quotient d^T M d
    double residual = 0.0;  // ||M d - mu d||_2
};

/// Measures how far the unit vector `d` is from being an eigenvector of `m`.
EigvecResidual eigvec_residual(const Mat& m, const Vec& d);

}  // namespace reachwarp

#endif  // REACHWARP_LINALG_HPP
