// Copyright 2026 The mubgf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef MUBGF_TOMOGRAPHY_H
#define MUBGF_TOMOGRAPHY_H

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <vector>

#include "mubgf/mub.h"
#include "mubgf/report.h"

namespace mubgf {

/// Density matrix checks: Hermitian and unit trace within `tolerance`,
/// eigenvalues no lower than -psd_tolerance.
Report validate_density(const Eigen::MatrixXcd &rho, double tolerance = 1e-10, double psd_tolerance = 1e-8);

/// G G^dagger / tr for a complex Gaussian G drawn from mt19937_64(seed).
Eigen::MatrixXcd random_density(uint64_t seed, uint32_t n);

/// c[k*N + l] = tr((V^k_l)^dagger rho). Throws std::invalid_argument on a
/// dimension mismatch.
std::vector<std::complex<double>> pauli_decompose(const Eigen::MatrixXcd &rho, const FieldPtr &f);

/// (1/N) sum_{k,l} c[k*N + l] V^k_l.
Eigen::MatrixXcd pauli_reconstruct(const std::vector<std::complex<double>> &coeffs, const FieldPtr &f);

/// probs(i, k) = <e^i_k|rho|e^i_k>, an (N+1) x N table.
Eigen::MatrixXd mub_probabilities(const Eigen::MatrixXcd &rho, const MubFamily &family);

/// sum_{i,k} probs(i, k) |e^i_k><e^i_k| - I. Throws std::invalid_argument if
/// the table has the wrong shape, an entry outside [0, 1] or a row not
/// summing to 1 within 1e-9.
Eigen::MatrixXcd mub_reconstruct(const Eigen::MatrixXd &probs, const MubFamily &family);

/// The same table inverted through the U operators:
/// rho = (1/N) (I + sum_i sum_{l != 0} u(i, l) U^i_l) with
/// u(i, l) = tr((U^i_l)^dagger rho) = sum_k gamma^{-(k*l)} probs(i, k).
Eigen::MatrixXcd mub_reconstruct_weyl(const Eigen::MatrixXd &probs, const MubFamily &family);

/// u[i*N + l] = tr((U^i_l)^dagger rho), computed from rho directly.
std::vector<std::complex<double>> u_coefficients(const Eigen::MatrixXcd &rho, const MubFamily &family);

double frobenius_distance(const Eigen::MatrixXcd &a, const Eigen::MatrixXcd &b);

/// Worst-case errors over `count` random states seeded first_seed, ...
struct TomographySummary {
    uint32_t n = 0;
    uint64_t first_seed = 0;
    uint32_t count = 0;
    double pauli_error = 0;
    double mub_error = 0;
    double weyl_error = 0;
    double path_disagreement = 0;
    Report report;
};

TomographySummary tomography_round_trip(const MubFamily &family, uint64_t first_seed, uint32_t count,
                                        double tolerance = 1e-9);

}  // namespace mubgf

#endif
