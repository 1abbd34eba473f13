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


#include "mubgf/tomography.h"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>

#include "mubgf/kernels.h"

namespace mubgf {

namespace {

void require_dim(const Eigen::MatrixXcd &rho, const FieldPtr &f) {
    if (rho.rows() != f->size() || rho.cols() != f->size()) {
        throw std::invalid_argument("density matrix is " + std::to_string(rho.rows()) + "x" +
                                    std::to_string(rho.cols()) + " but N = " + std::to_string(f->size()));
    }
}

/// out += weight * op, applied column by column.
void accumulate(Eigen::MatrixXcd &out, std::complex<double> weight, const PhasedOp &op) {
    const GaloisField &f = *op.op.field;
    const std::complex<double> w = weight * op.phase.to_complex();
    for (uint32_t q = 0; q < f.size(); q++) {
        Element eq(q);
        out(op.op.target(eq).label(), q) += w * PhaseExponent::gamma_power(f.p(), op.op.gamma_exponent(eq)).to_complex();
    }
}

/// tr(op^dagger rho).
std::complex<double> overlap(const PhasedOp &op, const Eigen::MatrixXcd &rho) {
    const GaloisField &f = *op.op.field;
    std::complex<double> acc = 0;
    for (uint32_t q = 0; q < f.size(); q++) {
        Element eq(q);
        acc += std::conj(PhaseExponent::gamma_power(f.p(), op.op.gamma_exponent(eq)).to_complex()) *
               rho(op.op.target(eq).label(), q);
    }
    return std::conj(op.phase.to_complex()) * acc;
}

void require_table(const Eigen::MatrixXd &probs, const MubFamily &family) {
    const uint32_t n = family.field->size();
    if (probs.rows() != n + 1 || probs.cols() != n) {
        throw std::invalid_argument("measurement table must be (N+1) x N");
    }
    for (Eigen::Index i = 0; i < probs.rows(); i++) {
        if (std::abs(probs.row(i).sum() - 1.0) > 1e-9) {
            throw std::invalid_argument("measurement row " + std::to_string(i) + " does not sum to 1");
        }
        if (probs.row(i).minCoeff() < -1e-12 || probs.row(i).maxCoeff() > 1 + 1e-12) {
            throw std::invalid_argument("measurement row " + std::to_string(i) + " has an entry outside [0, 1]");
        }
    }
}

}  // namespace

Report validate_density(const Eigen::MatrixXcd &rho, double tolerance, double psd_tolerance) {
    Report report("density");
    report.expect(rho.rows() == rho.cols() && rho.rows() > 0, [] { return std::string("not a square matrix"); });
    if (!report.passed()) {
        return report;
    }
    const double herm = (rho - rho.adjoint()).norm();
    report.expect(herm < tolerance, [&] { return "not Hermitian: " + std::to_string(herm); });
    const std::complex<double> tr = rho.trace();
    report.expect(std::abs(tr - 1.0) < tolerance, [&] { return "trace " + std::to_string(tr.real()); });
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho, Eigen::EigenvaluesOnly);
    const double lowest = solver.eigenvalues().minCoeff();
    report.expect(lowest >= -psd_tolerance, [&] { return "negative eigenvalue " + std::to_string(lowest); });
    return report;
}

Eigen::MatrixXcd random_density(uint64_t seed, uint32_t n) {
    if (n == 0) {
        throw std::invalid_argument("random_density: N must be positive");
    }
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal;
    Eigen::MatrixXcd g(n, n);
    for (uint32_t c = 0; c < n; c++) {
        for (uint32_t r = 0; r < n; r++) {
            const double re = normal(rng);
            g(r, c) = {re, normal(rng)};
        }
    }
    Eigen::MatrixXcd rho = g * g.adjoint();
    rho /= rho.trace().real();
    // Remove rounding asymmetry so Hermiticity holds to the last bit.
    return (rho + rho.adjoint()) / 2.0;
}

std::vector<std::complex<double>> pauli_decompose(const Eigen::MatrixXcd &rho, const FieldPtr &f) {
    require_dim(rho, f);
    const uint32_t n = f->size();
    std::vector<std::complex<double>> out(static_cast<size_t>(n) * n);
    for (uint32_t k = 0; k < n; k++) {
        for (uint32_t l = 0; l < n; l++) {
            out[k * n + l] = overlap(PhasedOp{PhaseExponent(f->p(), 0), v_op(f, Element(k), Element(l))}, rho);
        }
    }
    return out;
}

Eigen::MatrixXcd pauli_reconstruct(const std::vector<std::complex<double>> &coeffs, const FieldPtr &f) {
    const uint32_t n = f->size();
    if (coeffs.size() != static_cast<size_t>(n) * n) {
        throw std::invalid_argument("pauli_reconstruct: expected N^2 coefficients");
    }
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(n, n);
    for (uint32_t k = 0; k < n; k++) {
        for (uint32_t l = 0; l < n; l++) {
            accumulate(out, coeffs[k * n + l], PhasedOp{PhaseExponent(f->p(), 0), v_op(f, Element(k), Element(l))});
        }
    }
    return out / static_cast<double>(n);
}

Eigen::MatrixXd mub_probabilities(const Eigen::MatrixXcd &rho, const MubFamily &family) {
    require_dim(rho, family.field);
    const uint32_t n = family.field->size();
    Eigen::MatrixXd probs(n + 1, n);
    for (uint32_t i = 0; i <= n; i++) {
        for (uint32_t k = 0; k < n; k++) {
            const Eigen::VectorXcd e = family.bases[i][k].amplitudes();
            const Eigen::VectorXcd re = rho * e;
            const std::complex<double> v = kernels::complex_inner({e.data(), n}, {re.data(), n});
            probs(i, k) = std::clamp(v.real(), 0.0, 1.0);
        }
    }
    return probs;
}

Eigen::MatrixXcd mub_reconstruct(const Eigen::MatrixXd &probs, const MubFamily &family) {
    require_table(probs, family);
    const uint32_t n = family.field->size();
    Eigen::MatrixXcd out = -Eigen::MatrixXcd::Identity(n, n);
    for (uint32_t i = 0; i <= n; i++) {
        for (uint32_t k = 0; k < n; k++) {
            const Eigen::VectorXcd e = family.bases[i][k].amplitudes();
            out += probs(i, k) * e * e.adjoint();
        }
    }
    return out;
}

Eigen::MatrixXcd mub_reconstruct_weyl(const Eigen::MatrixXd &probs, const MubFamily &family) {
    require_table(probs, family);
    const FieldPtr &f = family.field;
    const uint32_t n = f->size();
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(n, n);
    for (uint32_t i = 0; i <= n; i++) {
        for (uint32_t l = 1; l < n; l++) {
            std::complex<double> u = 0;
            for (uint32_t k = 0; k < n; k++) {
                const Element label = family.bases[i][k].k;
                const uint32_t g = f->char_exponent(f->neg(f->mul(label, Element(l))));
                u += probs(i, k) * PhaseExponent::gamma_power(f->p(), g).to_complex();
            }
            accumulate(out, u, u_op(f, i, Element(l), family.convention).as_phased());
        }
    }
    return out / static_cast<double>(n);
}

std::vector<std::complex<double>> u_coefficients(const Eigen::MatrixXcd &rho, const MubFamily &family) {
    const FieldPtr &f = family.field;
    require_dim(rho, f);
    const uint32_t n = f->size();
    std::vector<std::complex<double>> out;
    out.reserve(static_cast<size_t>(n + 1) * n);
    for (uint32_t i = 0; i <= n; i++) {
        for (uint32_t l = 0; l < n; l++) {
            out.push_back(overlap(u_op(f, i, Element(l), family.convention).as_phased(), rho));
        }
    }
    return out;
}

double frobenius_distance(const Eigen::MatrixXcd &a, const Eigen::MatrixXcd &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("frobenius_distance: shape mismatch");
    }
    const size_t len = static_cast<size_t>(a.size()) * 2;
    return std::sqrt(kernels::squared_distance({reinterpret_cast<const double *>(a.data()), len},
                                               {reinterpret_cast<const double *>(b.data()), len}));
}

TomographySummary tomography_round_trip(const MubFamily &family, uint64_t first_seed, uint32_t count,
                                        double tolerance) {
    const FieldPtr &f = family.field;
    TomographySummary s;
    s.n = f->size();
    s.first_seed = first_seed;
    s.count = count;
    s.report = Report("tomography");
    for (uint32_t c = 0; c < count; c++) {
        const uint64_t seed = first_seed + c;
        const Eigen::MatrixXcd rho = random_density(seed, s.n);
        const Eigen::MatrixXd probs = mub_probabilities(rho, family);
        const Eigen::MatrixXcd via_pauli = pauli_reconstruct(pauli_decompose(rho, f), f);
        const Eigen::MatrixXcd via_mub = mub_reconstruct(probs, family);
        const Eigen::MatrixXcd via_weyl = mub_reconstruct_weyl(probs, family);
        const double ep = frobenius_distance(via_pauli, rho);
        const double em = frobenius_distance(via_mub, rho);
        const double ew = frobenius_distance(via_weyl, rho);
        const double ed = frobenius_distance(via_mub, via_weyl);
        s.pauli_error = std::max(s.pauli_error, ep);
        s.mub_error = std::max(s.mub_error, em);
        s.weyl_error = std::max(s.weyl_error, ew);
        s.path_disagreement = std::max(s.path_disagreement, ed);
        s.report.expect(ep < tolerance && em < tolerance && ew < tolerance && ed < tolerance, [&] {
            return "seed " + std::to_string(seed) + ": errors " + std::to_string(ep) + " " + std::to_string(em) + " " +
                   std::to_string(ew) + " " + std::to_string(ed);
        });
    }
    return s;
}

}  // namespace mubgf
