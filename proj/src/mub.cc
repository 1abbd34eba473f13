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


#include "mubgf/mub.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>
#include <string>

#include "mubgf/kernels.h"

namespace mubgf {

namespace {

uint16_t wrap(int64_t t, uint32_t modulus) {
    int64_t r = t % static_cast<int64_t>(modulus);
    return static_cast<uint16_t>(r < 0 ? r + modulus : r);
}

std::string state_name(const MubState &s) {
    return "e^" + std::to_string(s.basis_index) + "_" + std::to_string(s.k.label());
}

}  // namespace

Eigen::VectorXcd MubState::amplitudes() const {
    if (kind == Kind::Delta) {
        Eigen::VectorXcd v = Eigen::VectorXcd::Zero(n);
        v(k.label()) = 1.0;
        return v;
    }
    const double scale = 1.0 / std::sqrt(static_cast<double>(exponents.size()));
    Eigen::VectorXcd v(exponents.size());
    for (size_t q = 0; q < exponents.size(); q++) {
        v(q) = std::polar(scale, std::numbers::pi * exponents[q] / p);
    }
    return v;
}

std::vector<uint16_t> MubState::normalized_exponents() const {
    std::vector<uint16_t> out(exponents.size());
    for (size_t q = 0; q < exponents.size(); q++) {
        out[q] = wrap(static_cast<int64_t>(exponents[q]) - exponents[0], 2 * p);
    }
    return out;
}

std::vector<MubState> dual_basis(const FieldPtr &f) {
    std::vector<MubState> out;
    for (uint32_t j = 0; j < f->size(); j++) {
        MubState s;
        s.basis_index = 1;
        s.k = Element(j);
        s.kind = MubState::Kind::Phase;
        s.p = f->p();
        s.n = f->size();
        for (uint32_t k = 0; k < f->size(); k++) {
            uint32_t e = f->char_exponent(f->neg(f->mul(Element(k), Element(j))));
            s.exponents.push_back(static_cast<uint16_t>(2 * e));
        }
        out.push_back(std::move(s));
    }
    return out;
}

MubState mub_state(const FieldPtr &f, uint32_t i, Element k, const PhaseConvention &convention) {
    if (i == 0 || i > f->size()) {
        throw std::out_of_range("mub_state: basis index must lie in 1..N, got " + std::to_string(i));
    }
    f->element(k.label());
    const Element c(i - 1);
    const Element shifted = f->sub(k, convention.choice);
    MubState s;
    s.basis_index = i;
    s.k = k;
    s.kind = MubState::Kind::Phase;
    s.p = f->p();
    s.n = f->size();
    s.exponents.reserve(f->size());
    for (uint32_t q = 0; q < f->size(); q++) {
        Element eq(q);
        int64_t t = 2 * static_cast<int64_t>(f->char_exponent(f->neg(f->mul(eq, shifted))));
        t += sqrt_phase(*f, c, eq, convention.even_reading).t();
        s.exponents.push_back(wrap(t, 2 * f->p()));
    }
    return s;
}

MubFamily mub_family(const FieldPtr &f, const PhaseConvention &convention) {
    MubFamily family{f, convention, {}};
    std::vector<MubState> computational;
    for (uint32_t k = 0; k < f->size(); k++) {
        MubState s;
        s.basis_index = 0;
        s.k = Element(k);
        s.kind = MubState::Kind::Delta;
        s.p = f->p();
        s.n = f->size();
        computational.push_back(std::move(s));
    }
    family.bases.push_back(std::move(computational));
    for (uint32_t i = 1; i <= f->size(); i++) {
        std::vector<MubState> basis;
        for (uint32_t k = 0; k < f->size(); k++) {
            basis.push_back(mub_state(f, i, Element(k), convention));
        }
        family.bases.push_back(std::move(basis));
    }
    return family;
}

CycInt inner(const MubState &a, const MubState &b) {
    if (a.p != b.p || a.n != b.n) {
        throw std::invalid_argument("inner: states over different fields");
    }
    const uint32_t p = a.p;
    using Kind = MubState::Kind;
    if (a.kind == Kind::Phase && b.kind == Kind::Phase) {
        std::vector<int64_t> counts(2 * p, 0);
        kernels::phase_histogram(a.exponents, b.exponents, 2 * p, counts);
        return CycInt::from_exponent_counts(p, counts);
    }
    if (a.kind == Kind::Delta && b.kind == Kind::Delta) {
        return CycInt::from_integer(p, a.k == b.k ? 1 : 0);
    }
    if (a.kind == Kind::Delta) {
        return CycInt::from_phase(p, b.exponents[a.k.label()]);
    }
    return inner(b, a).conj();
}

int64_t inner_scale(const MubState &a, const MubState &b) {
    using Kind = MubState::Kind;
    const int64_t n = a.n;
    if (a.kind == Kind::Phase && b.kind == Kind::Phase) {
        return 1;
    }
    return a.kind == b.kind ? n * n : n;
}

UnbiasednessResult verify_unbiasedness(const MubFamily &family) {
    UnbiasednessResult result{Report("unbiasedness"), {}};
    const int64_t n = family.field->size();
    const size_t nb = family.bases.size();
    std::vector<BasisPairStats> stats(nb * nb);
    for (size_t x = 0; x < nb; x++) {
        for (size_t y = x; y < nb; y++) {
            stats[x * nb + y].basis_a = static_cast<uint32_t>(x);
            stats[x * nb + y].basis_b = static_cast<uint32_t>(y);
        }
    }
    std::vector<const MubState *> all;
    for (const auto &basis : family.bases) {
        for (const MubState &s : basis) {
            all.push_back(&s);
        }
    }
    for (size_t u = 0; u < all.size(); u++) {
        for (size_t v = u; v < all.size(); v++) {
            const MubState &a = *all[u];
            const MubState &b = *all[v];
            const int64_t scale = inner_scale(a, b);
            const CycInt value = inner(a, b);
            const std::optional<int64_t> sq = value.abs_sq().as_integer();
            const int64_t scaled = sq ? *sq * scale : -1;
            int64_t expected = n;
            if (a.basis_index == b.basis_index) {
                expected = u == v ? n * n : 0;
            }
            BasisPairStats &st = stats[a.basis_index * nb + b.basis_index];
            st.pairs++;
            bool ok = result.report.expect(scaled == expected, [&] {
                return "<" + state_name(a) + "|" + state_name(b) + "> = " + value.to_string() + ", N^2|.|^2 = " +
                       (sq ? std::to_string(scaled) : std::string("non-integer")) + ", expected " +
                       std::to_string(expected);
            });
            if (!ok) {
                st.violations++;
            }
            if (std::find(st.values.begin(), st.values.end(), scaled) == st.values.end()) {
                st.values.push_back(scaled);
            }
        }
    }
    for (size_t x = 0; x < nb; x++) {
        for (size_t y = x; y < nb; y++) {
            std::sort(stats[x * nb + y].values.begin(), stats[x * nb + y].values.end());
            result.pairs.push_back(std::move(stats[x * nb + y]));
        }
    }
    return result;
}

Report verify_eigenstates(const MubFamily &family, double tolerance, uint32_t cap) {
    Report report("eigenstates");
    const FieldPtr &f = family.field;
    const uint32_t n = f->size();
    const uint32_t modulus = 2 * f->p();
    for (uint32_t i = 0; i <= n; i++) {
        for (uint32_t l = 0; l < n; l++) {
            const UOperator u = u_op(f, i, Element(l), family.convention);
            for (const MubState &s : family.bases[i]) {
                const uint32_t eigen = 2 * f->char_exponent(f->mul(s.k, Element(l)));
                bool ok = true;
                if (s.kind == MubState::Kind::Delta) {
                    const uint32_t t = (u.phase.t() + 2 * u.underlying.gamma_exponent(s.k)) % modulus;
                    ok = u.underlying.target(s.k) == s.k && t == eigen;
                } else {
                    std::vector<uint16_t> image(n);
                    for (uint32_t q = 0; q < n; q++) {
                        Element eq(q);
                        image[u.underlying.target(eq).label()] =
                            wrap(int64_t{u.phase.t()} + 2 * u.underlying.gamma_exponent(eq) + s.exponents[q], modulus);
                    }
                    for (uint32_t q = 0; q < n && ok; q++) {
                        ok = image[q] == wrap(int64_t{s.exponents[q]} + eigen, modulus);
                    }
                }
                report.expect(ok, [&] {
                    return "U^" + std::to_string(i) + "_" + std::to_string(l) + " " + state_name(s) +
                           " is not gamma^{k*l} times the state";
                });
            }
        }
    }
    if (n > cap) {
        report.notes.push_back("dense spectral resolution skipped: N = " + std::to_string(n) + " exceeds " +
                               std::to_string(cap));
        return report;
    }
    for (uint32_t i = 0; i <= n; i++) {
        const Eigen::MatrixXcd e = basis_matrix(family, i, cap);
        for (uint32_t l = 0; l < n; l++) {
            Eigen::MatrixXcd resolution = Eigen::MatrixXcd::Zero(n, n);
            for (uint32_t k = 0; k < n; k++) {
                const uint32_t g = f->char_exponent(f->mul(family.bases[i][k].k, Element(l)));
                resolution += PhaseExponent::gamma_power(f->p(), g).to_complex() * e.col(k) * e.col(k).adjoint();
            }
            const double err = (dense_matrix(u_op(f, i, Element(l), family.convention), cap) - resolution).norm();
            report.expect(err < tolerance, [&] {
                return "spectral resolution of U^" + std::to_string(i) + "_" + std::to_string(l) + " off by " +
                       std::to_string(err);
            });
        }
    }
    return report;
}

Eigen::MatrixXcd projector_from_u(const FieldPtr &f, uint32_t i, Element k, const PhaseConvention &convention,
                                  uint32_t cap) {
    const uint32_t n = f->size();
    check_dense_cap(n, cap, "projector_from_u");
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(n, n);
    for (uint32_t l = 0; l < n; l++) {
        const uint32_t g = f->char_exponent(f->neg(f->mul(k, Element(l))));
        out += PhaseExponent::gamma_power(f->p(), g).to_complex() * dense_matrix(u_op(f, i, Element(l), convention), cap);
    }
    return out / static_cast<double>(n);
}

Report verify_projectors(const MubFamily &family, double tolerance, uint32_t cap) {
    Report report("projectors");
    const FieldPtr &f = family.field;
    const uint32_t n = f->size();
    check_dense_cap(n, cap, "verify_projectors");
    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(n, n);
    for (uint32_t i = 0; i <= n; i++) {
        const Eigen::MatrixXcd e = basis_matrix(family, i, cap);
        Eigen::MatrixXcd total = Eigen::MatrixXcd::Zero(n, n);
        for (uint32_t k = 0; k < n; k++) {
            const Eigen::MatrixXcd proj = projector_from_u(f, i, family.bases[i][k].k, family.convention, cap);
            total += proj;
            const double outer = (proj - e.col(k) * e.col(k).adjoint()).norm();
            const double idem = (proj * proj - proj).norm();
            const double tr = std::abs(proj.trace() - 1.0);
            report.expect(outer < tolerance && idem < tolerance && tr < tolerance, [&] {
                return "projector " + std::to_string(i) + "," + std::to_string(k) + ": outer " + std::to_string(outer) +
                       " idempotence " + std::to_string(idem) + " trace " + std::to_string(tr);
            });
        }
        report.expect((total - id).norm() < tolerance,
                      [&] { return "projectors of basis " + std::to_string(i) + " do not sum to I"; });
    }
    return report;
}

Eigen::MatrixXcd basis_matrix(const MubFamily &family, uint32_t i, uint32_t cap) {
    const uint32_t n = family.field->size();
    check_dense_cap(n, cap, "basis_matrix");
    if (i >= family.bases.size()) {
        throw std::out_of_range("basis_matrix: no basis " + std::to_string(i));
    }
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
    for (uint32_t k = 0; k < n; k++) {
        const MubState &s = family.bases[i][k];
        m.col(k) = s.amplitudes();
    }
    return m;
}

ReadingResolution resolve_even_reading(const std::vector<uint32_t> &ms) {
    ReadingResolution out;
    for (EvenSqrtReading reading :
         {EvenSqrtReading::TopPairsWithZero, EvenSqrtReading::TopUnpaired, EvenSqrtReading::AllHigherDigits}) {
        bool all = true;
        for (uint32_t m : ms) {
            FieldPtr f = build_field(2, m);
            PhaseConvention conv{f->zero(), reading};
            ReadingTrial trial{reading, f->size()};
            for (uint32_t i = 0; i <= f->size(); i++) {
                trial.group_law_failures += u_group_law_check(f, i, conv).failures;
            }
            MubFamily family = mub_family(f, conv);
            trial.eigenstate_failures = verify_eigenstates(family, 1e-10, 0).failures;
            trial.unbiasedness_failures = verify_unbiasedness(family).report.failures;
            all = all && trial.passed();
            out.trials.push_back(trial);
        }
        if (all && !out.selected) {
            out.selected = reading;
        }
    }
    return out;
}

}  // namespace mubgf
