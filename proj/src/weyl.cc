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

#include "mubgf/weyl.h"

#include <numbers>
#include <sstream>
#include <stdexcept>

namespace mubgf {

namespace {

void require_same_field(const WeylOperator &a, const WeylOperator &b) {
    if (a.field != b.field && !(*a.field == *b.field)) {
        throw std::invalid_argument("Weyl operators over different fields");
    }
}

std::string describe(const WeylOperator &a) {
    return "V^" + std::to_string(a.j.label()) + "_" + std::to_string(a.i.label());
}

std::string describe(const PhasedOp &a) {
    return "z^" + std::to_string(a.phase.t()) + " " + describe(a.op);
}

}  // namespace

WeylOperator v_op(FieldPtr f, Element j, Element i) {
    f->element(j.label());
    f->element(i.label());
    return WeylOperator{std::move(f), j, i};
}

WeylOperator identity_op(FieldPtr f) {
    return WeylOperator{std::move(f), Element(0), Element(0)};
}

PhasedOp compose(const WeylOperator &a, const WeylOperator &b) {
    require_same_field(a, b);
    const GaloisField &f = *a.field;
    PhaseExponent phase = PhaseExponent::gamma_power(f.p(), -static_cast<int64_t>(f.char_exponent(f.mul(a.i, b.j))));
    return PhasedOp{phase, WeylOperator{a.field, f.add(a.j, b.j), f.add(a.i, b.i)}};
}

PhasedOp compose(const PhasedOp &a, const PhasedOp &b) {
    PhasedOp r = compose(a.op, b.op);
    r.phase = r.phase * a.phase * b.phase;
    return r;
}

PhasedOp power(const PhasedOp &a, uint64_t e) {
    PhasedOp r{PhaseExponent(a.op.field->p(), 0), identity_op(a.op.field)};
    for (uint64_t k = 0; k < e; k++) {
        r = compose(r, a);
    }
    return r;
}

bool commutes(const WeylOperator &a, const WeylOperator &b) {
    require_same_field(a, b);
    const GaloisField &f = *a.field;
    return f.char_exponent(f.mul(a.i, b.j)) == f.char_exponent(f.mul(a.j, b.i));
}

PhasedOp adjoint(const WeylOperator &a) {
    const GaloisField &f = *a.field;
    PhaseExponent phase = PhaseExponent::gamma_power(f.p(), -static_cast<int64_t>(f.char_exponent(f.mul(a.i, a.j))));
    return PhasedOp{phase, WeylOperator{a.field, f.neg(a.j), f.neg(a.i)}};
}

CycInt trace(const PhasedOp &a) {
    const GaloisField &f = *a.op.field;
    if (a.op.i != f.zero()) {
        return CycInt::zero(f.p());
    }
    std::vector<int64_t> counts(2 * f.p(), 0);
    for (uint32_t k = 0; k < f.size(); k++) {
        counts[(2 * a.op.gamma_exponent(Element(k)) + a.phase.t()) % (2 * f.p())]++;
    }
    return CycInt::from_exponent_counts(f.p(), counts);
}

CycInt hs_inner(const WeylOperator &a, const WeylOperator &b) {
    return trace(compose(adjoint(a), PhasedOp{PhaseExponent(b.field->p(), 0), b}));
}

WeylOperator class_member(FieldPtr f, uint32_t i, Element l) {
    if (i > f->size()) {
        throw std::out_of_range("class index " + std::to_string(i) + " exceeds N");
    }
    if (i == 0) {
        return v_op(std::move(f), l, f->zero());
    }
    Element c(i - 1);
    Element j = f->mul(c, l);
    return v_op(std::move(f), j, l);
}

std::vector<OperatorClass> classes(FieldPtr f) {
    std::vector<OperatorClass> out;
    for (uint32_t i = 0; i <= f->size(); i++) {
        OperatorClass cls;
        cls.index = i;
        for (uint32_t l = 0; l < f->size(); l++) {
            cls.members.push_back(class_member(f, i, Element(l)));
        }
        out.push_back(std::move(cls));
    }
    return out;
}

const char *reading_name(EvenSqrtReading reading) {
    switch (reading) {
        case EvenSqrtReading::TopPairsWithZero:
            return "top-pairs-with-zero";
        case EvenSqrtReading::TopUnpaired:
            return "top-unpaired";
        case EvenSqrtReading::AllHigherDigits:
            return "all-higher-digits";
    }
    return "?";
}

PhaseExponent sqrt_phase(const GaloisField &f, Element c, Element q, EvenSqrtReading reading) {
    const uint32_t p = f.p();
    if (p != 2) {
        Element e = f.half(f.mul(c, f.mul(q, q)));
        return PhaseExponent::gamma_power(p, f.char_exponent(e));
    }
    // Exponents of zeta_4 = i; gamma = -1 = i^2.
    std::vector<uint32_t> nonzero;
    for (uint32_t n = 0; n < f.m(); n++) {
        if (f.digit(q, n) != 0) {
            nonzero.push_back(n);
        }
    }
    int64_t t = 0;
    for (size_t idx = 0; idx < nonzero.size(); idx++) {
        Element pn = f.basis(nonzero[idx]);
        Element c_pn = f.mul(c, pn);
        t += f.char_exponent(f.mul(c_pn, pn));
        Element partner = f.zero();
        bool paired = true;
        switch (reading) {
            case EvenSqrtReading::TopPairsWithZero:
                partner = idx + 1 < nonzero.size() ? f.basis(nonzero[idx + 1]) : f.basis(0);
                break;
            case EvenSqrtReading::TopUnpaired:
                paired = idx + 1 < nonzero.size();
                if (paired) {
                    partner = f.basis(nonzero[idx + 1]);
                }
                break;
            case EvenSqrtReading::AllHigherDigits:
                for (size_t higher = idx + 1; higher < nonzero.size(); higher++) {
                    partner = f.add(partner, f.basis(nonzero[higher]));
                }
                break;
        }
        if (paired) {
            t += 2 * f.char_exponent(f.mul(c_pn, partner));
        }
    }
    return PhaseExponent(2, t);
}

UOperator u_op(FieldPtr f, uint32_t i, Element l, const PhaseConvention &convention) {
    WeylOperator underlying = class_member(f, i, l);
    PhaseExponent phase(f->p(), 0);
    if (i != 0) {
        Element c(i - 1);
        phase = sqrt_phase(*f, c, l, convention.even_reading).conj() *
                PhaseExponent::gamma_power(f->p(), f->char_exponent(f->mul(convention.choice, l)));
    }
    return UOperator{i, l, phase, std::move(underlying)};
}

Report u_group_law_check(FieldPtr f, uint32_t i, const PhaseConvention &convention) {
    Report report("u_group_law[i=" + std::to_string(i) + "]");
    std::vector<UOperator> us;
    for (uint32_t l = 0; l < f->size(); l++) {
        us.push_back(u_op(f, i, Element(l), convention));
    }
    report.expect(us[0].as_phased().op.is_identity() && us[0].phase.t() == 0,
                  [] { return std::string("U_0 is not the identity"); });
    for (uint32_t a = 0; a < f->size(); a++) {
        for (uint32_t b = 0; b < f->size(); b++) {
            PhasedOp lhs = compose(us[a].as_phased(), us[b].as_phased());
            const PhasedOp rhs = us[f->add(Element(a), Element(b)).label()].as_phased();
            report.expect(lhs == rhs, [&] {
                return "U_" + std::to_string(a) + " U_" + std::to_string(b) + " = " + describe(lhs) + " but U_(l+l') = " +
                       describe(rhs);
            });
        }
    }
    return report;
}

Report verify_u_generator_orders(FieldPtr f, const PhaseConvention &convention) {
    Report report("u_generator_orders");
    PhasedOp identity{PhaseExponent(f->p(), 0), identity_op(f)};
    for (uint32_t i = 0; i <= f->size(); i++) {
        for (uint32_t n = 0; n < f->m(); n++) {
            PhasedOp pw = power(u_op(f, i, f->basis(n), convention).as_phased(), f->p());
            report.expect(pw == identity, [&] {
                return "(U^" + std::to_string(i) + "_{p^" + std::to_string(n) + "})^p = " + describe(pw);
            });
        }
    }
    return report;
}

Report verify_class_structure(FieldPtr f) {
    Report report("class_structure");
    const uint32_t n = f->size();
    std::vector<uint32_t> owner(static_cast<size_t>(n) * n, 0);
    for (const OperatorClass &cls : classes(f)) {
        for (uint32_t a = 0; a < n; a++) {
            for (uint32_t b = a + 1; b < n; b++) {
                report.expect(commutes(cls.members[a], cls.members[b]), [&] {
                    return "class " + std::to_string(cls.index) + ": " + describe(cls.members[a]) + " and " +
                           describe(cls.members[b]) + " do not commute";
                });
            }
            const WeylOperator &op = cls.members[a];
            if (!op.is_identity()) {
                owner[static_cast<size_t>(op.j.label()) * n + op.i.label()]++;
            }
        }
    }
    for (uint32_t j = 0; j < n; j++) {
        for (uint32_t i = 0; i < n; i++) {
            if (i == 0 && j == 0) {
                continue;
            }
            uint32_t count = owner[static_cast<size_t>(j) * n + i];
            report.expect(count == 1, [&] {
                return "V^" + std::to_string(j) + "_" + std::to_string(i) + " lies in " + std::to_string(count) +
                       " classes";
            });
        }
    }
    return report;
}

Report verify_operator_orthogonality(FieldPtr f) {
    Report report("operator_orthogonality");
    const uint32_t n = f->size();
    for (uint32_t a = 0; a < n * n; a++) {
        WeylOperator va = v_op(f, Element(a / n), Element(a % n));
        for (uint32_t b = 0; b < n * n; b++) {
            WeylOperator vb = v_op(f, Element(b / n), Element(b % n));
            CycInt value = hs_inner(va, vb);
            auto as_int = value.as_integer();
            int64_t expected = a == b ? n : 0;
            report.expect(as_int && *as_int == expected, [&] {
                return "tr(" + describe(va) + "^+ " + describe(vb) + ") = " + value.to_string();
            });
        }
    }
    return report;
}

Report verify_weyl_commutation(FieldPtr f) {
    Report report("weyl_commutation");
    for (uint32_t j = 0; j < f->size(); j++) {
        for (uint32_t i = 0; i < f->size(); i++) {
            WeylOperator diag = v_op(f, Element(j), f->zero());
            WeylOperator shift = v_op(f, f->zero(), Element(i));
            PhasedOp lhs = compose(diag, shift);
            PhasedOp rhs = compose(shift, diag);
            rhs.phase = rhs.phase * PhaseExponent::gamma_power(f->p(), f->char_exponent(f->mul(Element(i), Element(j))));
            report.expect(lhs == rhs && lhs.phase.t() == 0 && lhs.op.same_indices(v_op(f, Element(j), Element(i))),
                          [&] { return "Weyl rule fails at j=" + std::to_string(j) + " i=" + std::to_string(i); });
        }
    }
    return report;
}

Eigen::MatrixXcd dense_matrix(const WeylOperator &a, uint32_t cap) {
    const GaloisField &f = *a.field;
    check_dense_cap(f.size(), cap, "dense_matrix");
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(f.size(), f.size());
    for (uint32_t k = 0; k < f.size(); k++) {
        Element col(k);
        m(a.target(col).label(), k) = std::polar(1.0, 2 * std::numbers::pi * a.gamma_exponent(col) / f.p());
    }
    return m;
}

Eigen::MatrixXcd dense_matrix(const PhasedOp &a, uint32_t cap) {
    return a.phase.to_complex() * dense_matrix(a.op, cap);
}

Eigen::MatrixXcd dense_matrix(const UOperator &a, uint32_t cap) {
    return dense_matrix(a.as_phased(), cap);
}

Report verify_dense_algebra(FieldPtr f, double tolerance, uint32_t cap) {
    Report report("dense_algebra");
    const uint32_t n = f->size();
    check_dense_cap(n, cap, "verify_dense_algebra");
    std::vector<Eigen::MatrixXcd> mats;
    std::vector<WeylOperator> ops;
    for (uint32_t a = 0; a < n * n; a++) {
        ops.push_back(v_op(f, Element(a / n), Element(a % n)));
        mats.push_back(dense_matrix(ops.back(), cap));
    }
    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(n, n);
    for (uint32_t a = 0; a < n * n; a++) {
        double unitarity = (mats[a].adjoint() * mats[a] - id).norm();
        report.expect(unitarity < tolerance, [&] { return describe(ops[a]) + " is not unitary"; });
        double adj = (dense_matrix(adjoint(ops[a]), cap) - mats[a].adjoint()).norm();
        report.expect(adj < tolerance, [&] { return "adjoint formula fails for " + describe(ops[a]); });
        for (uint32_t b = 0; b < n * n; b++) {
            Eigen::MatrixXcd product = mats[a] * mats[b];
            PhasedOp c = compose(ops[a], ops[b]);
            double err = (dense_matrix(c, cap) - product).norm();
            report.expect(err < tolerance, [&] {
                return describe(ops[a]) + " * " + describe(ops[b]) + " != " + describe(c);
            });
            bool numerically_commute = (product - mats[b] * mats[a]).norm() < tolerance;
            report.expect(numerically_commute == commutes(ops[a], ops[b]), [&] {
                return "commutes() disagrees with the commutator for " + describe(ops[a]) + ", " + describe(ops[b]);
            });
        }
    }
    return report;
}

}  // namespace mubgf
