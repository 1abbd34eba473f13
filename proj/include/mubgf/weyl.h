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

#ifndef MUBGF_WEYL_H
#define MUBGF_WEYL_H

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "mubgf/config.h"
#include "mubgf/cyclotomic.h"
#include "mubgf/galois_field.h"
#include "mubgf/report.h"

namespace mubgf {

/// The generalized Pauli operator V^j_i acting on the computational basis as
///
///     |k> -> gamma^{d_0((k + i) * j)} |k + i>
///
/// with field arithmetic in the exponent and the shift. `j` indexes the
/// diagonal (phase) part and `i` the shift. Stored structurally; dense
/// matrices only exist through dense_matrix().
struct WeylOperator {
    FieldPtr field;
    Element j;
    Element i;

    Element target(Element k) const {
        return field->add(k, i);
    }
    /// Exponent of gamma picked up by |k>.
    uint32_t gamma_exponent(Element k) const {
        return field->char_exponent(field->mul(field->add(k, i), j));
    }
    bool is_identity() const {
        return j.label() == 0 && i.label() == 0;
    }
    bool same_indices(const WeylOperator &other) const {
        return j == other.j && i == other.i;
    }
};

/// A Weyl operator times an exact phase zeta_{2p}^t.
struct PhasedOp {
    PhaseExponent phase;
    WeylOperator op;

    bool operator==(const PhasedOp &other) const {
        return phase == other.phase && op.same_indices(other.op);
    }
};

WeylOperator v_op(FieldPtr f, Element j, Element i);
WeylOperator identity_op(FieldPtr f);

/// V^j_i V^k_l = gamma^{-d_0(i*k)} V^{j+k}_{i+l}. Throws std::invalid_argument
/// on operators over different fields.
PhasedOp compose(const WeylOperator &a, const WeylOperator &b);
PhasedOp compose(const PhasedOp &a, const PhasedOp &b);
PhasedOp power(const PhasedOp &a, uint64_t e);

/// V^j_i and V^k_l commute iff d_0(i*k) == d_0(j*l).
bool commutes(const WeylOperator &a, const WeylOperator &b);

/// (V^j_i)^dagger = gamma^{-d_0(i*j)} V^{-j}_{-i}.
PhasedOp adjoint(const WeylOperator &a);

/// Exact operator trace.
CycInt trace(const PhasedOp &a);

/// tr(a^dagger b); N when the index pairs agree and 0 otherwise.
CycInt hs_inner(const WeylOperator &a, const WeylOperator &b);

/// Member l of commuting class i: V^l_0 for i == 0, else V^{(i-1)*l}_l.
WeylOperator class_member(FieldPtr f, uint32_t i, Element l);

struct OperatorClass {
    uint32_t index = 0;
    /// members[l] is class_member(i, l); members[0] is the identity.
    std::vector<WeylOperator> members;
};

/// The N+1 commuting classes.
std::vector<OperatorClass> classes(FieldPtr f);

/// Candidate readings of the characteristic-2 square-root determination
///
///     sqrt(gamma^{c q q}) = prod_{n : q_n != 0} i^{d_0(c 2^n 2^n)} gamma^{d_0(c 2^n 2^{n'})}
///
/// which differ in how n' (the next higher nonzero digit of q) is treated:
///   TopPairsWithZero: the highest nonzero digit pairs with n' = 0.
///   TopUnpaired:      the highest nonzero digit contributes no gamma factor.
///   AllHigherDigits:  every nonzero digit pairs with each higher nonzero
///                     digit, i.e. 2^{n'} is replaced by the sum of them.
/// The readings agree up to N = 4 (TopUnpaired and AllHigherDigits) but only
/// AllHigherDigits yields a closed group law from N = 8 on; see
/// resolve_even_reading().
enum class EvenSqrtReading { TopPairsWithZero, TopUnpaired, AllHigherDigits };

const char *reading_name(EvenSqrtReading reading);

struct PhaseConvention {
    /// The element k of the phase freedom gamma^{d_0(k*l)} applied to U^i_l
    /// for i >= 1. For p == 2 this enumerates the generator sign choices.
    Element choice;
    EvenSqrtReading even_reading = EvenSqrtReading::AllHigherDigits;
};

/// The determined square root of gamma^{c*q*q}, as a power of zeta_{2p}.
/// Odd p: gamma^{(c*q*q)/2}. p == 2: the product above.
PhaseExponent sqrt_phase(const GaloisField &f, Element c, Element q, EvenSqrtReading reading);

/// U^i_l: the class member with the phase that makes each class an exact
/// group isomorphic to the additive group of the field.
struct UOperator {
    uint32_t class_index = 0;
    Element l;
    PhaseExponent phase;
    WeylOperator underlying;

    PhasedOp as_phased() const {
        return PhasedOp{phase, underlying};
    }
};

/// U^0_l = V^l_0. For i >= 1, U^i_l = conj(sqrt(gamma^{c l l})) V^{c l}_l
/// with c = i - 1, times gamma^{d_0(k*l)} for the convention's k. Throws
/// std::out_of_range for i > N.
UOperator u_op(FieldPtr f, uint32_t i, Element l, const PhaseConvention &convention = {});

/// U^i_l U^i_l' == U^i_{l+l'} with exact phases, for all l, l'.
Report u_group_law_check(FieldPtr f, uint32_t i, const PhaseConvention &convention = {});

/// (U^i_{p^n})^p == identity for every class and every n.
Report verify_u_generator_orders(FieldPtr f, const PhaseConvention &convention = {});

/// Classes commute internally, meet only in the identity and partition the
/// N^2 - 1 non-identity operators.
Report verify_class_structure(FieldPtr f);

/// tr(V^dagger V') == N delta delta over all pairs, exactly.
Report verify_operator_orthogonality(FieldPtr f);

/// Weyl commutation V^j_0 V^0_i == gamma^{d_0(i*j)} V^0_i V^j_0 for all i, j.
Report verify_weyl_commutation(FieldPtr f);

/// Dense cross-checks: composition phases against matrix products, the
/// algebraic commutation test against commutators, adjoints and unitarity.
Report verify_dense_algebra(FieldPtr f, double tolerance = 1e-10, uint32_t cap = default_dense_cap());

Eigen::MatrixXcd dense_matrix(const WeylOperator &a, uint32_t cap = default_dense_cap());
Eigen::MatrixXcd dense_matrix(const PhasedOp &a, uint32_t cap = default_dense_cap());
Eigen::MatrixXcd dense_matrix(const UOperator &a, uint32_t cap = default_dense_cap());

}  // namespace mubgf

#endif
