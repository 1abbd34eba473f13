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


#ifndef MUBGF_MUB_H
#define MUBGF_MUB_H

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "mubgf/config.h"
#include "mubgf/cyclotomic.h"
#include "mubgf/galois_field.h"
#include "mubgf/report.h"
#include "mubgf/weyl.h"

namespace mubgf {

/// A state of one of the N+1 bases.
///
/// Delta states are computational basis vectors |k>. Phase states hold N
/// exponents t_q of zeta_{2p}, the amplitude at |q> being zeta^{t_q}/sqrt(N).
struct MubState {
    enum class Kind { Delta, Phase };

    uint32_t basis_index = 0;
    Element k;
    Kind kind = Kind::Delta;
    uint32_t p = 2;
    uint32_t n = 0;
    /// Phase states only; values in [0, 2p).
    std::vector<uint16_t> exponents;

    uint32_t dimension() const {
        return n;
    }
    /// Normalized complex amplitudes.
    Eigen::VectorXcd amplitudes() const;
    /// Exponents rotated so that position 0 carries exponent 0. Two phase
    /// states are the same ray iff these agree.
    std::vector<uint16_t> normalized_exponents() const;
};

struct MubFamily {
    FieldPtr field;
    PhaseConvention convention;
    /// bases[0] is the computational basis, bases[1] the dual basis and
    /// bases[i] for i >= 1 the eigenbasis of operator class i.
    std::vector<std::vector<MubState>> bases;
};

/// |e~_j> = N^{-1/2} sum_k gamma^{-(k*j)} |k>.
std::vector<MubState> dual_basis(const FieldPtr &f);

/// |e^i_k> for 1 <= i <= N: exponent at q is 2 d_0(-(q*k')) plus the square
/// root phase of gamma^{(i-1)*q*q}, with k' = k - s for the convention's
/// choice s. Throws std::out_of_range for i == 0 or i > N.
MubState mub_state(const FieldPtr &f, uint32_t i, Element k, const PhaseConvention &convention = {});

/// Computational basis plus the N constructed bases. Verifies nothing.
MubFamily mub_family(const FieldPtr &f, const PhaseConvention &convention = {});

/// Unnormalized inner product <a|b>, exact:
///   phase/phase: N <a|b>
///   delta/phase, phase/delta: sqrt(N) <a|b>, a single root of unity
///   delta/delta: <a|b>
/// Throws std::invalid_argument on states of different dimension or p.
CycInt inner(const MubState &a, const MubState &b);

/// The factor taking abs_sq(inner(a, b)) to N^2 |<a|b>|^2.
int64_t inner_scale(const MubState &a, const MubState &b);

/// Per basis-pair summary of an unbiasedness sweep, on the N^2 scale where
/// orthonormal states give N^2 or 0 and unbiased ones give N.
struct BasisPairStats {
    uint32_t basis_a = 0;
    uint32_t basis_b = 0;
    uint64_t pairs = 0;
    uint64_t violations = 0;
    /// Distinct observed values of N^2 |<a|b>|^2; -1 marks a value that is
    /// not a rational integer.
    std::vector<int64_t> values;
};

struct UnbiasednessResult {
    Report report;
    std::vector<BasisPairStats> pairs;
};

/// Checks every state against itself and every unordered pair of distinct
/// states: same basis gives N^2 delta, different bases give N.
UnbiasednessResult verify_unbiasedness(const MubFamily &family);

/// Applies U^i_l structurally to every |e^i_k> and checks the eigenvalue
/// gamma^{k*l} exactly. For N within the dense cap also checks
/// U^i_l == sum_k gamma^{k*l} |e^i_k><e^i_k| numerically.
Report verify_eigenstates(const MubFamily &family, double tolerance = 1e-10, uint32_t cap = 16);

/// (1/N) sum_l gamma^{-(k*l)} U^i_l as a dense matrix.
Eigen::MatrixXcd projector_from_u(const FieldPtr &f, uint32_t i, Element k, const PhaseConvention &convention = {},
                                  uint32_t cap = default_dense_cap());

/// Compares every projector_from_u against the outer product of the
/// corresponding family state, and checks completeness per basis.
Report verify_projectors(const MubFamily &family, double tolerance = 1e-10, uint32_t cap = default_dense_cap());

/// Outcome of one reading of the characteristic-2 square root at one N.
struct ReadingTrial {
    EvenSqrtReading reading;
    uint32_t n = 0;
    uint64_t group_law_failures = 0;
    uint64_t eigenstate_failures = 0;
    uint64_t unbiasedness_failures = 0;

    bool passed() const {
        return group_law_failures == 0 && eigenstate_failures == 0 && unbiasedness_failures == 0;
    }
};

struct ReadingResolution {
    std::vector<ReadingTrial> trials;
    /// First reading, in enum order, that passes at every tried m.
    std::optional<EvenSqrtReading> selected;
};

/// Runs every even-case reading over GF(2^m) for the given m and selects
/// the first that passes the group law, the eigenstate property and
/// unbiasedness exactly at all of them.
ReadingResolution resolve_even_reading(const std::vector<uint32_t> &ms = {1, 2, 3, 4});

/// Wootters-Fields state N^{-1/2} sum_q gamma^{Tr(-(q*k)) + Tr(r*q*q)} |q>.
/// Odd p only; throws std::invalid_argument for p == 2.
MubState wootters_fields_state(const FieldPtr &f, Element r, Element k);
std::vector<MubState> wootters_fields_basis(const FieldPtr &f, Element r);

/// For basis i >= 1 of the family: the Wootters-Fields parameters (r, k) of
/// each state, when found.
struct WfMatch {
    uint32_t basis_index = 0;
    Element r;
    std::vector<Element> state_to_wf_k;
};

struct WfEquivalenceResult {
    Report report;
    std::vector<WfMatch> matches;
};

/// Matches each constructed basis to a Wootters-Fields basis by exact
/// normalized exponent vectors and checks that the match is a bijection on
/// state labels and agrees with the relabeling predicted by the dual bases.
/// Odd p only.
WfEquivalenceResult wf_equivalence_check(const MubFamily &family);

/// Where V^n_m lands when written in the coordinates of basis i.
struct CovarianceEntry {
    Element n;
    Element m;
    Element a;
    Element b;
    /// Phase of the landing operator as a complex number.
    std::complex<double> phase;
    bool matches_stated_map = false;
};

struct CovarianceResult {
    Report report;
    std::vector<CovarianceEntry> entries;
};

/// Expresses each V^n_m in the coordinates {|e^i_k>} and checks it equals a
/// phase times the matrix pattern of some V^a_b, and that (n, m) -> (a, b)
/// is a bijection. Agreement with a = m, b = -n + (i-1)*m is recorded as a
/// note, not a failure.
CovarianceResult verify_basis_covariance(const MubFamily &family, uint32_t i, double tolerance = 1e-9,
                                         uint32_t cap = default_dense_cap());

/// The N x N matrix whose columns are the states of basis i.
Eigen::MatrixXcd basis_matrix(const MubFamily &family, uint32_t i, uint32_t cap = default_dense_cap());

}  // namespace mubgf

#endif
