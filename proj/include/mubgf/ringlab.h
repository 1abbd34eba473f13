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


#ifndef MUBGF_RINGLAB_H
#define MUBGF_RINGLAB_H

#include <Eigen/Dense>
#include <cstdint>
#include <utility>
#include <vector>

#include "mubgf/config.h"
#include "mubgf/report.h"

namespace mubgf {

/// Largest N accepted for class enumeration.
constexpr uint32_t kRingMaxN = 12;

/// V^j_i over Z_N: entry omega^{((k+i)*j) mod N} at ((k+i) mod N, k) with
/// omega = exp(2 pi i / N).
struct RingWeylOperator {
    uint32_t j = 0;
    uint32_t i = 0;
    Eigen::MatrixXcd matrix;
};

/// All N^2 operators, ordered by (j, i). Throws std::invalid_argument for
/// N < 2 and std::length_error above kRingMaxN or the dense cap.
std::vector<RingWeylOperator> ring_weyl_group(uint32_t n, uint32_t cap = default_dense_cap());

using IndexPair = std::pair<uint32_t, uint32_t>;

struct RingClass {
    /// Sorted (j, i) pairs; the identity is never listed.
    std::vector<IndexPair> members;
};

struct RingClasses {
    uint32_t n = 0;
    /// Sorted lexicographically by member lists.
    std::vector<RingClass> classes;
    /// Number of unordered class pairs that share an operator.
    uint64_t overlapping_pairs = 0;
    /// Operators that lie in more than one class.
    std::vector<IndexPair> shared_members;
};

/// Maximal sets of pairwise commuting non-identity operators, with
/// commutation decided by ||AB - BA|| < tolerance.
RingClasses maximal_commuting_classes(uint32_t n, double tolerance = 1e-10, uint32_t cap = default_dense_cap());

struct RingPairDeviation {
    uint32_t class_a = 0;
    uint32_t class_b = 0;
    /// max | |<u|v>|^2 - 1/N | over the two eigenbases.
    double max_deviation = 0;
};

struct RingScan {
    Report report;
    /// Classes whose joint eigenspaces are degenerate, so the eigenbasis
    /// chosen for them is one of many.
    std::vector<uint32_t> degenerate_classes;
    std::vector<RingPairDeviation> pairs;
    double max_deviation = 0;
};

/// Diagonalizes each class through a seeded random Hermitian combination of
/// its members, checks every member is diagonal in that basis, and measures
/// the deviation from unbiasedness of every pair of eigenbases.
RingScan eigenbasis_unbiasedness_scan(const RingClasses &classes, uint64_t seed = 1, double tolerance = 1e-8,
                                      uint32_t cap = default_dense_cap());

}  // namespace mubgf

#endif
