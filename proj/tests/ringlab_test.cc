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


#include <gtest/gtest.h>

#include <algorithm>

#include "mubgf/ringlab.h"
#include "mubgf/weyl.h"

namespace mubgf {
namespace {

TEST(RingWeylGroup, PrimeSizeEqualsFieldOperators) {
    for (uint32_t n : {2u, 3u, 5u, 7u}) {
        FieldPtr f = build_field(n, 1);
        auto ops = ring_weyl_group(n);
        ASSERT_EQ(ops.size(), n * n);
        for (const RingWeylOperator &op : ops) {
            const Eigen::MatrixXcd field = dense_matrix(v_op(f, Element(op.j), Element(op.i)));
            EXPECT_LT((op.matrix - field).norm(), 1e-12) << n << " " << op.j << " " << op.i;
        }
    }
}

TEST(RingWeylGroup, OperatorsAreUnitaryAndOrdered) {
    auto ops = ring_weyl_group(6);
    ASSERT_EQ(ops.size(), 36u);
    for (size_t x = 0; x < ops.size(); x++) {
        EXPECT_EQ(ops[x].j, x / 6);
        EXPECT_EQ(ops[x].i, x % 6);
        EXPECT_LT((ops[x].matrix.adjoint() * ops[x].matrix - Eigen::MatrixXcd::Identity(6, 6)).norm(), 1e-12);
    }
}

TEST(RingWeylGroup, RejectsOutOfRangeSizes) {
    EXPECT_THROW(ring_weyl_group(1), std::invalid_argument);
    EXPECT_THROW(ring_weyl_group(kRingMaxN + 1), std::length_error);
    EXPECT_THROW(maximal_commuting_classes(13), std::length_error);
    EXPECT_THROW(ring_weyl_group(8, 4), std::length_error);
}

TEST(RingClasses, PrimeSizeGivesCompleteDisjointSet) {
    for (uint32_t n : {2u, 3u, 5u, 7u, 11u}) {
        RingClasses c = maximal_commuting_classes(n);
        EXPECT_EQ(c.classes.size(), n + 1);
        EXPECT_EQ(c.overlapping_pairs, 0u);
        EXPECT_TRUE(c.shared_members.empty());
        for (const RingClass &k : c.classes) {
            EXPECT_EQ(k.members.size(), n - 1);
        }
        RingScan scan = eigenbasis_unbiasedness_scan(c);
        EXPECT_TRUE(scan.report.passed()) << scan.report.summary();
        EXPECT_TRUE(scan.degenerate_classes.empty());
        EXPECT_LT(scan.max_deviation, 1e-10);
    }
}

TEST(RingClasses, CompositeSizesOverlapAndAreBiased) {
    struct Row {
        uint32_t n;
        size_t classes;
        uint64_t overlaps;
    };
    for (Row row : {Row{4, 7, 9}, Row{6, 12, 30}, Row{8, 15, 57}, Row{9, 13, 24}}) {
        RingClasses c = maximal_commuting_classes(row.n);
        EXPECT_EQ(c.classes.size(), row.classes) << row.n;
        EXPECT_EQ(c.overlapping_pairs, row.overlaps) << row.n;
        EXPECT_FALSE(c.shared_members.empty());
        RingScan scan = eigenbasis_unbiasedness_scan(c);
        EXPECT_TRUE(scan.report.passed()) << scan.report.summary();
        EXPECT_GT(scan.max_deviation, 0.01) << row.n;
    }
}

TEST(RingClasses, SixDiffersFromAnyCompleteSet) {
    RingClasses c = maximal_commuting_classes(6);
    EXPECT_GT(c.classes.size(), 7u);
    RingScan scan = eigenbasis_unbiasedness_scan(c);
    EXPECT_NEAR(scan.max_deviation, 1.0 / 3, 1e-9);
}

TEST(RingClasses, MembersCommuteAndAreSorted) {
    RingClasses c = maximal_commuting_classes(4);
    auto ops = ring_weyl_group(4);
    auto matrix = [&](IndexPair p) { return ops[p.first * 4 + p.second].matrix; };
    for (size_t x = 0; x < c.classes.size(); x++) {
        const auto &members = c.classes[x].members;
        EXPECT_TRUE(std::is_sorted(members.begin(), members.end()));
        EXPECT_EQ(std::count(members.begin(), members.end(), IndexPair{0, 0}), 0);
        for (IndexPair a : members) {
            for (IndexPair b : members) {
                EXPECT_LT((matrix(a) * matrix(b) - matrix(b) * matrix(a)).norm(), 1e-10);
            }
        }
        if (x > 0) {
            EXPECT_LT(c.classes[x - 1].members, members);
        }
    }
}

TEST(RingClasses, DiffersFromFieldClassesAtFour) {
    // GF(4) gives 5 disjoint classes of 3; Z_4 does not.
    RingClasses c = maximal_commuting_classes(4);
    EXPECT_NE(c.classes.size(), 5u);
    EXPECT_GT(c.overlapping_pairs, 0u);
}

TEST(RingScan, IsDeterministicForASeed) {
    RingClasses c = maximal_commuting_classes(6);
    RingScan a = eigenbasis_unbiasedness_scan(c, 3);
    RingScan b = eigenbasis_unbiasedness_scan(c, 3);
    ASSERT_EQ(a.pairs.size(), b.pairs.size());
    for (size_t x = 0; x < a.pairs.size(); x++) {
        EXPECT_EQ(a.pairs[x].max_deviation, b.pairs[x].max_deviation);
    }
}

}  // namespace
}  // namespace mubgf
