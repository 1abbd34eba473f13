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

#include <complex>
#include <random>

#include "json.hpp"
#include "mubgf/galois_field.h"
#include "oracles.h"

namespace mubgf {
namespace {

struct Pm {
    uint32_t p;
    uint32_t m;
};

const Pm kSmallFields[] = {{2, 1}, {2, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {3, 1}, {3, 2}, {3, 3},
                           {5, 1}, {5, 2}, {7, 1}, {7, 2}, {11, 1}, {13, 1}, {31, 1}, {61, 1}};

// Reference tables for N = 4.
const uint32_t kTable1[4][4] = {{0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}};
const uint32_t kTable2[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
const uint32_t kTable3[4][4] = {{0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 0, 2}, {0, 3, 2, 1}};
const uint32_t kTable4[4][4] = {{0, 1, 2, 3}, {1, 2, 3, 0}, {2, 3, 0, 1}, {3, 0, 1, 2}};

TEST(GaloisField, Gf4MatchesReferenceTables) {
    FieldPtr f = build_field(2, 2);
    for (uint32_t a = 0; a < 4; a++) {
        for (uint32_t b = 0; b < 4; b++) {
            EXPECT_EQ(f->mul(Element(a), Element(b)).label(), kTable1[a][b]);
            EXPECT_EQ(f->add(Element(a), Element(b)).label(), kTable2[a][b]);
        }
    }
}

TEST(GaloisField, ExportedTablesMatchReference) {
    FieldPtr f = build_field(2, 2);
    auto doc = nlohmann::json::parse(export_tables(*f, TableFormat::Json));
    for (uint32_t a = 0; a < 4; a++) {
        for (uint32_t b = 0; b < 4; b++) {
            EXPECT_EQ(doc["tables"]["field_mul"][a][b], kTable1[a][b]);
            EXPECT_EQ(doc["tables"]["field_add"][a][b], kTable2[a][b]);
            EXPECT_EQ(doc["tables"]["mod_mul"][a][b], kTable3[a][b]);
            EXPECT_EQ(doc["tables"]["mod_add"][a][b], kTable4[a][b]);
        }
    }
    EXPECT_EQ(doc["field"]["poly"], nlohmann::json::array({1, 1, 1}));
}

TEST(GaloisField, CsvTablesHaveOneRowPerElement) {
    FieldPtr f = build_field(3, 2);
    const std::string csv = export_tables(*f, TableFormat::Csv);
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 1 + 4 * 9);
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "table,row,0,1,2,3,4,5,6,7,8");
}

TEST(GaloisField, Gf2TablesEqualModTables) {
    FieldPtr f = build_field(2, 1);
    auto doc = nlohmann::json::parse(export_tables(*f, TableFormat::Json));
    EXPECT_EQ(doc["tables"]["field_mul"], doc["tables"]["mod_mul"]);
    EXPECT_EQ(doc["tables"]["field_add"], doc["tables"]["mod_add"]);
}

TEST(GaloisField, RejectsUnknownTableFormat) {
    EXPECT_THROW(parse_table_format("xml"), std::invalid_argument);
}

TEST(GaloisField, PolynomialIsSmallestIrreducible) {
    for (Pm pm : {Pm{2, 2}, Pm{2, 3}, Pm{2, 4}, Pm{2, 5}, Pm{3, 2}, Pm{3, 3}, Pm{5, 2}, Pm{7, 2}}) {
        FieldPtr f = build_field(pm.p, pm.m);
        EXPECT_EQ(f->poly(), oracle::smallest_irreducible(pm.p, pm.m)) << pm.p << "^" << pm.m;
        EXPECT_TRUE(is_irreducible(pm.p, f->poly()));
    }
    EXPECT_EQ(build_field(2, 3)->poly(), (std::vector<uint32_t>{1, 1, 0, 1}));
}

TEST(GaloisField, IrreducibilityAgreesWithProductSearch) {
    for (uint32_t p : {2u, 3u}) {
        for (uint32_t m = 2; m <= 4; m++) {
            for (uint64_t idx = 0; idx < oracle::ipow(p, m); idx++) {
                auto poly = oracle::monic_from_index(p, m, idx);
                EXPECT_EQ(is_irreducible(p, poly), oracle::irreducible_by_products(p, poly));
            }
        }
    }
}

TEST(GaloisField, MultiplicationMatchesSchoolbook) {
    for (Pm pm : kSmallFields) {
        FieldPtr f = build_field(pm.p, pm.m);
        oracle::SlowField slow{pm.p, pm.m, f->poly()};
        for (uint32_t a = 0; a < f->size(); a++) {
            for (uint32_t b = 0; b < f->size(); b++) {
                ASSERT_EQ(f->mul(Element(a), Element(b)).label(), slow.mul(a, b));
                ASSERT_EQ(f->add(Element(a), Element(b)).label(), slow.add(a, b));
            }
        }
    }
}

TEST(GaloisField, DocumentedExamples) {
    FieldPtr gf4 = build_field(2, 2);
    EXPECT_EQ(gf4->add(Element(2), Element(3)).label(), 1u);
    EXPECT_EQ(gf4->mul(Element(2), Element(3)).label(), 1u);
    EXPECT_EQ(gf4->char_exponent(Element(3)), 1u);
    EXPECT_EQ(gf4->trace(Element(2)).label(), 1u);
    FieldPtr gf9 = build_field(3, 2);
    EXPECT_EQ(gf9->add(Element(4), Element(7)).label(), 2u);
    EXPECT_EQ(gf9->char_exponent(Element(7)), 1u);
    FieldPtr gf7 = build_field(7, 1);
    EXPECT_EQ(gf7->inv(Element(3)).label(), 5u);
    for (uint32_t a = 0; a < 7; a++) {
        for (uint32_t b = 0; b < 7; b++) {
            EXPECT_EQ(gf7->mul(Element(a), Element(b)).label(), a * b % 7);
        }
    }
    FieldPtr gf3 = build_field(3, 1);
    for (uint32_t a = 0; a < 3; a++) {
        for (uint32_t b = 0; b < 3; b++) {
            EXPECT_EQ(gf3->add(Element(a), Element(b)).label(), (a + b) % 3);
            EXPECT_EQ(gf3->mul(Element(a), Element(b)).label(), a * b % 3);
        }
    }
}

TEST(GaloisField, AdditionIsDigitwise) {
    for (Pm pm : kSmallFields) {
        FieldPtr f = build_field(pm.p, pm.m);
        for (uint32_t a = 0; a < f->size(); a++) {
            for (uint32_t b = 0; b < f->size(); b++) {
                auto da = f->digits(Element(a));
                auto db = f->digits(Element(b));
                auto sum = f->digits(f->add(Element(a), Element(b)));
                for (uint32_t n = 0; n < pm.m; n++) {
                    ASSERT_EQ(sum[n], (da[n] + db[n]) % pm.p);
                }
                ASSERT_EQ(f->add(Element(a), Element(0)), Element(a));
            }
            ASSERT_EQ(f->add(Element(a), f->neg(Element(a))), f->zero());
            if (pm.p == 2) {
                ASSERT_EQ(f->neg(Element(a)), Element(a));
            }
        }
    }
}

TEST(GaloisField, TraceMatchesFrobeniusSum) {
    for (Pm pm : kSmallFields) {
        FieldPtr f = build_field(pm.p, pm.m);
        oracle::SlowField slow{pm.p, pm.m, f->poly()};
        for (uint32_t a = 0; a < f->size(); a++) {
            const uint32_t t = f->trace(Element(a)).label();
            ASSERT_EQ(t, slow.trace(a));
            ASSERT_LT(t, pm.p);
        }
        EXPECT_EQ(f->trace(f->zero()), f->zero());
    }
}

TEST(GaloisField, TraceIsAdditive) {
    FieldPtr f = build_field(3, 2);
    for (uint32_t a = 0; a < 9; a++) {
        for (uint32_t b = 0; b < 9; b++) {
            EXPECT_EQ(f->trace(f->add(Element(a), Element(b))),
                      f->add(f->trace(Element(a)), f->trace(Element(b))));
        }
    }
}

TEST(GaloisField, CharacterSumIsOrthogonal) {
    for (Pm pm : {Pm{2, 2}, Pm{3, 2}, Pm{3, 3}, Pm{2, 4}, Pm{5, 2}}) {
        FieldPtr f = build_field(pm.p, pm.m);
        for (uint32_t i = 0; i < f->size(); i++) {
            std::complex<double> direct = 0;
            for (uint32_t j = 0; j < f->size(); j++) {
                direct += oracle::root(pm.p, f->mul(Element(j), Element(i)).label() % pm.p);
            }
            const int64_t exact = character_sum(*f, Element(i));
            EXPECT_EQ(exact, i == 0 ? int64_t(f->size()) : 0);
            EXPECT_NEAR(std::abs(direct - double(exact)), 0.0, 1e-9);
        }
    }
}

TEST(GaloisField, CharacterIsAdditive) {
    FieldPtr f = build_field(2, 3);
    for (uint32_t a = 0; a < 8; a++) {
        for (uint32_t b = 0; b < 8; b++) {
            EXPECT_EQ(f->char_exponent(f->add(Element(a), Element(b))),
                      (f->char_exponent(Element(a)) + f->char_exponent(Element(b))) % 2);
        }
    }
}

TEST(GaloisField, AxiomsAndCharacterIdentitiesHoldUpTo64) {
    for (Pm pm : kSmallFields) {
        FieldPtr f = build_field(pm.p, pm.m);
        if (f->size() > 64) {
            continue;
        }
        Report axioms = verify_field_axioms(*f);
        EXPECT_TRUE(axioms.passed()) << axioms.summary();
        Report chars = verify_character_identities(*f);
        EXPECT_TRUE(chars.passed()) << chars.summary();
    }
}

TEST(GaloisField, InverseAndDivision) {
    FieldPtr f = build_field(5, 2);
    for (uint32_t a = 1; a < f->size(); a++) {
        EXPECT_EQ(f->mul(f->inv(Element(a)), Element(a)), f->one());
        EXPECT_EQ(f->div(Element(a), Element(a)), f->one());
    }
    EXPECT_THROW(f->inv(f->zero()), std::domain_error);
    EXPECT_THROW(f->div(f->one(), f->zero()), std::domain_error);
}

TEST(GaloisField, HalfIsInverseOfDoubling) {
    FieldPtr f = build_field(3, 3);
    for (uint32_t a = 0; a < f->size(); a++) {
        Element h = f->half(Element(a));
        EXPECT_EQ(f->add(h, h), Element(a));
    }
}

TEST(GaloisField, RejectsBadParameters) {
    EXPECT_THROW(build_field(6, 1), std::invalid_argument);
    EXPECT_THROW(build_field(1, 1), std::invalid_argument);
    EXPECT_THROW(build_field(2, 0), std::invalid_argument);
    EXPECT_THROW(build_field(2, 11), std::length_error);
    EXPECT_THROW(build_field(3, 7, 1000), std::length_error);
    FieldPtr f = build_field(2, 2);
    EXPECT_THROW(f->element(4), std::out_of_range);
    EXPECT_THROW(f->add(Element(4), Element(0)), std::out_of_range);
}

TEST(DualBases, SatisfyDefiningDeltas) {
    for (Pm pm : kSmallFields) {
        FieldPtr f = build_field(pm.p, pm.m);
        oracle::SlowField slow{pm.p, pm.m, f->poly()};
        DualBases d = dual_bases(*f);
        ASSERT_EQ(d.trace_dual.size(), pm.m);
        for (uint32_t i = 0; i < pm.m; i++) {
            for (uint32_t j = 0; j < pm.m; j++) {
                const uint32_t xi = static_cast<uint32_t>(oracle::ipow(pm.p, i));
                EXPECT_EQ(slow.trace(slow.mul(xi, d.trace_dual[j].label())), i == j ? 1u : 0u);
                EXPECT_EQ(slow.mul(xi, d.remainder_dual[j].label()) % pm.p, i == j ? 1u : 0u);
            }
        }
        if (pm.m == 1) {
            EXPECT_EQ(d.trace_dual[0], f->one());
            EXPECT_EQ(d.remainder_dual[0], f->one());
        }
    }
}

TEST(DualBases, BilinearRelabelIdentity) {
    for (Pm pm : {Pm{3, 1}, Pm{3, 2}, Pm{3, 3}, Pm{5, 2}, Pm{7, 2}}) {
        FieldPtr f = build_field(pm.p, pm.m);
        Report r = bilinear_relabel_check(*f);
        EXPECT_TRUE(r.passed()) << r.summary();
        DualBases d = dual_bases(*f);
        EXPECT_EQ(trace_to_remainder_coordinates(*f, d, f->zero()), f->zero());
        // Independent brute force of Tr(r k) == (T(r) k)_0.
        for (uint32_t r0 = 0; r0 < f->size(); r0++) {
            Element t = trace_to_remainder_coordinates(*f, d, Element(r0));
            for (uint32_t k = 0; k < f->size(); k++) {
                oracle::SlowField slow{pm.p, pm.m, f->poly()};
                ASSERT_EQ(slow.trace(slow.mul(r0, k)), slow.mul(t.label(), k) % pm.p);
            }
        }
    }
    EXPECT_THROW(bilinear_relabel_check(*build_field(2, 3)), std::invalid_argument);
}

}  // namespace
}  // namespace mubgf
