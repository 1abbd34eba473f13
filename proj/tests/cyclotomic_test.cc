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

#include <limits>
#include <random>

#include "mubgf/cyclotomic.h"
#include "mubgf/galois_field.h"
#include "oracles.h"

namespace mubgf {
namespace {

CycInt random_cyc(std::mt19937_64 &rng, uint32_t p) {
    std::uniform_int_distribution<int64_t> coeff(-5, 5);
    std::uniform_int_distribution<int64_t> exponent(0, 2 * p - 1);
    CycInt x = CycInt::zero(p);
    for (int term = 0; term < 4; term++) {
        x += CycInt::from_phase(p, exponent(rng)) * CycInt::from_integer(p, coeff(rng));
    }
    return x;
}

/// Direct evaluation of sum_t c_t zeta^t without reduction.
std::complex<double> eval_sum(uint32_t p, const std::vector<std::pair<int64_t, int64_t>> &terms) {
    std::complex<double> z = 0;
    for (auto [c, t] : terms) {
        z += double(c) * oracle::root(2 * p, t);
    }
    return z;
}

TEST(PhaseExponent, WrapsAndMultiplies) {
    PhaseExponent a(3, 5);
    PhaseExponent b(3, 4);
    EXPECT_EQ((a * b).t(), 3u);
    EXPECT_EQ(PhaseExponent(3, -1).t(), 5u);
    EXPECT_EQ(a.conj().t(), 1u);
    EXPECT_EQ(PhaseExponent::gamma_power(3, 2).t(), 4u);
    EXPECT_EQ(a.pow(6).t(), 0u);
    EXPECT_NEAR(std::abs(PhaseExponent(2, 1).to_complex() - std::complex<double>(0, 1)), 0, 1e-15);
    EXPECT_THROW(PhaseExponent(3, 1) * PhaseExponent(5, 1), std::invalid_argument);
}

TEST(CycInt, FromPhaseExamples) {
    EXPECT_EQ(CycInt::from_phase(2, 1).coeffs(), (std::vector<int64_t>{0, 1}));
    // zeta_6^2 = zeta_6 - 1 modulo x^2 - x + 1.
    EXPECT_EQ(CycInt::from_phase(3, 2).coeffs(), (std::vector<int64_t>{-1, 1}));
    for (uint32_t p : {2u, 3u, 5u, 7u}) {
        EXPECT_EQ(CycInt::from_phase(p, 0), CycInt::one(p));
        EXPECT_EQ(CycInt::from_phase(p, p), CycInt::from_integer(p, -1));
        EXPECT_EQ(CycInt::from_phase(p, 0).coeffs().size(), CycInt::degree(p));
    }
}

TEST(CycInt, ArithmeticExamples) {
    EXPECT_EQ(CycInt::from_phase(3, 1) * CycInt::from_phase(3, 5), CycInt::one(3));
    const CycInt i = CycInt::from_phase(2, 1);
    EXPECT_EQ((CycInt::one(2) + i) * (CycInt::one(2) - i), CycInt::from_integer(2, 2));
    CycInt sum = CycInt::zero(5);
    for (int k = 0; k < 5; k++) {
        sum += CycInt::from_phase(5, 2 * k);
    }
    EXPECT_TRUE(sum.is_zero());
}

TEST(CycInt, AbsSqAndAsInteger) {
    for (uint32_t p : {2u, 3u, 5u, 7u}) {
        for (uint32_t t = 0; t < 2 * p; t++) {
            EXPECT_EQ(CycInt::from_phase(p, t).abs_sq().as_integer(), 1);
        }
    }
    EXPECT_FALSE(CycInt::from_phase(3, 1).as_integer().has_value());
    EXPECT_EQ(CycInt::from_integer(7, -4).as_integer(), -4);
    // Character sum over GF(9) for i != 0 vanishes.
    FieldPtr f = build_field(3, 2);
    for (uint32_t i = 1; i < 9; i++) {
        CycInt x = CycInt::zero(3);
        for (uint32_t j = 0; j < 9; j++) {
            x += CycInt::from_phase(PhaseExponent::gamma_power(3, f->char_exponent(f->mul(Element(j), Element(i)))));
        }
        EXPECT_EQ(x.abs_sq().as_integer(), 0);
    }
}

TEST(CycInt, FromExponentCountsMatchesSum) {
    std::mt19937_64 rng(7);
    for (uint32_t p : {2u, 3u, 5u, 7u, 11u}) {
        std::vector<int64_t> counts(2 * p);
        std::vector<std::pair<int64_t, int64_t>> terms;
        std::uniform_int_distribution<int64_t> c(-20, 20);
        for (uint32_t t = 0; t < 2 * p; t++) {
            counts[t] = c(rng);
            terms.push_back({counts[t], t});
        }
        CycInt x = CycInt::from_exponent_counts(p, counts);
        EXPECT_NEAR(std::abs(x.to_complex() - eval_sum(p, terms)), 0, 1e-9);
    }
    std::vector<int64_t> wrong(5);
    EXPECT_THROW(CycInt::from_exponent_counts(3, wrong), std::invalid_argument);
}

TEST(CycInt, RingAxiomsOnRandomTriples) {
    std::mt19937_64 rng(2026);
    for (uint32_t p : {2u, 3u, 5u, 7u}) {
        for (int trial = 0; trial < 1000; trial++) {
            CycInt a = random_cyc(rng, p), b = random_cyc(rng, p), c = random_cyc(rng, p);
            ASSERT_EQ(a + b, b + a);
            ASSERT_EQ(a * b, b * a);
            ASSERT_EQ((a + b) + c, a + (b + c));
            ASSERT_EQ((a * b) * c, a * (b * c));
            ASSERT_EQ(a * (b + c), a * b + a * c);
            ASSERT_EQ(a + CycInt::zero(p), a);
            ASSERT_EQ(a * CycInt::one(p), a);
            ASSERT_TRUE((a - a).is_zero());
            ASSERT_EQ(a.conj().conj(), a);
            ASSERT_EQ((a * b).conj(), a.conj() * b.conj());
            ASSERT_LT(std::abs((a * b).to_complex() - a.to_complex() * b.to_complex()), 1e-9);
            ASSERT_LT(std::abs(a.conj().to_complex() - std::conj(a.to_complex())), 1e-9);
            auto sq = a.abs_sq();
            ASSERT_LT(std::abs(sq.to_complex() - std::norm(a.to_complex())), 1e-9);
        }
    }
}

TEST(CycInt, MixedPrimeThrows) {
    EXPECT_THROW(CycInt::one(3) + CycInt::one(5), std::invalid_argument);
    EXPECT_THROW(CycInt::one(3) * CycInt::one(5), std::invalid_argument);
    EXPECT_THROW(CycInt::one(3) * PhaseExponent(5, 1), std::invalid_argument);
}

TEST(CycInt, OverflowIsReportedNotWrapped) {
    const CycInt big = CycInt::from_integer(3, std::numeric_limits<int64_t>::max() / 2 + 1);
    EXPECT_THROW(big + big, std::overflow_error);
    EXPECT_THROW(big * big, std::overflow_error);
}

TEST(CycInt, PrintsAsPolynomial) {
    EXPECT_EQ(CycInt::zero(3).to_string(), "0");
    EXPECT_EQ(CycInt::from_integer(2, 3).to_string(), "3");
    EXPECT_NE(CycInt::from_phase(3, 1).to_string().find('z'), std::string::npos);
}

}  // namespace
}  // namespace mubgf
