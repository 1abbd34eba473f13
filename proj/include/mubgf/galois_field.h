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

#ifndef MUBGF_GALOIS_FIELD_H
#define MUBGF_GALOIS_FIELD_H

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "mubgf/report.h"

namespace mubgf {

/// An element of GF(p^m), identified by its integer label 0..N-1.
///
/// The label's base-p digits are the coefficients of the element as a
/// polynomial in x: label = sum_n d_n p^n with d_n the coefficient of x^n.
/// With this labeling, field addition is digit-wise addition mod p and the
/// lowest digit d_0 is the remainder of the label after division by p.
class Element {
   public:
    constexpr Element() = default;
    constexpr explicit Element(uint32_t label) : label_(label) {
    }
    constexpr uint32_t label() const {
        return label_;
    }
    constexpr auto operator<=>(const Element &) const = default;

   private:
    uint32_t label_ = 0;
};

constexpr uint32_t kDefaultMaxFieldSize = 1024;
/// Tables are stored as 16-bit labels and the addition table is N*N.
constexpr uint32_t kHardMaxFieldSize = 4096;

/// The arithmetic context of GF(p^m). Immutable after construction.
class GaloisField {
   public:
    /// Builds GF(p^m) from the lexicographically smallest monic irreducible
    /// polynomial of degree m, comparing coefficient tuples (c_{m-1},...,c_0).
    ///
    /// Throws std::invalid_argument if p is not prime or m == 0, and
    /// std::length_error if p^m exceeds max_size.
    static std::shared_ptr<const GaloisField> build(uint32_t p, uint32_t m,
                                                    uint32_t max_size = kDefaultMaxFieldSize);

    uint32_t p() const {
        return p_;
    }
    uint32_t m() const {
        return m_;
    }
    uint32_t size() const {
        return n_;
    }
    /// Coefficients c_0..c_m of the defining polynomial; c_m == 1.
    const std::vector<uint32_t> &poly() const {
        return poly_;
    }
    Element primitive() const {
        return primitive_;
    }

    Element zero() const {
        return Element(0);
    }
    Element one() const {
        return Element(1);
    }
    /// Checked conversion from a label. Throws std::out_of_range.
    Element element(uint32_t label) const;
    /// The element x^n, whose label is p^n.
    Element basis(uint32_t n) const;
    bool contains(Element a) const {
        return a.label() < n_;
    }

    uint32_t digit(Element a, uint32_t n) const;
    std::vector<uint32_t> digits(Element a) const;
    Element from_digits(const std::vector<uint32_t> &digits) const;

    Element add(Element a, Element b) const;
    Element neg(Element a) const;
    Element sub(Element a, Element b) const;
    Element mul(Element a, Element b) const;
    /// Throws std::domain_error on zero.
    Element inv(Element a) const;
    Element div(Element a, Element b) const;
    Element pow(Element a, uint64_t e) const;
    /// a /_G 2, i.e. a times the inverse of (1 + 1). Only defined for odd p.
    Element half(Element a) const;

    /// d_0(a): the exponent of gamma = exp(2 pi i / p) in the additive
    /// character chi(a) = gamma^{d_0(a)}.
    uint32_t char_exponent(Element a) const {
        check(a);
        return a.label() % p_;
    }

    /// Tr(a) = a + a^p + ... + a^{p^{m-1}}. The result lies in GF(p).
    Element trace(Element a) const;

    bool operator==(const GaloisField &other) const {
        return p_ == other.p_ && m_ == other.m_ && poly_ == other.poly_;
    }

   private:
    GaloisField() = default;
    void check(Element a) const;

    uint32_t p_ = 0;
    uint32_t m_ = 0;
    uint32_t n_ = 0;
    std::vector<uint32_t> poly_;
    std::vector<uint32_t> pow_p_;
    Element primitive_;
    std::vector<uint16_t> add_;
    std::vector<uint16_t> neg_;
    std::vector<uint16_t> exp_;
    std::vector<uint32_t> log_;
    std::vector<uint16_t> trace_;
    uint16_t half_of_one_ = 0;
};

using FieldPtr = std::shared_ptr<const GaloisField>;

inline FieldPtr build_field(uint32_t p, uint32_t m, uint32_t max_size = kDefaultMaxFieldSize) {
    return GaloisField::build(p, m, max_size);
}

bool is_prime(uint64_t n);

/// Polynomials over GF(p) are coefficient vectors indexed by power.
bool is_irreducible(uint32_t p, const std::vector<uint32_t> &poly);
std::vector<uint32_t> smallest_irreducible(uint32_t p, uint32_t m);

/// The two bases of GF(p^m) over GF(p) that are dual to {x^n} under the
/// bilinear forms Tr(a*b) and (a*b)_0 respectively.
struct DualBases {
    std::vector<Element> trace_dual;
    std::vector<Element> remainder_dual;
};

DualBases dual_bases(const GaloisField &f);

/// Exhaustive check of the field axioms, the characteristic, character
/// multiplicativity and the Frobenius map. Cost is O(N^3).
Report verify_field_axioms(const GaloisField &f);

/// Checks sum_j gamma^{d_0(j*i)} == N delta_{i,0} for every i, exactly.
Report verify_character_identities(const GaloisField &f);

/// Exact value of sum_{j} gamma^{d_0(j * i)}.
int64_t character_sum(const GaloisField &f, Element i);

/// Checks Tr(r*k) == ((r'/2)*k)_0 for all r, k, where r = sum r_l t~_l and
/// r' = 2 * sum r_l t~~_l, and that r -> r' is a bijection. Odd p only;
/// throws std::invalid_argument for p == 2.
Report bilinear_relabel_check(const GaloisField &f);

/// Maps r to r'/2 = sum_l r_l t~~_l where r = sum_l r_l t~_l.
Element trace_to_remainder_coordinates(const GaloisField &f, const DualBases &duals, Element r);

enum class TableFormat { Csv, Json };
TableFormat parse_table_format(const std::string &name);

/// Field multiplication and addition tables followed by the mod-N
/// multiplication and addition tables for contrast.
std::string export_tables(const GaloisField &f, TableFormat format);

}  // namespace mubgf

#endif
