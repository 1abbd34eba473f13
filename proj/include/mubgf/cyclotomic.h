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

#ifndef MUBGF_CYCLOTOMIC_H
#define MUBGF_CYCLOTOMIC_H

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace mubgf {

/// zeta^t with zeta = exp(i pi / p), a primitive 2p-th root of unity.
///
/// Integer powers of gamma = exp(2 pi i / p) = zeta^2 have even t. Their
/// square roots (and +-i when p == 2) have odd t.
class PhaseExponent {
   public:
    PhaseExponent() = default;
    PhaseExponent(uint32_t p, int64_t t);

    /// gamma^{g}, i.e. zeta^{2g}.
    static PhaseExponent gamma_power(uint32_t p, int64_t g) {
        return PhaseExponent(p, 2 * g);
    }

    uint32_t prime() const {
        return p_;
    }
    uint32_t modulus() const {
        return 2 * p_;
    }
    uint32_t t() const {
        return t_;
    }

    /// Phase multiplication: exponents add mod 2p.
    PhaseExponent operator*(PhaseExponent other) const;
    PhaseExponent conj() const {
        return PhaseExponent(p_, -static_cast<int64_t>(t_));
    }
    PhaseExponent pow(int64_t e) const {
        return PhaseExponent(p_, static_cast<int64_t>(t_) * e);
    }
    std::complex<double> to_complex() const;

    bool operator==(const PhaseExponent &) const = default;

   private:
    uint32_t p_ = 2;
    uint32_t t_ = 0;
};

/// An element of Z[zeta_{2p}], stored as its canonical residue modulo the
/// cyclotomic polynomial Phi_{2p}: x^2 + 1 for p == 2 and
/// x^{p-1} - x^{p-2} + ... - x + 1 for odd p.
///
/// Canonical residues make equality plain coefficient equality. Coefficients
/// are 64-bit with checked arithmetic; std::overflow_error is thrown if a
/// result would not fit.
class CycInt {
   public:
    CycInt() : CycInt(2) {
    }
    explicit CycInt(uint32_t p);

    static CycInt zero(uint32_t p) {
        return CycInt(p);
    }
    static CycInt from_integer(uint32_t p, int64_t value);
    static CycInt one(uint32_t p) {
        return from_integer(p, 1);
    }
    static CycInt from_phase(PhaseExponent phase);
    static CycInt from_phase(uint32_t p, int64_t t) {
        return from_phase(PhaseExponent(p, t));
    }
    /// sum_t counts[t] zeta^t for a histogram of 2p exponent counts.
    static CycInt from_exponent_counts(uint32_t p, std::span<const int64_t> counts);

    uint32_t prime() const {
        return p_;
    }
    /// Number of basis coefficients, the degree of Phi_{2p}.
    static uint32_t degree(uint32_t p) {
        return p == 2 ? 2 : p - 1;
    }
    const std::vector<int64_t> &coeffs() const {
        return coeffs_;
    }

    CycInt operator+(const CycInt &other) const;
    CycInt operator-(const CycInt &other) const;
    CycInt operator-() const;
    CycInt operator*(const CycInt &other) const;
    CycInt operator*(PhaseExponent phase) const;
    CycInt &operator+=(const CycInt &other);

    /// Complex conjugation, zeta^t -> zeta^{-t}.
    CycInt conj() const;
    /// x * conj(x). Always a real element; a rational integer when x is
    /// built from gamma powers and their square roots.
    CycInt abs_sq() const;
    /// The value as a rational integer, or nullopt if any non-constant
    /// coefficient is nonzero.
    std::optional<int64_t> as_integer() const;
    bool is_zero() const;

    std::complex<double> to_complex() const;
    /// Polynomial in z = zeta_{2p}, e.g. "1 - 2 z + z^3".
    std::string to_string() const;

    bool operator==(const CycInt &other) const {
        return p_ == other.p_ && coeffs_ == other.coeffs_;
    }

   private:
    /// Reduces a length-2p exponent histogram into canonical coefficients.
    static std::vector<int64_t> reduce(uint32_t p, std::vector<int64_t> wide);
    void check_same(const CycInt &other) const;

    uint32_t p_;
    std::vector<int64_t> coeffs_;
};

}  // namespace mubgf

#endif
