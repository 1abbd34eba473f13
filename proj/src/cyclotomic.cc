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

#include "mubgf/cyclotomic.h"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace mubgf {

namespace {

int64_t checked_add(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_add_overflow(a, b, &r)) {
        throw std::overflow_error("CycInt coefficient overflow");
    }
    return r;
}

int64_t checked_mul(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) {
        throw std::overflow_error("CycInt coefficient overflow");
    }
    return r;
}

uint32_t wrap(int64_t t, uint32_t modulus) {
    int64_t r = t % static_cast<int64_t>(modulus);
    return static_cast<uint32_t>(r < 0 ? r + modulus : r);
}

}  // namespace

PhaseExponent::PhaseExponent(uint32_t p, int64_t t) : p_(p), t_(wrap(t, 2 * p)) {
    if (p < 2) {
        throw std::invalid_argument("PhaseExponent needs a prime p >= 2");
    }
}

PhaseExponent PhaseExponent::operator*(PhaseExponent other) const {
    if (other.p_ != p_) {
        throw std::invalid_argument("PhaseExponent: mixed p");
    }
    return PhaseExponent(p_, static_cast<int64_t>(t_) + other.t_);
}

std::complex<double> PhaseExponent::to_complex() const {
    return std::polar(1.0, std::numbers::pi * t_ / p_);
}

CycInt::CycInt(uint32_t p) : p_(p), coeffs_(degree(p), 0) {
    if (p < 2) {
        throw std::invalid_argument("CycInt needs a prime p >= 2");
    }
}

CycInt CycInt::from_integer(uint32_t p, int64_t value) {
    CycInt r(p);
    r.coeffs_[0] = value;
    return r;
}

CycInt CycInt::from_phase(PhaseExponent phase) {
    std::vector<int64_t> wide(phase.modulus(), 0);
    wide[phase.t()] = 1;
    CycInt r(phase.prime());
    r.coeffs_ = reduce(phase.prime(), std::move(wide));
    return r;
}

CycInt CycInt::from_exponent_counts(uint32_t p, std::span<const int64_t> counts) {
    if (counts.size() != 2 * p) {
        throw std::invalid_argument("from_exponent_counts: need 2p counts");
    }
    CycInt r(p);
    r.coeffs_ = reduce(p, std::vector<int64_t>(counts.begin(), counts.end()));
    return r;
}

std::vector<int64_t> CycInt::reduce(uint32_t p, std::vector<int64_t> wide) {
    // zeta^p = -1 folds the upper half onto the lower half.
    for (uint32_t t = p; t < 2 * p; t++) {
        wide[t - p] = checked_add(wide[t - p], -wide[t]);
    }
    wide.resize(p);
    if (p == 2) {
        return wide;
    }
    // Phi_{2p}(x) = sum_{k<p} (-1)^k x^k, so x^{p-1} = sum_{k<p-1} (-1)^{k+1} x^k.
    int64_t top = wide[p - 1];
    wide.resize(p - 1);
    if (top != 0) {
        for (uint32_t k = 0; k + 1 < p; k++) {
            wide[k] = checked_add(wide[k], (k % 2 == 0) ? -top : top);
        }
    }
    return wide;
}

void CycInt::check_same(const CycInt &other) const {
    if (other.p_ != p_) {
        throw std::invalid_argument("CycInt: operands over different cyclotomic rings");
    }
}

CycInt CycInt::operator+(const CycInt &other) const {
    CycInt r = *this;
    r += other;
    return r;
}

CycInt &CycInt::operator+=(const CycInt &other) {
    check_same(other);
    for (size_t k = 0; k < coeffs_.size(); k++) {
        coeffs_[k] = checked_add(coeffs_[k], other.coeffs_[k]);
    }
    return *this;
}

CycInt CycInt::operator-() const {
    CycInt r(p_);
    for (size_t k = 0; k < coeffs_.size(); k++) {
        r.coeffs_[k] = checked_mul(coeffs_[k], -1);
    }
    return r;
}

CycInt CycInt::operator-(const CycInt &other) const {
    return *this + (-other);
}

CycInt CycInt::operator*(const CycInt &other) const {
    check_same(other);
    std::vector<int64_t> wide(2 * p_, 0);
    const size_t d = coeffs_.size();
    for (size_t a = 0; a < d; a++) {
        if (coeffs_[a] == 0) {
            continue;
        }
        for (size_t b = 0; b < d; b++) {
            // a + b < 2 * degree <= 2p, so no index wraps.
            wide[a + b] = checked_add(wide[a + b], checked_mul(coeffs_[a], other.coeffs_[b]));
        }
    }
    CycInt r(p_);
    r.coeffs_ = reduce(p_, std::move(wide));
    return r;
}

CycInt CycInt::operator*(PhaseExponent phase) const {
    return *this * from_phase(phase);
}

CycInt CycInt::conj() const {
    const uint32_t modulus = 2 * p_;
    std::vector<int64_t> wide(modulus, 0);
    for (uint32_t k = 0; k < coeffs_.size(); k++) {
        wide[(modulus - k) % modulus] = coeffs_[k];
    }
    CycInt r(p_);
    r.coeffs_ = reduce(p_, std::move(wide));
    return r;
}

CycInt CycInt::abs_sq() const {
    return *this * conj();
}

std::optional<int64_t> CycInt::as_integer() const {
    for (size_t k = 1; k < coeffs_.size(); k++) {
        if (coeffs_[k] != 0) {
            return std::nullopt;
        }
    }
    return coeffs_[0];
}

bool CycInt::is_zero() const {
    for (int64_t c : coeffs_) {
        if (c != 0) {
            return false;
        }
    }
    return true;
}

std::complex<double> CycInt::to_complex() const {
    std::complex<double> r = 0;
    for (uint32_t k = 0; k < coeffs_.size(); k++) {
        if (coeffs_[k] != 0) {
            r += static_cast<double>(coeffs_[k]) * std::polar(1.0, std::numbers::pi * k / p_);
        }
    }
    return r;
}

std::string CycInt::to_string() const {
    std::ostringstream out;
    bool first = true;
    for (uint32_t k = 0; k < coeffs_.size(); k++) {
        int64_t c = coeffs_[k];
        if (c == 0) {
            continue;
        }
        if (first) {
            if (c < 0) {
                out << "-";
            }
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        int64_t mag = c < 0 ? -c : c;
        if (k == 0 || mag != 1) {
            out << mag;
            if (k != 0) {
                out << " ";
            }
        }
        if (k == 1) {
            out << "z";
        } else if (k > 1) {
            out << "z^" << k;
        }
        first = false;
    }
    if (first) {
        out << "0";
    }
    return out.str();
}

}  // namespace mubgf
