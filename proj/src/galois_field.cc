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

#include "mubgf/galois_field.h"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "mubgf/cyclotomic.h"

namespace mubgf {

namespace {

using Poly = std::vector<uint32_t>;

void trim(Poly &a) {
    while (!a.empty() && a.back() == 0) {
        a.pop_back();
    }
}

uint32_t inv_mod(uint32_t a, uint32_t p) {
    // p is prime and small, Fermat is fine.
    uint64_t r = 1, b = a % p, e = p - 2;
    while (e) {
        if (e & 1) {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    return static_cast<uint32_t>(r);
}

/// Remainder of a modulo the nonzero polynomial b over GF(p).
Poly poly_rem(Poly a, Poly b, uint32_t p) {
    trim(a);
    trim(b);
    if (b.empty()) {
        throw std::logic_error("poly_rem: division by zero polynomial");
    }
    uint32_t lead_inv = inv_mod(b.back(), p);
    while (a.size() >= b.size()) {
        uint32_t factor = static_cast<uint32_t>(static_cast<uint64_t>(a.back()) * lead_inv % p);
        size_t shift = a.size() - b.size();
        for (size_t k = 0; k < b.size(); k++) {
            uint64_t sub = static_cast<uint64_t>(factor) * b[k] % p;
            a[k + shift] = static_cast<uint32_t>((a[k + shift] + p - sub) % p);
        }
        trim(a);
    }
    return a;
}

/// All monic polynomials of the given degree, in increasing order of the
/// coefficient tuple (c_{d-1}, ..., c_0).
std::vector<Poly> monic_polys(uint32_t p, uint32_t degree) {
    uint64_t count = 1;
    for (uint32_t k = 0; k < degree; k++) {
        count *= p;
    }
    std::vector<Poly> out;
    out.reserve(count);
    for (uint64_t v = 0; v < count; v++) {
        Poly poly(degree + 1, 0);
        uint64_t x = v;
        for (uint32_t k = 0; k < degree; k++) {
            poly[k] = static_cast<uint32_t>(x % p);
            x /= p;
        }
        poly[degree] = 1;
        out.push_back(std::move(poly));
    }
    return out;
}

std::vector<Poly> monic_irreducibles(uint32_t p, uint32_t degree) {
    std::vector<Poly> out;
    for (Poly &candidate : monic_polys(p, degree)) {
        if (is_irreducible(p, candidate)) {
            out.push_back(std::move(candidate));
        }
    }
    return out;
}

/// Multiplies two labels as polynomials modulo `poly`. Construction only;
/// after the tables exist GaloisField::mul is used.
uint32_t slow_mul(uint32_t a, uint32_t b, uint32_t p, const Poly &poly) {
    const uint32_t m = static_cast<uint32_t>(poly.size()) - 1;
    Poly da(m, 0), db(m, 0);
    for (uint32_t k = 0; k < m; k++) {
        da[k] = a % p;
        a /= p;
        db[k] = b % p;
        b /= p;
    }
    Poly prod(2 * m, 0);
    for (uint32_t i = 0; i < m; i++) {
        for (uint32_t j = 0; j < m; j++) {
            prod[i + j] = static_cast<uint32_t>((prod[i + j] + static_cast<uint64_t>(da[i]) * db[j]) % p);
        }
    }
    Poly r = poly_rem(prod, poly, p);
    uint32_t label = 0;
    for (size_t k = r.size(); k-- > 0;) {
        label = label * p + r[k];
    }
    return label;
}

}  // namespace

bool is_prime(uint64_t n) {
    if (n < 2) {
        return false;
    }
    for (uint64_t d = 2; d * d <= n; d++) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

bool is_irreducible(uint32_t p, const std::vector<uint32_t> &poly_in) {
    Poly poly = poly_in;
    trim(poly);
    if (poly.size() < 2) {
        return false;
    }
    const uint32_t degree = static_cast<uint32_t>(poly.size()) - 1;
    if (degree == 1) {
        return true;
    }
    // No roots, then no monic irreducible factor of degree 2..degree/2.
    for (uint32_t x = 0; x < p; x++) {
        uint64_t value = 0;
        for (size_t k = poly.size(); k-- > 0;) {
            value = (value * x + poly[k]) % p;
        }
        if (value == 0) {
            return false;
        }
    }
    for (uint32_t d = 2; 2 * d <= degree; d++) {
        for (const Poly &factor : monic_irreducibles(p, d)) {
            if (poly_rem(poly, factor, p).empty()) {
                return false;
            }
        }
    }
    return true;
}

std::vector<uint32_t> smallest_irreducible(uint32_t p, uint32_t m) {
    for (Poly &candidate : monic_polys(p, m)) {
        if (is_irreducible(p, candidate)) {
            return candidate;
        }
    }
    throw std::logic_error("no irreducible polynomial found; this is impossible for prime p");
}

std::shared_ptr<const GaloisField> GaloisField::build(uint32_t p, uint32_t m, uint32_t max_size) {
    if (!is_prime(p)) {
        throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
    }
    if (m == 0) {
        throw std::invalid_argument("extension degree must be at least 1");
    }
    max_size = std::min(max_size, kHardMaxFieldSize);
    uint64_t n = 1;
    for (uint32_t k = 0; k < m; k++) {
        n *= p;
        if (n > max_size) {
            throw std::length_error("field size " + std::to_string(p) + "^" + std::to_string(m) +
                                    " exceeds the size cap " + std::to_string(max_size));
        }
    }

    std::shared_ptr<GaloisField> f(new GaloisField());
    f->p_ = p;
    f->m_ = m;
    f->n_ = static_cast<uint32_t>(n);
    f->poly_ = smallest_irreducible(p, m);
    f->pow_p_.resize(m + 1);
    f->pow_p_[0] = 1;
    for (uint32_t k = 1; k <= m; k++) {
        f->pow_p_[k] = f->pow_p_[k - 1] * p;
    }

    const uint32_t size = f->n_;
    f->add_.resize(static_cast<size_t>(size) * size);
    f->neg_.resize(size);
    for (uint32_t a = 0; a < size; a++) {
        uint32_t neg = 0;
        for (uint32_t k = 0; k < m; k++) {
            uint32_t d = a / f->pow_p_[k] % p;
            neg += ((p - d) % p) * f->pow_p_[k];
        }
        f->neg_[a] = static_cast<uint16_t>(neg);
        for (uint32_t b = 0; b < size; b++) {
            uint32_t sum = 0;
            for (uint32_t k = 0; k < m; k++) {
                uint32_t d = (a / f->pow_p_[k] + b / f->pow_p_[k]) % p;
                sum += d * f->pow_p_[k];
            }
            f->add_[static_cast<size_t>(a) * size + b] = static_cast<uint16_t>(sum);
        }
    }

    // Discrete log tables with respect to the smallest primitive element.
    const uint32_t order = size - 1;
    uint32_t generator = 0;
    for (uint32_t g = 1; g < size && generator == 0; g++) {
        uint32_t x = g;
        uint32_t k = 1;
        while (x != 1) {
            x = slow_mul(x, g, p, f->poly_);
            k++;
        }
        if (k == order) {
            generator = g;
        }
    }
    if (generator == 0) {
        throw std::logic_error("no primitive element found; polynomial is not irreducible");
    }
    f->primitive_ = Element(generator);
    f->exp_.resize(2 * static_cast<size_t>(order));
    f->log_.assign(size, 0);
    uint32_t x = 1;
    for (uint32_t k = 0; k < order; k++) {
        f->exp_[k] = static_cast<uint16_t>(x);
        f->exp_[k + order] = static_cast<uint16_t>(x);
        f->log_[x] = k;
        x = slow_mul(x, generator, p, f->poly_);
    }

    if (p % 2 == 1) {
        f->half_of_one_ = static_cast<uint16_t>(f->inv(f->add(f->one(), f->one())).label());
    }

    f->trace_.resize(size);
    for (uint32_t a = 0; a < size; a++) {
        Element acc(0), frob(a);
        for (uint32_t k = 0; k < m; k++) {
            acc = f->add(acc, frob);
            frob = f->pow(frob, p);
        }
        if (acc.label() >= p) {
            throw std::logic_error("field trace left the prime subfield");
        }
        f->trace_[a] = static_cast<uint16_t>(acc.label());
    }
    return f;
}

void GaloisField::check(Element a) const {
    if (a.label() >= n_) {
        throw std::out_of_range("label " + std::to_string(a.label()) + " is not in GF(" + std::to_string(n_) + ")");
    }
}

Element GaloisField::element(uint32_t label) const {
    check(Element(label));
    return Element(label);
}

Element GaloisField::basis(uint32_t n) const {
    if (n >= m_) {
        throw std::out_of_range("basis index out of range");
    }
    return Element(pow_p_[n]);
}

uint32_t GaloisField::digit(Element a, uint32_t n) const {
    check(a);
    if (n >= m_) {
        throw std::out_of_range("digit index out of range");
    }
    return a.label() / pow_p_[n] % p_;
}

std::vector<uint32_t> GaloisField::digits(Element a) const {
    check(a);
    std::vector<uint32_t> out(m_);
    uint32_t x = a.label();
    for (uint32_t k = 0; k < m_; k++) {
        out[k] = x % p_;
        x /= p_;
    }
    return out;
}

Element GaloisField::from_digits(const std::vector<uint32_t> &digits) const {
    if (digits.size() != m_) {
        throw std::invalid_argument("from_digits: expected m digits");
    }
    uint32_t label = 0;
    for (uint32_t k = m_; k-- > 0;) {
        if (digits[k] >= p_) {
            throw std::out_of_range("digit out of range");
        }
        label = label * p_ + digits[k];
    }
    return Element(label);
}

Element GaloisField::add(Element a, Element b) const {
    check(a);
    check(b);
    return Element(add_[static_cast<size_t>(a.label()) * n_ + b.label()]);
}

Element GaloisField::neg(Element a) const {
    check(a);
    return Element(neg_[a.label()]);
}

Element GaloisField::sub(Element a, Element b) const {
    return add(a, neg(b));
}

Element GaloisField::mul(Element a, Element b) const {
    check(a);
    check(b);
    if (a.label() == 0 || b.label() == 0) {
        return Element(0);
    }
    return Element(exp_[log_[a.label()] + log_[b.label()]]);
}

Element GaloisField::inv(Element a) const {
    check(a);
    if (a.label() == 0) {
        throw std::domain_error("division by zero in GF(" + std::to_string(n_) + ")");
    }
    const uint32_t order = n_ - 1;
    return Element(exp_[(order - log_[a.label()]) % order]);
}

Element GaloisField::div(Element a, Element b) const {
    return mul(a, inv(b));
}

Element GaloisField::pow(Element a, uint64_t e) const {
    check(a);
    if (e == 0) {
        return one();
    }
    if (a.label() == 0) {
        return zero();
    }
    const uint64_t order = n_ - 1;
    return Element(exp_[(static_cast<uint64_t>(log_[a.label()]) * (e % order)) % order]);
}

Element GaloisField::half(Element a) const {
    if (p_ == 2) {
        throw std::domain_error("division by 2 in characteristic 2");
    }
    return mul(a, Element(half_of_one_));
}

Element GaloisField::trace(Element a) const {
    check(a);
    return Element(trace_[a.label()]);
}

namespace {

/// Solves the m x m system M c = e_j over GF(p) for every j and returns
/// the columns as field elements (c_k is the coefficient of x^k).
std::vector<Element> solve_dual(const GaloisField &f, const std::vector<std::vector<uint32_t>> &gram) {
    const uint32_t m = f.m();
    const uint32_t p = f.p();
    // Augmented [gram | I], Gauss-Jordan mod p.
    std::vector<std::vector<uint32_t>> a(m, std::vector<uint32_t>(2 * m, 0));
    for (uint32_t r = 0; r < m; r++) {
        for (uint32_t c = 0; c < m; c++) {
            a[r][c] = gram[r][c] % p;
        }
        a[r][m + r] = 1;
    }
    for (uint32_t col = 0; col < m; col++) {
        uint32_t pivot = col;
        while (pivot < m && a[pivot][col] == 0) {
            pivot++;
        }
        if (pivot == m) {
            throw std::logic_error("dual basis system is singular");
        }
        std::swap(a[pivot], a[col]);
        uint32_t s = inv_mod(a[col][col], p);
        for (uint32_t c = 0; c < 2 * m; c++) {
            a[col][c] = static_cast<uint32_t>(static_cast<uint64_t>(a[col][c]) * s % p);
        }
        for (uint32_t r = 0; r < m; r++) {
            if (r == col || a[r][col] == 0) {
                continue;
            }
            uint64_t factor = a[r][col];
            for (uint32_t c = 0; c < 2 * m; c++) {
                a[r][c] = static_cast<uint32_t>((a[r][c] + p - factor * a[col][c] % p) % p);
            }
        }
    }
    // Column j of the inverse holds the coordinates of the j-th dual element.
    std::vector<Element> out;
    for (uint32_t j = 0; j < m; j++) {
        std::vector<uint32_t> digits(m);
        for (uint32_t k = 0; k < m; k++) {
            digits[k] = a[k][m + j];
        }
        out.push_back(f.from_digits(digits));
    }
    return out;
}

}  // namespace

DualBases dual_bases(const GaloisField &f) {
    const uint32_t m = f.m();
    std::vector<std::vector<uint32_t>> trace_gram(m, std::vector<uint32_t>(m));
    std::vector<std::vector<uint32_t>> rem_gram(m, std::vector<uint32_t>(m));
    for (uint32_t i = 0; i < m; i++) {
        for (uint32_t k = 0; k < m; k++) {
            Element prod = f.mul(f.basis(i), f.basis(k));
            trace_gram[i][k] = f.trace(prod).label();
            rem_gram[i][k] = f.char_exponent(prod);
        }
    }
    return DualBases{solve_dual(f, trace_gram), solve_dual(f, rem_gram)};
}

Element trace_to_remainder_coordinates(const GaloisField &f, const DualBases &duals, Element r) {
    // Coordinates in the trace-dual basis are r_l = Tr(r * x^l).
    Element out = f.zero();
    for (uint32_t l = 0; l < f.m(); l++) {
        uint32_t coeff = f.trace(f.mul(r, f.basis(l))).label();
        out = f.add(out, f.mul(Element(coeff), duals.remainder_dual[l]));
    }
    return out;
}

Report bilinear_relabel_check(const GaloisField &f) {
    if (f.p() == 2) {
        throw std::invalid_argument("bilinear relabel identity needs odd characteristic");
    }
    Report report("bilinear_relabel");
    DualBases duals = dual_bases(f);
    std::vector<bool> hit(f.size(), false);
    for (uint32_t rl = 0; rl < f.size(); rl++) {
        Element r(rl);
        Element half_r_prime = trace_to_remainder_coordinates(f, duals, r);
        Element r_prime = f.add(half_r_prime, half_r_prime);
        hit[r_prime.label()] = true;
        for (uint32_t kl = 0; kl < f.size(); kl++) {
            Element k(kl);
            uint32_t lhs = f.trace(f.mul(r, k)).label();
            uint32_t rhs = f.char_exponent(f.mul(f.half(r_prime), k));
            report.expect(lhs == rhs, [&] {
                std::ostringstream s;
                s << "r=" << rl << " k=" << kl << ": Tr=" << lhs << " remainder=" << rhs;
                return s.str();
            });
        }
    }
    bool bijective = std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
    report.expect(bijective, [] { return std::string("r -> r' is not a bijection"); });
    return report;
}

int64_t character_sum(const GaloisField &f, Element i) {
    std::vector<int64_t> counts(2 * f.p(), 0);
    for (uint32_t j = 0; j < f.size(); j++) {
        counts[2 * f.char_exponent(f.mul(Element(j), i))]++;
    }
    auto value = CycInt::from_exponent_counts(f.p(), counts).as_integer();
    if (!value) {
        throw std::logic_error("character sum is not a rational integer");
    }
    return *value;
}

Report verify_character_identities(const GaloisField &f) {
    Report report("character_identities");
    const int64_t n = f.size();
    for (uint32_t i = 0; i < f.size(); i++) {
        int64_t sum = character_sum(f, Element(i));
        int64_t expected = i == 0 ? n : 0;
        report.expect(sum == expected, [&] {
            return "sum_j chi(j*" + std::to_string(i) + ") = " + std::to_string(sum);
        });
    }
    for (uint32_t a = 0; a < f.size(); a++) {
        for (uint32_t b = 0; b < f.size(); b++) {
            uint32_t lhs = (f.char_exponent(Element(a)) + f.char_exponent(Element(b))) % f.p();
            uint32_t rhs = f.char_exponent(f.add(Element(a), Element(b)));
            report.expect(lhs == rhs, [&] {
                return "chi(" + std::to_string(a) + ")chi(" + std::to_string(b) + ") != chi(a+b)";
            });
        }
    }
    return report;
}

Report verify_field_axioms(const GaloisField &f) {
    Report report("field_axioms");
    const uint32_t n = f.size();
    auto name = [](const char *what, uint32_t a, uint32_t b, uint32_t c) {
        return std::string(what) + " fails at (" + std::to_string(a) + "," + std::to_string(b) + "," +
               std::to_string(c) + ")";
    };
    for (uint32_t a = 0; a < n; a++) {
        Element ea(a);
        report.expect(f.add(ea, f.zero()) == ea, [&] { return name("additive identity", a, 0, 0); });
        report.expect(f.mul(ea, f.one()) == ea, [&] { return name("multiplicative identity", a, 1, 0); });
        report.expect(f.add(ea, f.neg(ea)) == f.zero(), [&] { return name("additive inverse", a, 0, 0); });
        if (a != 0) {
            report.expect(f.mul(ea, f.inv(ea)) == f.one(), [&] { return name("multiplicative inverse", a, 0, 0); });
        }
        Element acc = f.zero();
        for (uint32_t k = 0; k < f.p(); k++) {
            acc = f.add(acc, ea);
        }
        report.expect(acc == f.zero(), [&] { return name("characteristic", a, f.p(), 0); });
        for (uint32_t b = 0; b < n; b++) {
            Element eb(b);
            report.expect(f.add(ea, eb) == f.add(eb, ea), [&] { return name("additive commutativity", a, b, 0); });
            report.expect(f.mul(ea, eb) == f.mul(eb, ea), [&] { return name("multiplicative commutativity", a, b, 0); });
            if (a != 0 && b != 0) {
                report.expect(f.mul(ea, eb) != f.zero(), [&] { return name("zero divisor", a, b, 0); });
            }
            Element frob_sum = f.pow(f.add(ea, eb), f.p());
            report.expect(frob_sum == f.add(f.pow(ea, f.p()), f.pow(eb, f.p())),
                          [&] { return name("Frobenius additivity", a, b, 0); });
            std::vector<uint32_t> da = f.digits(ea), db = f.digits(eb), ds = f.digits(f.add(ea, eb));
            bool componentwise = true;
            for (uint32_t k = 0; k < f.m(); k++) {
                componentwise = componentwise && ds[k] == (da[k] + db[k]) % f.p();
            }
            report.expect(componentwise, [&] { return name("digit-wise addition", a, b, 0); });
            for (uint32_t c = 0; c < n; c++) {
                Element ec(c);
                report.expect(f.add(f.add(ea, eb), ec) == f.add(ea, f.add(eb, ec)),
                              [&] { return name("additive associativity", a, b, c); });
                report.expect(f.mul(f.mul(ea, eb), ec) == f.mul(ea, f.mul(eb, ec)),
                              [&] { return name("multiplicative associativity", a, b, c); });
                report.expect(f.mul(ea, f.add(eb, ec)) == f.add(f.mul(ea, eb), f.mul(ea, ec)),
                              [&] { return name("distributivity", a, b, c); });
            }
        }
    }
    return report;
}

}  // namespace mubgf
