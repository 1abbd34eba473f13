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


#include <cmath>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "mubgf/mub.h"

namespace mubgf {

namespace {

void require_odd(const GaloisField &f, const char *what) {
    if (f.p() == 2) {
        throw std::invalid_argument(std::string(what) + " is defined for odd p only");
    }
}

}  // namespace

MubState wootters_fields_state(const FieldPtr &f, Element r, Element k) {
    require_odd(*f, "wootters_fields_state");
    f->element(r.label());
    f->element(k.label());
    MubState s;
    s.k = k;
    s.kind = MubState::Kind::Phase;
    s.p = f->p();
    s.n = f->size();
    for (uint32_t q = 0; q < f->size(); q++) {
        Element eq(q);
        uint32_t g = f->trace(f->neg(f->mul(eq, k))).label() + f->trace(f->mul(r, f->mul(eq, eq))).label();
        s.exponents.push_back(static_cast<uint16_t>((2 * g) % (2 * f->p())));
    }
    return s;
}

std::vector<MubState> wootters_fields_basis(const FieldPtr &f, Element r) {
    std::vector<MubState> out;
    for (uint32_t k = 0; k < f->size(); k++) {
        out.push_back(wootters_fields_state(f, r, Element(k)));
    }
    return out;
}

WfEquivalenceResult wf_equivalence_check(const MubFamily &family) {
    const FieldPtr &f = family.field;
    require_odd(*f, "wf_equivalence_check");
    WfEquivalenceResult result{Report("wootters_fields_equivalence"), {}};
    const uint32_t n = f->size();

    std::map<std::vector<uint16_t>, std::pair<Element, Element>> index;
    for (uint32_t r = 0; r < n; r++) {
        for (const MubState &s : wootters_fields_basis(f, Element(r))) {
            index.emplace(s.normalized_exponents(), std::make_pair(Element(r), s.k));
        }
    }
    result.report.expect(index.size() == static_cast<size_t>(n) * n,
                         [&] { return "Wootters-Fields states are not pairwise distinct rays"; });

    const DualBases duals = dual_bases(*f);
    for (uint32_t i = 1; i <= n; i++) {
        WfMatch match;
        match.basis_index = i;
        std::set<Element> rs;
        std::set<Element> ks;
        bool all_found = true;
        for (const MubState &s : family.bases[i]) {
            auto it = index.find(s.normalized_exponents());
            if (it == index.end()) {
                all_found = false;
                result.report.expect(false, [&] {
                    return "state e^" + std::to_string(i) + "_" + std::to_string(s.k.label()) +
                           " matches no Wootters-Fields state";
                });
                continue;
            }
            rs.insert(it->second.first);
            ks.insert(it->second.second);
            match.r = it->second.first;
            match.state_to_wf_k.push_back(it->second.second);
            // Tr(x*y) == (T(x)*y)_0 predicts T(k_wf) = k - s.
            const Element predicted_k = f->sub(s.k, family.convention.choice);
            result.report.expect(trace_to_remainder_coordinates(*f, duals, it->second.second) == predicted_k, [&] {
                return "basis " + std::to_string(i) + ": state k=" + std::to_string(s.k.label()) +
                       " matched Wootters-Fields k=" + std::to_string(it->second.second.label()) +
                       ", not the dual-basis relabeling";
            });
        }
        if (!all_found) {
            continue;
        }
        result.report.expect(rs.size() == 1 && ks.size() == n, [&] {
            return "basis " + std::to_string(i) + " spreads over " + std::to_string(rs.size()) +
                   " Wootters-Fields bases with " + std::to_string(ks.size()) + " distinct labels";
        });
        // Tr(r*q*q) == ((i-1)/2 * q*q)_0 predicts T(r) = (i-1)/2.
        const Element predicted_r = f->half(Element(i - 1));
        result.report.expect(trace_to_remainder_coordinates(*f, duals, match.r) == predicted_r, [&] {
            return "basis " + std::to_string(i) + " matched r=" + std::to_string(match.r.label()) +
                   ", not the dual-basis relabeling";
        });
        result.report.notes.push_back("basis " + std::to_string(i) + " = Wootters-Fields r=" +
                                      std::to_string(match.r.label()));
        result.matches.push_back(std::move(match));
    }
    result.report.notes.push_back("basis 0 is the computational basis, outside the r-family");
    return result;
}

CovarianceResult verify_basis_covariance(const MubFamily &family, uint32_t i, double tolerance, uint32_t cap) {
    const FieldPtr &f = family.field;
    const uint32_t n = f->size();
    if (i > n) {
        throw std::out_of_range("verify_basis_covariance: no basis " + std::to_string(i));
    }
    CovarianceResult result{Report("basis_covariance[i=" + std::to_string(i) + "]"), {}};
    const Eigen::MatrixXcd e = basis_matrix(family, i, cap);
    std::vector<Eigen::MatrixXcd> patterns;
    for (uint32_t a = 0; a < n * n; a++) {
        patterns.push_back(dense_matrix(v_op(f, Element(a / n), Element(a % n)), cap));
    }
    std::set<std::pair<uint32_t, uint32_t>> images;
    uint64_t agree = 0;
    for (uint32_t nn = 0; nn < n; nn++) {
        for (uint32_t mm = 0; mm < n; mm++) {
            const Eigen::MatrixXcd m = e.adjoint() * patterns[nn * n + mm] * e;
            Eigen::Index b = 0;
            m.col(0).cwiseAbs().maxCoeff(&b);
            bool found = false;
            for (uint32_t a = 0; a < n && !found; a++) {
                const Eigen::MatrixXcd &pattern = patterns[a * n + b];
                const std::complex<double> phase = m(b, 0) / pattern(b, 0);
                if (std::abs(std::abs(phase) - 1.0) < tolerance && (m - phase * pattern).norm() < tolerance) {
                    found = true;
                    CovarianceEntry entry{Element(nn), Element(mm), Element(a), Element(static_cast<uint32_t>(b)),
                                          phase, false};
                    // Basis 0 is the computational basis itself.
                    const Element stated_a = i == 0 ? Element(nn) : Element(mm);
                    const Element stated_b = i == 0 ? Element(mm)
                                                    : f->add(f->neg(Element(nn)), f->mul(Element(i - 1), Element(mm)));
                    entry.matches_stated_map = entry.a == stated_a && entry.b == stated_b;
                    agree += entry.matches_stated_map;
                    images.insert({a, static_cast<uint32_t>(b)});
                    result.entries.push_back(entry);
                }
            }
            result.report.expect(found, [&] {
                return "V^" + std::to_string(nn) + "_" + std::to_string(mm) +
                       " is not a phase times a Weyl pattern in basis " + std::to_string(i);
            });
        }
    }
    result.report.expect(images.size() == static_cast<size_t>(n) * n,
                         [&] { return "index map is not a bijection: " + std::to_string(images.size()) + " images"; });
    result.report.notes.push_back(std::to_string(agree) + " of " + std::to_string(n * n) +
                                  " operators follow the stated map a = m, b = -n + (i-1)*m");
    return result;
}

}  // namespace mubgf
