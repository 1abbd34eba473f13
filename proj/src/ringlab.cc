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


#include "mubgf/ringlab.h"

#include <algorithm>
#include <bitset>
#include <cmath>
#include <map>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

namespace mubgf {

namespace {

constexpr size_t kMaxVertices = kRingMaxN * kRingMaxN;
using VertexSet = std::bitset<kMaxVertices>;

void check_ring_size(uint32_t n, uint32_t cap) {
    if (n < 2) {
        throw std::invalid_argument("ring dimension must be at least 2");
    }
    if (n > kRingMaxN) {
        throw std::length_error("ring dimension " + std::to_string(n) + " exceeds the enumeration limit " +
                                std::to_string(kRingMaxN));
    }
    check_dense_cap(n, cap, "ringlab");
}

/// Bron-Kerbosch with pivoting.
void bron_kerbosch(const std::vector<VertexSet> &adj, VertexSet r, VertexSet p, VertexSet x,
                   std::vector<VertexSet> &out) {
    if (p.none() && x.none()) {
        out.push_back(r);
        return;
    }
    const VertexSet px = p | x;
    size_t pivot = 0;
    size_t best = 0;
    for (size_t u = 0; u < adj.size(); u++) {
        if (px.test(u)) {
            size_t c = (p & adj[u]).count();
            if (c >= best) {
                best = c;
                pivot = u;
            }
        }
    }
    const VertexSet candidates = p & ~adj[pivot];
    for (size_t v = 0; v < adj.size(); v++) {
        if (!candidates.test(v)) {
            continue;
        }
        VertexSet rv = r;
        rv.set(v);
        bron_kerbosch(adj, rv, p & adj[v], x & adj[v], out);
        p.reset(v);
        x.set(v);
    }
}

}  // namespace

std::vector<RingWeylOperator> ring_weyl_group(uint32_t n, uint32_t cap) {
    check_ring_size(n, cap);
    std::vector<RingWeylOperator> ops;
    for (uint32_t j = 0; j < n; j++) {
        for (uint32_t i = 0; i < n; i++) {
            RingWeylOperator op{j, i, Eigen::MatrixXcd::Zero(n, n)};
            for (uint32_t k = 0; k < n; k++) {
                const uint32_t t = (k + i) % n;
                op.matrix(t, k) = std::polar(1.0, 2 * std::numbers::pi * ((t * j) % n) / n);
            }
            ops.push_back(std::move(op));
        }
    }
    return ops;
}

RingClasses maximal_commuting_classes(uint32_t n, double tolerance, uint32_t cap) {
    const std::vector<RingWeylOperator> ops = ring_weyl_group(n, cap);
    // Vertex v stands for ops[v + 1]; ops[0] is the identity.
    const size_t nv = ops.size() - 1;
    std::vector<VertexSet> adj(nv);
    for (size_t a = 0; a < nv; a++) {
        for (size_t b = a + 1; b < nv; b++) {
            const Eigen::MatrixXcd &x = ops[a + 1].matrix;
            const Eigen::MatrixXcd &y = ops[b + 1].matrix;
            if ((x * y - y * x).norm() < tolerance) {
                adj[a].set(b);
                adj[b].set(a);
            }
        }
    }
    VertexSet all;
    for (size_t v = 0; v < nv; v++) {
        all.set(v);
    }
    std::vector<VertexSet> cliques;
    bron_kerbosch(adj, VertexSet(), all, VertexSet(), cliques);

    RingClasses out;
    out.n = n;
    std::map<IndexPair, uint32_t> multiplicity;
    for (const VertexSet &c : cliques) {
        RingClass cls;
        for (size_t v = 0; v < nv; v++) {
            if (c.test(v)) {
                cls.members.push_back({ops[v + 1].j, ops[v + 1].i});
                multiplicity[cls.members.back()]++;
            }
        }
        out.classes.push_back(std::move(cls));
    }
    std::sort(out.classes.begin(), out.classes.end(),
              [](const RingClass &a, const RingClass &b) { return a.members < b.members; });
    for (size_t a = 0; a < cliques.size(); a++) {
        for (size_t b = a + 1; b < cliques.size(); b++) {
            out.overlapping_pairs += (cliques[a] & cliques[b]).any();
        }
    }
    for (const auto &[member, count] : multiplicity) {
        if (count > 1) {
            out.shared_members.push_back(member);
        }
    }
    return out;
}

RingScan eigenbasis_unbiasedness_scan(const RingClasses &classes, uint64_t seed, double tolerance, uint32_t cap) {
    const uint32_t n = classes.n;
    const std::vector<RingWeylOperator> ops = ring_weyl_group(n, cap);
    RingScan scan;
    scan.report = Report("ring_eigenbases[N=" + std::to_string(n) + "]");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal;
    std::vector<Eigen::MatrixXcd> bases;
    for (uint32_t c = 0; c < classes.classes.size(); c++) {
        const RingClass &cls = classes.classes[c];
        Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(n, n);
        for (const auto &[j, i] : cls.members) {
            const std::complex<double> w(normal(rng), normal(rng));
            const Eigen::MatrixXcd &m = ops[j * n + i].matrix;
            h += w * m + std::conj(w) * m.adjoint();
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
        const Eigen::MatrixXcd v = solver.eigenvectors();
        double residual = 0;
        for (const auto &[j, i] : cls.members) {
            const Eigen::MatrixXcd &m = ops[j * n + i].matrix;
            for (uint32_t col = 0; col < n; col++) {
                const Eigen::VectorXcd mv = m * v.col(col);
                const std::complex<double> lambda = v.col(col).dot(mv);
                residual = std::max(residual, (mv - lambda * v.col(col)).norm());
            }
        }
        scan.report.expect(residual < tolerance, [&] {
            return "class " + std::to_string(c) + " is not diagonal in its eigenbasis, residual " +
                   std::to_string(residual);
        });
        const Eigen::VectorXd ev = solver.eigenvalues();
        for (uint32_t k = 0; k + 1 < n; k++) {
            if (ev(k + 1) - ev(k) < 1e-6) {
                scan.degenerate_classes.push_back(c);
                break;
            }
        }
        bases.push_back(v);
    }
    const double target = 1.0 / n;
    for (uint32_t a = 0; a < bases.size(); a++) {
        for (uint32_t b = a + 1; b < bases.size(); b++) {
            const Eigen::MatrixXd overlaps = (bases[a].adjoint() * bases[b]).cwiseAbs2();
            const double dev = (overlaps.array() - target).abs().maxCoeff();
            scan.pairs.push_back({a, b, dev});
            scan.max_deviation = std::max(scan.max_deviation, dev);
        }
    }
    return scan;
}

}  // namespace mubgf
