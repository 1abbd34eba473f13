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


#include "mubgf/serialize.h"

#include <sstream>

namespace mubgf {

Json field_descriptor(const GaloisField &f) {
    return Json{{"p", f.p()}, {"m", f.m()}, {"N", f.size()}, {"poly", f.poly()}};
}

Json operator_json(const PhasedOp &op) {
    return Json{{"j", op.op.j.label()},
                {"i", op.op.i.label()},
                {"phase_num", op.phase.t()},
                {"phase_den", op.phase.modulus()}};
}

Json operator_json(const UOperator &op) {
    return operator_json(op.as_phased());
}

Json family_json(const MubFamily &family) {
    const GaloisField &f = *family.field;
    Json out = field_descriptor(f);
    out["phase_denominator"] = 2 * f.p();
    out["phase_k"] = family.convention.choice.label();
    Json bases = Json::array();
    for (size_t i = 0; i < family.bases.size(); i++) {
        Json states = Json::array();
        for (const MubState &s : family.bases[i]) {
            const bool delta = s.kind == MubState::Kind::Delta;
            states.push_back(Json{{"k", s.k.label()}, {"kind", delta ? "delta" : "phase"}, {"exponents", s.exponents}});
        }
        bases.push_back(Json{{"i", i}, {"states", std::move(states)}});
    }
    out["bases"] = std::move(bases);
    return out;
}

std::string unbiasedness_csv(const UnbiasednessResult &result) {
    std::ostringstream out;
    out << "basis_a,basis_b,pairs,violations,values\n";
    for (const BasisPairStats &st : result.pairs) {
        out << st.basis_a << ',' << st.basis_b << ',' << st.pairs << ',' << st.violations << ',';
        for (size_t v = 0; v < st.values.size(); v++) {
            out << (v ? ";" : "") << st.values[v];
        }
        out << '\n';
    }
    return out.str();
}

Json report_json(const Report &report) {
    return Json{{"name", report.name},
                {"passed", report.passed()},
                {"checks", report.checks},
                {"failures", report.failures},
                {"counterexamples", report.counterexamples},
                {"notes", report.notes}};
}

Json matrix_json(const Eigen::MatrixXcd &m) {
    Json rows = Json::array();
    for (Eigen::Index r = 0; r < m.rows(); r++) {
        Json row = Json::array();
        for (Eigen::Index c = 0; c < m.cols(); c++) {
            row.push_back(Json{{"re", m(r, c).real()}, {"im", m(r, c).imag()}});
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

Json matrix_json(const Eigen::MatrixXd &m) {
    Json rows = Json::array();
    for (Eigen::Index r = 0; r < m.rows(); r++) {
        Json row = Json::array();
        for (Eigen::Index c = 0; c < m.cols(); c++) {
            row.push_back(m(r, c));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

Json tomography_json(const TomographySummary &summary) {
    return Json{{"N", summary.n},
                {"first_seed", summary.first_seed},
                {"count", summary.count},
                {"max_error", {{"pauli", summary.pauli_error}, {"mub", summary.mub_error}, {"weyl", summary.weyl_error}}},
                {"path_disagreement", summary.path_disagreement},
                {"report", report_json(summary.report)}};
}

Json ring_json(const RingClasses &classes, const RingScan &scan) {
    Json cls = Json::array();
    for (const RingClass &c : classes.classes) {
        Json members = Json::array();
        for (const auto &[j, i] : c.members) {
            members.push_back(Json::array({j, i}));
        }
        cls.push_back(Json{{"members", std::move(members)}});
    }
    Json shared = Json::array();
    for (const auto &[j, i] : classes.shared_members) {
        shared.push_back(Json::array({j, i}));
    }
    Json pairs = Json::array();
    for (const RingPairDeviation &d : scan.pairs) {
        pairs.push_back(Json{{"a", d.class_a}, {"b", d.class_b}, {"max_deviation", d.max_deviation}});
    }
    return Json{{"N", classes.n},
                {"class_count", classes.classes.size()},
                {"classes", std::move(cls)},
                {"overlapping_pairs", classes.overlapping_pairs},
                {"shared_members", std::move(shared)},
                {"degenerate_classes", scan.degenerate_classes},
                {"unbiasedness", {{"max_deviation", scan.max_deviation}, {"pairs", std::move(pairs)}}},
                {"report", report_json(scan.report)}};
}

}  // namespace mubgf
