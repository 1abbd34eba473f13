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


#ifndef MUBGF_SERIALIZE_H
#define MUBGF_SERIALIZE_H

#include <Eigen/Dense>
#include <string>

#include "json.hpp"
#include "mubgf/galois_field.h"
#include "mubgf/mub.h"
#include "mubgf/report.h"
#include "mubgf/ringlab.h"
#include "mubgf/tomography.h"
#include "mubgf/weyl.h"

namespace mubgf {

using Json = nlohmann::ordered_json;

/// {"p", "m", "N", "poly": [c_0, ..., c_m]}
Json field_descriptor(const GaloisField &f);

/// {"j", "i", "phase_num", "phase_den"}, the phase being
/// exp(i pi phase_num / p) = zeta_{2p}^{phase_num}, phase_den = 2p.
Json operator_json(const PhasedOp &op);
Json operator_json(const UOperator &op);

/// {"p", "m", "N", "poly", "phase_denominator", "phase_k", "bases": [{"i",
/// "states": [{"k", "kind", "exponents"}]}]}. Delta states list an empty
/// exponent array.
Json family_json(const MubFamily &family);

/// One line per basis pair: basis_a,basis_b,pairs,violations,values where
/// values are the distinct N^2 |<a|b>|^2 separated by ';'.
std::string unbiasedness_csv(const UnbiasednessResult &result);

Json report_json(const Report &report);

/// Nested rows of {"re", "im"}.
Json matrix_json(const Eigen::MatrixXcd &m);
/// Nested rows of numbers.
Json matrix_json(const Eigen::MatrixXd &m);

Json tomography_json(const TomographySummary &summary);

/// {"N", "class_count", "classes": [{"members": [[j, i], ...]}],
///  "overlapping_pairs", "shared_members", "unbiasedness": {...}}
Json ring_json(const RingClasses &classes, const RingScan &scan);

}  // namespace mubgf

#endif
