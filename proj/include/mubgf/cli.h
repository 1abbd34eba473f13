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


#ifndef MUBGF_CLI_H
#define MUBGF_CLI_H

#include <cstdint>
#include <ostream>
#include <string>

#include "mubgf/galois_field.h"

namespace mubgf {

constexpr int kExitPass = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitConfigError = 2;

struct RunConfig {
    uint32_t p = 0;
    uint32_t m = 0;
    uint32_t n = 0;
    uint32_t phase_k = 0;
    double tolerance = 1e-9;
    uint32_t dense_cap = 0;
    uint64_t seed = 1;
    uint32_t count = 10;
    std::string format = "json";
    bool corrupt_phase = false;
};

/// Builds GF(p^m) from whichever of p, m and N were given, checking that
/// they agree. A lone N must be a prime power. Throws std::invalid_argument.
FieldPtr resolve_field(const RunConfig &cfg);

/// Entry point behind the mubgf executable. Returns the process exit code:
/// 0 pass, 1 verification failure, 2 usage or configuration error.
int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace mubgf

#endif
