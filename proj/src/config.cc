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

#include "mubgf/config.h"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace mubgf {

uint32_t default_dense_cap() {
    const char *env = std::getenv("MUBGF_DENSE_CAP");
    if (env == nullptr || *env == '\0') {
        return kDefaultDenseCap;
    }
    char *end = nullptr;
    unsigned long value = std::strtoul(env, &end, 10);
    if (*end != '\0' || value == 0) {
        return kDefaultDenseCap;
    }
    return static_cast<uint32_t>(value);
}

void check_dense_cap(uint32_t n, uint32_t cap, const char *what) {
    if (n > cap) {
        throw std::length_error(std::string(what) + ": dimension " + std::to_string(n) +
                                " exceeds the dense cap " + std::to_string(cap));
    }
}

}  // namespace mubgf
