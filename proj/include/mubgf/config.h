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

#ifndef MUBGF_CONFIG_H
#define MUBGF_CONFIG_H

#include <cstdint>

namespace mubgf {

constexpr uint32_t kDefaultDenseCap = 64;

/// Largest dimension for which N x N complex matrices are built. Reads
/// MUBGF_DENSE_CAP from the environment, falling back to kDefaultDenseCap.
uint32_t default_dense_cap();

/// Throws std::length_error when n exceeds cap.
void check_dense_cap(uint32_t n, uint32_t cap, const char *what);

}  // namespace mubgf

#endif
