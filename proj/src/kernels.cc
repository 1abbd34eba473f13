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

#include <cstdlib>
#include <stdexcept>
#include <string_view>

#include "mubgf/kernels.h"

namespace mubgf::kernels {

namespace {

constexpr KernelTable kScalar{Isa::Scalar, scalar::phase_histogram, scalar::complex_inner,
                              scalar::squared_distance};
#if defined(__x86_64__)
constexpr KernelTable kAvx2{Isa::Avx2, avx2::phase_histogram, avx2::complex_inner, avx2::squared_distance};
#endif

const KernelTable &select() {
    const char *forced = std::getenv("MUBGF_SIMD");
    if (forced != nullptr && std::string_view(forced) == "scalar") {
        return kScalar;
    }
    if (supported(Isa::Avx2)) {
        return table_for(Isa::Avx2);
    }
    return kScalar;
}

}  // namespace

const char *isa_name(Isa isa) {
    return isa == Isa::Avx2 ? "avx2" : "scalar";
}

bool supported(Isa isa) {
    if (isa == Isa::Scalar) {
        return true;
    }
#if defined(__x86_64__)
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

const KernelTable &table_for(Isa isa) {
    if (!supported(isa)) {
        throw std::runtime_error(std::string("kernel variant not supported here: ") + isa_name(isa));
    }
#if defined(__x86_64__)
    if (isa == Isa::Avx2) {
        return kAvx2;
    }
#endif
    return kScalar;
}

const KernelTable &active() {
    static const KernelTable &table = select();
    return table;
}

void phase_histogram(std::span<const uint16_t> a, std::span<const uint16_t> b, uint32_t modulus,
                     std::span<int64_t> counts) {
    if (a.size() != b.size() || counts.size() != modulus || modulus == 0 || modulus > (1u << 14)) {
        throw std::invalid_argument("phase_histogram: bad sizes");
    }
    active().phase_histogram(a.data(), b.data(), a.size(), modulus, counts.data());
}

std::complex<double> complex_inner(std::span<const std::complex<double>> a, std::span<const std::complex<double>> b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("complex_inner: size mismatch");
    }
    return active().complex_inner(a.data(), b.data(), a.size());
}

double squared_distance(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("squared_distance: size mismatch");
    }
    return active().squared_distance(a.data(), b.data(), a.size());
}

}  // namespace mubgf::kernels
