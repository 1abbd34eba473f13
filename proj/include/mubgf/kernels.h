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

#ifndef MUBGF_KERNELS_H
#define MUBGF_KERNELS_H

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>

// Inner loops shared by the exact and floating-point verifiers. Each kernel
// has a portable scalar reference and, on x86-64, an AVX2/FMA variant. The
// variant is chosen once at startup from CPUID; MUBGF_SIMD=scalar in the
// environment forces the reference path.

namespace mubgf::kernels {

enum class Isa { Scalar, Avx2 };

const char *isa_name(Isa isa);

/// Adds to counts[t] the number of q with (b[q] - a[q]) mod modulus == t.
///
/// Exponents must lie in [0, modulus) and modulus <= 2^14. counts must have
/// `modulus` entries. Sizes of a and b must match.
using PhaseHistogramFn = void (*)(const uint16_t *a, const uint16_t *b, size_t n, uint32_t modulus,
                                  int64_t *counts);

/// sum_q conj(a[q]) * b[q].
using ComplexInnerFn = std::complex<double> (*)(const std::complex<double> *a, const std::complex<double> *b,
                                                 size_t n);

/// sum_q (a[q] - b[q])^2.
using SquaredDistanceFn = double (*)(const double *a, const double *b, size_t n);

struct KernelTable {
    Isa isa;
    PhaseHistogramFn phase_histogram;
    ComplexInnerFn complex_inner;
    SquaredDistanceFn squared_distance;
};

namespace scalar {
void phase_histogram(const uint16_t *a, const uint16_t *b, size_t n, uint32_t modulus, int64_t *counts);
std::complex<double> complex_inner(const std::complex<double> *a, const std::complex<double> *b, size_t n);
double squared_distance(const double *a, const double *b, size_t n);
}  // namespace scalar

#if defined(__x86_64__)
namespace avx2 {
void phase_histogram(const uint16_t *a, const uint16_t *b, size_t n, uint32_t modulus, int64_t *counts);
std::complex<double> complex_inner(const std::complex<double> *a, const std::complex<double> *b, size_t n);
double squared_distance(const double *a, const double *b, size_t n);
}  // namespace avx2
#endif

/// True if this machine can run the given variant.
bool supported(Isa isa);
const KernelTable &table_for(Isa isa);
/// The table selected at startup.
const KernelTable &active();

// Span conveniences over the active table.
void phase_histogram(std::span<const uint16_t> a, std::span<const uint16_t> b, uint32_t modulus,
                     std::span<int64_t> counts);
std::complex<double> complex_inner(std::span<const std::complex<double>> a, std::span<const std::complex<double>> b);
double squared_distance(std::span<const double> a, std::span<const double> b);

}  // namespace mubgf::kernels

#endif
