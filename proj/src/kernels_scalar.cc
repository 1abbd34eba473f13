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

#include "mubgf/kernels.h"

namespace mubgf::kernels::scalar {

void phase_histogram(const uint16_t *a, const uint16_t *b, size_t n, uint32_t modulus, int64_t *counts) {
    for (size_t q = 0; q < n; q++) {
        uint32_t d = b[q] + modulus - a[q];
        if (d >= modulus) {
            d -= modulus;
        }
        counts[d]++;
    }
}

std::complex<double> complex_inner(const std::complex<double> *a, const std::complex<double> *b, size_t n) {
    double re = 0, im = 0;
    for (size_t q = 0; q < n; q++) {
        re += a[q].real() * b[q].real() + a[q].imag() * b[q].imag();
        im += a[q].real() * b[q].imag() - a[q].imag() * b[q].real();
    }
    return {re, im};
}

double squared_distance(const double *a, const double *b, size_t n) {
    double acc = 0;
    for (size_t q = 0; q < n; q++) {
        double d = a[q] - b[q];
        acc += d * d;
    }
    return acc;
}

}  // namespace mubgf::kernels::scalar
