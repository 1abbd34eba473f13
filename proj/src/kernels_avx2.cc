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

#if defined(__x86_64__)

#include <immintrin.h>

// Functions here carry a target attribute instead of the file being built
// with -mavx2, so nothing inline from a shared header gets AVX2 codegen.
#define MUBGF_AVX2 __attribute__((target("avx2,fma")))

namespace mubgf::kernels::avx2 {

namespace {

/// Small moduli: one compare per residue per 16 lanes.
constexpr uint32_t kCompareCountMaxModulus = 16;
/// Int16 lane counters are flushed before they can overflow.
constexpr size_t kFlushEvery = 32000;

MUBGF_AVX2 inline __m256i wrapped_difference(const uint16_t *a, const uint16_t *b, __m256i modulus) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(a));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(b));
    __m256i d = _mm256_sub_epi16(vb, va);
    __m256i negative = _mm256_cmpgt_epi16(_mm256_setzero_si256(), d);
    return _mm256_add_epi16(d, _mm256_and_si256(negative, modulus));
}

MUBGF_AVX2 inline int64_t horizontal_sum_epi16(__m256i v) {
    alignas(32) int16_t lanes[16];
    _mm256_store_si256(reinterpret_cast<__m256i *>(lanes), v);
    int64_t s = 0;
    for (int16_t x : lanes) {
        s += x;
    }
    return s;
}

}  // namespace

MUBGF_AVX2 void phase_histogram(const uint16_t *a, const uint16_t *b, size_t n, uint32_t modulus, int64_t *counts) {
    const __m256i vmod = _mm256_set1_epi16(static_cast<int16_t>(modulus));
    size_t q = 0;
    if (modulus <= kCompareCountMaxModulus) {
        __m256i acc[kCompareCountMaxModulus];
        __m256i residue[kCompareCountMaxModulus];
        for (uint32_t r = 0; r < modulus; r++) {
            acc[r] = _mm256_setzero_si256();
            residue[r] = _mm256_set1_epi16(static_cast<int16_t>(r));
        }
        size_t since_flush = 0;
        for (; q + 16 <= n; q += 16) {
            __m256i d = wrapped_difference(a + q, b + q, vmod);
            for (uint32_t r = 0; r < modulus; r++) {
                acc[r] = _mm256_sub_epi16(acc[r], _mm256_cmpeq_epi16(d, residue[r]));
            }
            if (++since_flush == kFlushEvery) {
                for (uint32_t r = 0; r < modulus; r++) {
                    counts[r] += horizontal_sum_epi16(acc[r]);
                    acc[r] = _mm256_setzero_si256();
                }
                since_flush = 0;
            }
        }
        for (uint32_t r = 0; r < modulus; r++) {
            counts[r] += horizontal_sum_epi16(acc[r]);
        }
    } else {
        alignas(32) uint16_t lanes[16];
        for (; q + 16 <= n; q += 16) {
            _mm256_store_si256(reinterpret_cast<__m256i *>(lanes), wrapped_difference(a + q, b + q, vmod));
            for (uint16_t d : lanes) {
                counts[d]++;
            }
        }
    }
    scalar::phase_histogram(a + q, b + q, n - q, modulus, counts);
}

MUBGF_AVX2 std::complex<double> complex_inner(const std::complex<double> *a, const std::complex<double> *b, size_t n) {
    const double *pa = reinterpret_cast<const double *>(a);
    const double *pb = reinterpret_cast<const double *>(b);
    // direct = [ar*br, ai*bi, ...], cross = [ar*bi, ai*br, ...]
    __m256d direct = _mm256_setzero_pd();
    __m256d cross = _mm256_setzero_pd();
    size_t q = 0;
    for (; q + 2 <= n; q += 2) {
        __m256d va = _mm256_loadu_pd(pa + 2 * q);
        __m256d vb = _mm256_loadu_pd(pb + 2 * q);
        direct = _mm256_fmadd_pd(va, vb, direct);
        cross = _mm256_fmadd_pd(va, _mm256_permute_pd(vb, 0b0101), cross);
    }
    alignas(32) double d[4], c[4];
    _mm256_store_pd(d, direct);
    _mm256_store_pd(c, cross);
    std::complex<double> tail = scalar::complex_inner(a + q, b + q, n - q);
    return {d[0] + d[1] + d[2] + d[3] + tail.real(), c[0] - c[1] + c[2] - c[3] + tail.imag()};
}

MUBGF_AVX2 double squared_distance(const double *a, const double *b, size_t n) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    size_t q = 0;
    for (; q + 8 <= n; q += 8) {
        __m256d d0 = _mm256_sub_pd(_mm256_loadu_pd(a + q), _mm256_loadu_pd(b + q));
        __m256d d1 = _mm256_sub_pd(_mm256_loadu_pd(a + q + 4), _mm256_loadu_pd(b + q + 4));
        acc0 = _mm256_fmadd_pd(d0, d0, acc0);
        acc1 = _mm256_fmadd_pd(d1, d1, acc1);
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, _mm256_add_pd(acc0, acc1));
    return lanes[0] + lanes[1] + lanes[2] + lanes[3] + scalar::squared_distance(a + q, b + q, n - q);
}

}  // namespace mubgf::kernels::avx2

#endif
