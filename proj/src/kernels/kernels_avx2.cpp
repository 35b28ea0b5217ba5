// Copyright 2026 The rqi-anyons Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// Compiled with -mavx2 -mfma; only reached after a runtime CPU check.
#include "rqi/kernels.hpp"

#include <cassert>
#include <cstddef>
#include <immintrin.h>

namespace rqi::kernels {
namespace {

constexpr std::size_t kLanes = 4;

void rotate_avx2(std::span<double> x, std::span<double> y, double c, double s) {
    assert(x.size() == y.size());
    const std::size_t n = x.size();
    const std::size_t body = n - n % kLanes;
    const __m256d vc = _mm256_set1_pd(c);
    const __m256d vs = _mm256_set1_pd(s);
    double *px = x.data();
    double *py = y.data();
    for (std::size_t i = 0; i < body; i += kLanes) {
        const __m256d xi = _mm256_loadu_pd(px + i);
        const __m256d yi = _mm256_loadu_pd(py + i);
        const __m256d xn = _mm256_sub_pd(_mm256_mul_pd(vc, xi), _mm256_mul_pd(vs, yi));
        const __m256d yn = _mm256_add_pd(_mm256_mul_pd(vs, xi), _mm256_mul_pd(vc, yi));
        _mm256_storeu_pd(px + i, xn);
        _mm256_storeu_pd(py + i, yn);
    }
    for (std::size_t i = body; i < n; ++i) {
        const double xi = px[i];
        const double yi = py[i];
        px[i] = c * xi - s * yi;
        py[i] = s * xi + c * yi;
    }
}

void scale_avx2(std::span<double> dst, std::span<const double> src, double alpha) {
    assert(dst.size() == src.size());
    const std::size_t n = dst.size();
    const std::size_t body = n - n % kLanes;
    const __m256d va = _mm256_set1_pd(alpha);
    for (std::size_t i = 0; i < body; i += kLanes) {
        _mm256_storeu_pd(dst.data() + i, _mm256_mul_pd(va, _mm256_loadu_pd(src.data() + i)));
    }
    for (std::size_t i = body; i < n; ++i) {
        dst[i] = alpha * src[i];
    }
}

void axpy_avx2(std::span<double> y, std::span<const double> x, double alpha) {
    assert(x.size() == y.size());
    const std::size_t n = y.size();
    const std::size_t body = n - n % kLanes;
    const __m256d va = _mm256_set1_pd(alpha);
    for (std::size_t i = 0; i < body; i += kLanes) {
        const __m256d prod = _mm256_mul_pd(va, _mm256_loadu_pd(x.data() + i));
        _mm256_storeu_pd(y.data() + i, _mm256_add_pd(_mm256_loadu_pd(y.data() + i), prod));
    }
    for (std::size_t i = body; i < n; ++i) {
        y[i] = y[i] + alpha * x[i];
    }
}

double dot_avx2(std::span<const double> x, std::span<const double> y) {
    assert(x.size() == y.size());
    const std::size_t n = x.size();
    const std::size_t body = n - n % (2 * kLanes);
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    for (std::size_t i = 0; i < body; i += 2 * kLanes) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x.data() + i), _mm256_loadu_pd(y.data() + i), acc0);
        acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(x.data() + i + kLanes),
                               _mm256_loadu_pd(y.data() + i + kLanes), acc1);
    }
    alignas(32) double lanes[kLanes];
    _mm256_store_pd(lanes, _mm256_add_pd(acc0, acc1));
    double acc = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
    for (std::size_t i = body; i < n; ++i) {
        acc += x[i] * y[i];
    }
    return acc;
}

constexpr KernelTable kAvx2{"avx2", rotate_avx2, scale_avx2, axpy_avx2, dot_avx2};

} // namespace

const KernelTable *avx2_table() { return &kAvx2; }

} // namespace rqi::kernels
