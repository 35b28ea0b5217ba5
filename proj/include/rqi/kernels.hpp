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
/**
 * @file kernels.hpp
 * Data-parallel inner loops with a scalar reference and vectorised variants.
 *
 * Every variant of rotate, scale and axpy performs the same sequence of
 * IEEE operations per element (no fused multiply-add), so results are
 * bitwise identical across variants. dot may differ in the last bits since
 * the accumulation order depends on the vector width.
 */
#pragma once

#include <span>
#include <string_view>

namespace rqi::kernels {

struct KernelTable {
    std::string_view name;
    /// Plane rotation: x <- c*x - s*y, y <- s*x + c*y.
    void (*rotate)(std::span<double> x, std::span<double> y, double c, double s);
    /// dst <- alpha * src.
    void (*scale)(std::span<double> dst, std::span<const double> src, double alpha);
    /// y <- y + alpha * x.
    void (*axpy)(std::span<double> y, std::span<const double> x, double alpha);
    double (*dot)(std::span<const double> x, std::span<const double> y);
};

const KernelTable &scalar_table();

/// AVX2 variant, or nullptr when the build does not include it.
const KernelTable *avx2_table();

bool cpu_supports_avx2();

/// Table chosen once per process. The RQI_SIMD environment variable
/// (`scalar`, `avx2`, `auto`) overrides detection.
const KernelTable &active();

} // namespace rqi::kernels
