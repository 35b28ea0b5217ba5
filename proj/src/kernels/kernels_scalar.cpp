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
#include "rqi/kernels.hpp"

#include <cassert>
#include <cstddef>

namespace rqi::kernels {
namespace {

void rotate_scalar(std::span<double> x, std::span<double> y, double c, double s) {
    assert(x.size() == y.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double xi = x[i];
        const double yi = y[i];
        x[i] = c * xi - s * yi;
        y[i] = s * xi + c * yi;
    }
}

void scale_scalar(std::span<double> dst, std::span<const double> src, double alpha) {
    assert(dst.size() == src.size());
    for (std::size_t i = 0; i < dst.size(); ++i) {
        dst[i] = alpha * src[i];
    }
}

void axpy_scalar(std::span<double> y, std::span<const double> x, double alpha) {
    assert(x.size() == y.size());
    for (std::size_t i = 0; i < y.size(); ++i) {
        y[i] = y[i] + alpha * x[i];
    }
}

double dot_scalar(std::span<const double> x, std::span<const double> y) {
    assert(x.size() == y.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        acc += x[i] * y[i];
    }
    return acc;
}

constexpr KernelTable kScalar{"scalar", rotate_scalar, scale_scalar, axpy_scalar, dot_scalar};

} // namespace

const KernelTable &scalar_table() { return kScalar; }

} // namespace rqi::kernels
