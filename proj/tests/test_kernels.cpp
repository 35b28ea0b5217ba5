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
#include <doctest.h>

#include "rqi/kernels.hpp"

#include <cmath>
#include <random>
#include <vector>

using rqi::kernels::KernelTable;

namespace {

std::vector<double> random_vector(std::mt19937_64 &rng, std::size_t n) {
    std::uniform_real_distribution<double> dist(-2.0, 2.0);
    std::vector<double> v(n);
    for (double &x : v) {
        x = dist(rng);
    }
    return v;
}

// Lengths straddle the 4-wide vector body and its scalar remainder.
constexpr std::size_t kLengths[] = {0, 1, 3, 4, 5, 7, 8, 17, 64, 131};

} // namespace

TEST_CASE("scalar rotate matches the defining formula") {
    const KernelTable &k = rqi::kernels::scalar_table();
    std::vector<double> x{1.0, 2.0}, y{3.0, -1.0};
    k.rotate(x, y, 0.6, 0.8);
    CHECK(x[0] == doctest::Approx(0.6 * 1.0 - 0.8 * 3.0));
    CHECK(y[0] == doctest::Approx(0.8 * 1.0 + 0.6 * 3.0));
    CHECK(x[1] == doctest::Approx(0.6 * 2.0 + 0.8 * 1.0));
    CHECK(y[1] == doctest::Approx(0.8 * 2.0 - 0.6 * 1.0));
}

TEST_CASE("scalar scale, axpy and dot") {
    const KernelTable &k = rqi::kernels::scalar_table();
    std::vector<double> src{1.0, -2.0, 0.5};
    std::vector<double> dst(3);
    k.scale(dst, src, 2.0);
    CHECK(dst == std::vector<double>{2.0, -4.0, 1.0});
    k.axpy(dst, src, -1.0);
    CHECK(dst == std::vector<double>{1.0, -2.0, 0.5});
    CHECK(k.dot(src, dst) == doctest::Approx(1.0 + 4.0 + 0.25));
}

TEST_CASE("vector kernels agree with the scalar reference") {
    const KernelTable *wide = rqi::kernels::avx2_table();
    if (wide == nullptr || !rqi::kernels::cpu_supports_avx2()) {
        MESSAGE("AVX2 kernels unavailable on this machine; equivalence not exercised");
        return;
    }
    const KernelTable &ref = rqi::kernels::scalar_table();
    std::mt19937_64 rng(20261015);

    for (std::size_t n : kLengths) {
        CAPTURE(n);
        const auto x0 = random_vector(rng, n);
        const auto y0 = random_vector(rng, n);

        auto xa = x0, ya = y0, xb = x0, yb = y0;
        ref.rotate(xa, ya, 0.8, -0.6);
        wide->rotate(xb, yb, 0.8, -0.6);
        CHECK(xa == xb);
        CHECK(ya == yb);

        std::vector<double> sa(n), sb(n);
        ref.scale(sa, x0, 1.75);
        wide->scale(sb, x0, 1.75);
        CHECK(sa == sb);

        auto aa = y0, ab = y0;
        ref.axpy(aa, x0, -0.3);
        wide->axpy(ab, x0, -0.3);
        CHECK(aa == ab);

        const double da = ref.dot(x0, y0);
        const double db = wide->dot(x0, y0);
        CHECK(std::abs(da - db) <= 1e-13 * (1.0 + static_cast<double>(n)));
    }
}

TEST_CASE("active table is one of the known variants") {
    const auto name = rqi::kernels::active().name;
    CHECK((name == "scalar" || name == "avx2"));
}
