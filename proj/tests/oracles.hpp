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
// Independent reference computations for the tests. Nothing here calls the
// library's eigensolver or state constructors.
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

namespace oracle {

/// Eigenvalues of [[a, b], [b, d]], descending.
inline std::array<double, 2> eig2(double a, double b, double d) {
    const double mean = 0.5 * (a + d);
    const double radius = std::hypot(0.5 * (a - d), b);
    return {mean + radius, mean - radius};
}

/// Eigenvalues of a real symmetric 3x3 matrix from the trigonometric
/// solution of its characteristic cubic, descending.
inline std::array<double, 3> eig3(const std::array<std::array<double, 3>, 3> &m) {
    const double p1 = m[0][1] * m[0][1] + m[0][2] * m[0][2] + m[1][2] * m[1][2];
    const double q = (m[0][0] + m[1][1] + m[2][2]) / 3.0;
    if (p1 == 0.0) {
        std::array<double, 3> d{m[0][0], m[1][1], m[2][2]};
        std::sort(d.begin(), d.end(), std::greater<>());
        return d;
    }
    const double p2 = (m[0][0] - q) * (m[0][0] - q) + (m[1][1] - q) * (m[1][1] - q) +
                      (m[2][2] - q) * (m[2][2] - q) + 2.0 * p1;
    const double p = std::sqrt(p2 / 6.0);
    std::array<std::array<double, 3>, 3> b{};
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            b[i][j] = (m[i][j] - (i == j ? q : 0.0)) / p;
        }
    }
    const double det = b[0][0] * (b[1][1] * b[2][2] - b[1][2] * b[2][1]) -
                       b[0][1] * (b[1][0] * b[2][2] - b[1][2] * b[2][0]) +
                       b[0][2] * (b[1][0] * b[2][1] - b[1][1] * b[2][0]);
    const double r = std::clamp(det / 2.0, -1.0, 1.0);
    const double phi = std::acos(r) / 3.0;
    const double e1 = q + 2.0 * p * std::cos(phi);
    const double e3 = q + 2.0 * p * std::cos(phi + 2.0 * std::numbers::pi / 3.0);
    return {e1, 3.0 * q - e1 - e3, e3};
}

/// -sum p log2 p by direct evaluation.
inline double entropy(const std::vector<double> &p) {
    long double s = 0.0L;
    for (double v : p) {
        if (v > 0.0) {
            s -= static_cast<long double>(v) * std::log2(static_cast<long double>(v));
        }
    }
    return static_cast<double>(s);
}

/// Smallest n_max with 1 - sum_{n <= n_max} t_n <= eps, summed term by term.
inline std::size_t truncation_by_summation(double u, double eps) {
    long double total = 0.0L;
    const long double lu = u;
    long double power = 1.0L;
    for (std::size_t n = 0;; ++n) {
        const long double w = 0.5L * (1.0L - lu) * power;
        total += w * (1.0L + static_cast<long double>(n + 1) * (1.0L - lu));
        if (1.0L - total <= eps) {
            return n;
        }
        power *= lu;
    }
}

/// Positive root of w(1+w) = x^2, the alpha = 1/2 functional equation.
inline double wu_half(double x) { return 0.5 * (-1.0 + std::sqrt(1.0 + 4.0 * x * x)); }

inline bool multiset_close(std::vector<double> a, std::vector<double> b, double tol) {
    if (a.size() != b.size()) {
        return false;
    }
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (std::abs(a[i] - b[i]) > tol) {
            return false;
        }
    }
    return true;
}

} // namespace oracle
