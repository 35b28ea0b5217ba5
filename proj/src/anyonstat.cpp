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
// Safeguarded Newton iteration on y = log w. In that variable the functional
// equation reads f(y) = alpha*y + (1-alpha)*log(1 + e^y) - log x = 0 with
// f'(y) = alpha + (1-alpha)*sigmoid(y) > 0, so a sign-change bracket always
// contains exactly one root.
#include "rqi/anyonstat.hpp"

#include "rqi/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace rqi {
namespace {

constexpr int kMaxIterations = 200;

double log1p_exp(double y) { return y > 0.0 ? y + std::log1p(std::exp(-y)) : std::log1p(std::exp(y)); }

double sigmoid(double y) {
    if (y >= 0.0) {
        return 1.0 / (1.0 + std::exp(-y));
    }
    const double e = std::exp(y);
    return e / (1.0 + e);
}

struct LogEquation {
    double alpha;
    double log_x;

    [[nodiscard]] double value(double y) const { return alpha * y + (1.0 - alpha) * log1p_exp(y) - log_x; }
    [[nodiscard]] double slope(double y) const { return alpha + (1.0 - alpha) * sigmoid(y); }
};

} // namespace

WuQuery WuQuery::from_energy(double epsilon, double mu, double kT, double alpha) {
    if (!(kT > 0.0)) {
        throw DomainError("WuQuery: kT must be positive, got " + std::to_string(kT));
    }
    return WuQuery{std::exp((epsilon - mu) / kT), alpha};
}

double wu_residual(double omega, double x, double alpha) {
    return std::pow(omega, alpha) * std::pow(1.0 + omega, 1.0 - alpha) - x;
}

double wu_omega(double x, double alpha, double tol) {
    if (!(x > 0.0) || !std::isfinite(x)) {
        throw DomainError("wu_omega: x must be positive and finite, got " + std::to_string(x));
    }
    if (!(alpha >= 0.0 && alpha <= 1.0)) {
        throw DomainError("wu_omega: alpha must lie in [0,1], got " + std::to_string(alpha));
    }
    if (alpha == 0.0 && x <= 1.0) {
        throw DomainError("wu_omega: alpha = 0 needs x > 1, got " + std::to_string(x));
    }
    if (!(tol > 0.0)) {
        throw DomainError("wu_omega: tol must be positive");
    }

    const LogEquation f{alpha, std::log(x)};
    const double y_min = std::log(std::numeric_limits<double>::min());
    if (f.value(y_min) > 0.0) {
        throw DomainError("wu_omega: root for x = " + std::to_string(x) + ", alpha = " + std::to_string(alpha) +
                          " lies below the smallest normal double");
    }
    // w = x always overshoots; w = x - 1 (x > 1) or (x/2)^(1/alpha) undershoots.
    double hi = std::log(x);
    double lo = x > 1.0 ? std::log(x - 1.0) : (std::log(x) - std::log(2.0)) / alpha;
    lo = std::max(lo, y_min);
    double step = 1.0;
    while (f.value(hi) < 0.0) {
        hi += step;
        step *= 2.0;
    }

    const double eps = std::numeric_limits<double>::epsilon();
    double y = 0.5 * (lo + hi);
    for (int it = 0; it < kMaxIterations; ++it) {
        const double fy = f.value(y);
        if (fy == 0.0) {
            break;
        }
        (fy < 0.0 ? lo : hi) = y;
        double next = y - fy / f.slope(y);
        if (!(next > lo && next < hi)) {
            next = 0.5 * (lo + hi);
        }
        const double delta = std::abs(next - y);
        y = next;
        if (delta <= 4.0 * eps * std::max(1.0, std::abs(y)) || hi - lo <= 2.0 * eps * std::max(1.0, std::abs(y))) {
            break;
        }
        if (it + 1 == kMaxIterations) {
            throw NonConvergenceError("wu_omega: iteration cap reached for x = " + std::to_string(x) +
                                      ", alpha = " + std::to_string(alpha));
        }
    }
    const double omega = std::exp(y);
    if (!(std::abs(wu_residual(omega, x, alpha)) <= tol * x)) {
        throw NonConvergenceError("wu_omega: residual above tolerance for x = " + std::to_string(x) +
                                  ", alpha = " + std::to_string(alpha));
    }
    return omega;
}

double wu_occupation(const WuQuery &q, double tol) { return 1.0 / (wu_omega(q.x, q.alpha, tol) + q.alpha); }

} // namespace rqi
