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
 * @file anyonstat.hpp
 * Fractional-exclusion occupation numbers: n = 1 / (w(x) + alpha) where
 * w solves w^alpha (1 + w)^(1 - alpha) = x.
 */
#pragma once

namespace rqi {

struct WuQuery {
    double x = 1.0;  ///< exp((epsilon - mu) / kT)
    double alpha = 1.0;

    /// Throws DomainError unless kT > 0.
    static WuQuery from_energy(double epsilon, double mu, double kT, double alpha);
};

inline constexpr double kWuTol = 1e-14;

/// Positive root of w^alpha (1+w)^(1-alpha) = x, with
/// |w^alpha (1+w)^(1-alpha) - x| <= tol * x.
///
/// Throws DomainError for x <= 0, alpha outside [0,1], or alpha = 0 with
/// x <= 1 (no positive root), and NonConvergenceError past the iteration cap.
double wu_omega(double x, double alpha, double tol = kWuTol);

double wu_occupation(const WuQuery &q, double tol = kWuTol);

/// w^alpha (1+w)^(1-alpha) - x, evaluated directly.
double wu_residual(double omega, double x, double alpha);

} // namespace rqi
