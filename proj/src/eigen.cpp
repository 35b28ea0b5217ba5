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
// Cyclic Jacobi eigensolver for dense symmetric matrices.
//
// The matrix is held in full row-major storage. Each rotation updates rows
// p and q with the rotate kernel and mirrors them into columns p and q, so
// the working copy stays exactly symmetric. Eigenvectors are accumulated as
// rows of V^T for the same reason.
#include "rqi/errors.hpp"
#include "rqi/kernels.hpp"
#include "rqi/matrix.hpp"

#include <cmath>
#include <string>

namespace rqi {
namespace {

double off_diagonal_norm(const std::vector<double> &a, std::size_t n) {
    double off = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            off += a[i * n + j] * a[i * n + j];
        }
    }
    return std::sqrt(2.0 * off);
}

double total_norm(const std::vector<double> &a) {
    double s = 0.0;
    for (double v : a) {
        s += v * v;
    }
    return std::sqrt(s);
}

} // namespace

EigenDecomposition eigen_sym(const SymMatrix &m, const JacobiOptions &options) {
    if (!(options.tol > 0.0)) {
        throw DomainError("eigen_sym: tol must be positive");
    }
    const std::size_t n = m.dim();
    const auto &k = kernels::active();

    std::vector<double> a(m.data().begin(), m.data().end());
    std::vector<double> vt;
    if (options.vectors) {
        vt.assign(n * n, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            vt[i * n + i] = 1.0;
        }
    }

    const double norm = total_norm(a);
    EigenDecomposition out;
    bool converged = false;
    for (int sweep = 0; sweep <= options.max_sweeps; ++sweep) {
        if (off_diagonal_norm(a, n) <= options.tol * norm) {
            converged = true;
            out.sweeps = sweep;
            break;
        }
        if (sweep == options.max_sweeps) {
            break;
        }
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a[p * n + q];
                if (apq == 0.0) {
                    continue;
                }
                const double app = a[p * n + p];
                const double aqq = a[q * n + q];
                // Negligible against both diagonals: drop it outright.
                const double g = 100.0 * std::abs(apq);
                if (sweep > 3 && std::abs(app) + g == std::abs(app) && std::abs(aqq) + g == std::abs(aqq)) {
                    a[p * n + q] = 0.0;
                    a[q * n + p] = 0.0;
                    continue;
                }
                const double theta = (aqq - app) / (2.0 * apq);
                double t;
                if (std::abs(theta) > 1e150) {
                    t = 0.5 / theta;
                } else {
                    t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                    if (theta < 0.0) {
                        t = -t;
                    }
                }
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                std::span<double> row_p{a.data() + p * n, n};
                std::span<double> row_q{a.data() + q * n, n};
                k.rotate(row_p, row_q, c, s);
                row_p[p] = app - t * apq;
                row_q[q] = aqq + t * apq;
                row_p[q] = 0.0;
                row_q[p] = 0.0;
                for (std::size_t r = 0; r < n; ++r) {
                    if (r != p && r != q) {
                        a[r * n + p] = row_p[r];
                        a[r * n + q] = row_q[r];
                    }
                }
                if (options.vectors) {
                    k.rotate({vt.data() + p * n, n}, {vt.data() + q * n, n}, c, s);
                }
            }
        }
    }
    if (!converged) {
        throw NonConvergenceError("eigen_sym: no convergence within " + std::to_string(options.max_sweeps) +
                                  " sweeps on a " + std::to_string(n) + "x" + std::to_string(n) + " matrix");
    }

    out.values.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        out.values[i] = a[i * n + i];
    }
    if (options.vectors) {
        out.vectors.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            out.vectors[i].assign(vt.begin() + static_cast<std::ptrdiff_t>(i * n),
                                  vt.begin() + static_cast<std::ptrdiff_t>((i + 1) * n));
        }
    }
    return out;
}

} // namespace rqi
