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
#include "rqi/matrix.hpp"

#include "rqi/errors.hpp"
#include "rqi/kernels.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <string>

namespace rqi {
namespace {

std::string short_real(double v) {
    std::array<char, 32> buf{};
    std::snprintf(buf.data(), buf.size(), "%.3g", v);
    return buf.data();
}

} // namespace

SymMatrix::SymMatrix(std::size_t dim) : dim_(dim), data_(dim * dim, 0.0) {
    if (dim == 0) {
        throw DimensionError("SymMatrix: dimension must be positive");
    }
}

SymMatrix::SymMatrix(std::size_t dim, std::vector<double> entries, double sym_tol)
    : dim_(dim), sym_tol_(sym_tol), data_(std::move(entries)) {
    if (dim == 0) {
        throw DimensionError("SymMatrix: dimension must be positive");
    }
    if (data_.size() != dim * dim) {
        throw DimensionError("SymMatrix: expected " + std::to_string(dim * dim) + " entries, got " +
                             std::to_string(data_.size()));
    }
    if (!(sym_tol >= 0.0)) {
        throw DomainError("SymMatrix: sym_tol must be nonnegative");
    }
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = i + 1; j < dim; ++j) {
            const double upper = data_[i * dim + j];
            if (!(std::abs(upper - data_[j * dim + i]) <= sym_tol)) {
                throw DimensionError("SymMatrix: entries (" + std::to_string(i) + "," + std::to_string(j) +
                                     ") and transpose differ by more than sym_tol");
            }
            data_[j * dim + i] = upper;
        }
    }
}

SymMatrix SymMatrix::identity(std::size_t dim) {
    SymMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        m.set(i, i, 1.0);
    }
    return m;
}

SymMatrix SymMatrix::diagonal(std::span<const double> diag) {
    SymMatrix m(diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) {
        m.set(i, i, diag[i]);
    }
    return m;
}

double SymMatrix::frobenius_norm() const {
    return std::sqrt(kernels::active().dot(data_, data_));
}

Spectrum::Spectrum(std::vector<double> values) : values_(std::move(values)) {
    std::sort(values_.begin(), values_.end(), std::greater<>());
}

double Spectrum::sum() const { return std::accumulate(values_.begin(), values_.end(), 0.0); }

SymMatrix kron(const SymMatrix &a, const SymMatrix &b, std::size_t max_dim) {
    const std::size_t na = a.dim();
    const std::size_t nb = b.dim();
    if (na > max_dim / nb) {
        throw DimensionError("kron: result dimension " + std::to_string(na) + "x" + std::to_string(nb) +
                             " exceeds the dense cap " + std::to_string(max_dim));
    }
    const std::size_t n = na * nb;
    const auto &k = kernels::active();
    std::vector<double> out(n * n);
    for (std::size_t i = 0; i < na; ++i) {
        for (std::size_t kk = 0; kk < nb; ++kk) {
            double *dst_row = out.data() + (i * nb + kk) * n;
            for (std::size_t j = 0; j < na; ++j) {
                k.scale({dst_row + j * nb, nb}, b.row(kk), a(i, j));
            }
        }
    }
    return SymMatrix(n, std::move(out), 0.0);
}

SymMatrix partial_transpose_alice(const SymMatrix &m, BipartiteDims dims) {
    if (dims.alice == 0 || dims.rest == 0 || dims.total() != m.dim()) {
        throw DimensionError("partial_transpose_alice: dims " + std::to_string(dims.alice) + "x" +
                             std::to_string(dims.rest) + " do not match matrix dimension " +
                             std::to_string(m.dim()));
    }
    const std::size_t nb = dims.rest;
    SymMatrix out(m.dim());
    for (std::size_t i = 0; i < dims.alice; ++i) {
        for (std::size_t k = 0; k < nb; ++k) {
            for (std::size_t j = 0; j < dims.alice; ++j) {
                for (std::size_t l = 0; l < nb; ++l) {
                    out.set(i * nb + k, j * nb + l, m(j * nb + k, i * nb + l));
                }
            }
        }
    }
    return out;
}

double max_residual(const SymMatrix &m, const EigenDecomposition &eig) {
    const auto &k = kernels::active();
    const std::size_t n = m.dim();
    std::vector<double> r(n);
    double worst = 0.0;
    for (std::size_t e = 0; e < eig.values.size(); ++e) {
        const auto &v = eig.vectors[e];
        for (std::size_t i = 0; i < n; ++i) {
            r[i] = k.dot(m.row(i), v) - eig.values[e] * v[i];
        }
        worst = std::max(worst, std::sqrt(k.dot(r, r)));
    }
    return worst;
}

Spectrum eigvals_sym(const SymMatrix &m, double tol) {
    if (!(tol > 0.0)) {
        throw DomainError("eigvals_sym: tol must be positive");
    }
    JacobiOptions options;
    options.tol = tol;
    return Spectrum(eigen_sym(m, options).values);
}

double shannon_entropy_b2(std::span<const double> values, double tol) {
    double s = 0.0;
    for (double v : values) {
        if (v < -tol) {
            throw NotPsdError("entropy: eigenvalue " + short_real(v) + " is below -" + short_real(tol),
                              v);
        }
        if (v > 0.0) {
            s -= v * std::log2(v);
        }
    }
    return s;
}

double shannon_entropy_b2(const Spectrum &s, double tol) { return shannon_entropy_b2(s.values(), tol); }

double trace(const SymMatrix &m) {
    double t = 0.0;
    for (std::size_t i = 0; i < m.dim(); ++i) {
        t += m(i, i);
    }
    return t;
}

SymMatrix diagonal_part(const SymMatrix &m) {
    SymMatrix d(m.dim());
    for (std::size_t i = 0; i < m.dim(); ++i) {
        d.set(i, i, m(i, i));
    }
    return d;
}

bool is_psd(const SymMatrix &m, double tol) { return eigvals_sym(m).min() >= -tol; }

SymMatrix linear_combination(double a, const SymMatrix &x, double b, const SymMatrix &y) {
    if (x.dim() != y.dim()) {
        throw DimensionError("linear_combination: dimension mismatch");
    }
    const auto &k = kernels::active();
    std::vector<double> out(x.data().size());
    k.scale(out, x.data(), a);
    k.axpy(out, y.data(), b);
    return SymMatrix(x.dim(), std::move(out), 0.0);
}

} // namespace rqi
