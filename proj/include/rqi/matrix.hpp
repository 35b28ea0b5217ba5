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
 * @file matrix.hpp
 * Dense real symmetric matrices, bipartite partial transpose and the
 * spectral functionals built on them.
 */
#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace rqi {

/// Largest dense dimension any constructor will allocate (128 MiB of doubles).
inline constexpr std::size_t kMaxDenseDim = 4096;

/// Eigenvalues in [-kPsdTol, 0) count as round-off zeros.
inline constexpr double kPsdTol = 1e-10;

/// Default eigensolver convergence (relative off-diagonal Frobenius norm).
inline constexpr double kEigenTol = 1e-12;

/// Dense real symmetric matrix, row-major.
class SymMatrix {
  public:
    static constexpr double kDefaultSymTol = 1e-12;

    /// Zero matrix.
    explicit SymMatrix(std::size_t dim);

    /// Throws DimensionError if entries.size() != dim*dim, or if the input
    /// is asymmetric beyond sym_tol. The stored matrix is exactly symmetric
    /// (the upper triangle wins).
    SymMatrix(std::size_t dim, std::vector<double> entries, double sym_tol = kDefaultSymTol);

    static SymMatrix identity(std::size_t dim);
    static SymMatrix diagonal(std::span<const double> diag);

    [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
    [[nodiscard]] double sym_tol() const noexcept { return sym_tol_; }

    [[nodiscard]] double operator()(std::size_t i, std::size_t j) const noexcept {
        return data_[i * dim_ + j];
    }

    /// Writes (i,j) and (j,i).
    void set(std::size_t i, std::size_t j, double value) noexcept {
        data_[i * dim_ + j] = value;
        data_[j * dim_ + i] = value;
    }

    [[nodiscard]] std::span<const double> row(std::size_t i) const noexcept {
        return {data_.data() + i * dim_, dim_};
    }
    [[nodiscard]] std::span<const double> data() const noexcept { return data_; }

    [[nodiscard]] double frobenius_norm() const;

    /// Compares entries only; the construction tolerance is not part of the value.
    friend bool operator==(const SymMatrix &a, const SymMatrix &b) noexcept {
        return a.dim_ == b.dim_ && a.data_ == b.data_;
    }

  private:
    std::size_t dim_;
    double sym_tol_ = kDefaultSymTol;
    std::vector<double> data_;
};

/// Product basis |a,b> = |a>_A |b>_rest with index a*rest + b.
struct BipartiteDims {
    std::size_t alice;
    std::size_t rest;

    [[nodiscard]] std::size_t total() const noexcept { return alice * rest; }
};

/// Eigenvalues sorted in descending order.
class Spectrum {
  public:
    Spectrum() = default;
    explicit Spectrum(std::vector<double> values);

    [[nodiscard]] std::span<const double> values() const noexcept { return values_; }
    [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
    [[nodiscard]] double max() const { return values_.front(); }
    [[nodiscard]] double min() const { return values_.back(); }
    [[nodiscard]] double sum() const;

  private:
    std::vector<double> values_;
};

struct EigenDecomposition {
    std::vector<double> values;                ///< unsorted, matches vectors
    std::vector<std::vector<double>> vectors;  ///< vectors[k] is the unit eigenvector of values[k]
    int sweeps = 0;
};

struct JacobiOptions {
    double tol = kEigenTol;
    int max_sweeps = 100;
    bool vectors = false;
};

/// result[(i*B.dim()+k), (j*B.dim()+l)] = A(i,j) * B(k,l).
SymMatrix kron(const SymMatrix &a, const SymMatrix &b, std::size_t max_dim = kMaxDenseDim);

/// Transposes Alice's index: result[(i,k),(j,l)] = M[(j,k),(i,l)].
SymMatrix partial_transpose_alice(const SymMatrix &m, BipartiteDims dims);

/// Cyclic Jacobi. Throws NonConvergenceError after max_sweeps.
EigenDecomposition eigen_sym(const SymMatrix &m, const JacobiOptions &options = {});

Spectrum eigvals_sym(const SymMatrix &m, double tol = kEigenTol);

/// Largest ||M v - lambda v|| over the decomposition.
double max_residual(const SymMatrix &m, const EigenDecomposition &eig);

/// -sum lambda log2 lambda. Values in [-tol, 0) are clamped to 0; anything
/// below -tol throws NotPsdError.
double shannon_entropy_b2(const Spectrum &s, double tol = kPsdTol);
double shannon_entropy_b2(std::span<const double> values, double tol = kPsdTol);

double trace(const SymMatrix &m);
SymMatrix diagonal_part(const SymMatrix &m);
bool is_psd(const SymMatrix &m, double tol = kPsdTol);

/// a*x + b*y, elementwise.
SymMatrix linear_combination(double a, const SymMatrix &x, double b, const SymMatrix &y);

} // namespace rqi
