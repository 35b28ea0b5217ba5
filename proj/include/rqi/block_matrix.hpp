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
 * @file block_matrix.hpp
 * Symmetric matrix held as dense blocks on disjoint index sets.
 *
 * The block structure is the connected components of the structural
 * pattern: an entry given explicitly at construction is structural even
 * when its value is zero, so the grouping does not depend on values.
 * Indices touched by no entry are zero rows.
 */
#pragma once

#include "rqi/matrix.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace rqi {

struct MatrixEntry {
    std::size_t row;
    std::size_t col;
    double value;
};

class BlockSymMatrix {
  public:
    struct Block {
        std::vector<std::size_t> index;  ///< global indices, ascending
        SymMatrix local;
    };

    /// Entries may be listed in either triangle; a pair listed twice must
    /// agree. Throws DimensionError on out-of-range indices or conflicts.
    BlockSymMatrix(std::size_t dim, std::span<const MatrixEntry> entries);

    [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
    [[nodiscard]] std::span<const Block> blocks() const noexcept { return blocks_; }

    /// Block containing a global index, if that index is structural.
    [[nodiscard]] std::optional<std::size_t> block_of(std::size_t index) const;

    [[nodiscard]] double operator()(std::size_t i, std::size_t j) const;

    /// Upper-triangle structural entries, zeros included.
    [[nodiscard]] std::vector<MatrixEntry> entries() const;

    [[nodiscard]] std::vector<double> diagonal() const;

    /// Throws DimensionError above max_dim.
    [[nodiscard]] SymMatrix to_dense(std::size_t max_dim = kMaxDenseDim) const;

  private:
    std::size_t dim_;
    std::vector<Block> blocks_;
    std::vector<std::ptrdiff_t> owner_;  ///< block per global index, -1 if none
    std::vector<std::size_t> slot_;      ///< position inside the owning block
};

/// Union of the block spectra plus one zero per non-structural index.
Spectrum eigvals_sym(const BlockSymMatrix &m, double tol = kEigenTol);

BlockSymMatrix partial_transpose_alice(const BlockSymMatrix &m, BipartiteDims dims);

double trace(const BlockSymMatrix &m);

} // namespace rqi
