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
#include "rqi/block_matrix.hpp"

#include "rqi/errors.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace rqi {
namespace {

struct DisjointSets {
    std::vector<std::size_t> parent;

    explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

    std::size_t find(std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }

    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) {
            parent[std::max(a, b)] = std::min(a, b);
        }
    }
};

} // namespace

BlockSymMatrix::BlockSymMatrix(std::size_t dim, std::span<const MatrixEntry> entries)
    : dim_(dim), owner_(dim, -1), slot_(dim, 0) {
    if (dim == 0) {
        throw DimensionError("BlockSymMatrix: dimension must be positive");
    }
    std::vector<bool> structural(dim, false);
    DisjointSets sets(dim);
    for (const auto &e : entries) {
        if (e.row >= dim || e.col >= dim) {
            throw DimensionError("BlockSymMatrix: entry (" + std::to_string(e.row) + "," + std::to_string(e.col) +
                                 ") outside dimension " + std::to_string(dim));
        }
        structural[e.row] = true;
        structural[e.col] = true;
        sets.unite(e.row, e.col);
    }

    // Components ordered by smallest member, members ascending.
    std::vector<std::ptrdiff_t> root_block(dim, -1);
    for (std::size_t i = 0; i < dim; ++i) {
        if (!structural[i]) {
            continue;
        }
        const std::size_t root = sets.find(i);
        if (root_block[root] < 0) {
            root_block[root] = static_cast<std::ptrdiff_t>(blocks_.size());
            blocks_.push_back(Block{{}, SymMatrix(1)});
        }
        auto &members = blocks_[static_cast<std::size_t>(root_block[root])].index;
        owner_[i] = root_block[root];
        slot_[i] = members.size();
        members.push_back(i);
    }

    std::vector<std::vector<double>> storage(blocks_.size());
    std::vector<std::vector<bool>> seen(blocks_.size());
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        const std::size_t n = blocks_[b].index.size();
        storage[b].assign(n * n, 0.0);
        seen[b].assign(n * n, false);
    }
    for (const auto &e : entries) {
        const auto b = static_cast<std::size_t>(owner_[e.row]);
        const std::size_t n = blocks_[b].index.size();
        const std::size_t i = slot_[e.row];
        const std::size_t j = slot_[e.col];
        if (seen[b][i * n + j] && storage[b][i * n + j] != e.value) {
            throw DimensionError("BlockSymMatrix: conflicting values for entry (" + std::to_string(e.row) + "," +
                                 std::to_string(e.col) + ")");
        }
        storage[b][i * n + j] = e.value;
        storage[b][j * n + i] = e.value;
        seen[b][i * n + j] = true;
        seen[b][j * n + i] = true;
    }
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        blocks_[b].local = SymMatrix(blocks_[b].index.size(), std::move(storage[b]), 0.0);
    }
}

std::optional<std::size_t> BlockSymMatrix::block_of(std::size_t index) const {
    if (index >= dim_ || owner_[index] < 0) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(owner_[index]);
}

double BlockSymMatrix::operator()(std::size_t i, std::size_t j) const {
    if (i >= dim_ || j >= dim_) {
        throw DimensionError("BlockSymMatrix: index out of range");
    }
    if (owner_[i] < 0 || owner_[i] != owner_[j]) {
        return 0.0;
    }
    return blocks_[static_cast<std::size_t>(owner_[i])].local(slot_[i], slot_[j]);
}

std::vector<MatrixEntry> BlockSymMatrix::entries() const {
    std::vector<MatrixEntry> out;
    for (const auto &block : blocks_) {
        const std::size_t n = block.index.size();
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i; j < n; ++j) {
                out.push_back({block.index[i], block.index[j], block.local(i, j)});
            }
        }
    }
    return out;
}

std::vector<double> BlockSymMatrix::diagonal() const {
    std::vector<double> d(dim_, 0.0);
    for (const auto &block : blocks_) {
        for (std::size_t i = 0; i < block.index.size(); ++i) {
            d[block.index[i]] = block.local(i, i);
        }
    }
    return d;
}

SymMatrix BlockSymMatrix::to_dense(std::size_t max_dim) const {
    if (dim_ > max_dim) {
        throw DimensionError("BlockSymMatrix::to_dense: dimension " + std::to_string(dim_) +
                             " exceeds the dense cap " + std::to_string(max_dim));
    }
    SymMatrix out(dim_);
    for (const auto &block : blocks_) {
        const std::size_t n = block.index.size();
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i; j < n; ++j) {
                out.set(block.index[i], block.index[j], block.local(i, j));
            }
        }
    }
    return out;
}

Spectrum eigvals_sym(const BlockSymMatrix &m, double tol) {
    std::vector<double> values;
    values.reserve(m.dim());
    for (const auto &block : m.blocks()) {
        const Spectrum local = eigvals_sym(block.local, tol);
        values.insert(values.end(), local.values().begin(), local.values().end());
    }
    values.resize(m.dim(), 0.0);
    return Spectrum(std::move(values));
}

BlockSymMatrix partial_transpose_alice(const BlockSymMatrix &m, BipartiteDims dims) {
    if (dims.alice == 0 || dims.rest == 0 || dims.total() != m.dim()) {
        throw DimensionError("partial_transpose_alice: dims " + std::to_string(dims.alice) + "x" +
                             std::to_string(dims.rest) + " do not match matrix dimension " +
                             std::to_string(m.dim()));
    }
    const std::size_t nb = dims.rest;
    std::vector<MatrixEntry> moved;
    for (const auto &e : m.entries()) {
        const std::size_t i = e.row / nb;
        const std::size_t k = e.row % nb;
        const std::size_t j = e.col / nb;
        const std::size_t l = e.col % nb;
        // M[(i,k),(j,l)] lands at [(j,k),(i,l)].
        moved.push_back({j * nb + k, i * nb + l, e.value});
    }
    return BlockSymMatrix(m.dim(), moved);
}

double trace(const BlockSymMatrix &m) {
    double t = 0.0;
    for (const auto &block : m.blocks()) {
        t += trace(block.local);
    }
    return t;
}

} // namespace rqi
