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
#include "rqi/unruh.hpp"

#include "rqi/errors.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace rqi {

RindlerParams RindlerParams::from_acceleration(double a, double omega) {
    if (!(a > 0.0)) {
        throw DomainError("RindlerParams: acceleration must be positive, got " + std::to_string(a));
    }
    if (!(omega > 0.0) || !std::isfinite(omega)) {
        throw DomainError("RindlerParams: frequency must be positive and finite, got " + std::to_string(omega));
    }
    const double u = std::isinf(a) ? 1.0 : std::exp(-2.0 * std::numbers::pi * omega / a);
    return RindlerParams(u, a, omega);
}

RindlerParams RindlerParams::from_thermal_factor(double u) {
    if (!(u >= 0.0 && u <= 1.0)) {
        throw DomainError("RindlerParams: thermal factor must lie in [0,1], got " + std::to_string(u));
    }
    return RindlerParams(u, std::nullopt, std::nullopt);
}

void AnyonCombination::validate() const {
    if (!(alpha >= 0.0 && alpha <= 1.0)) {
        throw DomainError("AnyonCombination: alpha must lie in [0,1], got " + std::to_string(alpha));
    }
}

SymMatrix fermion_state(const RindlerParams &p) {
    const double u = p.u();
    const double c2 = 1.0 / (1.0 + u);
    const double s2 = u / (1.0 + u);
    SymMatrix rho(4);
    rho.set(0, 0, 0.5 * c2);
    rho.set(1, 1, 0.5 * s2);
    rho.set(3, 3, 0.5);
    rho.set(0, 3, 0.5 * std::sqrt(c2));
    return rho;
}

std::array<double, 4> fermion_closed_form_spectrum(const RindlerParams &p) {
    const double u = p.u();
    return {(2.0 + u) / (2.0 * (1.0 + u)), 0.5 * u / (1.0 + u), 0.0, 0.0};
}

double boson_block_weight(std::size_t n, double u) {
    return 0.5 * (1.0 - u) * std::pow(u, static_cast<double>(n));
}

double boson_block_trace(std::size_t n, double u) {
    return boson_block_weight(n, u) * (1.0 + static_cast<double>(n + 1) * (1.0 - u));
}

double boson_tail(std::size_t n_max, double u) {
    const double m = static_cast<double>(n_max);
    return 0.5 * std::pow(u, m + 1.0) * (1.0 + (m + 2.0) * (1.0 - u) + u);
}

BosonBlock boson_block(std::size_t n, const RindlerParams &p, CoefficientConvention conv) {
    const double u = p.u();
    const double w = boson_block_weight(n, u);
    const double level = static_cast<double>(n + 1);
    const double coherence = conv == CoefficientConvention::positivity_fixed
                                 ? std::sqrt(level) * std::sqrt(1.0 - u)
                                 : level * std::sqrt(1.0 - u);
    SymMatrix weighted(2);
    weighted.set(0, 0, w);
    weighted.set(1, 1, w * level * (1.0 - u));
    weighted.set(0, 1, w * coherence);

    BosonBlock block{BlockSpectrum{}, weighted};
    block.spectrum.block_index = n;
    const Spectrum s = eigvals_sym(weighted);
    block.spectrum.eigenvalues.assign(s.values().begin(), s.values().end());
    block.spectrum.block_trace = boson_block_trace(n, u);
    return block;
}

BipartiteDims boson_dims(std::size_t n_max) { return {2, n_max + 2}; }

std::size_t boson_index(std::size_t alice, std::size_t level, std::size_t n_max) {
    return alice * (n_max + 2) + level;
}

namespace {

std::vector<MatrixEntry> boson_entries(const RindlerParams &p, std::size_t n_max, CoefficientConvention conv) {
    std::vector<MatrixEntry> entries;
    entries.reserve(3 * (n_max + 1));
    for (std::size_t n = 0; n <= n_max; ++n) {
        const BosonBlock block = boson_block(n, p, conv);
        const std::size_t lo = boson_index(0, n, n_max);
        const std::size_t hi = boson_index(1, n + 1, n_max);
        entries.push_back({lo, lo, block.weighted(0, 0)});
        entries.push_back({hi, hi, block.weighted(1, 1)});
        entries.push_back({lo, hi, block.weighted(0, 1)});
    }
    return entries;
}

void check_truncation(std::size_t n_max) {
    if (n_max > kMaxTruncation) {
        throw TruncationError("n_max " + std::to_string(n_max) + " exceeds the cap " +
                                  std::to_string(kMaxTruncation),
                              n_max, kMaxTruncation);
    }
}

} // namespace

SymMatrix boson_state_truncated(const RindlerParams &p, std::size_t n_max, CoefficientConvention conv,
                                std::size_t max_dim) {
    const std::size_t dim = boson_dims(n_max).total();
    if (dim > max_dim) {
        throw DimensionError("boson_state_truncated: n_max " + std::to_string(n_max) + " needs dimension " +
                             std::to_string(dim) + ", above the dense cap " + std::to_string(max_dim));
    }
    SymMatrix rho(dim);
    for (const auto &e : boson_entries(p, n_max, conv)) {
        rho.set(e.row, e.col, e.value);
    }
    return rho;
}

BlockSymMatrix boson_state_blocks(const RindlerParams &p, std::size_t n_max, CoefficientConvention conv) {
    check_truncation(n_max);
    const auto entries = boson_entries(p, n_max, conv);
    return BlockSymMatrix(boson_dims(n_max).total(), entries);
}

std::size_t choose_truncation(const RindlerParams &p, double eps_tail, std::size_t max_n_max) {
    if (!(eps_tail > 0.0 && eps_tail < 1.0)) {
        throw DomainError("choose_truncation: eps_tail must lie in (0,1), got " + std::to_string(eps_tail));
    }
    const double u = p.u();
    if (u >= 1.0) {
        throw TruncationError("choose_truncation: the bosonic series has no finite truncation at u = 1", 0,
                              max_n_max);
    }
    if (boson_tail(0, u) <= eps_tail) {
        return 0;
    }
    // The tail is strictly decreasing in n_max: bracket, then bisect.
    std::size_t lo = 0;
    std::size_t hi = 1;
    constexpr std::size_t kSearchLimit = std::size_t{1} << 52;
    while (boson_tail(hi, u) > eps_tail) {
        lo = hi;
        if (hi >= kSearchLimit) {
            throw TruncationError("choose_truncation: thermal factor too close to 1", 0, max_n_max);
        }
        hi *= 2;
    }
    while (hi - lo > 1) {
        const std::size_t mid = lo + (hi - lo) / 2;
        if (boson_tail(mid, u) > eps_tail) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    if (hi > max_n_max) {
        throw TruncationError("choose_truncation: u = " + std::to_string(u) + " needs n_max = " +
                                  std::to_string(hi) + ", above the cap " + std::to_string(max_n_max),
                              hi, max_n_max);
    }
    return hi;
}

SymMatrix boson_block_embedded(const BosonBlock &block) {
    SymMatrix e(4);
    e.set(0, 0, block.weighted(0, 0));
    e.set(3, 3, block.weighted(1, 1));
    e.set(0, 3, block.weighted(0, 1));
    return e;
}

namespace {

double retained_trace(const AnyonCombination &comb, double u) {
    double total = 0.0;
    for (std::size_t n = 0; n <= comb.n_max; ++n) {
        total += boson_block_trace(n, u);
    }
    if (!(total > 0.0)) {
        throw DomainError("trace_weighted combination: the retained bosonic trace vanishes");
    }
    return total;
}

std::vector<double> block_weights(const AnyonCombination &comb, const RindlerParams &p_b) {
    std::vector<double> w(comb.n_max + 1, 1.0);
    if (comb.mode == CombinationMode::trace_weighted) {
        const double total = retained_trace(comb, p_b.u());
        for (std::size_t n = 0; n <= comb.n_max; ++n) {
            w[n] = boson_block_trace(n, p_b.u()) / total;
        }
    }
    return w;
}

void append_pairs(std::vector<double> &out, std::span<const double> bosonic, std::span<const double> fermionic,
                  double alpha, double weight) {
    const double b = 1.0 - alpha;
    const double f = alpha * weight;
    for (double x : bosonic) {
        for (double y : fermionic) {
            out.push_back(b * x + f * y);
        }
    }
}

std::array<double, 4> embedded_spectrum(const BosonBlock &block) {
    return {block.spectrum.eigenvalues[0], block.spectrum.eigenvalues[1], 0.0, 0.0};
}

} // namespace

double fermion_block_weight(std::size_t n, const AnyonCombination &comb, const RindlerParams &p_b) {
    if (comb.mode == CombinationMode::literal) {
        return 1.0;
    }
    return boson_block_trace(n, p_b.u()) / retained_trace(comb, p_b.u());
}

AnyonBlock anyon_block(std::size_t n, const AnyonCombination &comb, const RindlerParams &p_f,
                       const RindlerParams &p_b) {
    comb.validate();
    const BosonBlock block = boson_block(n, p_b, comb.convention);
    const SymMatrix rho_f = fermion_state(p_f);
    const double w = fermion_block_weight(n, comb, p_b);
    const SymMatrix id4 = SymMatrix::identity(4);

    SymMatrix m = linear_combination(1.0 - comb.alpha, kron(boson_block_embedded(block), id4), comb.alpha * w,
                                     kron(id4, rho_f));
    std::vector<double> pairs;
    pairs.reserve(16);
    const auto bosonic = embedded_spectrum(block);
    const Spectrum fermionic = eigvals_sym(rho_f);
    append_pairs(pairs, bosonic, fermionic.values(), comb.alpha, w);
    return AnyonBlock{std::move(m), Spectrum(std::move(pairs))};
}

AnyonPairedSpectra anyon_paired_spectra(const AnyonCombination &comb, const RindlerParams &p_f,
                                        const RindlerParams &p_b) {
    comb.validate();
    check_truncation(comb.n_max);
    const SymMatrix rho_f = fermion_state(p_f);
    const Spectrum fermionic = eigvals_sym(rho_f);
    const std::array<double, 4> fermion_diag{rho_f(0, 0), rho_f(1, 1), rho_f(2, 2), rho_f(3, 3)};

    AnyonPairedSpectra out;
    out.weights = block_weights(comb, p_b);
    out.state.reserve(16 * (comb.n_max + 1));
    out.diagonal.reserve(16 * (comb.n_max + 1));
    for (std::size_t n = 0; n <= comb.n_max; ++n) {
        const BosonBlock block = boson_block(n, p_b, comb.convention);
        // Embedded basis order |0,n>, |1,n>, |0,n+1>, |1,n+1>.
        const std::array<double, 4> bosonic_diag{block.weighted(0, 0), 0.0, 0.0, block.weighted(1, 1)};
        append_pairs(out.state, embedded_spectrum(block), fermionic.values(), comb.alpha, out.weights[n]);
        append_pairs(out.diagonal, bosonic_diag, fermion_diag, comb.alpha, out.weights[n]);
    }
    return out;
}

Spectrum anyon_pt_spectrum(const AnyonCombination &comb, const RindlerParams &p_f, const RindlerParams &p_b) {
    comb.validate();
    const Spectrum fermionic = eigvals_sym(partial_transpose_alice(fermion_state(p_f), {2, 2}));
    const BlockSymMatrix bosonic =
        partial_transpose_alice(boson_state_blocks(p_b, comb.n_max, comb.convention), boson_dims(comb.n_max));

    std::vector<double> values;
    values.reserve(4 * bosonic.dim() + 8 * (comb.n_max + 1));

    if (comb.mode == CombinationMode::literal) {
        const Spectrum b = eigvals_sym(bosonic);
        append_pairs(values, b.values(), fermionic.values(), comb.alpha, 1.0);
        return Spectrum(std::move(values));
    }

    // Block n owns the PT component through |1,n>: the pair {|1,n>, |0,n+1>}
    // whose coherence comes from block n.
    const std::vector<double> weights = block_weights(comb, p_b);
    std::vector<std::ptrdiff_t> owner(bosonic.blocks().size(), -1);
    for (std::size_t n = 0; n <= comb.n_max; ++n) {
        const auto c = bosonic.block_of(boson_index(1, n, comb.n_max));
        if (!c || owner[*c] >= 0) {
            throw std::logic_error("anyon_pt_spectrum: unexpected bosonic PT block structure");
        }
        owner[*c] = static_cast<std::ptrdiff_t>(n);
    }
    std::size_t structural = 0;
    for (std::size_t c = 0; c < bosonic.blocks().size(); ++c) {
        const auto &block = bosonic.blocks()[c];
        structural += block.index.size();
        const Spectrum local = eigvals_sym(block.local);
        std::vector<double> slots(local.values().begin(), local.values().end());
        double weight = 0.0;
        if (owner[c] >= 0) {
            if (slots.size() > 4) {
                throw std::logic_error("anyon_pt_spectrum: PT component larger than the 4x4 block embedding");
            }
            slots.resize(4, 0.0);
            weight = weights[static_cast<std::size_t>(owner[c])];
        }
        append_pairs(values, slots, fermionic.values(), comb.alpha, weight);
    }
    const std::vector<double> zeros(bosonic.dim() - structural, 0.0);
    append_pairs(values, zeros, fermionic.values(), comb.alpha, 0.0);
    return Spectrum(std::move(values));
}

} // namespace rqi
