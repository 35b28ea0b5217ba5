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
 * @file unruh.hpp
 * Acceleration-dependent density matrices seen by an inertial observer
 * (Alice) and a uniformly accelerated one (region I): the fermionic
 * two-qubit state, the block-diagonal bosonic state and the anyonic
 * combination of the two.
 *
 * Everything is parametrised by the thermal factor u = exp(-2*pi*omega/a):
 * u = 0 is the inertial limit (a maximally entangled Bell pair) and u = 1
 * the infinite-acceleration limit.
 */
#pragma once

#include "rqi/block_matrix.hpp"
#include "rqi/matrix.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

namespace rqi {

/// Largest bosonic block index any truncation may retain.
inline constexpr std::size_t kMaxTruncation = 200000;

/// Bosonic series are refused above this thermal factor.
inline constexpr double kMaxBosonThermalFactor = 1.0 - 1e-6;

enum class CombinationMode {
    literal,         ///< fermionic term added once per bosonic block
    trace_weighted,  ///< fermionic term weighted by the normalised block trace
};

enum class CoefficientConvention {
    paper_literal,     ///< off-diagonal (n+1)*sqrt(1-u); indefinite for n >= 1
    positivity_fixed,  ///< off-diagonal sqrt(n+1)*sqrt(1-u); rank-1 blocks
};

class RindlerParams {
  public:
    /// Throws DomainError unless a > 0 and omega > 0 (a may be +inf).
    static RindlerParams from_acceleration(double a, double omega);
    /// u in [0,1]; acceleration and frequency are left unset.
    static RindlerParams from_thermal_factor(double u);

    [[nodiscard]] double u() const noexcept { return u_; }
    [[nodiscard]] std::optional<double> acceleration() const noexcept { return a_; }
    [[nodiscard]] std::optional<double> omega() const noexcept { return omega_; }
    [[nodiscard]] bool infinite_acceleration() const noexcept { return u_ == 1.0; }

  private:
    RindlerParams(double u, std::optional<double> a, std::optional<double> omega)
        : u_(u), a_(a), omega_(omega) {}
    double u_;
    std::optional<double> a_;
    std::optional<double> omega_;
};

struct AnyonCombination {
    double alpha = 0.0;
    CombinationMode mode = CombinationMode::trace_weighted;
    std::size_t n_max = 0;
    CoefficientConvention convention = CoefficientConvention::positivity_fixed;

    /// Throws DomainError unless 0 <= alpha <= 1.
    void validate() const;
};

struct BlockSpectrum {
    std::size_t block_index = 0;
    std::vector<double> eigenvalues;  ///< descending
    double block_trace = 0.0;
};

struct BosonBlock {
    BlockSpectrum spectrum;
    SymMatrix weighted;  ///< 2x2 on {|0,n>, |1,n+1>}
};

/// 4x4 on |00>,|01>,|10>,|11>, dims (2,2).
SymMatrix fermion_state(const RindlerParams &p);

/// The closed-form eigenvalue set {0, 0, u/(2(1+u)), (2+u)/(2(1+u))}, descending.
std::array<double, 4> fermion_closed_form_spectrum(const RindlerParams &p);

/// w_n = (1-u) u^n / 2.
double boson_block_weight(std::size_t n, double u);

/// t_n = w_n (1 + (n+1)(1-u)).
double boson_block_trace(std::size_t n, double u);

/// sum_{n > n_max} t_n in closed form.
double boson_tail(std::size_t n_max, double u);

BosonBlock boson_block(std::size_t n, const RindlerParams &p, CoefficientConvention conv);

/// Alice qubit (x) levels 0..n_max+1.
BipartiteDims boson_dims(std::size_t n_max);

/// Global index of |alice, level> in the truncated bosonic basis.
std::size_t boson_index(std::size_t alice, std::size_t level, std::size_t n_max);

/// Blocks 0..n_max assembled densely. Throws DimensionError above max_dim.
SymMatrix boson_state_truncated(const RindlerParams &p, std::size_t n_max, CoefficientConvention conv,
                                std::size_t max_dim = kMaxDenseDim);

/// Same state, blockwise. Every block entry is structural.
BlockSymMatrix boson_state_blocks(const RindlerParams &p, std::size_t n_max, CoefficientConvention conv);

/// Smallest n_max whose tail is at most eps_tail. Throws DomainError for
/// eps_tail outside (0,1) and TruncationError when the answer exceeds
/// max_n_max (the error carries the required value when it is finite).
std::size_t choose_truncation(const RindlerParams &p, double eps_tail, std::size_t max_n_max = kMaxTruncation);

/// 4x4 embedding of the weighted block n on {|0,n>,|1,n>,|0,n+1>,|1,n+1>}.
SymMatrix boson_block_embedded(const BosonBlock &block);

/// Weight of the fermionic term in block n: 1 (literal) or t_n / sum t_k.
double fermion_block_weight(std::size_t n, const AnyonCombination &comb, const RindlerParams &p_b);

struct AnyonBlock {
    SymMatrix matrix;  ///< 16x16, bosonic block index major
    Spectrum paired;   ///< the 16 pairwise sums
};

/// M = (1-alpha) kron(rho_b4^(n), I4) + alpha * w_n * kron(I4, rho_f).
AnyonBlock anyon_block(std::size_t n, const AnyonCombination &comb, const RindlerParams &p_f,
                       const RindlerParams &p_b);

/// Pairwise sums over all retained blocks, for entropy and coherence.
struct AnyonPairedSpectra {
    std::vector<double> state;     ///< (1-alpha) lambda_i(rho_b4) + alpha w lambda_j(rho_f)
    std::vector<double> diagonal;  ///< same pairing on the diagonals
    std::vector<double> weights;   ///< fermionic weight per block
};

AnyonPairedSpectra anyon_paired_spectra(const AnyonCombination &comb, const RindlerParams &p_f,
                                        const RindlerParams &p_b);

/// Paired spectrum of the partial transpose.
Spectrum anyon_pt_spectrum(const AnyonCombination &comb, const RindlerParams &p_f, const RindlerParams &p_b);

} // namespace rqi
