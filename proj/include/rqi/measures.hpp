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
 * @file measures.hpp
 * Entanglement entropy, negativity, logarithmic negativity and relative
 * entropy of coherence for the fermionic, bosonic and anyonic states.
 *
 * Direct measures act on a single state. The anyon measures act on the
 * paired (Kronecker-sum) spectra and carry a factor 1/4 that removes the
 * four-fold repetition introduced by the 4x4 identity factors.
 */
#pragma once

#include "rqi/block_matrix.hpp"
#include "rqi/matrix.hpp"
#include "rqi/unruh.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace rqi {

enum class Measure { entropy, negativity, log_negativity, coherence };

std::string_view to_string(Measure m);
std::string_view to_string(CombinationMode m);
std::string_view to_string(CoefficientConvention c);
/// Throw DomainError on unknown names.
Measure parse_measure(std::string_view s);
CombinationMode parse_mode(std::string_view s);
CoefficientConvention parse_convention(std::string_view s);

double entropy_state(const SymMatrix &m);
double entropy_state(const BlockSymMatrix &m);

/// sum (|lambda| - lambda) / 2, times 1/4 when quarter is set.
double negativity_from_spectrum(const Spectrum &s, bool quarter);

/// log2(1 + 2N). Throws DomainError for N < 0.
double log_negativity(double negativity);

double negativity_state(const SymMatrix &m, BipartiteDims dims);
double negativity_state(const BlockSymMatrix &m, BipartiteDims dims);

/// S(diagonal part) - S(m).
double coherence_rel_entropy(const SymMatrix &m);
double coherence_rel_entropy(const BlockSymMatrix &m);

/// 1/4 S(paired spectra). In trace_weighted mode the block-label entropy
/// alpha * H(weights) carried by the fermionic share is removed, so that
/// alpha = 1 gives the fermionic entropy.
double entropy_anyon(const AnyonCombination &comb, const RindlerParams &p_f, const RindlerParams &p_b);
double negativity_anyon(const AnyonCombination &comb, const RindlerParams &p_f, const RindlerParams &p_b);
double coherence_anyon(const AnyonCombination &comb, const RindlerParams &p_f, const RindlerParams &p_b);

struct MeasureRecord {
    Measure measure = Measure::entropy;
    double alpha = 0.0;
    std::optional<double> acceleration;  ///< +inf for the a -> infinity limit
    double u = 0.0;
    std::optional<double> omega_f;
    std::optional<double> omega_b;
    std::size_t n_max = 0;
    CombinationMode mode = CombinationMode::trace_weighted;
    double value = 0.0;
};

struct EvalRequest {
    Measure measure = Measure::log_negativity;
    double alpha = 0.0;
    RindlerParams p_f = RindlerParams::from_thermal_factor(0.0);
    RindlerParams p_b = RindlerParams::from_thermal_factor(0.0);
    double eps_tail = 1e-10;
    std::optional<std::size_t> n_max;
    CombinationMode mode = CombinationMode::trace_weighted;
    CoefficientConvention convention = CoefficientConvention::positivity_fixed;
};

/// One measure at one parameter point through the anyon path.
///
/// At infinite bosonic acceleration (u_b = 1) only the analytic limits are
/// available: the fermionic values at alpha = 1 in trace_weighted mode and
/// zero (log-)negativity at alpha = 0. Other requests there throw
/// DomainError, as do bosonic thermal factors above kMaxBosonThermalFactor.
MeasureRecord evaluate(const EvalRequest &request);

/// Whether evaluate() has a finite analytic value at u_b = 1.
bool has_infinite_acceleration_limit(Measure m, double alpha, CombinationMode mode);

} // namespace rqi
