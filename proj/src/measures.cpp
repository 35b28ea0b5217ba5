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
#include "rqi/measures.hpp"

#include "rqi/errors.hpp"

#include <cmath>
#include <string>

namespace rqi {

std::string_view to_string(Measure m) {
    switch (m) {
    case Measure::entropy:
        return "entropy";
    case Measure::negativity:
        return "negativity";
    case Measure::log_negativity:
        return "log_negativity";
    case Measure::coherence:
        return "coherence";
    }
    return "unknown";
}

std::string_view to_string(CombinationMode m) {
    return m == CombinationMode::literal ? "literal" : "trace_weighted";
}

std::string_view to_string(CoefficientConvention c) {
    return c == CoefficientConvention::paper_literal ? "paper_literal" : "positivity_fixed";
}

Measure parse_measure(std::string_view s) {
    for (Measure m : {Measure::entropy, Measure::negativity, Measure::log_negativity, Measure::coherence}) {
        if (s == to_string(m)) {
            return m;
        }
    }
    throw DomainError("unknown measure '" + std::string(s) + "'");
}

CombinationMode parse_mode(std::string_view s) {
    if (s == "literal") {
        return CombinationMode::literal;
    }
    if (s == "trace_weighted") {
        return CombinationMode::trace_weighted;
    }
    throw DomainError("unknown combination mode '" + std::string(s) + "'");
}

CoefficientConvention parse_convention(std::string_view s) {
    if (s == "paper_literal") {
        return CoefficientConvention::paper_literal;
    }
    if (s == "positivity_fixed") {
        return CoefficientConvention::positivity_fixed;
    }
    throw DomainError("unknown coefficient convention '" + std::string(s) + "'");
}

double entropy_state(const SymMatrix &m) { return shannon_entropy_b2(eigvals_sym(m)); }

double entropy_state(const BlockSymMatrix &m) { return shannon_entropy_b2(eigvals_sym(m)); }

double negativity_from_spectrum(const Spectrum &s, bool quarter) {
    double n = 0.0;
    for (double v : s.values()) {
        n += 0.5 * (std::abs(v) - v);
    }
    return quarter ? 0.25 * n : n;
}

double log_negativity(double negativity) {
    if (!(negativity >= 0.0)) {
        throw DomainError("log_negativity: negativity must be nonnegative, got " + std::to_string(negativity));
    }
    return std::log2(1.0 + 2.0 * negativity);
}

double negativity_state(const SymMatrix &m, BipartiteDims dims) {
    return negativity_from_spectrum(eigvals_sym(partial_transpose_alice(m, dims)), false);
}

double negativity_state(const BlockSymMatrix &m, BipartiteDims dims) {
    return negativity_from_spectrum(eigvals_sym(partial_transpose_alice(m, dims)), false);
}

double coherence_rel_entropy(const SymMatrix &m) {
    return entropy_state(diagonal_part(m)) - entropy_state(m);
}

double coherence_rel_entropy(const BlockSymMatrix &m) {
    return shannon_entropy_b2(m.diagonal()) - entropy_state(m);
}

namespace {

double label_entropy(const std::vector<double> &weights) {
    double h = 0.0;
    for (double w : weights) {
        if (w > 0.0) {
            h -= w * std::log2(w);
        }
    }
    return h;
}

/// Quarter-convention entropy of a paired family, label term removed in
/// trace_weighted mode.
double paired_entropy(const std::vector<double> &values, const AnyonPairedSpectra &spectra,
                      const AnyonCombination &comb) {
    double s = 0.25 * shannon_entropy_b2(Spectrum(values));
    if (comb.mode == CombinationMode::trace_weighted) {
        s -= comb.alpha * label_entropy(spectra.weights);
    }
    return s;
}

} // namespace

double entropy_anyon(const AnyonCombination &comb, const RindlerParams &p_f, const RindlerParams &p_b) {
    const AnyonPairedSpectra spectra = anyon_paired_spectra(comb, p_f, p_b);
    return paired_entropy(spectra.state, spectra, comb);
}

double negativity_anyon(const AnyonCombination &comb, const RindlerParams &p_f, const RindlerParams &p_b) {
    return negativity_from_spectrum(anyon_pt_spectrum(comb, p_f, p_b), true);
}

double coherence_anyon(const AnyonCombination &comb, const RindlerParams &p_f, const RindlerParams &p_b) {
    const AnyonPairedSpectra spectra = anyon_paired_spectra(comb, p_f, p_b);
    return paired_entropy(spectra.diagonal, spectra, comb) - paired_entropy(spectra.state, spectra, comb);
}

bool has_infinite_acceleration_limit(Measure m, double alpha, CombinationMode mode) {
    if (alpha == 1.0 && mode == CombinationMode::trace_weighted) {
        return true;
    }
    return alpha == 0.0 && (m == Measure::negativity || m == Measure::log_negativity);
}

namespace {

double fermion_measure(Measure m, const RindlerParams &p_f) {
    const SymMatrix rho = fermion_state(p_f);
    switch (m) {
    case Measure::entropy:
        return entropy_state(rho);
    case Measure::negativity:
        return negativity_state(rho, {2, 2});
    case Measure::log_negativity:
        return log_negativity(negativity_state(rho, {2, 2}));
    case Measure::coherence:
        return coherence_rel_entropy(rho);
    }
    return 0.0;
}

} // namespace

MeasureRecord evaluate(const EvalRequest &request) {
    MeasureRecord record;
    record.measure = request.measure;
    record.alpha = request.alpha;
    record.acceleration = request.p_b.acceleration();
    record.u = request.p_b.u();
    record.omega_f = request.p_f.omega();
    record.omega_b = request.p_b.omega();
    record.mode = request.mode;

    if (!(request.alpha >= 0.0 && request.alpha <= 1.0)) {
        throw DomainError("evaluate: alpha must lie in [0,1], got " + std::to_string(request.alpha));
    }

    if (request.p_b.infinite_acceleration()) {
        if (!has_infinite_acceleration_limit(request.measure, request.alpha, request.mode)) {
            throw DomainError("evaluate: " + std::string(to_string(request.measure)) + " at alpha = " +
                              std::to_string(request.alpha) + " (" + std::string(to_string(request.mode)) +
                              ") has no finite infinite-acceleration limit");
        }
        record.n_max = 0;
        record.value = request.alpha == 1.0 ? fermion_measure(request.measure, request.p_f) : 0.0;
        return record;
    }
    if (request.p_b.u() > kMaxBosonThermalFactor) {
        throw DomainError("evaluate: bosonic thermal factor " + std::to_string(request.p_b.u()) +
                          " exceeds the supported maximum 1 - 1e-6");
    }

    AnyonCombination comb;
    comb.alpha = request.alpha;
    comb.mode = request.mode;
    comb.convention = request.convention;
    comb.n_max = request.n_max ? *request.n_max : choose_truncation(request.p_b, request.eps_tail);
    record.n_max = comb.n_max;

    switch (request.measure) {
    case Measure::entropy:
        record.value = entropy_anyon(comb, request.p_f, request.p_b);
        break;
    case Measure::negativity:
        record.value = negativity_anyon(comb, request.p_f, request.p_b);
        break;
    case Measure::log_negativity:
        record.value = log_negativity(negativity_anyon(comb, request.p_f, request.p_b));
        break;
    case Measure::coherence:
        record.value = coherence_anyon(comb, request.p_f, request.p_b);
        break;
    }
    return record;
}

} // namespace rqi
