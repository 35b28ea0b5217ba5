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
// Invariant suite run by `rqi selfcheck`. Each check is self-contained and
// reports a short detail string on failure.
#include "rqi/anyonstat.hpp"
#include "rqi/block_matrix.hpp"
#include "rqi/errors.hpp"
#include "rqi/kernels.hpp"
#include "rqi/measures.hpp"
#include "rqi/sweep.hpp"
#include "rqi/unruh.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>

namespace rqi {
namespace {

using Check = std::function<std::string()>;  // empty string means pass

SymMatrix random_symmetric(std::mt19937_64 &rng, std::size_t n, bool psd) {
    std::normal_distribution<double> g(0.0, 1.0);
    std::vector<double> x(n * n);
    for (auto &v : x) {
        v = g(rng);
    }
    SymMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            double v = 0.0;
            if (psd) {
                for (std::size_t k = 0; k < n; ++k) {
                    v += x[i * n + k] * x[j * n + k];
                }
            } else {
                v = 0.5 * (x[i * n + j] + x[j * n + i]);
            }
            m.set(i, j, v);
        }
    }
    return m;
}

bool multiset_close(std::vector<double> a, std::vector<double> b, double tol) {
    if (a.size() != b.size()) {
        return false;
    }
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (std::abs(a[i] - b[i]) > tol) {
            return false;
        }
    }
    return true;
}

std::string residual_problem(const SymMatrix &m, std::string_view what) {
    JacobiOptions opt;
    opt.vectors = true;
    const auto eig = eigen_sym(m, opt);
    const double scale = std::max(1.0, m.frobenius_norm());
    const double r = max_residual(m, eig);
    double sum = 0.0;
    for (double v : eig.values) {
        sum += v;
    }
    if (r > kEigenTol * scale) {
        return std::string(what) + ": residual " + format_real(r);
    }
    if (std::abs(sum - trace(m)) > static_cast<double>(m.dim()) * kEigenTol * scale) {
        return std::string(what) + ": eigenvalue sum differs from trace";
    }
    return {};
}

std::string check_kernels() {
    const kernels::KernelTable &ref = kernels::scalar_table();
    const kernels::KernelTable &act = kernels::active();
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    for (std::size_t n : {1u, 3u, 4u, 7u, 16u, 33u}) {
        std::vector<double> x(n), y(n);
        for (std::size_t i = 0; i < n; ++i) {
            x[i] = d(rng);
            y[i] = d(rng);
        }
        auto x1 = x, y1 = y, x2 = x, y2 = y;
        ref.rotate(x1, y1, 0.6, 0.8);
        act.rotate(x2, y2, 0.6, 0.8);
        if (x1 != x2 || y1 != y2) {
            return std::string("rotate differs between scalar and ") + std::string(act.name);
        }
        const double r = ref.dot(x, y);
        const double a = act.dot(x, y);
        if (std::abs(r - a) > 1e-14 * static_cast<double>(n)) {
            return std::string("dot differs between scalar and ") + std::string(act.name);
        }
    }
    return {};
}

std::string check_residuals() {
    for (double a : {0.1, 1.0, 5.0, 100.0}) {
        const auto p = RindlerParams::from_acceleration(a, 1.0);
        const SymMatrix f = fermion_state(p);
        if (auto e = residual_problem(f, "fermion_state"); !e.empty()) {
            return e;
        }
        if (auto e = residual_problem(partial_transpose_alice(f, {2, 2}), "fermion PT"); !e.empty()) {
            return e;
        }
    }
    const auto p = RindlerParams::from_thermal_factor(0.5);
    const SymMatrix b = boson_state_truncated(p, 30, CoefficientConvention::positivity_fixed);
    if (auto e = residual_problem(b, "boson_state_truncated"); !e.empty()) {
        return e;
    }
    if (auto e = residual_problem(partial_transpose_alice(b, boson_dims(30)), "boson PT"); !e.empty()) {
        return e;
    }
    AnyonCombination comb;
    comb.alpha = 0.3;
    comb.n_max = 5;
    for (std::size_t n : {0u, 2u, 5u}) {
        if (auto e = residual_problem(anyon_block(n, comb, p, p).matrix, "anyon_block"); !e.empty()) {
            return e;
        }
    }
    std::mt19937_64 rng(11);
    for (std::size_t n : {2u, 5u, 12u}) {
        if (auto e = residual_problem(random_symmetric(rng, n, false), "random symmetric"); !e.empty()) {
            return e;
        }
    }
    return {};
}

std::string check_kron_mixed_product() {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 5; ++trial) {
        const SymMatrix a = random_symmetric(rng, 2, false);
        const SymMatrix b = random_symmetric(rng, 3, false);
        const Spectrum sa = eigvals_sym(a);
        const Spectrum sb = eigvals_sym(b);
        std::vector<double> products;
        for (double x : sa.values()) {
            for (double y : sb.values()) {
                products.push_back(x * y);
            }
        }
        const Spectrum sk = eigvals_sym(kron(a, b));
        if (!multiset_close({sk.values().begin(), sk.values().end()}, products, 1e-10)) {
            return "eigvals(kron(A,B)) differ from pairwise products";
        }
    }
    return {};
}

std::string check_partial_transpose() {
    std::mt19937_64 rng(5);
    const SymMatrix m = random_symmetric(rng, 6, true);
    const SymMatrix pt = partial_transpose_alice(m, {2, 3});
    if (!(partial_transpose_alice(pt, {2, 3}) == m)) {
        return "not an involution";
    }
    if (std::abs(trace(pt) - trace(m)) > 1e-12) {
        return "trace not preserved";
    }
    return {};
}

std::string check_tensor_entropy() {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 5; ++trial) {
        const SymMatrix a = random_symmetric(rng, 2, true);
        const SymMatrix b = random_symmetric(rng, 3, true);
        const double lhs = entropy_state(kron(a, b));
        const double rhs = trace(a) * entropy_state(b) + trace(b) * entropy_state(a);
        if (std::abs(lhs - rhs) > 1e-9 * std::max(1.0, std::abs(lhs))) {
            return "S(A x B) != tr(A) S(B) + tr(B) S(A)";
        }
    }
    return {};
}

std::string check_fermion_spectrum() {
    for (int i = 0; i < 50; ++i) {
        const double a = 0.1 * std::pow(1000.0, i / 49.0);
        const auto p = RindlerParams::from_acceleration(a, 1.0);
        const auto closed = fermion_closed_form_spectrum(p);
        const Spectrum s = eigvals_sym(fermion_state(p));
        for (std::size_t k = 0; k < 4; ++k) {
            if (std::abs(s.values()[k] - closed[k]) > 1e-10) {
                return "fermion spectrum off closed form at a = " + format_real(a);
            }
        }
    }
    return {};
}

std::string check_boson_blocks() {
    for (double u : {0.1, 0.5, 0.9}) {
        const auto p = RindlerParams::from_thermal_factor(u);
        for (std::size_t n = 0; n < 20; ++n) {
            const auto fixed = boson_block(n, p, CoefficientConvention::positivity_fixed);
            if (std::abs(fixed.spectrum.eigenvalues[1]) > 1e-14 * fixed.spectrum.block_trace) {
                return "positivity_fixed block is not rank one";
            }
            if (n >= 1) {
                const auto lit = boson_block(n, p, CoefficientConvention::paper_literal);
                if (!(lit.spectrum.eigenvalues[1] < 0.0)) {
                    return "paper_literal block n >= 1 is not indefinite";
                }
            }
        }
        if (boson_tail(choose_truncation(p, 1e-10), u) > 1e-10) {
            return "truncation tail above bound";
        }
    }
    const auto p = RindlerParams::from_thermal_factor(0.5);
    const auto dense = eigvals_sym(boson_state_truncated(p, 25, CoefficientConvention::positivity_fixed));
    const auto blocks = eigvals_sym(boson_state_blocks(p, 25, CoefficientConvention::positivity_fixed));
    if (!multiset_close({dense.values().begin(), dense.values().end()},
                        {blocks.values().begin(), blocks.values().end()}, 1e-14)) {
        return "dense and blockwise bosonic spectra differ";
    }
    return {};
}

std::string check_anyon_kronecker_sum() {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> d(0.0, 1.0);
    for (int trial = 0; trial < 10; ++trial) {
        AnyonCombination comb;
        comb.alpha = d(rng);
        comb.n_max = 6;
        comb.mode = trial % 2 ? CombinationMode::literal : CombinationMode::trace_weighted;
        const auto pf = RindlerParams::from_thermal_factor(0.95 * d(rng));
        const auto pb = RindlerParams::from_thermal_factor(0.95 * d(rng));
        const auto block = anyon_block(static_cast<std::size_t>(trial % 7), comb, pf, pb);
        const Spectrum dense = eigvals_sym(block.matrix);
        if (!multiset_close({dense.values().begin(), dense.values().end()},
                            {block.paired.values().begin(), block.paired.values().end()}, 1e-10)) {
            return "anyon block spectrum is not the pairwise sum";
        }
    }
    return {};
}

std::string check_reductions() {
    for (double u : {0.2, 0.6, 0.9}) {
        const auto p = RindlerParams::from_thermal_factor(u);
        AnyonCombination comb;
        comb.n_max = choose_truncation(p, 1e-10);
        const BlockSymMatrix boson = boson_state_blocks(p, comb.n_max, comb.convention);
        const SymMatrix fermion = fermion_state(p);
        for (auto mode : {CombinationMode::literal, CombinationMode::trace_weighted}) {
            comb.mode = mode;
            comb.alpha = 0.0;
            if (std::abs(entropy_anyon(comb, p, p) - entropy_state(boson)) > 1e-12 ||
                std::abs(negativity_anyon(comb, p, p) - negativity_state(boson, boson_dims(comb.n_max))) > 1e-12 ||
                std::abs(coherence_anyon(comb, p, p) - coherence_rel_entropy(boson)) > 1e-12) {
                return "alpha = 0 does not reduce to the boson at u = " + format_real(u);
            }
        }
        comb.mode = CombinationMode::trace_weighted;
        comb.alpha = 1.0;
        if (std::abs(entropy_anyon(comb, p, p) - entropy_state(fermion)) > 1e-12 ||
            std::abs(negativity_anyon(comb, p, p) - negativity_state(fermion, {2, 2})) > 1e-12 ||
            std::abs(coherence_anyon(comb, p, p) - coherence_rel_entropy(fermion)) > 1e-12) {
            return "alpha = 1 does not reduce to the fermion at u = " + format_real(u);
        }
    }
    return {};
}

double anyon_value(Measure m, double alpha, double a) {
    EvalRequest r;
    r.measure = m;
    r.alpha = alpha;
    r.p_f = RindlerParams::from_acceleration(a, 1.0);
    r.p_b = r.p_f;
    return evaluate(r).value;
}

std::string check_limits() {
    const SymMatrix bell = fermion_state(RindlerParams::from_thermal_factor(0.0));
    const SymMatrix hot = fermion_state(RindlerParams::from_thermal_factor(1.0));
    if (std::abs(log_negativity(negativity_state(bell, {2, 2})) - 1.0) > 1e-9) {
        return "fermion log-negativity at u = 0 is not 1";
    }
    if (std::abs(log_negativity(negativity_state(hot, {2, 2})) - std::log2(1.5)) > 1e-9) {
        return "fermion log-negativity at u = 1 is not log2(3/2)";
    }
    double previous = 2.0;
    for (int i = 0; i <= 19; ++i) {
        const double u = 0.05 * i;
        const auto p = RindlerParams::from_thermal_factor(u);
        const std::size_t n_max = choose_truncation(p, 1e-10);
        const double en = log_negativity(negativity_state(boson_state_blocks(p, n_max, CoefficientConvention::positivity_fixed),
                                                          boson_dims(n_max)));
        if (en > previous) {
            return "boson log-negativity increases at u = " + format_real(u);
        }
        previous = en;
    }
    return {};
}

std::string check_orderings() {
    const std::vector<double> grid{0.0, 0.2, 0.4, 0.5, 0.8, 0.9, 1.0};
    auto values = [&](Measure m, double a) {
        std::vector<double> v;
        for (double alpha : grid) {
            v.push_back(anyon_value(m, alpha, a));
        }
        return v;
    };
    const auto low = values(Measure::log_negativity, 2.0);
    if (std::min_element(low.begin(), low.end()) - low.begin() != 3) {
        return "log-negativity at a = 2 not minimal at alpha = 0.5";
    }
    if (!(anyon_value(Measure::log_negativity, 0.2, 50.0) < anyon_value(Measure::log_negativity, 0.8, 50.0))) {
        return "log-negativity at a = 50: alpha = 0.2 not below alpha = 0.8";
    }
    for (double a : {2.0, 10.0, 50.0}) {
        const auto c = values(Measure::coherence, a);
        if (std::min_element(c.begin(), c.end()) - c.begin() != 3 ||
            std::max_element(c.begin(), c.end()) - c.begin() != 0 || *std::min_element(c.begin(), c.end()) <= 0.0) {
            return "coherence ordering fails at a = " + format_real(a);
        }
    }
    return {};
}

std::string check_wu() {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> alpha_d(0.0, 1.0);
    std::uniform_real_distribution<double> logx_d(std::log(1.01), std::log(100.0));
    for (int i = 0; i < 200; ++i) {
        const double x = std::exp(logx_d(rng));
        const double alpha = alpha_d(rng);
        const double w = wu_omega(x, alpha);
        if (!(std::abs(wu_residual(w, x, alpha)) <= kWuTol * x)) {
            return "Wu residual above tolerance at x = " + format_real(x) + ", alpha = " + format_real(alpha);
        }
    }
    if (std::abs(wu_occupation({2.0, 0.0}) - 1.0) > 1e-12 || std::abs(wu_occupation({2.0, 1.0}) - 1.0 / 3.0) > 1e-12) {
        return "Wu endpoints do not reproduce Bose-Einstein / Fermi-Dirac";
    }
    return {};
}

} // namespace

std::vector<CheckResult> run_selfcheck() {
    const std::vector<std::pair<std::string, Check>> checks{
        {"kernels.scalar_equivalence", check_kernels},
        {"eigen.residual_contract", check_residuals},
        {"kron.mixed_product", check_kron_mixed_product},
        {"partial_transpose.involution_trace", check_partial_transpose},
        {"entropy.tensor_identity", check_tensor_entropy},
        {"fermion.closed_form_spectrum", check_fermion_spectrum},
        {"boson.blocks_and_truncation", check_boson_blocks},
        {"anyon.kronecker_sum_spectrum", check_anyon_kronecker_sum},
        {"anyon.reductions", check_reductions},
        {"measures.limits_and_decay", check_limits},
        {"measures.orderings", check_orderings},
        {"wu.residual_and_endpoints", check_wu},
    };
    std::vector<CheckResult> results;
    for (const auto &[name, check] : checks) {
        CheckResult r{name, false, {}};
        try {
            r.detail = check();
            r.passed = r.detail.empty();
        } catch (const std::exception &e) {
            r.detail = std::string("exception: ") + e.what();
        }
        results.push_back(std::move(r));
    }
    return results;
}

} // namespace rqi
