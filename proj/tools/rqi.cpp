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
// Command-line front end: measure, sweep, figure, wu, selfcheck.
#include "rqi/anyonstat.hpp"
#include "rqi/errors.hpp"
#include "rqi/measures.hpp"
#include "rqi/sweep.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <limits>
#include <optional>
#include <iostream>
#include <sstream>

namespace {

using namespace rqi;

int write_rows(const std::string &path, std::string_view label, const std::vector<MeasureRecord> &rows) {
    if (path.empty() || path == "-") {
        write_csv(std::cout, label, rows);
        return 0;
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        std::cerr << "error: cannot open '" << path << "' for writing\n";
        return 2;
    }
    write_csv(out, label, rows);
    out.flush();
    if (!out) {
        std::cerr << "error: failed writing '" << path << "'\n";
        return 2;
    }
    return 0;
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw DomainError("cannot read config file '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

double parse_acceleration(const std::string &text) {
    if (text == "inf" || text == "infinity") {
        return std::numeric_limits<double>::infinity();
    }
    std::size_t used = 0;
    const double a = std::stod(text, &used);
    if (used != text.size()) {
        throw DomainError("acceleration must be a number or 'inf', got '" + text + "'");
    }
    return a;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Entanglement and coherence of accelerated boson, fermion and anyon modes"};
    app.require_subcommand(1);

    // measure
    auto *measure_cmd = app.add_subcommand("measure", "Evaluate one measure at one parameter point");
    std::string m_measure = "log_negativity";
    double m_alpha = 0.0;
    std::string m_accel;
    double m_omega = 1.0;
    double m_eps = 1e-10;
    std::optional<std::size_t> m_nmax;
    std::string m_mode = "trace_weighted";
    std::string m_conv = "positivity_fixed";
    measure_cmd->add_option("--measure", m_measure, "entropy | negativity | log_negativity | coherence");
    measure_cmd->add_option("--alpha", m_alpha, "Statistical parameter in [0,1]")->required();
    measure_cmd->add_option("-a,--acceleration", m_accel, "Acceleration (a number or 'inf')")->required();
    measure_cmd->add_option("--omega", m_omega, "Mode frequency");
    measure_cmd->add_option("--eps-tail", m_eps, "Bosonic truncation tail bound");
    measure_cmd->add_option("--n-max", m_nmax, "Override the bosonic truncation");
    measure_cmd->add_option("--mode", m_mode, "literal | trace_weighted");
    measure_cmd->add_option("--convention", m_conv, "positivity_fixed | paper_literal");

    // sweep
    auto *sweep_cmd = app.add_subcommand("sweep", "Evaluate a parameter grid and write CSV");
    std::string s_config;
    std::size_t s_workers = 0;
    sweep_cmd->add_option("-c,--config", s_config, "key = value config file; flags override it");
    sweep_cmd->add_option("--workers", s_workers, "Worker threads (default: RQI_WORKERS or hardware)");
    std::vector<std::pair<std::string, std::string>> s_flags;
    for (std::string_view key : config_keys()) {
        s_flags.emplace_back(std::string(key), std::string());
    }
    for (std::size_t i = 0; i < s_flags.size(); ++i) {
        std::string flag = "--" + s_flags[i].first;
        std::replace(flag.begin(), flag.end(), '_', '-');
        if (s_flags[i].first == "output") {
            flag = "-o," + flag;
        }
        sweep_cmd->add_option(flag, s_flags[i].second, "Config key '" + s_flags[i].first + "'");
    }

    // figure
    auto *figure_cmd = app.add_subcommand("figure", "Write the dataset for one figure preset");
    std::string f_id;
    std::string f_out;
    std::size_t f_workers = 0;
    figure_cmd->add_option("figure", f_id, "fig1 .. fig7")->required();
    figure_cmd->add_option("-o,--output", f_out, "Output CSV path (default stdout)");
    figure_cmd->add_option("--workers", f_workers, "Worker threads (default: RQI_WORKERS or hardware)");

    // wu
    auto *wu_cmd = app.add_subcommand("wu", "Solve the fractional-exclusion distribution");
    double w_x = 0.0;
    double w_alpha = 0.0;
    double w_eps = 0.0;
    double w_mu = 0.0;
    double w_kt = 1.0;
    auto *x_opt = wu_cmd->add_option("-x,--x", w_x, "Argument exp((epsilon - mu) / kT)");
    wu_cmd->add_option("--alpha", w_alpha, "Statistical parameter in [0,1]")->required();
    auto *eps_opt = wu_cmd->add_option("--epsilon", w_eps, "Single-particle energy");
    wu_cmd->add_option("--mu", w_mu, "Chemical potential");
    wu_cmd->add_option("--kT", w_kt, "Temperature in energy units");
    x_opt->excludes(eps_opt);

    auto *self_cmd = app.add_subcommand("selfcheck", "Run the invariant suite");

    CLI11_PARSE(app, argc, argv);

    try {
        if (measure_cmd->parsed()) {
            EvalRequest r;
            r.measure = parse_measure(m_measure);
            r.alpha = m_alpha;
            const double a = parse_acceleration(m_accel);
            r.p_f = RindlerParams::from_acceleration(a, m_omega);
            r.p_b = r.p_f;
            r.eps_tail = m_eps;
            r.n_max = m_nmax;
            r.mode = parse_mode(m_mode);
            r.convention = parse_convention(m_conv);
            const MeasureRecord rec = evaluate(r);
            write_csv_header(std::cout);
            write_csv_row(std::cout, "point", rec);
            return 0;
        }
        if (sweep_cmd->parsed()) {
            SweepConfig config;
            if (!s_config.empty()) {
                for (const auto &a : parse_config_text(read_file(s_config))) {
                    apply_assignment(config, a);
                }
            }
            for (const auto &[key, value] : s_flags) {
                std::string flag = "--" + key;
                std::replace(flag.begin(), flag.end(), '_', '-');
                if (sweep_cmd->count(flag) > 0) {
                    apply_assignment(config, {key, value});
                }
            }
            const auto rows = run_sweep(config, s_workers);
            return write_rows(config.output_path, config.label, rows);
        }
        if (figure_cmd->parsed()) {
            const SweepConfig config = figure_preset(f_id);
            const auto rows = run_sweep(config, f_workers);
            return write_rows(f_out, config.label, rows);
        }
        if (wu_cmd->parsed()) {
            const WuQuery q = x_opt->count() > 0 ? WuQuery{w_x, w_alpha}
                                                 : WuQuery::from_energy(w_eps, w_mu, w_kt, w_alpha);
            const double omega = wu_omega(q.x, q.alpha);
            std::cout << "x,alpha,omega,occupation\n"
                      << format_real(q.x) << ',' << format_real(q.alpha) << ',' << format_real(omega) << ','
                      << format_real(1.0 / (omega + q.alpha)) << '\n';
            return 0;
        }
        if (self_cmd->parsed()) {
            int failed = 0;
            for (const auto &r : run_selfcheck()) {
                if (r.passed) {
                    std::cout << "PASS " << r.name << '\n';
                } else {
                    ++failed;
                    std::cout << "FAIL " << r.name << ": " << r.detail << '\n';
                }
            }
            std::cout << (failed == 0 ? "all invariants hold\n" : std::to_string(failed) + " invariant(s) failed\n");
            return failed == 0 ? 0 : 1;
        }
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
