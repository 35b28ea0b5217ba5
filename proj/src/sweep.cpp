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
#include "rqi/sweep.hpp"

#include "rqi/errors.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <limits>
#include <mutex>
#include <ostream>
#include <thread>

namespace rqi {
namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parse_real(std::string_view key, std::string_view text) {
    text = trim(text);
    if (text == "inf" || text == "+inf") {
        return std::numeric_limits<double>::infinity();
    }
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
        throw DomainError("config: '" + std::string(key) + "' expects a number, got '" + std::string(text) + "'");
    }
    return v;
}

std::size_t parse_count(std::string_view key, std::string_view text) {
    text = trim(text);
    std::size_t v = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
        throw DomainError("config: '" + std::string(key) + "' expects a nonnegative integer, got '" +
                          std::string(text) + "'");
    }
    return v;
}

bool parse_bool(std::string_view key, std::string_view text) {
    text = trim(text);
    if (text == "true" || text == "1" || text == "yes") {
        return true;
    }
    if (text == "false" || text == "0" || text == "no") {
        return false;
    }
    throw DomainError("config: '" + std::string(key) + "' expects true or false, got '" + std::string(text) + "'");
}

std::vector<double> parse_real_list(std::string_view key, std::string_view text) {
    std::vector<double> out;
    text = trim(text);
    if (text.empty()) {
        return out;
    }
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        out.push_back(parse_real(key, text.substr(start, comma - start)));
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return out;
}

constexpr std::array<std::string_view, 14> kConfigKeys{
    "measure", "alpha", "a_min", "a_max", "a_steps", "a_spacing", "omega",
    "eps_tail", "n_max", "mode", "convention", "limit_rows", "label", "output"};

constexpr std::array<std::string_view, 7> kFigureIds{"fig1", "fig2", "fig3", "fig4", "fig5", "fig6", "fig7"};

std::vector<double> alpha_steps(int denominator) {
    std::vector<double> out;
    for (int i = 0; i <= denominator; ++i) {
        out.push_back(static_cast<double>(i) / denominator);
    }
    return out;
}

} // namespace

void SweepConfig::validate() const {
    if (alpha_list.empty()) {
        throw DomainError("sweep config: alpha list is empty");
    }
    for (double a : alpha_list) {
        if (!(a >= 0.0 && a <= 1.0)) {
            throw DomainError("sweep config: alpha " + format_real(a) + " outside [0,1]");
        }
    }
    if (!(a_min > 0.0) || !std::isfinite(a_max) || !(a_min < a_max)) {
        throw DomainError("sweep config: need 0 < a_min < a_max < inf, got a_min = " + format_real(a_min) +
                          ", a_max = " + format_real(a_max));
    }
    if (a_steps < 2) {
        throw DomainError("sweep config: a_steps must be at least 2");
    }
    if (!(omega > 0.0) || !std::isfinite(omega)) {
        throw DomainError("sweep config: omega must be positive and finite");
    }
    if (!(eps_tail > 0.0 && eps_tail < 1.0)) {
        throw DomainError("sweep config: eps_tail must lie in (0,1)");
    }
}

std::vector<ConfigAssignment> parse_config_text(std::string_view text) {
    std::vector<ConfigAssignment> out;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
        ++line_no;
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;

        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw DomainError("config line " + std::to_string(line_no) + ": expected 'key = value'");
        }
        const auto key = trim(line.substr(0, eq));
        if (key.empty()) {
            throw DomainError("config line " + std::to_string(line_no) + ": missing key");
        }
        out.push_back({std::string(key), std::string(trim(line.substr(eq + 1)))});
    }
    return out;
}

std::span<const std::string_view> config_keys() { return kConfigKeys; }

void apply_assignment(SweepConfig &c, const ConfigAssignment &a) {
    const std::string_view key = a.key;
    const std::string_view value = a.value;
    if (key == "measure") {
        c.measure = parse_measure(trim(value));
    } else if (key == "alpha") {
        c.alpha_list = parse_real_list(key, value);
    } else if (key == "a_min") {
        c.a_min = parse_real(key, value);
    } else if (key == "a_max") {
        c.a_max = parse_real(key, value);
    } else if (key == "a_steps") {
        c.a_steps = parse_count(key, value);
    } else if (key == "a_spacing") {
        const auto v = trim(value);
        if (v == "log") {
            c.a_spacing = Spacing::log;
        } else if (v == "linear") {
            c.a_spacing = Spacing::linear;
        } else {
            throw DomainError("config: a_spacing must be 'linear' or 'log', got '" + std::string(v) + "'");
        }
    } else if (key == "omega") {
        c.omega = parse_real(key, value);
    } else if (key == "eps_tail") {
        c.eps_tail = parse_real(key, value);
    } else if (key == "n_max") {
        c.n_max_override = parse_count(key, value);
    } else if (key == "mode") {
        c.mode = parse_mode(trim(value));
    } else if (key == "convention") {
        c.convention = parse_convention(trim(value));
    } else if (key == "limit_rows") {
        c.limit_rows = parse_bool(key, value);
    } else if (key == "label") {
        c.label = std::string(trim(value));
    } else if (key == "output") {
        c.output_path = std::string(trim(value));
    } else {
        throw DomainError("config: unknown key '" + std::string(key) + "'");
    }
}

std::span<const std::string_view> figure_ids() { return kFigureIds; }

SweepConfig figure_preset(std::string_view id) {
    SweepConfig c;
    c.label = std::string(id);
    c.omega = 1.0;
    c.a_min = 0.1;
    c.a_max = 30.0;
    c.a_steps = 120;
    c.a_spacing = Spacing::log;
    const std::vector<double> curves{0.0, 0.2, 0.4, 0.5, 0.8, 0.9, 1.0};
    if (id == "fig1") {
        c.measure = Measure::entropy;
        c.alpha_list = {0.0, 1.0};
    } else if (id == "fig2") {
        c.measure = Measure::log_negativity;
        c.alpha_list = {0.0, 1.0};
    } else if (id == "fig3") {
        c.measure = Measure::entropy;
        c.alpha_list = alpha_steps(20);
    } else if (id == "fig4") {
        c.measure = Measure::entropy;
        c.alpha_list = curves;
    } else if (id == "fig5") {
        // Entropy against alpha at three accelerations.
        c.measure = Measure::entropy;
        c.alpha_list = alpha_steps(100);
        c.a_min = 1.0;
        c.a_max = 10.0;
        c.a_steps = 3;
    } else if (id == "fig6") {
        c.measure = Measure::log_negativity;
        c.alpha_list = curves;
    } else if (id == "fig7") {
        c.measure = Measure::coherence;
        c.alpha_list = curves;
    } else {
        throw DomainError("unknown figure '" + std::string(id) + "' (expected fig1 .. fig7)");
    }
    return c;
}

std::vector<double> acceleration_grid(const SweepConfig &c) {
    c.validate();
    std::vector<double> grid(c.a_steps);
    const double last = static_cast<double>(c.a_steps - 1);
    for (std::size_t i = 0; i < c.a_steps; ++i) {
        const double f = static_cast<double>(i) / last;
        grid[i] = c.a_spacing == Spacing::log ? std::exp(std::log(c.a_min) + f * (std::log(c.a_max) - std::log(c.a_min)))
                                              : c.a_min + f * (c.a_max - c.a_min);
    }
    grid.front() = c.a_min;
    grid.back() = c.a_max;
    return grid;
}

std::size_t default_workers() {
    if (const char *env = std::getenv("RQI_WORKERS")) {
        std::size_t v = 0;
        const std::string_view s(env);
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec == std::errc() && ptr == s.data() + s.size() && v > 0) {
            return v;
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<MeasureRecord> run_sweep(const SweepConfig &c, std::size_t workers) {
    c.validate();
    const std::vector<double> grid = acceleration_grid(c);

    std::vector<EvalRequest> requests;
    for (double alpha : c.alpha_list) {
        auto request_at = [&](double a) {
            EvalRequest r;
            r.measure = c.measure;
            r.alpha = alpha;
            r.p_f = RindlerParams::from_acceleration(a, c.omega);
            r.p_b = RindlerParams::from_acceleration(a, c.omega);
            r.eps_tail = c.eps_tail;
            r.n_max = c.n_max_override;
            r.mode = c.mode;
            r.convention = c.convention;
            return r;
        };
        for (double a : grid) {
            requests.push_back(request_at(a));
        }
        if (c.limit_rows && has_infinite_acceleration_limit(c.measure, alpha, c.mode)) {
            requests.push_back(request_at(std::numeric_limits<double>::infinity()));
        }
    }

    std::vector<MeasureRecord> rows(requests.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t i = next++; i < requests.size(); i = next++) {
            try {
                rows[i] = evaluate(requests[i]);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
                next = requests.size();
            }
        }
    };
    const std::size_t pool = std::min(workers == 0 ? default_workers() : workers, requests.size());
    std::vector<std::thread> threads;
    for (std::size_t t = 1; t < pool; ++t) {
        threads.emplace_back(worker);
    }
    worker();
    for (auto &t : threads) {
        t.join();
    }
    if (failure) {
        std::rethrow_exception(failure);
    }

    std::sort(rows.begin(), rows.end(), [](const MeasureRecord &x, const MeasureRecord &y) {
        if (x.alpha != y.alpha) {
            return x.alpha < y.alpha;
        }
        return x.acceleration.value_or(0.0) < y.acceleration.value_or(0.0);
    });
    return rows;
}

std::string format_real(double v) {
    if (std::isinf(v)) {
        return v > 0 ? "inf" : "-inf";
    }
    if (std::isnan(v)) {
        return "nan";
    }
    std::array<char, 40> buf{};
    const int len = std::snprintf(buf.data(), buf.size(), "%.17g", v);
    return std::string(buf.data(), static_cast<std::size_t>(len));
}

void write_csv_header(std::ostream &out) { out << kCsvHeader << '\n'; }

void write_csv_row(std::ostream &out, std::string_view label, const MeasureRecord &r) {
    out << label << ',' << to_string(r.measure) << ',' << format_real(r.alpha) << ','
        << (r.acceleration ? format_real(*r.acceleration) : std::string()) << ','
        << (r.omega_b ? format_real(*r.omega_b) : std::string()) << ',' << r.n_max << ',' << to_string(r.mode) << ','
        << format_real(r.value) << '\n';
}

void write_csv(std::ostream &out, std::string_view label, const std::vector<MeasureRecord> &rows) {
    write_csv_header(out);
    for (const auto &r : rows) {
        write_csv_row(out, label, r);
    }
}

} // namespace rqi
