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
 * @file sweep.hpp
 * Parameter grids, figure presets, the key=value config format and the
 * CSV writer behind the command-line tool.
 */
#pragma once

#include "rqi/measures.hpp"
#include "rqi/unruh.hpp"

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rqi {

enum class Spacing { linear, log };

struct SweepConfig {
    Measure measure = Measure::log_negativity;
    std::vector<double> alpha_list;
    double a_min = 0.1;
    double a_max = 30.0;
    std::size_t a_steps = 120;
    Spacing a_spacing = Spacing::log;
    double omega = 1.0;
    double eps_tail = 1e-10;
    std::optional<std::size_t> n_max_override;
    CombinationMode mode = CombinationMode::trace_weighted;
    CoefficientConvention convention = CoefficientConvention::positivity_fixed;
    /// Emit a = inf rows for every alpha with an analytic limit.
    bool limit_rows = true;
    std::string label = "sweep";  ///< value of the CSV `figure` column
    std::string output_path;

    /// Throws DomainError describing the first violated constraint.
    void validate() const;
};

/// One field assignment from a config file or a command-line flag.
struct ConfigAssignment {
    std::string key;
    std::string value;
};

/// Parses `key = value` lines; `#` starts a comment. Throws DomainError
/// with the line number on malformed lines.
std::vector<ConfigAssignment> parse_config_text(std::string_view text);

/// Applies one assignment. Unknown keys throw DomainError.
void apply_assignment(SweepConfig &config, const ConfigAssignment &assignment);

/// Known config keys, in documentation order.
std::span<const std::string_view> config_keys();

inline constexpr std::string_view kCsvHeader = "figure,measure,alpha,acceleration,omega,n_max,mode,value";

/// Figure ids fig1 .. fig7.
std::span<const std::string_view> figure_ids();

/// Throws DomainError for unknown ids.
SweepConfig figure_preset(std::string_view figure_id);

std::vector<double> acceleration_grid(const SweepConfig &config);

/// Evaluates the grid on a bounded worker pool and returns rows sorted by
/// (alpha, acceleration); limit rows sort last. workers = 0 picks the
/// RQI_WORKERS environment variable or the hardware concurrency.
std::vector<MeasureRecord> run_sweep(const SweepConfig &config, std::size_t workers = 0);

/// %.17g, with `inf` for infinities.
std::string format_real(double v);

void write_csv_header(std::ostream &out);
void write_csv_row(std::ostream &out, std::string_view label, const MeasureRecord &record);
void write_csv(std::ostream &out, std::string_view label, const std::vector<MeasureRecord> &rows);

/// Worker count from RQI_WORKERS, else hardware concurrency (at least 1).
std::size_t default_workers();

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// The invariant suite behind `selfcheck`.
std::vector<CheckResult> run_selfcheck();

} // namespace rqi
