// Copyright 2026 The compread Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Config-driven experiment harness.
 *
 * A run is described by one JSON document. Example:
 *
 * @code{.json}
 * {
 *   "task": "sweep_n",
 *   "state": {"kind": "all_ones"},
 *   "profile": "zuchongzhi-2.0",
 *   "readout": {"mode": "symmetric"},
 *   "architecture": "fully_connected",
 *   "n": {"min": 2, "max": 1000},
 *   "mode": "exact",
 *   "seed": 1
 * }
 * @endcode
 *
 * Rates resolve field by field: explicit readout.xi / readout.e0 /
 * readout.e1 / gamma win over the named profile, which wins over zero.
 * Haar states without an explicit seed are redrawn for every repetition
 * from the (seed, repetition, n) substream; with state.seed set one state
 * per n is shared by all repetitions.
 */
#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "compread/circuit.hpp"
#include "compread/engines.hpp"
#include "compread/noise.hpp"
#include "compread/results.hpp"
#include "compread/state.hpp"

namespace compread {

enum class Task { Single, SweepN, SweepShots, AdvantageMap, Crossover };
enum class ReadoutMode { Symmetric, Asymmetric };
enum class RunMode { Exact, Sampled, Both };
enum class AxisScale { Linear, Log };

std::string_view to_string(Task task) noexcept;
Task parse_task(std::string_view name);

struct Axis {
    double min = 0.0;
    double max = 0.0;
    unsigned points = 1;
    AxisScale scale = AxisScale::Log;

    /// Throws std::invalid_argument for a degenerate axis.
    [[nodiscard]] std::vector<double> values() const;
};

struct ExperimentConfig {
    Task task = Task::Single;
    std::string name;
    std::string description;

    StateSpec state = spec::AllOnes{};
    /// Draw a fresh Haar state per repetition (state.kind = haar, no seed).
    bool haar_per_repetition = false;

    std::optional<std::string> profile;
    ReadoutMode readout_mode = ReadoutMode::Symmetric;
    std::optional<double> xi;
    std::optional<double> e0;
    std::optional<double> e1;
    std::optional<double> gamma;

    Architecture architecture = Architecture::FullyConnected;
    std::optional<std::uint64_t> gate_count;

    std::vector<unsigned> n_values;
    RunMode mode = RunMode::Exact;
    std::vector<Method> methods{Method::Direct, Method::Compression};
    std::uint64_t shots = 1'000'000;
    std::vector<std::uint64_t> shot_ladder;
    unsigned repetitions = 1;
    std::uint64_t seed = 1;
    unsigned dense_cap = kDefaultDenseCap;
    std::optional<double> target_error;

    Axis gamma_axis;
    Axis rate_axis;

    std::string output;
    OutputFormat format = OutputFormat::Csv;

    /// Readout model after profile/explicit resolution.
    [[nodiscard]] ReadoutErrorModel readout() const;
    [[nodiscard]] double resolved_gamma() const;
    [[nodiscard]] CompressionSetup compression_setup() const;
    /// Checks ranges and cross-field requirements of the task.
    void validate() const;
};

/// Throws std::invalid_argument naming the offending key.
ExperimentConfig parse_config(const nlohmann::json &document);

/// Reads a JSON file; errors carry the path.
nlohmann::json load_config_document(const std::filesystem::path &path);

/// Applies "a.b.c=value" to a document. The value is parsed as JSON when
/// it parses, else taken as a string. Intermediate objects are created.
void apply_override(nlohmann::json &document, std::string_view assignment);

/// Increasing, duplicate-free ladder min * 10^(j / per_decade), rounded.
std::vector<std::uint64_t> log_ladder(std::uint64_t min, std::uint64_t max,
                                      unsigned per_decade);

/// Options that do not change results.
struct RunOptions {
    unsigned threads = 1;
};

/// Single configuration, one ReadoutResult per method and repetition.
std::vector<ReadoutResult> run_simulate(const ExperimentConfig &config,
                                        const RunOptions &options = {});

ResultTable run_sweep_n(const ExperimentConfig &config, const RunOptions &options = {});
ResultTable run_sweep_shots(const ExperimentConfig &config,
                            const RunOptions &options = {});
ResultTable run_advantage_map(const ExperimentConfig &config,
                              const RunOptions &options = {});
ResultTable run_crossover(const ExperimentConfig &config,
                          const RunOptions &options = {});

/// Dispatches on config.task. Single runs become one row per method.
ResultTable run_experiment(const ExperimentConfig &config,
                           const RunOptions &options = {});

/// Least-squares fit y = slope * x + intercept.
struct LineFit {
    double slope;
    double intercept;
};
LineFit fit_line(const std::vector<double> &x, const std::vector<double> &y);

/// Shot count where a decreasing error curve first reaches `target`,
/// interpolated linearly in (log10 shots, error) between the bracketing
/// rungs. Empty if no rung reaches it.
std::optional<double> reach_shots(const std::vector<std::uint64_t> &ladder,
                                  const std::vector<double> &errors, double target);

} // namespace compread
