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


#include "compread/experiments.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

#include "compread/grid.hpp"
#include "compread/parallel.hpp"
#include "compread/rng.hpp"

namespace compread {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string &key, const std::string &what) {
    throw std::invalid_argument("config key '" + key + "': " + what);
}

void reject_unknown(const json &object, const std::string &where,
                    std::initializer_list<std::string_view> allowed) {
    if (!object.is_object()) {
        fail(where, "expected an object");
    }
    for (const auto &item : object.items()) {
        if (std::find(allowed.begin(), allowed.end(), item.key()) == allowed.end()) {
            fail(where.empty() ? item.key() : where + "." + item.key(), "unknown key");
        }
    }
}

double get_double(const json &value, const std::string &key) {
    if (!value.is_number()) {
        fail(key, "expected a number");
    }
    return value.get<double>();
}

std::uint64_t get_u64(const json &value, const std::string &key) {
    if (value.is_number_unsigned()) {
        return value.get<std::uint64_t>();
    }
    if (value.is_number_integer() && value.get<std::int64_t>() >= 0) {
        return static_cast<std::uint64_t>(value.get<std::int64_t>());
    }
    if (value.is_number_float()) {
        const double d = value.get<double>();
        if (d >= 0.0 && d < 0x1.0p64 && std::floor(d) == d) {
            return static_cast<std::uint64_t>(d);
        }
    }
    if (value.is_string()) {
        const std::string &s = value.get_ref<const std::string &>();
        std::size_t used = 0;
        try {
            const unsigned long long v = std::stoull(s, &used, 0);
            if (used == s.size() && !s.empty() && s.front() != '-') {
                return v;
            }
        } catch (const std::exception &) {
        }
    }
    fail(key, "expected a non-negative integer");
}

unsigned get_unsigned(const json &value, const std::string &key) {
    const std::uint64_t v = get_u64(value, key);
    if (v > std::numeric_limits<unsigned>::max()) {
        fail(key, "value too large");
    }
    return static_cast<unsigned>(v);
}

std::string get_string(const json &value, const std::string &key) {
    if (!value.is_string()) {
        fail(key, "expected a string");
    }
    return value.get<std::string>();
}

BasisIndex get_index(const json &value, const std::string &key) {
    if (value.is_string()) {
        try {
            BasisIndex index(value.get<std::string>());
            if (index < 0) {
                fail(key, "basis index must be non-negative");
            }
            return index;
        } catch (const std::invalid_argument &) {
            throw;
        } catch (const std::exception &) {
            fail(key, "not an integer");
        }
    }
    return BasisIndex(get_u64(value, key));
}

Amplitude get_amplitude(const json &value, const std::string &key) {
    if (value.is_number()) {
        return {value.get<double>(), 0.0};
    }
    if (value.is_array() && value.size() == 2) {
        return {get_double(value[0], key), get_double(value[1], key)};
    }
    fail(key, "amplitude must be a number or a [re, im] pair");
}

struct ParsedState {
    StateSpec spec;
    bool per_repetition = false;
};

ParsedState parse_state(const json &node) {
    const std::string where = "state";
    if (node.is_string()) {
        return parse_state(json{{"kind", node}});
    }
    reject_unknown(node, where, {"kind", "index", "seed", "amplitudes", "populations"});
    if (!node.contains("kind")) {
        fail(where, "missing 'kind'");
    }
    const std::string kind = get_string(node["kind"], "state.kind");
    auto forbid_others = [&](std::initializer_list<std::string_view> allowed) {
        for (const auto &item : node.items()) {
            if (item.key() != "kind" &&
                std::find(allowed.begin(), allowed.end(), item.key()) == allowed.end()) {
                fail("state." + item.key(), "not used by state kind '" + kind + "'");
            }
        }
    };
    if (kind == "basis") {
        forbid_others({"index"});
        if (!node.contains("index")) {
            fail(where, "basis state needs 'index'");
        }
        return {spec::Basis{get_index(node["index"], "state.index")}};
    }
    if (kind == "all_ones") {
        forbid_others({});
        return {spec::AllOnes{}};
    }
    if (kind == "all_zeros") {
        forbid_others({});
        return {spec::AllZeros{}};
    }
    if (kind == "uniform") {
        forbid_others({});
        return {spec::Uniform{}};
    }
    if (kind == "haar") {
        forbid_others({"seed"});
        if (node.contains("seed")) {
            return {spec::Haar{get_u64(node["seed"], "state.seed")}};
        }
        return {spec::Haar{0}, true};
    }
    if (kind == "amplitudes") {
        forbid_others({"amplitudes"});
        const json &list = node.value("amplitudes", json());
        if (!list.is_array()) {
            fail("state.amplitudes", "expected an array");
        }
        spec::ExplicitAmplitudes amps;
        for (std::size_t i = 0; i < list.size(); ++i) {
            amps.amplitudes.push_back(
                get_amplitude(list[i], "state.amplitudes[" + std::to_string(i) + "]"));
        }
        return {amps};
    }
    if (kind == "populations") {
        forbid_others({"populations"});
        const json &table = node.value("populations", json());
        spec::ExplicitPopulations pops;
        if (table.is_array()) {
            for (std::size_t i = 0; i < table.size(); ++i) {
                const double w =
                    get_double(table[i], "state.populations[" + std::to_string(i) + "]");
                if (w != 0.0) {
                    pops.weights.emplace(BasisIndex(i), w);
                }
            }
        } else if (table.is_object()) {
            for (const auto &item : table.items()) {
                const std::string key = "state.populations." + item.key();
                pops.weights.emplace(get_index(json(item.key()), key),
                                     get_double(item.value(), key));
            }
        } else {
            fail("state.populations", "expected an array or an object");
        }
        return {pops};
    }
    fail("state.kind", "unknown state kind '" + kind + "'");
}

std::vector<unsigned> parse_n(const json &node) {
    std::vector<unsigned> values;
    if (node.is_array()) {
        for (std::size_t i = 0; i < node.size(); ++i) {
            values.push_back(get_unsigned(node[i], "n[" + std::to_string(i) + "]"));
        }
    } else if (node.is_object()) {
        reject_unknown(node, "n", {"min", "max", "step"});
        if (!node.contains("min") || !node.contains("max")) {
            fail("n", "range needs 'min' and 'max'");
        }
        const unsigned lo = get_unsigned(node["min"], "n.min");
        const unsigned hi = get_unsigned(node["max"], "n.max");
        const unsigned step = node.contains("step") ? get_unsigned(node["step"], "n.step") : 1;
        if (step == 0) {
            fail("n.step", "must be positive");
        }
        for (unsigned v = lo; v <= hi; v += step) {
            values.push_back(v);
            if (hi - v < step) {
                break;
            }
        }
    } else {
        values.push_back(get_unsigned(node, "n"));
    }
    if (values.empty()) {
        fail("n", "empty range");
    }
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] == 0) {
            fail("n", "qubit counts must be positive");
        }
        if (i > 0 && values[i] <= values[i - 1]) {
            fail("n", "values must be strictly increasing");
        }
    }
    return values;
}

std::vector<std::uint64_t> parse_ladder(const json &node) {
    std::vector<std::uint64_t> ladder;
    if (node.is_array()) {
        for (std::size_t i = 0; i < node.size(); ++i) {
            ladder.push_back(get_u64(node[i], "shot_ladder[" + std::to_string(i) + "]"));
        }
    } else if (node.is_object()) {
        reject_unknown(node, "shot_ladder", {"min", "max", "per_decade"});
        if (!node.contains("min") || !node.contains("max") || !node.contains("per_decade")) {
            fail("shot_ladder", "needs 'min', 'max' and 'per_decade'");
        }
        ladder = log_ladder(get_u64(node["min"], "shot_ladder.min"),
                            get_u64(node["max"], "shot_ladder.max"),
                            get_unsigned(node["per_decade"], "shot_ladder.per_decade"));
    } else {
        fail("shot_ladder", "expected an array or a {min, max, per_decade} object");
    }
    if (ladder.empty()) {
        fail("shot_ladder", "empty ladder");
    }
    for (std::size_t i = 0; i < ladder.size(); ++i) {
        if (ladder[i] == 0) {
            fail("shot_ladder", "entries must be positive");
        }
        if (i > 0 && ladder[i] <= ladder[i - 1]) {
            fail("shot_ladder", "entries must be strictly increasing");
        }
    }
    return ladder;
}

Axis parse_axis(const json &node, const std::string &where) {
    reject_unknown(node, where, {"min", "max", "points", "scale"});
    if (!node.contains("min") || !node.contains("max") || !node.contains("points")) {
        fail(where, "needs 'min', 'max' and 'points'");
    }
    Axis axis;
    axis.min = get_double(node["min"], where + ".min");
    axis.max = get_double(node["max"], where + ".max");
    axis.points = get_unsigned(node["points"], where + ".points");
    if (node.contains("scale")) {
        const std::string scale = get_string(node["scale"], where + ".scale");
        if (scale == "log") {
            axis.scale = AxisScale::Log;
        } else if (scale == "linear") {
            axis.scale = AxisScale::Linear;
        } else {
            fail(where + ".scale", "expected 'log' or 'linear'");
        }
    }
    try {
        (void)axis.values();
    } catch (const std::invalid_argument &e) {
        fail(where, e.what());
    }
    return axis;
}

RunMode parse_mode(const std::string &name) {
    if (name == "exact") {
        return RunMode::Exact;
    }
    if (name == "sampled") {
        return RunMode::Sampled;
    }
    if (name == "both") {
        return RunMode::Both;
    }
    fail("mode", "expected exact, sampled or both");
}

std::string_view to_string(RunMode mode) {
    switch (mode) {
    case RunMode::Exact:
        return "exact";
    case RunMode::Sampled:
        return "sampled";
    case RunMode::Both:
        return "both";
    }
    return "exact";
}

bool wants_exact(RunMode mode) { return mode != RunMode::Sampled; }
bool wants_sampled(RunMode mode) { return mode != RunMode::Exact; }

// ---------------------------------------------------------------------------
// Evaluation of one (state, noise point) pair.

struct NoisePoint {
    ReadoutErrorModel readout;
    double gamma = 0.0;
    std::optional<double> scale;
};

constexpr std::size_t kMethods = 2;

std::size_t slot(Method method) { return method == Method::Direct ? 0 : 1; }

bool has_method(const ExperimentConfig &config, Method method) {
    return std::find(config.methods.begin(), config.methods.end(), method) !=
           config.methods.end();
}

CompressionSetup setup_for(const ExperimentConfig &config, const NoisePoint &point) {
    return {point.readout, {point.gamma, config.gate_count}, config.architecture};
}

State prepare_state(const ExperimentConfig &config, unsigned n, std::uint64_t rep) {
    if (config.haar_per_repetition) {
        if (n > config.dense_cap) {
            throw std::length_error("Haar state at n=" + std::to_string(n) +
                                    " exceeds the dense cap " +
                                    std::to_string(config.dense_cap));
        }
        CounterRng rng(substream_key(config.seed, rep, StreamDomain::State, n));
        return haar_state(n, rng);
    }
    return make_state(config.state, n, config.dense_cap);
}

/// Whether a state differs between repetitions.
bool state_varies(const ExperimentConfig &config) { return config.haar_per_repetition; }

double exact_error(const ExperimentConfig &config, Method method, const State &state,
                   const NoisePoint &point) {
    const unsigned n = num_qubits(state);
    const auto *sparse = std::get_if<SparsePopulations>(&state);
    if (method == Method::Direct) {
        if (sparse != nullptr) {
            return direct_readout_exact(*sparse, point.readout, config.dense_cap).tv_error;
        }
        return direct_readout_exact(dense_populations(state, config.dense_cap),
                                    point.readout)
            .tv_error;
    }
    const CompressionSetup setup = setup_for(config, point);
    if (sparse != nullptr && sparse->support_size() <= kMaxSparseSupport) {
        return compression_readout_sparse_exact(*sparse, point.readout, point.gamma,
                                                setup.gate_count(n), config.dense_cap)
            .tv_error;
    }
    return compression_readout_exact(dense_populations(state, config.dense_cap), setup)
        .tv_error;
}

double sampled_error(const ExperimentConfig &config, Method method,
                     const std::vector<double> &populations, const NoisePoint &point,
                     std::uint64_t shots, std::uint64_t rep) {
    const SeedPath path{config.seed, rep};
    if (method == Method::Direct) {
        return direct_readout_sampled(populations, point.readout, shots, path).tv_error;
    }
    return compression_readout_sampled(populations, setup_for(config, point), shots, path)
        .tv_error;
}

std::vector<double> sampling_populations(const ExperimentConfig &config,
                                         const State &state) {
    const unsigned n = num_qubits(state);
    if (n > config.dense_cap) {
        throw std::length_error("sampled mode requested at n=" + std::to_string(n) +
                                " beyond the dense cap " +
                                std::to_string(config.dense_cap));
    }
    return dense_populations(state, config.dense_cap);
}

struct CellResult {
    std::array<std::optional<double>, kMethods> exact;
    std::array<std::optional<double>, kMethods> sampled;
};

// ---------------------------------------------------------------------------
// Row construction.

std::string state_label(const ExperimentConfig &config) {
    return describe(config.state);
}

std::string g_mode(const ExperimentConfig &config) {
    return config.gate_count ? std::string("override")
                             : std::string(to_string(config.architecture));
}

ResultRow base_row(const ExperimentConfig &config, unsigned n, const NoisePoint &point,
                   std::string method) {
    ResultRow row;
    row.task = std::string(to_string(config.task));
    row.n = n;
    row.state = state_label(config);
    row.method = std::move(method);
    if (point.readout.is_symmetric()) {
        row.xi = point.readout.e0();
    }
    row.e0 = point.readout.e0();
    row.e1 = point.readout.e1();
    row.gamma = point.gamma;
    row.g_mode = g_mode(config);
    row.seed = config.seed;
    row.scale = point.scale;
    return row;
}

ResultRow method_row(const ExperimentConfig &config, unsigned n, const NoisePoint &point,
                     Method method) {
    ResultRow row = base_row(config, n, point, std::string(to_string(method)));
    if (method == Method::Compression) {
        row.gate_count = setup_for(config, point).gate_count(n);
    }
    return row;
}

void fill_stats(ResultRow &row, std::vector<double> values) {
    const MeanSem stats = mean_and_sem(values);
    row.rep_count = values.size();
    row.mean_e = stats.mean;
    row.sem_e = stats.sem;
    row.per_rep = std::move(values);
}

double mean_of(const std::vector<double> &values) { return mean_and_sem(values).mean; }

std::optional<double> mean_of_optional(const std::vector<std::optional<double>> &values) {
    std::vector<double> present;
    for (const auto &v : values) {
        if (!v) {
            return std::nullopt;
        }
        present.push_back(*v);
    }
    if (present.empty()) {
        return std::nullopt;
    }
    return mean_of(present);
}

double safe_ratio(double numerator, double denominator) {
    if (denominator == 0.0) {
        return numerator == 0.0 ? 1.0 : std::numeric_limits<double>::infinity();
    }
    return numerator / denominator;
}

nlohmann::json base_metadata(const ExperimentConfig &config) {
    nlohmann::json meta;
    meta["name"] = config.name;
    meta["description"] = config.description;
    meta["task"] = to_string(config.task);
    meta["state"] = state_label(config);
    meta["haar_policy"] = config.haar_per_repetition ? "per_repetition" : "fixed";
    meta["readout_mode"] =
        config.readout_mode == ReadoutMode::Symmetric ? "symmetric" : "asymmetric";
    meta["profile"] = config.profile ? nlohmann::json(*config.profile) : nlohmann::json();
    meta["architecture"] = to_string(config.architecture);
    meta["gate_count_override"] =
        config.gate_count ? nlohmann::json(*config.gate_count) : nlohmann::json();
    meta["mode"] = to_string(config.mode);
    meta["repetitions"] = config.repetitions;
    meta["seed"] = config.seed;
    return meta;
}

NoisePoint config_point(const ExperimentConfig &config) {
    return {config.readout(), config.resolved_gamma(), std::nullopt};
}

/// Evaluates every (state, rep) for the requested methods at one noise
/// point; `shots` applies to sampled evaluations.
CellResult evaluate_cell(const ExperimentConfig &config, const State &state,
                         const NoisePoint &point, bool exact, bool sampled,
                         std::uint64_t shots, std::uint64_t rep) {
    CellResult cell;
    std::vector<double> pops;
    if (sampled) {
        pops = sampling_populations(config, state);
    }
    for (Method method : config.methods) {
        if (exact) {
            cell.exact[slot(method)] = exact_error(config, method, state, point);
        }
        if (sampled) {
            cell.sampled[slot(method)] =
                sampled_error(config, method, pops, point, shots, rep);
        }
    }
    return cell;
}

void check_compression_shots(const ExperimentConfig &config, unsigned n,
                             std::uint64_t shots) {
    if (!has_method(config, Method::Compression)) {
        return;
    }
    const std::uint64_t m = Grid(n).points();
    if (shots < m) {
        throw std::invalid_argument("shot budget " + std::to_string(shots) +
                                    " below the grid size m=" + std::to_string(m) +
                                    " at n=" + std::to_string(n));
    }
}

std::string format_extra(double value) { return format_double(value); }

} // namespace

// ---------------------------------------------------------------------------

std::string_view to_string(Task task) noexcept {
    switch (task) {
    case Task::Single:
        return "single";
    case Task::SweepN:
        return "sweep_n";
    case Task::SweepShots:
        return "sweep_shots";
    case Task::AdvantageMap:
        return "advantage_map";
    case Task::Crossover:
        return "crossover";
    }
    return "single";
}

Task parse_task(std::string_view name) {
    for (Task t : {Task::Single, Task::SweepN, Task::SweepShots, Task::AdvantageMap,
                   Task::Crossover}) {
        if (name == to_string(t)) {
            return t;
        }
    }
    throw std::invalid_argument("unknown task '" + std::string(name) + "'");
}

std::vector<double> Axis::values() const {
    if (points == 0) {
        throw std::invalid_argument("axis needs at least one point");
    }
    if (!std::isfinite(min) || !std::isfinite(max) || max < min) {
        throw std::invalid_argument("axis range must satisfy min <= max");
    }
    if (points > 1 && max == min) {
        throw std::invalid_argument("degenerate axis: min == max with several points");
    }
    if (scale == AxisScale::Log && !(min > 0.0)) {
        throw std::invalid_argument("log axis needs positive bounds");
    }
    std::vector<double> out(points);
    if (points == 1) {
        out[0] = min;
        return out;
    }
    for (unsigned i = 0; i < points; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(points - 1);
        out[i] = scale == AxisScale::Log
                     ? std::exp(std::log(min) + t * (std::log(max) - std::log(min)))
                     : min + t * (max - min);
    }
    out.front() = min;
    out.back() = max;
    return out;
}

ReadoutErrorModel ExperimentConfig::readout() const {
    const DeviceProfile *base = profile ? &device_profile(*profile) : nullptr;
    if (readout_mode == ReadoutMode::Symmetric) {
        return ReadoutErrorModel::symmetric(xi.value_or(base ? base->xi : 0.0));
    }
    auto pick = [&](const std::optional<double> &own, const std::optional<double> &dev,
                    const char *which) {
        if (own) {
            return *own;
        }
        if (base == nullptr) {
            return 0.0;
        }
        if (!dev) {
            throw std::invalid_argument("profile '" + base->name +
                                        "' has no asymmetric " + which + " rate");
        }
        return *dev;
    };
    return ReadoutErrorModel::asymmetric(pick(e0, base ? base->e0 : std::nullopt, "e0"),
                                         pick(e1, base ? base->e1 : std::nullopt, "e1"));
}

double ExperimentConfig::resolved_gamma() const {
    if (gamma) {
        return *gamma;
    }
    return profile ? device_profile(*profile).gamma : 0.0;
}

CompressionSetup ExperimentConfig::compression_setup() const {
    return {readout(), {resolved_gamma(), gate_count}, architecture};
}

void ExperimentConfig::validate() const {
    if (repetitions == 0) {
        throw std::invalid_argument("repetitions must be at least 1");
    }
    if (n_values.empty()) {
        throw std::invalid_argument("n range is empty");
    }
    if (methods.empty()) {
        throw std::invalid_argument("no methods selected");
    }
    if (profile) {
        (void)device_profile(*profile);
    }
    (void)readout();
    GateNoiseModel{resolved_gamma(), gate_count}.validate();
    if (dense_cap == 0 || dense_cap > 30) {
        throw std::invalid_argument("dense_cap must be in [1, 30]");
    }
    const bool both_methods =
        has_method(*this, Method::Direct) && has_method(*this, Method::Compression);
    switch (task) {
    case Task::Single:
        if (n_values.size() != 1) {
            throw std::invalid_argument("single runs take exactly one n");
        }
        break;
    case Task::SweepN:
        break;
    case Task::SweepShots:
        if (shot_ladder.empty()) {
            throw std::invalid_argument("sweep_shots needs a shot_ladder");
        }
        if (mode == RunMode::Exact) {
            throw std::invalid_argument("sweep_shots needs sampled mode");
        }
        break;
    case Task::AdvantageMap: {
        if (!both_methods) {
            throw std::invalid_argument("advantage_map needs both methods");
        }
        (void)gamma_axis.values();
        (void)rate_axis.values();
        if (readout_mode == ReadoutMode::Asymmetric && !profile && !(e0 && e1)) {
            throw std::invalid_argument(
                "asymmetric advantage maps scale a base (e0, e1): set a profile or rates");
        }
        break;
    }
    case Task::Crossover:
        if (!both_methods) {
            throw std::invalid_argument("crossover needs both methods");
        }
        if (shot_ladder.empty()) {
            throw std::invalid_argument("crossover needs a shot_ladder");
        }
        if (mode != RunMode::Sampled) {
            throw std::invalid_argument("crossover runs in sampled mode");
        }
        if (repetitions < 10) {
            throw std::invalid_argument("crossover needs at least 10 repetitions");
        }
        break;
    }
}

ExperimentConfig parse_config(const nlohmann::json &document) {
    reject_unknown(document, "",
                   {"task", "name", "description", "notes", "state", "profile", "readout",
                    "gamma", "architecture", "gate_count", "n", "mode", "methods",
                    "shots", "shot_ladder", "repetitions", "seed", "dense_cap",
                    "target_error", "axes", "output", "format"});
    ExperimentConfig config;
    if (document.contains("task")) {
        try {
            config.task = parse_task(get_string(document["task"], "task"));
        } catch (const std::invalid_argument &e) {
            fail("task", e.what());
        }
    }
    config.mode = config.task == Task::SweepShots || config.task == Task::AdvantageMap ||
                          config.task == Task::Crossover
                      ? RunMode::Sampled
                      : RunMode::Exact;
    if (document.contains("name")) {
        config.name = get_string(document["name"], "name");
    }
    if (document.contains("description")) {
        config.description = get_string(document["description"], "description");
    }
    if (document.contains("notes") && !document["notes"].is_string() &&
        !document["notes"].is_array()) {
        fail("notes", "expected a string or a list of strings");
    }
    if (document.contains("state")) {
        ParsedState parsed = parse_state(document["state"]);
        config.state = std::move(parsed.spec);
        config.haar_per_repetition = parsed.per_repetition;
    }
    if (document.contains("profile")) {
        const std::string name = get_string(document["profile"], "profile");
        try {
            (void)device_profile(name);
        } catch (const std::exception &e) {
            fail("profile", e.what());
        }
        config.profile = name;
    }
    if (document.contains("readout")) {
        const json &node = document["readout"];
        reject_unknown(node, "readout", {"mode", "xi", "e0", "e1"});
        if (node.contains("mode")) {
            const std::string mode = get_string(node["mode"], "readout.mode");
            if (mode == "symmetric") {
                config.readout_mode = ReadoutMode::Symmetric;
            } else if (mode == "asymmetric") {
                config.readout_mode = ReadoutMode::Asymmetric;
            } else {
                fail("readout.mode", "expected symmetric or asymmetric");
            }
        }
        if (node.contains("xi")) {
            config.xi = get_double(node["xi"], "readout.xi");
        }
        if (node.contains("e0")) {
            config.e0 = get_double(node["e0"], "readout.e0");
        }
        if (node.contains("e1")) {
            config.e1 = get_double(node["e1"], "readout.e1");
        }
        if (config.readout_mode == ReadoutMode::Symmetric && (config.e0 || config.e1)) {
            fail("readout", "e0/e1 need mode 'asymmetric'");
        }
        if (config.readout_mode == ReadoutMode::Asymmetric && config.xi) {
            fail("readout.xi", "xi needs mode 'symmetric'");
        }
    }
    if (document.contains("gamma")) {
        config.gamma = get_double(document["gamma"], "gamma");
    }
    if (document.contains("architecture")) {
        try {
            config.architecture =
                parse_architecture(get_string(document["architecture"], "architecture"));
        } catch (const std::invalid_argument &e) {
            fail("architecture", e.what());
        }
    }
    if (document.contains("gate_count") && !document["gate_count"].is_null()) {
        config.gate_count = get_u64(document["gate_count"], "gate_count");
    }
    if (document.contains("n")) {
        config.n_values = parse_n(document["n"]);
    } else {
        fail("n", "missing");
    }
    if (document.contains("mode")) {
        config.mode = parse_mode(get_string(document["mode"], "mode"));
    }
    if (document.contains("methods")) {
        const json &list = document["methods"];
        if (!list.is_array() || list.empty()) {
            fail("methods", "expected a nonempty array");
        }
        config.methods.clear();
        for (const auto &item : list) {
            const std::string name = get_string(item, "methods");
            Method method;
            if (name == "direct") {
                method = Method::Direct;
            } else if (name == "compression") {
                method = Method::Compression;
            } else {
                fail("methods", "unknown method '" + name + "'");
            }
            if (has_method(config, method)) {
                fail("methods", "duplicate method '" + name + "'");
            }
            config.methods.push_back(method);
        }
        std::sort(config.methods.begin(), config.methods.end(),
                  [](Method a, Method b) { return slot(a) < slot(b); });
    }
    if (document.contains("shots")) {
        config.shots = get_u64(document["shots"], "shots");
        if (config.shots == 0) {
            fail("shots", "must be positive");
        }
    }
    if (document.contains("shot_ladder")) {
        config.shot_ladder = parse_ladder(document["shot_ladder"]);
    }
    if (document.contains("repetitions")) {
        config.repetitions = get_unsigned(document["repetitions"], "repetitions");
    }
    if (document.contains("seed")) {
        config.seed = get_u64(document["seed"], "seed");
    }
    if (document.contains("dense_cap")) {
        config.dense_cap = get_unsigned(document["dense_cap"], "dense_cap");
    }
    if (document.contains("target_error") && !document["target_error"].is_null()) {
        config.target_error = get_double(document["target_error"], "target_error");
    }
    if (document.contains("axes")) {
        const json &axes = document["axes"];
        reject_unknown(axes, "axes", {"gamma", "rate"});
        if (axes.contains("gamma")) {
            config.gamma_axis = parse_axis(axes["gamma"], "axes.gamma");
        }
        if (axes.contains("rate")) {
            config.rate_axis = parse_axis(axes["rate"], "axes.rate");
        }
    } else if (config.task == Task::AdvantageMap) {
        fail("axes", "advantage_map needs axes.gamma and axes.rate");
    }
    if (document.contains("output")) {
        config.output = get_string(document["output"], "output");
    }
    if (document.contains("format")) {
        try {
            config.format = parse_format(get_string(document["format"], "format"));
        } catch (const std::invalid_argument &e) {
            fail("format", e.what());
        }
    }
    try {
        config.validate();
    } catch (const std::invalid_argument &e) {
        throw std::invalid_argument(std::string("invalid config: ") + e.what());
    }
    return config;
}

nlohmann::json load_config_document(const std::filesystem::path &path) {
    std::ifstream file(path);
    if (!file) {
        throw std::runtime_error("cannot open config '" + path.string() + "'");
    }
    std::stringstream buffer;
    buffer << file.rdbuf();
    try {
        return nlohmann::json::parse(buffer.str(), nullptr, true, true);
    } catch (const nlohmann::json::parse_error &e) {
        throw std::invalid_argument("config '" + path.string() + "': " + e.what());
    }
}

void apply_override(nlohmann::json &document, std::string_view assignment) {
    const auto eq = assignment.find('=');
    if (eq == std::string_view::npos || eq == 0) {
        throw std::invalid_argument("override '" + std::string(assignment) +
                                    "' is not key=value");
    }
    const std::string key(assignment.substr(0, eq));
    const std::string text(assignment.substr(eq + 1));
    json value = json::parse(text, nullptr, false);
    if (value.is_discarded()) {
        value = text;
    }
    if (!document.is_object()) {
        document = json::object();
    }
    json *node = &document;
    std::size_t start = 0;
    for (;;) {
        const auto dot = key.find('.', start);
        const std::string part = key.substr(start, dot - start);
        if (part.empty()) {
            throw std::invalid_argument("override key '" + key + "' has an empty segment");
        }
        if (dot == std::string::npos) {
            (*node)[part] = std::move(value);
            return;
        }
        json &child = (*node)[part];
        if (child.is_null()) {
            child = json::object();
        } else if (!child.is_object()) {
            throw std::invalid_argument("override key '" + key + "': '" + part +
                                        "' is not a table");
        }
        node = &child;
        start = dot + 1;
    }
}

std::vector<std::uint64_t> log_ladder(std::uint64_t min, std::uint64_t max,
                                      unsigned per_decade) {
    if (min == 0 || max < min || per_decade == 0) {
        throw std::invalid_argument("log ladder needs 0 < min <= max and per_decade > 0");
    }
    std::vector<std::uint64_t> out;
    const double lo = static_cast<double>(min);
    const double hi = static_cast<double>(max);
    for (unsigned j = 0;; ++j) {
        const double v = lo * std::pow(10.0, static_cast<double>(j) / per_decade);
        if (v > hi * (1.0 + 1e-12)) {
            break;
        }
        const auto rounded = static_cast<std::uint64_t>(std::llround(v));
        if (out.empty() || rounded > out.back()) {
            out.push_back(std::min(rounded, max));
        }
    }
    return out;
}

LineFit fit_line(const std::vector<double> &x, const std::vector<double> &y) {
    if (x.size() != y.size() || x.size() < 2) {
        throw std::invalid_argument("line fit needs at least two points");
    }
    const auto count = static_cast<double>(x.size());
    double mx = 0.0;
    double my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= count;
    my /= count;
    double sxx = 0.0;
    double sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    if (sxx == 0.0) {
        throw std::invalid_argument("line fit needs distinct x values");
    }
    const double slope = sxy / sxx;
    return {slope, my - slope * mx};
}

std::optional<double> reach_shots(const std::vector<std::uint64_t> &ladder,
                                  const std::vector<double> &errors, double target) {
    if (ladder.size() != errors.size()) {
        throw std::invalid_argument("ladder and error curve differ in length");
    }
    for (std::size_t j = 0; j < ladder.size(); ++j) {
        if (errors[j] > target) {
            continue;
        }
        if (j == 0) {
            return static_cast<double>(ladder[0]);
        }
        const double x0 = std::log10(static_cast<double>(ladder[j - 1]));
        const double x1 = std::log10(static_cast<double>(ladder[j]));
        const double y0 = errors[j - 1];
        const double y1 = errors[j];
        const double t = y0 == y1 ? 1.0 : (y0 - target) / (y0 - y1);
        return std::pow(10.0, x0 + t * (x1 - x0));
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------

std::vector<ReadoutResult> run_simulate(const ExperimentConfig &config,
                                        const RunOptions &options) {
    config.validate();
    const unsigned n = config.n_values.front();
    const NoisePoint point = config_point(config);
    const bool exact = wants_exact(config.mode);
    const bool sampled = wants_sampled(config.mode);
    if (sampled) {
        check_compression_shots(config, n, config.shots);
    }

    std::vector<std::vector<ReadoutResult>> per_rep(config.repetitions);
    parallel_for(config.repetitions, options.threads, [&](std::size_t rep) {
        if (rep > 0 && !state_varies(config) && !sampled) {
            return;
        }
        const State state = prepare_state(config, n, rep);
        const auto *sparse = std::get_if<SparsePopulations>(&state);
        std::vector<ReadoutResult> &out = per_rep[rep];
        for (Method method : config.methods) {
            if (exact && (rep == 0 || state_varies(config))) {
                if (method == Method::Direct) {
                    out.push_back(sparse != nullptr
                                      ? direct_readout_exact(*sparse, point.readout,
                                                             config.dense_cap)
                                      : direct_readout_exact(
                                            dense_populations(state, config.dense_cap),
                                            point.readout));
                } else if (sparse != nullptr && sparse->support_size() <= kMaxSparseSupport &&
                           n > config.dense_cap) {
                    const CompressionSetup setup = setup_for(config, point);
                    ReadoutResult r = compression_readout_sparse_exact(
                        *sparse, point.readout, point.gamma, setup.gate_count(n),
                        config.dense_cap);
                    r.architecture = config.architecture;
                    out.push_back(std::move(r));
                } else {
                    out.push_back(compression_readout_exact(
                        dense_populations(state, config.dense_cap),
                        setup_for(config, point)));
                }
            }
            if (sampled) {
                const std::vector<double> pops = sampling_populations(config, state);
                const SeedPath path{config.seed, rep};
                out.push_back(method == Method::Direct
                                  ? direct_readout_sampled(pops, point.readout,
                                                           config.shots, path)
                                  : compression_readout_sampled(
                                        pops, setup_for(config, point), config.shots, path));
            }
        }
    });

    std::vector<ReadoutResult> results;
    for (auto &batch : per_rep) {
        for (auto &r : batch) {
            results.push_back(std::move(r));
        }
    }
    return results;
}

ResultTable run_sweep_n(const ExperimentConfig &config, const RunOptions &options) {
    config.validate();
    const NoisePoint point = config_point(config);
    const bool exact = wants_exact(config.mode);
    const bool sampled = wants_sampled(config.mode);
    const std::size_t reps = config.repetitions;
    const std::size_t cells = config.n_values.size() * reps;
    if (sampled) {
        for (unsigned n : config.n_values) {
            check_compression_shots(config, n, config.shots);
        }
    }

    std::vector<CellResult> results(cells);
    parallel_for(cells, options.threads, [&](std::size_t cell) {
        const unsigned n = config.n_values[cell / reps];
        const std::uint64_t rep = cell % reps;
        const bool need_exact = rep == 0 || state_varies(config);
        if (!sampled && !need_exact) {
            return;
        }
        const State state = prepare_state(config, n, rep);
        const bool exact_here =
            need_exact && (exact || std::holds_alternative<SparsePopulations>(state) ||
                           n <= config.dense_cap);
        results[cell] =
            evaluate_cell(config, state, point, exact_here, sampled, config.shots, rep);
    });

    ResultTable table;
    table.metadata = base_metadata(config);
    table.metadata["shots"] = sampled ? nlohmann::json(config.shots) : nlohmann::json();
    const std::size_t exact_reps = state_varies(config) ? reps : 1;
    for (std::size_t ni = 0; ni < config.n_values.size(); ++ni) {
        const unsigned n = config.n_values[ni];
        for (Method method : config.methods) {
            const std::size_t s = slot(method);
            std::vector<std::optional<double>> exact_values;
            for (std::size_t rep = 0; rep < exact_reps; ++rep) {
                exact_values.push_back(results[ni * reps + rep].exact[s]);
            }
            const std::optional<double> exact_mean = mean_of_optional(exact_values);
            if (exact) {
                ResultRow row = method_row(config, n, point, method);
                std::vector<double> values;
                for (const auto &v : exact_values) {
                    values.push_back(v.value());
                }
                fill_stats(row, std::move(values));
                row.exact_e = exact_mean;
                table.rows.push_back(std::move(row));
            }
            if (sampled) {
                ResultRow row = method_row(config, n, point, method);
                row.shots = config.shots;
                std::vector<double> values;
                for (std::size_t rep = 0; rep < reps; ++rep) {
                    values.push_back(results[ni * reps + rep].sampled[s].value());
                }
                fill_stats(row, std::move(values));
                row.exact_e = exact_mean;
                table.rows.push_back(std::move(row));
            }
        }
    }
    return table;
}

ResultTable run_sweep_shots(const ExperimentConfig &config, const RunOptions &options) {
    config.validate();
    const NoisePoint point = config_point(config);
    const std::size_t reps = config.repetitions;
    const std::size_t rungs = config.shot_ladder.size();
    const std::size_t ns = config.n_values.size();
    for (unsigned n : config.n_values) {
        for (std::uint64_t shots : config.shot_ladder) {
            check_compression_shots(config, n, shots);
        }
    }

    // Exact reference per (n, rep), then sampled cells per (n, rung, rep).
    std::vector<CellResult> reference(ns * reps);
    parallel_for(ns * reps, options.threads, [&](std::size_t cell) {
        const unsigned n = config.n_values[cell / reps];
        const std::uint64_t rep = cell % reps;
        if (rep > 0 && !state_varies(config)) {
            return;
        }
        const State state = prepare_state(config, n, rep);
        reference[cell] = evaluate_cell(config, state, point, true, false, 0, rep);
    });
    std::vector<CellResult> results(ns * rungs * reps);
    parallel_for(results.size(), options.threads, [&](std::size_t cell) {
        const std::size_t ni = cell / (rungs * reps);
        const std::size_t ri = (cell / reps) % rungs;
        const std::uint64_t rep = cell % reps;
        const State state = prepare_state(config, config.n_values[ni], rep);
        results[cell] = evaluate_cell(config, state, point, false, true,
                                      config.shot_ladder[ri], rep);
    });

    ResultTable table;
    table.metadata = base_metadata(config);
    table.metadata["shot_ladder"] = config.shot_ladder;
    table.metadata["target_error"] =
        config.target_error ? nlohmann::json(*config.target_error) : nlohmann::json();
    const std::size_t exact_reps = state_varies(config) ? reps : 1;
    for (std::size_t ni = 0; ni < ns; ++ni) {
        const unsigned n = config.n_values[ni];
        std::array<std::optional<double>, kMethods> reach;
        for (Method method : config.methods) {
            const std::size_t s = slot(method);
            std::vector<std::optional<double>> exact_values;
            for (std::size_t rep = 0; rep < exact_reps; ++rep) {
                exact_values.push_back(reference[ni * reps + rep].exact[s]);
            }
            const std::optional<double> exact_mean = mean_of_optional(exact_values);
            if (config.mode == RunMode::Both) {
                ResultRow row = method_row(config, n, point, method);
                std::vector<double> values;
                for (const auto &v : exact_values) {
                    values.push_back(v.value());
                }
                fill_stats(row, std::move(values));
                row.exact_e = exact_mean;
                table.rows.push_back(std::move(row));
            }
            std::vector<double> curve;
            for (std::size_t ri = 0; ri < rungs; ++ri) {
                ResultRow row = method_row(config, n, point, method);
                row.shots = config.shot_ladder[ri];
                std::vector<double> values;
                for (std::size_t rep = 0; rep < reps; ++rep) {
                    values.push_back(
                        results[(ni * rungs + ri) * reps + rep].sampled[s].value());
                }
                fill_stats(row, std::move(values));
                row.exact_e = exact_mean;
                curve.push_back(*row.mean_e);
                table.rows.push_back(std::move(row));
            }
            if (config.target_error) {
                reach[s] = reach_shots(config.shot_ladder, curve, *config.target_error);
                ResultRow row = method_row(config, n, point, method);
                row.method = "reach_" + row.method;
                row.rep_count = reps;
                row.exact_e = exact_mean;
                for (std::size_t ri = 0; ri < rungs; ++ri) {
                    if (curve[ri] <= *config.target_error) {
                        row.shots = config.shot_ladder[ri];
                        break;
                    }
                }
                row.extra.emplace_back("target", format_extra(*config.target_error));
                row.extra.emplace_back("status", reach[s] ? "found" : "absent");
                if (reach[s]) {
                    row.extra.emplace_back("interpolated", format_extra(*reach[s]));
                }
                table.rows.push_back(std::move(row));
            }
        }
        if (config.target_error && has_method(config, Method::Direct) &&
            has_method(config, Method::Compression)) {
            ResultRow row = base_row(config, n, point, "reach_ratio");
            row.rep_count = reps;
            row.extra.emplace_back("target", format_extra(*config.target_error));
            if (reach[0] && reach[1]) {
                row.extra.emplace_back("status", "found");
                row.extra.emplace_back("ratio", format_extra(*reach[0] / *reach[1]));
            } else {
                row.extra.emplace_back("status", "absent");
            }
            table.rows.push_back(std::move(row));
        }
    }
    return table;
}

ResultTable run_advantage_map(const ExperimentConfig &config, const RunOptions &options) {
    config.validate();
    const std::vector<double> gammas = config.gamma_axis.values();
    const std::vector<double> rates = config.rate_axis.values();
    const bool symmetric = config.readout_mode == ReadoutMode::Symmetric;
    const ReadoutErrorModel base = config.readout();
    const bool exact = config.mode == RunMode::Exact;

    std::vector<NoisePoint> points;
    std::vector<std::string> marker_names;
    for (double g : gammas) {
        for (double r : rates) {
            points.push_back(symmetric
                                 ? NoisePoint{ReadoutErrorModel::symmetric(r), g, std::nullopt}
                                 : NoisePoint{base.scaled(r), g, r});
        }
    }
    const std::size_t grid_cells = points.size();
    const double base_sum = base.e0() + base.e1();
    for (const DeviceProfile &dev : device_profiles()) {
        if (symmetric) {
            points.push_back({dev.symmetric_readout(), dev.gamma, std::nullopt});
        } else {
            if (!dev.e0 || !dev.e1) {
                continue;
            }
            const ReadoutErrorModel model = dev.asymmetric_readout();
            points.push_back({model, dev.gamma,
                              base_sum > 0.0 ? std::optional<double>(
                                                   (model.e0() + model.e1()) / base_sum)
                                             : std::nullopt});
        }
        marker_names.push_back(dev.name);
    }

    const std::size_t reps = config.repetitions;
    const std::size_t ns = config.n_values.size();
    if (!exact) {
        for (unsigned n : config.n_values) {
            check_compression_shots(config, n, config.shots);
        }
    }
    const std::size_t per_n = points.size() * reps;
    std::vector<CellResult> results(ns * per_n);
    parallel_for(results.size(), options.threads, [&](std::size_t cell) {
        const unsigned n = config.n_values[cell / per_n];
        const std::size_t pi = (cell % per_n) / reps;
        const std::uint64_t rep = cell % reps;
        if (exact && rep > 0 && !state_varies(config)) {
            return;
        }
        const State state = prepare_state(config, n, rep);
        results[cell] =
            evaluate_cell(config, state, points[pi], exact, !exact, config.shots, rep);
    });

    ResultTable table;
    table.metadata = base_metadata(config);
    table.metadata["grid"] = {{"gamma", gammas},
                              {"rate", rates},
                              {"rate_axis", symmetric ? "xi" : "scale"},
                              {"shape", {gammas.size(), rates.size()}}};
    table.metadata["shots"] = exact ? nlohmann::json() : nlohmann::json(config.shots);
    const std::size_t used_reps = exact && !state_varies(config) ? 1 : reps;
    for (std::size_t ni = 0; ni < ns; ++ni) {
        const unsigned n = config.n_values[ni];
        for (std::size_t pi = 0; pi < points.size(); ++pi) {
            const NoisePoint &point = points[pi];
            std::array<std::vector<double>, kMethods> values;
            std::vector<double> ratios;
            for (std::size_t rep = 0; rep < used_reps; ++rep) {
                const CellResult &cell = results[ni * per_n + pi * reps + rep];
                const auto &source = exact ? cell.exact : cell.sampled;
                values[0].push_back(source[0].value());
                values[1].push_back(source[1].value());
                ratios.push_back(safe_ratio(values[0].back(), values[1].back()));
            }
            const bool marker = pi >= grid_cells;
            if (!marker) {
                for (Method method : config.methods) {
                    ResultRow row = method_row(config, n, point, method);
                    if (!exact) {
                        row.shots = config.shots;
                    }
                    fill_stats(row, values[slot(method)]);
                    table.rows.push_back(std::move(row));
                }
            }
            ResultRow row = base_row(config, n, point, marker ? "marker" : "ratio");
            row.gate_count = setup_for(config, point).gate_count(n);
            if (!exact) {
                row.shots = config.shots;
            }
            fill_stats(row, ratios);
            if (marker) {
                row.extra.emplace_back("profile", marker_names[pi - grid_cells]);
            }
            row.extra.emplace_back("advantage", *row.mean_e >= 1.0 ? "1" : "0");
            table.rows.push_back(std::move(row));
        }
    }
    return table;
}

ResultTable run_crossover(const ExperimentConfig &config, const RunOptions &options) {
    config.validate();
    const NoisePoint point = config_point(config);
    const std::size_t reps = config.repetitions;
    const std::size_t rungs = config.shot_ladder.size();
    const std::size_t ns = config.n_values.size();

    std::vector<CellResult> results(ns * rungs * reps);
    parallel_for(results.size(), options.threads, [&](std::size_t cell) {
        const std::size_t ni = cell / (rungs * reps);
        const std::size_t ri = (cell / reps) % rungs;
        const std::uint64_t rep = cell % reps;
        const unsigned n = config.n_values[ni];
        if (config.shot_ladder[ri] < Grid(n).points()) {
            return;
        }
        const State state = prepare_state(config, n, rep);
        results[cell] = evaluate_cell(config, state, point, false, true,
                                      config.shot_ladder[ri], rep);
    });

    ResultTable table;
    table.metadata = base_metadata(config);
    table.metadata["shot_ladder"] = config.shot_ladder;
    std::vector<double> fit_n;
    std::vector<double> fit_log_shots;
    for (std::size_t ni = 0; ni < ns; ++ni) {
        const unsigned n = config.n_values[ni];
        std::optional<std::uint64_t> crossing;
        std::size_t skipped = 0;
        for (std::size_t ri = 0; ri < rungs; ++ri) {
            const std::uint64_t shots = config.shot_ladder[ri];
            if (shots < Grid(n).points()) {
                ++skipped;
                continue;
            }
            std::array<double, kMethods> means{};
            for (Method method : config.methods) {
                const std::size_t s = slot(method);
                ResultRow row = method_row(config, n, point, method);
                row.shots = shots;
                std::vector<double> values;
                for (std::size_t rep = 0; rep < reps; ++rep) {
                    values.push_back(
                        results[(ni * rungs + ri) * reps + rep].sampled[s].value());
                }
                fill_stats(row, std::move(values));
                means[s] = *row.mean_e;
                table.rows.push_back(std::move(row));
            }
            if (!crossing && means[1] <= means[0]) {
                crossing = shots;
            }
        }
        ResultRow row = base_row(config, n, point, "crossover");
        row.gate_count = setup_for(config, point).gate_count(n);
        row.rep_count = reps;
        row.shots = crossing;
        row.extra.emplace_back("status", crossing ? "found" : "absent");
        if (skipped > 0) {
            row.extra.emplace_back("rungs_below_m", std::to_string(skipped));
        }
        table.rows.push_back(std::move(row));
        if (crossing) {
            fit_n.push_back(n);
            fit_log_shots.push_back(std::log10(static_cast<double>(*crossing)));
        }
    }

    ResultRow fit = base_row(config, 0, point, "fit");
    fit.n.reset();
    fit.rep_count = reps;
    fit.extra.emplace_back("points", std::to_string(fit_n.size()));
    if (fit_n.size() >= 2) {
        const LineFit line = fit_line(fit_n, fit_log_shots);
        fit.extra.emplace_back("status", "found");
        fit.extra.emplace_back("slope", format_extra(line.slope));
        fit.extra.emplace_back("intercept", format_extra(line.intercept));
        table.metadata["fit"] = {{"slope", line.slope}, {"intercept", line.intercept}};
    } else {
        fit.extra.emplace_back("status", "insufficient");
        table.metadata["fit"] = nullptr;
    }
    table.rows.push_back(std::move(fit));
    return table;
}

ResultTable run_experiment(const ExperimentConfig &config, const RunOptions &options) {
    switch (config.task) {
    case Task::SweepN:
        return run_sweep_n(config, options);
    case Task::SweepShots:
        return run_sweep_shots(config, options);
    case Task::AdvantageMap:
        return run_advantage_map(config, options);
    case Task::Crossover:
        return run_crossover(config, options);
    case Task::Single:
        break;
    }
    // Single runs share the sweep_n layout for one n.
    return run_sweep_n(config, options);
}

} // namespace compread
