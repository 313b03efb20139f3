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
 * Result tables produced by the experiment harness, and their CSV/JSON
 * serialization.
 *
 * CSV columns, in order:
 *
 *   task, n, state, method, shots, xi, e0, e1, gamma, G_mode, rep_count,
 *   mean_E, sem_E, exact_E, seed, G, scale, extra, per_rep_E
 *
 * Missing values are empty fields. Reals use the shortest representation
 * that round-trips to the same double. per_rep_E is a ';'-separated list;
 * extra is a ';'-separated list of key=value pairs.
 */
#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace compread {

struct ResultRow {
    std::string task;
    std::optional<unsigned> n;
    std::string state;
    std::string method;
    std::optional<std::uint64_t> shots;
    std::optional<double> xi;
    std::optional<double> e0;
    std::optional<double> e1;
    std::optional<double> gamma;
    std::string g_mode;
    std::uint64_t rep_count = 0;
    std::optional<double> mean_e;
    std::optional<double> sem_e;
    std::optional<double> exact_e;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> gate_count;
    std::optional<double> scale;
    std::vector<std::pair<std::string, std::string>> extra;
    std::vector<double> per_rep;

    /// Value of an extra key, if present.
    [[nodiscard]] std::optional<std::string> extra_value(std::string_view key) const;
};

struct ResultTable {
    std::vector<ResultRow> rows;
    /// Free-form run description; only the JSON writer emits it.
    nlohmann::json metadata = nlohmann::json::object();
};

enum class OutputFormat { Csv, Json };

OutputFormat parse_format(std::string_view name);

/// Fixed column order shared by the writer and reader.
const std::vector<std::string> &csv_columns();

/// Shortest round-trip decimal form of a double.
std::string format_double(double value);

/// Mean and standard error of the mean (sample stddev / sqrt(reps)).
/// The SEM is empty for fewer than two values.
struct MeanSem {
    double mean;
    std::optional<double> sem;
};
MeanSem mean_and_sem(const std::vector<double> &values);

std::string to_csv(const ResultTable &table);
nlohmann::json to_json(const ResultTable &table);

/// Throws std::invalid_argument for an empty table and std::runtime_error
/// when the file cannot be written.
void write_results(const ResultTable &table, const std::filesystem::path &path,
                   OutputFormat format);

/// One map per data row, keyed by header name. Handles quoted fields.
std::vector<std::map<std::string, std::string>> parse_csv(std::string_view text);

} // namespace compread
