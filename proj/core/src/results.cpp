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


#include "compread/results.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <stdexcept>
#include <system_error>

namespace compread {

namespace {

template <typename T>
std::string optional_field(const std::optional<T> &value) {
    if (!value) {
        return {};
    }
    if constexpr (std::is_floating_point_v<T>) {
        return format_double(*value);
    } else {
        return std::to_string(*value);
    }
}

std::string join_extra(const ResultRow &row) {
    std::string out;
    for (const auto &[key, value] : row.extra) {
        if (!out.empty()) {
            out += ';';
        }
        out += key;
        out += '=';
        out += value;
    }
    return out;
}

std::string join_reps(const std::vector<double> &values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) {
            out += ';';
        }
        out += format_double(values[i]);
    }
    return out;
}

void append_field(std::string &line, std::string_view field) {
    if (field.find_first_of(",\"\n\r") == std::string_view::npos) {
        line += field;
        return;
    }
    line += '"';
    for (char c : field) {
        if (c == '"') {
            line += '"';
        }
        line += c;
    }
    line += '"';
}

std::vector<std::string> row_fields(const ResultRow &row) {
    return {row.task,
            optional_field(row.n),
            row.state,
            row.method,
            optional_field(row.shots),
            optional_field(row.xi),
            optional_field(row.e0),
            optional_field(row.e1),
            optional_field(row.gamma),
            row.g_mode,
            std::to_string(row.rep_count),
            optional_field(row.mean_e),
            optional_field(row.sem_e),
            optional_field(row.exact_e),
            optional_field(row.seed),
            optional_field(row.gate_count),
            optional_field(row.scale),
            join_extra(row),
            join_reps(row.per_rep)};
}

template <typename T>
nlohmann::json optional_json(const std::optional<T> &value) {
    return value ? nlohmann::json(*value) : nlohmann::json();
}

} // namespace

std::optional<std::string> ResultRow::extra_value(std::string_view key) const {
    for (const auto &[k, v] : extra) {
        if (k == key) {
            return v;
        }
    }
    return std::nullopt;
}

OutputFormat parse_format(std::string_view name) {
    if (name == "csv") {
        return OutputFormat::Csv;
    }
    if (name == "json") {
        return OutputFormat::Json;
    }
    throw std::invalid_argument("unknown output format '" + std::string(name) +
                                "' (expected csv or json)");
}

const std::vector<std::string> &csv_columns() {
    static const std::vector<std::string> columns{
        "task",   "n",       "state", "method", "shots",  "xi",       "e0",
        "e1",     "gamma",   "G_mode", "rep_count", "mean_E", "sem_E", "exact_E",
        "seed",   "G",       "scale", "extra",  "per_rep_E"};
    return columns;
}

std::string format_double(double value) {
    if (!std::isfinite(value)) {
        return std::isnan(value) ? "nan" : (value > 0 ? "inf" : "-inf");
    }
    std::array<char, 32> buffer{};
    const auto [end, ec] = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
    if (ec != std::errc{}) {
        throw std::runtime_error("failed to format a double");
    }
    return std::string(buffer.data(), end);
}

MeanSem mean_and_sem(const std::vector<double> &values) {
    if (values.empty()) {
        throw std::invalid_argument("mean of an empty sample");
    }
    double sum = 0.0;
    for (double v : values) {
        sum += v;
    }
    const double mean = sum / static_cast<double>(values.size());
    if (values.size() < 2) {
        return {mean, std::nullopt};
    }
    double squares = 0.0;
    for (double v : values) {
        squares += (v - mean) * (v - mean);
    }
    const auto count = static_cast<double>(values.size());
    const double stddev = std::sqrt(squares / (count - 1.0));
    return {mean, stddev / std::sqrt(count)};
}

std::string to_csv(const ResultTable &table) {
    std::string out;
    const auto &columns = csv_columns();
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (c > 0) {
            out += ',';
        }
        out += columns[c];
    }
    out += '\n';
    for (const ResultRow &row : table.rows) {
        const auto fields = row_fields(row);
        for (std::size_t c = 0; c < fields.size(); ++c) {
            if (c > 0) {
                out += ',';
            }
            append_field(out, fields[c]);
        }
        out += '\n';
    }
    return out;
}

nlohmann::json to_json(const ResultTable &table) {
    nlohmann::json rows = nlohmann::json::array();
    for (const ResultRow &row : table.rows) {
        nlohmann::json extra = nlohmann::json::object();
        for (const auto &[key, value] : row.extra) {
            extra[key] = value;
        }
        rows.push_back({{"task", row.task},
                        {"n", optional_json(row.n)},
                        {"state", row.state},
                        {"method", row.method},
                        {"shots", optional_json(row.shots)},
                        {"xi", optional_json(row.xi)},
                        {"e0", optional_json(row.e0)},
                        {"e1", optional_json(row.e1)},
                        {"gamma", optional_json(row.gamma)},
                        {"G_mode", row.g_mode},
                        {"rep_count", row.rep_count},
                        {"mean_E", optional_json(row.mean_e)},
                        {"sem_E", optional_json(row.sem_e)},
                        {"exact_E", optional_json(row.exact_e)},
                        {"seed", optional_json(row.seed)},
                        {"G", optional_json(row.gate_count)},
                        {"scale", optional_json(row.scale)},
                        {"extra", extra},
                        {"per_rep_E", row.per_rep}});
    }
    return {{"metadata", table.metadata}, {"columns", csv_columns()}, {"rows", rows}};
}

void write_results(const ResultTable &table, const std::filesystem::path &path,
                   OutputFormat format) {
    if (table.rows.empty()) {
        throw std::invalid_argument("refusing to write an empty result table");
    }
    const std::string text =
        format == OutputFormat::Csv ? to_csv(table) : to_json(table).dump(2) + "\n";
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) {
        throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    }
    file.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!file) {
        throw std::runtime_error("failed writing '" + path.string() + "'");
    }
}

std::vector<std::map<std::string, std::string>> parse_csv(std::string_view text) {
    std::vector<std::vector<std::string>> records;
    std::vector<std::string> record;
    std::string field;
    bool quoted = false;
    bool pending = false;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (quoted) {
            if (c == '"' && i + 1 < text.size() && text[i + 1] == '"') {
                field += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                field += c;
            }
            continue;
        }
        if (c == '"') {
            quoted = true;
            pending = true;
        } else if (c == ',') {
            record.push_back(std::move(field));
            field.clear();
            pending = true;
        } else if (c == '\n' || c == '\r') {
            if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') {
                ++i;
            }
            record.push_back(std::move(field));
            field.clear();
            records.push_back(std::move(record));
            record.clear();
            pending = false;
        } else {
            field += c;
            pending = true;
        }
    }
    if (quoted) {
        throw std::invalid_argument("unterminated quoted CSV field");
    }
    if (pending) {
        record.push_back(std::move(field));
        records.push_back(std::move(record));
    }
    if (records.empty()) {
        throw std::invalid_argument("CSV has no header");
    }

    const std::vector<std::string> &header = records.front();
    std::vector<std::map<std::string, std::string>> rows;
    for (std::size_t r = 1; r < records.size(); ++r) {
        if (records[r].size() != header.size()) {
            throw std::invalid_argument("CSV row " + std::to_string(r) + " has " +
                                        std::to_string(records[r].size()) +
                                        " fields, header has " +
                                        std::to_string(header.size()));
        }
        std::map<std::string, std::string> row;
        for (std::size_t c = 0; c < header.size(); ++c) {
            row.emplace(header[c], records[r][c]);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace compread
