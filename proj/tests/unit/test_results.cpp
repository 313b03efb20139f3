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

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>

#include "compread/results.hpp"
#include "oracles.hpp"

using Catch::Matchers::WithinAbs;
using namespace compread;

namespace {

ResultRow sample_row() {
    ResultRow row;
    row.task = "sweep_n";
    row.n = 3;
    row.state = "basis:5";
    row.method = "compression";
    row.shots = 1000;
    row.xi = 0.0452;
    row.e0 = 0.0452;
    row.e1 = 0.0452;
    row.gamma = 0.0063;
    row.g_mode = "fully_connected";
    row.per_rep = {0.1, 0.2 + 1e-17, 1.0 / 3.0};
    const MeanSem stats = mean_and_sem(row.per_rep);
    row.rep_count = row.per_rep.size();
    row.mean_e = stats.mean;
    row.sem_e = stats.sem;
    row.exact_e = 0.12345678901234567;
    row.seed = 18446744073709551615ULL;
    row.gate_count = 3;
    row.extra = {{"status", "found"}, {"note", "a,b"}};
    return row;
}

std::string read_file(const std::filesystem::path &path) {
    std::ifstream in(path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

} // namespace

TEST_CASE("double formatting round-trips", "[results]") {
    for (double v : {0.1, 1.0 / 3.0, 1e-300, 6.02214076e23, -0.0, 0.0, 123456789.0,
                     std::numeric_limits<double>::denorm_min()}) {
        CHECK(std::strtod(format_double(v).c_str(), nullptr) == v);
    }
    CHECK(format_double(0.5) == "0.5");
    CHECK(format_double(std::numeric_limits<double>::infinity()) == "inf");
    CHECK(format_double(std::nan("")) == "nan");
}

TEST_CASE("mean and standard error", "[results]") {
    const std::vector<double> x{1.0, 2.0, 4.0, 7.0};
    const MeanSem stats = mean_and_sem(x);
    CHECK_THAT(stats.mean, WithinAbs(3.5, 1e-15));
    REQUIRE(stats.sem);
    CHECK_THAT(*stats.sem, WithinAbs(std::sqrt(oracle::sample_variance(x) / 4.0), 1e-15));
    CHECK_FALSE(mean_and_sem({0.3}).sem);
    CHECK(mean_and_sem({0.3}).mean == 0.3);
}

TEST_CASE("csv layout", "[results]") {
    ResultTable table;
    table.rows.push_back(sample_row());
    const std::string csv = to_csv(table);
    std::istringstream lines(csv);
    std::string header;
    std::string data;
    std::string more;
    std::getline(lines, header);
    std::getline(lines, data);
    CHECK_FALSE(std::getline(lines, more));
    CHECK(header ==
          "task,n,state,method,shots,xi,e0,e1,gamma,G_mode,rep_count,mean_E,sem_E,"
          "exact_E,seed,G,scale,extra,per_rep_E");
    CHECK(data.rfind("sweep_n,3,basis:5,compression,1000,0.0452,0.0452,0.0452,0.0063,"
                     "fully_connected,3,",
                     0) == 0);
    CHECK(data.find("\"status=found;note=a,b\"") != std::string::npos);
    CHECK(csv_columns().size() == 19);
}

TEST_CASE("csv parse-back keeps full precision", "[results]") {
    ResultTable table;
    table.rows.push_back(sample_row());
    ResultRow sparse;
    sparse.task = "crossover";
    sparse.method = "fit";
    table.rows.push_back(sparse);
    const auto parsed = parse_csv(to_csv(table));
    REQUIRE(parsed.size() == 2);
    const ResultRow original = sample_row();
    const auto &r = parsed[0];
    CHECK(std::stod(r.at("mean_E")) == *original.mean_e);
    CHECK(std::stod(r.at("sem_E")) == *original.sem_e);
    CHECK(std::stod(r.at("exact_E")) == *original.exact_e);
    CHECK(std::stoull(r.at("seed")) == *original.seed);
    CHECK(r.at("extra") == "status=found;note=a,b");
    std::vector<double> reps;
    std::stringstream list(r.at("per_rep_E"));
    for (std::string item; std::getline(list, item, ';');) {
        reps.push_back(std::stod(item));
    }
    CHECK(reps == original.per_rep);
    CHECK(parsed[1].at("n").empty());
    CHECK(parsed[1].at("mean_E").empty());
}

TEST_CASE("json mirrors the rows", "[results]") {
    ResultTable table;
    table.rows.push_back(sample_row());
    table.metadata["policy"] = "per_repetition";
    const auto j = to_json(table);
    CHECK(j["metadata"]["policy"] == "per_repetition");
    CHECK(j["columns"].size() == 19);
    REQUIRE(j["rows"].size() == 1);
    CHECK(j["rows"][0]["mean_E"].get<double>() == *sample_row().mean_e);
    CHECK(j["rows"][0]["extra"]["status"] == "found");
}

TEST_CASE("write results", "[results]") {
    const auto dir = std::filesystem::temp_directory_path() / "compread_results_test";
    std::filesystem::create_directories(dir);
    ResultTable table;
    CHECK_THROWS_AS(write_results(table, dir / "empty.csv", OutputFormat::Csv),
                    std::invalid_argument);
    table.rows.push_back(sample_row());
    write_results(table, dir / "one.csv", OutputFormat::Csv);
    write_results(table, dir / "two.csv", OutputFormat::Csv);
    CHECK(read_file(dir / "one.csv") == read_file(dir / "two.csv"));
    CHECK(read_file(dir / "one.csv") == to_csv(table));
    write_results(table, dir / "one.json", OutputFormat::Json);
    CHECK(nlohmann::json::parse(read_file(dir / "one.json")) == to_json(table));
    CHECK_THROWS_AS(write_results(table, dir / "missing" / "x.csv", OutputFormat::Csv),
                    std::runtime_error);
    CHECK(parse_format("json") == OutputFormat::Json);
    CHECK_THROWS_AS(parse_format("toml"), std::invalid_argument);
    std::filesystem::remove_all(dir);
}
