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


// compread: command-line front end for the readout simulator.
//
//   compread simulate      --config run.json [--dump-circuit out.json]
//   compread sweep-n       --config presets/fig2a.json --out fig2a.csv
//   compread sweep-shots   --config presets/fig3d.json
//   compread advantage-map --config presets/fig4a.json --threads 4
//   compread crossover     --config presets/figS-catchup-ones.json
//   compread shots-bound   --n 2 --epsilon 0.1 --eta 0.05
//
// Failures print one JSON object {"error": ..., "kind": ...} on stderr and
// exit nonzero (2 for usage and config errors, 1 otherwise).

#include <CLI11.hpp>

#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "compread/bounds.hpp"
#include "compread/circuit.hpp"
#include "compread/experiments.hpp"
#include "compread/grid.hpp"
#include "compread/parallel.hpp"
#include "compread/results.hpp"

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CommonFlags {
    std::string config;
    std::optional<std::uint64_t> seed;
    std::string out;
    std::string format;
    unsigned threads = 0;
    std::string profile;
    std::vector<std::string> overrides;
};

void add_common(CLI::App *cmd, CommonFlags &flags) {
    cmd->add_option("--config", flags.config, "JSON run description")
        ->check(CLI::ExistingFile);
    cmd->add_option("--seed", flags.seed, "master seed (overrides the config)");
    cmd->add_option("--out", flags.out, "output file (default: config output or stdout)");
    cmd->add_option("--format", flags.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--threads", flags.threads, "worker threads, 0 = all cores");
    cmd->add_option("--profile", flags.profile, "device profile name");
    cmd->add_option("--override", flags.overrides, "key=value, dotted keys for tables")
        ->allow_extra_args(false);
}

nlohmann::json build_document(const CommonFlags &flags, std::string_view task) {
    nlohmann::json doc = flags.config.empty()
                             ? nlohmann::json::object()
                             : compread::load_config_document(flags.config);
    if (doc.contains("task") && doc["task"] != task) {
        throw UsageError("config task '" + doc["task"].dump() +
                         "' does not match subcommand task '" + std::string(task) + "'");
    }
    doc["task"] = task;
    for (const std::string &item : flags.overrides) {
        compread::apply_override(doc, item);
    }
    if (flags.seed) {
        doc["seed"] = *flags.seed;
    }
    if (!flags.profile.empty()) {
        doc["profile"] = flags.profile;
    }
    if (!flags.format.empty()) {
        doc["format"] = flags.format;
    }
    return doc;
}

void emit(const std::string &text, const std::string &path) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) {
        throw std::runtime_error("cannot open '" + path + "' for writing");
    }
    file << text;
    if (!file) {
        throw std::runtime_error("failed writing '" + path + "'");
    }
}

void write_table(const compread::ResultTable &table,
                 const compread::ExperimentConfig &config, const CommonFlags &flags) {
    const std::string path = !flags.out.empty() ? flags.out : config.output;
    if (path.empty() || path == "-") {
        if (table.rows.empty()) {
            throw std::invalid_argument("refusing to write an empty result table");
        }
        std::cout << (config.format == compread::OutputFormat::Csv
                          ? compread::to_csv(table)
                          : compread::to_json(table).dump(2) + "\n");
        return;
    }
    compread::write_results(table, path, config.format);
}

int run_table_task(const CommonFlags &flags, std::string_view task) {
    const compread::ExperimentConfig config =
        compread::parse_config(build_document(flags, task));
    const compread::ResultTable table =
        compread::run_experiment(config, {compread::resolve_threads(flags.threads)});
    write_table(table, config, flags);
    return 0;
}

struct SimulateFlags {
    std::string dump_circuit;
    std::uint64_t grid_point = 1;
    bool no_distribution = false;
};

int run_simulate(const CommonFlags &flags, const SimulateFlags &sim) {
    const compread::ExperimentConfig config =
        compread::parse_config(build_document(flags, "single"));
    const compread::RunOptions options{compread::resolve_threads(flags.threads)};
    const unsigned n = config.n_values.front();

    if (!sim.dump_circuit.empty()) {
        const compread::Grid grid(n);
        if (sim.grid_point == 0 || sim.grid_point > grid.points()) {
            throw UsageError("--grid-point must be in [1, " +
                             std::to_string(grid.points()) + "]");
        }
        const compread::CircuitPlan plan = compread::build_encoding_circuit(
            n, grid.angle(sim.grid_point), config.architecture);
        nlohmann::json dump = compread::circuit_to_json(plan);
        dump["grid_point"] = sim.grid_point;
        emit(dump.dump(2) + "\n", sim.dump_circuit);
    }

    for (const compread::ReadoutResult &result : compread::run_simulate(config, options)) {
        std::cout << compread::to_json(result, !sim.no_distribution).dump() << "\n";
    }
    const std::string path = !flags.out.empty() ? flags.out : config.output;
    if (!path.empty() && path != "-") {
        compread::write_results(compread::run_experiment(config, options), path,
                                config.format);
    }
    return 0;
}

struct BoundFlags {
    unsigned n = 0;
    double epsilon = 0.0;
    double eta = 0.0;
    std::string format = "json";
};

int run_shots_bound(const BoundFlags &flags) {
    const compread::Grid grid(flags.n);
    const compread::BudgetQuery query{flags.epsilon, flags.eta, grid.points()};
    const std::uint64_t per_grid = compread::theorem1_shots(query);
    const double variance = compread::variance_bound(grid.points(), per_grid);
    if (flags.format == "csv") {
        std::cout << "n,m,epsilon,eta,shots_per_grid,total_shots,variance_bound\n"
                  << flags.n << ',' << grid.points() << ','
                  << compread::format_double(flags.epsilon) << ','
                  << compread::format_double(flags.eta) << ',' << per_grid << ','
                  << per_grid * grid.points() << ',' << compread::format_double(variance)
                  << "\n";
    } else {
        nlohmann::json out{{"n", flags.n},
                           {"m", grid.points()},
                           {"epsilon", flags.epsilon},
                           {"eta", flags.eta},
                           {"shots_per_grid", per_grid},
                           {"total_shots", per_grid * grid.points()},
                           {"variance_bound", variance}};
        std::cout << out.dump() << "\n";
    }
    return 0;
}

int report(std::string_view kind, const std::string &message, int code) {
    std::cerr << nlohmann::json{{"error", message}, {"kind", kind}}.dump() << "\n";
    return code;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Compression readout simulator"};
    app.require_subcommand(1);

    CommonFlags simulate_flags;
    SimulateFlags sim;
    auto *simulate = app.add_subcommand("simulate", "run one configuration, print JSON results");
    add_common(simulate, simulate_flags);
    simulate->add_option("--dump-circuit", sim.dump_circuit,
                         "write the encoding circuit at one grid point as JSON ('-' = stdout)");
    simulate->add_option("--grid-point", sim.grid_point, "grid index k for --dump-circuit");
    simulate->add_flag("--no-distribution", sim.no_distribution,
                       "omit distribution vectors from the printed results");

    struct TableCommand {
        const char *name;
        const char *task;
        const char *help;
        CommonFlags flags;
        CLI::App *cmd = nullptr;
    };
    std::vector<TableCommand> tables{
        {"sweep-n", "sweep_n", "errors versus system size", {}},
        {"sweep-shots", "sweep_shots", "errors versus total shots", {}},
        {"advantage-map", "advantage_map", "error ratio over a noise-rate grid", {}},
        {"crossover", "crossover", "smallest shot budget where compression wins", {}},
    };
    for (auto &t : tables) {
        t.cmd = app.add_subcommand(t.name, t.help);
        add_common(t.cmd, t.flags);
    }

    BoundFlags bound;
    auto *shots_bound = app.add_subcommand("shots-bound", "shot budget and variance bound");
    shots_bound->add_option("--n", bound.n, "number of qubits")->required();
    shots_bound->add_option("--epsilon", bound.epsilon, "accuracy target in (0, 1)")
        ->required();
    shots_bound->add_option("--eta", bound.eta, "failure probability in (0, 1)")
        ->required();
    shots_bound->add_option("--format", bound.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        return report("usage", e.what(), 2);
    }

    try {
        if (simulate->parsed()) {
            return run_simulate(simulate_flags, sim);
        }
        if (shots_bound->parsed()) {
            return run_shots_bound(bound);
        }
        for (auto &t : tables) {
            if (t.cmd->parsed()) {
                return run_table_task(t.flags, t.task);
            }
        }
        return report("usage", "no subcommand", 2);
    } catch (const UsageError &e) {
        return report("usage", e.what(), 2);
    } catch (const std::invalid_argument &e) {
        return report("invalid_argument", e.what(), 2);
    } catch (const std::out_of_range &e) {
        return report("out_of_range", e.what(), 2);
    } catch (const std::length_error &e) {
        return report("length_error", e.what(), 1);
    } catch (const std::exception &e) {
        return report("runtime", e.what(), 1);
    }
}
