// SPDX-License-Identifier: Apache-2.0
//
// midhaul: planning simulator for 140 GHz wireless midhaul transport links
// Copyright (C) 2026 The midhaul authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------
//
// Command-line front end. Subcommands: generate-scene, plan, sweep-cus,
// sweep-arrays, validate-trace. Exit codes: 0 success, 1 config or usage
// error, 2 infeasible plan, 3 I/O error.

#include <cstddef>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "midhaul/midhaul.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_config_error = 1;
constexpr int exit_infeasible = 2;
constexpr int exit_io_error = 3;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::ifstream open_input(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open input file '" + path + "'");
    return in;
}

void write_file(const std::filesystem::path &path, const std::string &content) {
    std::ofstream out(path);
    if (!out)
        throw IoError("cannot open output file '" + path.string() + "'");
    out << content;
    if (!out)
        throw IoError("failed writing '" + path.string() + "'");
}

std::filesystem::path prepare_out_dir(const std::string &out) {
    std::filesystem::path dir = out.empty() ? "." : out;
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec)
        throw IoError("cannot create output directory '" + dir.string() + "': " + ec.message());
    return dir;
}

midhaul::SimulationConfig load_config(const std::string &config_path,
                                      std::optional<std::uint64_t> seed) {
    midhaul::SimulationConfig config;
    if (!config_path.empty()) {
        std::ifstream in = open_input(config_path);
        config = midhaul::parse_config(in);
    }
    if (seed)
        config.scene.seed = *seed;
    return config;
}

midhaul::Scenario load_scenario(const std::string &nodes_path, const std::string &trace_path,
                                const midhaul::SimulationConfig &config) {
    std::ifstream nodes_in = open_input(nodes_path);
    std::vector<midhaul::Node> nodes = midhaul::parse_nodes(nodes_in);
    std::ifstream trace_in = open_input(trace_path);
    std::vector<midhaul::PathRecord> paths = midhaul::parse_trace(trace_in);
    return midhaul::make_scenario(std::move(nodes), std::move(paths), config.radio,
                                  config.propagation.max_paths_per_pair);
}

std::vector<std::string> sorted_du_ids(const midhaul::Scenario &scenario) {
    std::vector<std::string> ids;
    for (const midhaul::Node &n : scenario.nodes)
        if (n.kind == midhaul::NodeKind::DU)
            ids.push_back(n.id);
    std::sort(ids.begin(), ids.end());
    return ids;
}

std::vector<std::size_t> parse_count_list(const std::string &text) {
    std::vector<std::size_t> counts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        long v = 0;
        try {
            v = std::stol(item, &used);
        } catch (const std::exception &) {
            used = 0;
        }
        if (used != item.size() || v < 1)
            throw std::invalid_argument("bad CU count '" + item + "' (expected e.g. 1,2,3)");
        counts.push_back(static_cast<std::size_t>(v));
    }
    if (counts.empty())
        throw std::invalid_argument("CU count list is empty");
    return counts;
}

std::vector<midhaul::ArrayConfig> parse_array_list(const std::string &text,
                                                   const midhaul::ArrayConfig &base) {
    std::vector<midhaul::ArrayConfig> configs;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t x = item.find('x');
        bool ok = x != std::string::npos && x > 0 && x + 1 < item.size();
        int rows = 0, cols = 0;
        if (ok) {
            try {
                std::size_t ur = 0, uc = 0;
                rows = std::stoi(item.substr(0, x), &ur);
                cols = std::stoi(item.substr(x + 1), &uc);
                ok = ur == x && uc == item.size() - x - 1 && rows >= 1 && cols >= 1;
            } catch (const std::exception &) {
                ok = false;
            }
        }
        if (!ok)
            throw std::invalid_argument("bad array size '" + item + "' (expected e.g. 16x16)");
        midhaul::ArrayConfig c = base;
        c.rows = rows;
        c.cols = cols;
        configs.push_back(c);
    }
    if (configs.empty())
        throw std::invalid_argument("array size list is empty");
    return configs;
}

std::string buildings_csv(const midhaul::Scene &scene) {
    std::string out = "x0_m,y0_m,x1_m,y1_m,height_m\n";
    for (const midhaul::Building &b : scene.buildings) {
        out += midhaul::detail::format_double(b.x0) + ',' + midhaul::detail::format_double(b.y0) +
               ',' + midhaul::detail::format_double(b.x1) + ',' +
               midhaul::detail::format_double(b.y1) + ',' +
               midhaul::detail::format_double(b.height) + '\n';
    }
    return out;
}

int run_generate_scene(const midhaul::SimulationConfig &config, const std::string &out) {
    std::filesystem::path dir = prepare_out_dir(out);
    midhaul::Scene scene = midhaul::generate_scene(config.scene);
    std::vector<midhaul::PathRecord> paths =
        midhaul::synthesize_paths(scene, config.radio, config.propagation);

    write_file(dir / "nodes.csv", midhaul::serialize_nodes(scene.nodes));
    write_file(dir / "trace.csv", midhaul::serialize_trace(paths));
    write_file(dir / "buildings.csv", buildings_csv(scene));

    std::cout << "scene: " << scene.buildings.size() << " buildings, " << config.scene.cu_count
              << " CUs, " << config.scene.du_count << " DUs, seed " << config.scene.seed << "\n"
              << "paths: " << paths.size() << "\n"
              << "wrote " << (dir / "nodes.csv").string() << ", " << (dir / "trace.csv").string()
              << ", " << (dir / "buildings.csv").string() << "\n";
    return exit_ok;
}

int run_plan(const midhaul::SimulationConfig &config, const std::string &nodes_path,
             const std::string &trace_path, const std::string &out) {
    std::filesystem::path dir = prepare_out_dir(out);
    midhaul::Scenario scenario = load_scenario(nodes_path, trace_path, config);
    midhaul::AssociationPlan plan =
        midhaul::plan_minimum_cus(scenario, config.planner, config.mode);

    std::ostringstream text;
    midhaul::write_plan_report_text(text, plan, scenario.radio);
    write_file(dir / "plan.txt", text.str());
    write_file(dir / "plan.json", midhaul::plan_report_json(plan, scenario.radio).dump(2) + "\n");
    std::ostringstream metrics;
    midhaul::write_metrics_csv(metrics, plan.metrics);
    write_file(dir / "metrics.csv", metrics.str());

    std::cout << text.str();
    return plan.feasible ? exit_ok : exit_infeasible;
}

int run_sweep_cus(const midhaul::SimulationConfig &config, const std::string &nodes_path,
                  const std::string &trace_path, const std::string &counts_arg,
                  const std::string &out) {
    std::filesystem::path dir = prepare_out_dir(out);
    std::vector<std::size_t> counts = parse_count_list(counts_arg);
    midhaul::Scenario scenario = load_scenario(nodes_path, trace_path, config);

    std::vector<midhaul::SweepEntry> entries;
    for (std::size_t k : counts) {
        midhaul::AssociationPlan plan = midhaul::plan_with_cu_count(scenario, config.planner, k);
        std::ostringstream metrics;
        midhaul::write_metrics_csv(metrics, plan.metrics);
        write_file(dir / ("metrics_" + std::to_string(k) + "cu.csv"), metrics.str());
        std::cout << "cus=" << k << " links_at_target="
                  << plan.links_meeting(scenario.radio.rate_target_bps) << "/"
                  << sorted_du_ids(scenario).size()
                  << " min_rate_bps=" << midhaul::detail::format_double(plan.min_rate_bps())
                  << (plan.feasible ? " feasible" : " infeasible") << "\n";
        entries.push_back({std::to_string(k) + "cu", std::move(plan)});
    }

    std::ostringstream plot;
    midhaul::write_plot_data_csv(plot, sorted_du_ids(scenario), entries, scenario.radio);
    write_file(dir / "sweep_cus.csv", plot.str());
    return exit_ok;
}

int run_sweep_arrays(midhaul::SimulationConfig config, const std::string &nodes_path,
                     const std::string &trace_path, const std::string &arrays_arg,
                     std::size_t cu_count, const std::string &out) {
    std::filesystem::path dir = prepare_out_dir(out);
    std::vector<midhaul::ArrayConfig> sizes =
        parse_array_list(arrays_arg, config.planner.cu_array);
    midhaul::Scenario scenario = load_scenario(nodes_path, trace_path, config);

    if (cu_count == 0) {
        // default: the plain coverage prefix, so the sweep isolates array size
        midhaul::ConnectivityGraph g =
            midhaul::build_connectivity(scenario, config.planner.power_threshold_dbm);
        cu_count = midhaul::greedy_select(g).size();
    }

    std::vector<midhaul::SweepEntry> entries;
    std::string summary = "array,cu_count,links_at_target,du_count,min_rate_bps,feasible\n";
    for (const midhaul::ArrayConfig &size : sizes) {
        config.planner.cu_array = size;
        config.planner.du_array = size;
        midhaul::AssociationPlan plan =
            midhaul::plan_with_cu_count(scenario, config.planner, cu_count);
        std::string label = std::to_string(size.rows) + "x" + std::to_string(size.cols);
        std::size_t at_target = plan.links_meeting(scenario.radio.rate_target_bps);
        summary += label + ',' + std::to_string(cu_count) + ',' + std::to_string(at_target) +
                   ',' + std::to_string(sorted_du_ids(scenario).size()) + ',' +
                   midhaul::detail::format_double(plan.min_rate_bps()) + ',' +
                   (plan.feasible ? "true" : "false") + '\n';
        std::cout << "array=" << label << " cus=" << cu_count << " links_at_target=" << at_target
                  << "/" << sorted_du_ids(scenario).size() << "\n";
        entries.push_back({label, std::move(plan)});
    }

    write_file(dir / "sweep_arrays.csv", summary);
    std::ostringstream plot;
    midhaul::write_plot_data_csv(plot, sorted_du_ids(scenario), entries, scenario.radio);
    write_file(dir / "sweep_arrays_links.csv", plot.str());
    return exit_ok;
}

int run_validate_trace(const midhaul::SimulationConfig &config, const std::string &nodes_path,
                       const std::string &trace_path) {
    midhaul::Scenario scenario = load_scenario(nodes_path, trace_path, config);
    std::size_t cus = 0, dus = 0;
    for (const midhaul::Node &n : scenario.nodes)
        (n.kind == midhaul::NodeKind::CU ? cus : dus)++;
    std::cout << "valid: " << cus << " CUs, " << dus << " DUs, " << scenario.paths.size()
              << " paths\n";
    return exit_ok;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"planning simulator for 140 GHz wireless midhaul transport links"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string config_path, out_dir = ".";
    std::string mode_arg, precoder_arg;
    std::optional<std::uint64_t> seed;
    app.add_option("--config", config_path, "key = value configuration file");
    app.add_option("--seed", seed, "scene generation seed override");
    app.add_option("--out", out_dir, "output directory (created if missing)");
    app.add_option("--mode", mode_arg, "planning mode: greedy | exhaustive")
        ->check(CLI::IsMember({"greedy", "exhaustive"}));
    app.add_option("--precoder", precoder_arg, "precoder: slnr | zf")
        ->check(CLI::IsMember({"slnr", "zf"}));

    auto *gen = app.add_subcommand("generate-scene",
                                   "generate a synthetic scene and its propagation trace");

    std::string nodes_path, trace_path;
    auto add_inputs = [&](CLI::App *cmd) {
        cmd->add_option("--nodes", nodes_path, "node CSV file")->required();
        cmd->add_option("--trace", trace_path, "propagation trace CSV file")->required();
    };

    auto *plan = app.add_subcommand("plan", "select a minimum CU set and evaluate all links");
    add_inputs(plan);

    std::string cus_arg;
    auto *sweep_cus = app.add_subcommand("sweep-cus", "evaluate plans for a list of CU counts");
    add_inputs(sweep_cus);
    sweep_cus->add_option("counts", cus_arg, "comma-separated CU counts, e.g. 1,2,3")->required();

    std::string arrays_arg;
    std::size_t sweep_cu_count = 0;
    auto *sweep_arrays =
        app.add_subcommand("sweep-arrays", "evaluate one plan across array sizes");
    add_inputs(sweep_arrays);
    sweep_arrays->add_option("sizes", arrays_arg, "comma-separated sizes, e.g. 8x8,16x8,16x16")
        ->required();
    sweep_arrays->add_option("--cu-count", sweep_cu_count,
                             "CU count to hold fixed (default: coverage minimum)");

    auto *validate = app.add_subcommand("validate-trace", "parse and cross-check trace inputs");
    add_inputs(validate);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_config_error;
    }

    try {
        midhaul::SimulationConfig config = load_config(config_path, seed);
        if (!mode_arg.empty())
            config.mode = midhaul::parse_plan_mode(mode_arg);
        if (!precoder_arg.empty())
            config.planner.precoder = midhaul::parse_precoder(precoder_arg);

        if (gen->parsed())
            return run_generate_scene(config, out_dir);
        if (plan->parsed())
            return run_plan(config, nodes_path, trace_path, out_dir);
        if (sweep_cus->parsed())
            return run_sweep_cus(config, nodes_path, trace_path, cus_arg, out_dir);
        if (sweep_arrays->parsed())
            return run_sweep_arrays(config, nodes_path, trace_path, arrays_arg, sweep_cu_count,
                                    out_dir);
        if (validate->parsed())
            return run_validate_trace(config, nodes_path, trace_path);
        std::cerr << "error: no subcommand\n";
        return exit_config_error;
    } catch (const IoError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_io_error;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_config_error;
    }
}
