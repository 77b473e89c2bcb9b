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
// Flat key = value configuration. Every simulation default is overridable
// per run; unknown keys are rejected so typos fail loudly instead of
// silently running with defaults.

#ifndef MIDHAUL_CONFIG_HPP
#define MIDHAUL_CONFIG_HPP

#include <cstddef>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "midhaul/planner.hpp"
#include "midhaul/propagation.hpp"
#include "midhaul/scene.hpp"
#include "midhaul/trace.hpp"

namespace midhaul {

// All tunables of one simulation run, grouped by the module that consumes
// them. The planner pieces live in PlanOptions so they can be handed to the
// planner as-is.
struct SimulationConfig {
    SceneConfig scene;
    PathSynthesisParams propagation;
    RadioParams radio;
    PlanOptions planner; // cu_array / du_array / precoder / threshold / interference flag
    PlanMode mode = PlanMode::GreedyLoop;
};

namespace detail {

inline std::string trim(const std::string &s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos)
        return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

inline double parse_config_double(const std::string &key, const std::string &value) {
    try {
        std::size_t used = 0;
        double v = std::stod(value, &used);
        if (used != value.size())
            throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception &) {
        throw std::invalid_argument("config key '" + key + "': not a number: '" + value + "'");
    }
}

inline long long parse_config_int(const std::string &key, const std::string &value) {
    try {
        std::size_t used = 0;
        long long v = std::stoll(value, &used);
        if (used != value.size())
            throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception &) {
        throw std::invalid_argument("config key '" + key + "': not an integer: '" + value + "'");
    }
}

inline bool parse_config_bool(const std::string &key, const std::string &value) {
    if (value == "true" || value == "1" || value == "yes" || value == "on")
        return true;
    if (value == "false" || value == "0" || value == "no" || value == "off")
        return false;
    throw std::invalid_argument("config key '" + key + "': not a boolean: '" + value + "'");
}

} // namespace detail

inline PrecoderKind parse_precoder(const std::string &value) {
    if (value == "slnr")
        return PrecoderKind::Slnr;
    if (value == "zf")
        return PrecoderKind::Zf;
    throw std::invalid_argument("precoder must be 'slnr' or 'zf', got '" + value + "'");
}

inline PlanMode parse_plan_mode(const std::string &value) {
    if (value == "greedy")
        return PlanMode::GreedyLoop;
    if (value == "exhaustive")
        return PlanMode::Exhaustive;
    throw std::invalid_argument("mode must be 'greedy' or 'exhaustive', got '" + value + "'");
}

// Applies one key to the config. Key reference:
//   scene:       area_side_m grid_rows grid_cols min_building_height_m
//                max_building_height_m cu_count du_count mast_height_m seed
//   propagation: absorption_db_per_m reflections reflection_loss_db
//                max_paths_per_pair
//   radio:       carrier_hz bandwidth_hz tx_power_dbm rate_target_bps
//                loss_factor max_spectral_efficiency noise_figure_db
//                noise_power_dbm
//   arrays:      cu_array_rows cu_array_cols du_array_rows du_array_cols
//                array_spacing_wavelengths
//   planner:     power_threshold_dbm precoder mode inter_cu_interference
inline void apply_config_entry(SimulationConfig &config, const std::string &key,
                               const std::string &value) {
    using detail::parse_config_bool;
    using detail::parse_config_double;
    using detail::parse_config_int;

    auto as_int = [&](int lo) {
        long long v = parse_config_int(key, value);
        if (v < lo)
            throw std::invalid_argument("config key '" + key + "': must be >= " +
                                        std::to_string(lo));
        return static_cast<int>(v);
    };

    if (key == "area_side_m")
        config.scene.area_side_m = parse_config_double(key, value);
    else if (key == "grid_rows")
        config.scene.grid_rows = as_int(1);
    else if (key == "grid_cols")
        config.scene.grid_cols = as_int(1);
    else if (key == "min_building_height_m")
        config.scene.min_building_height_m = parse_config_double(key, value);
    else if (key == "max_building_height_m")
        config.scene.max_building_height_m = parse_config_double(key, value);
    else if (key == "cu_count")
        config.scene.cu_count = as_int(1);
    else if (key == "du_count")
        config.scene.du_count = as_int(1);
    else if (key == "mast_height_m")
        config.scene.mast_height_m = parse_config_double(key, value);
    else if (key == "seed")
        config.scene.seed = static_cast<std::uint64_t>(parse_config_int(key, value));
    else if (key == "absorption_db_per_m")
        config.propagation.absorption_db_per_m = parse_config_double(key, value);
    else if (key == "reflections")
        config.propagation.reflections = parse_config_bool(key, value);
    else if (key == "reflection_loss_db")
        config.propagation.reflection_loss_db = parse_config_double(key, value);
    else if (key == "max_paths_per_pair")
        config.propagation.max_paths_per_pair = as_int(1);
    else if (key == "carrier_hz")
        config.radio.carrier_hz = parse_config_double(key, value);
    else if (key == "bandwidth_hz")
        config.radio.bandwidth_hz = parse_config_double(key, value);
    else if (key == "tx_power_dbm")
        config.radio.tx_power_dbm = parse_config_double(key, value);
    else if (key == "rate_target_bps")
        config.radio.rate_target_bps = parse_config_double(key, value);
    else if (key == "loss_factor")
        config.radio.loss_factor = parse_config_double(key, value);
    else if (key == "max_spectral_efficiency")
        config.radio.max_spectral_efficiency = parse_config_double(key, value);
    else if (key == "noise_figure_db")
        config.radio.noise_figure_db = parse_config_double(key, value);
    else if (key == "noise_power_dbm")
        config.radio.noise_power_dbm = parse_config_double(key, value);
    else if (key == "cu_array_rows")
        config.planner.cu_array.rows = as_int(1);
    else if (key == "cu_array_cols")
        config.planner.cu_array.cols = as_int(1);
    else if (key == "du_array_rows")
        config.planner.du_array.rows = as_int(1);
    else if (key == "du_array_cols")
        config.planner.du_array.cols = as_int(1);
    else if (key == "array_spacing_wavelengths") {
        double v = parse_config_double(key, value);
        config.planner.cu_array.spacing_wavelengths = v;
        config.planner.du_array.spacing_wavelengths = v;
    } else if (key == "power_threshold_dbm")
        config.planner.power_threshold_dbm = parse_config_double(key, value);
    else if (key == "precoder")
        config.planner.precoder = parse_precoder(value);
    else if (key == "mode")
        config.mode = parse_plan_mode(value);
    else if (key == "inter_cu_interference")
        config.planner.inter_cu_interference = parse_config_bool(key, value);
    else
        throw std::invalid_argument("unknown config key '" + key + "'");
}

// Parses `key = value` lines; '#' starts a comment, blank lines are skipped.
// Later entries override earlier ones.
inline SimulationConfig parse_config(std::istream &in,
                                     SimulationConfig base = SimulationConfig{}) {
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        line = detail::trim(line);
        if (line.empty())
            continue;
        std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(line_no) +
                                        ": expected 'key = value'");
        std::string key = detail::trim(line.substr(0, eq));
        std::string value = detail::trim(line.substr(eq + 1));
        if (key.empty() || value.empty())
            throw std::invalid_argument("config line " + std::to_string(line_no) +
                                        ": expected 'key = value'");
        try {
            apply_config_entry(base, key, value);
        } catch (const std::invalid_argument &e) {
            throw std::invalid_argument("config line " + std::to_string(line_no) + ": " +
                                        e.what());
        }
    }
    return base;
}

inline SimulationConfig parse_config_string(const std::string &text,
                                            SimulationConfig base = SimulationConfig{}) {
    std::istringstream in(text);
    return parse_config(in, std::move(base));
}

} // namespace midhaul

#endif
