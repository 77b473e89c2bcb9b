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
// Report emission: per-link metrics CSV, plan reports (text and JSON) and
// plot-ready sweep CSV. Rendering is out of scope; everything here is data.

#ifndef MIDHAUL_REPORT_HPP
#define MIDHAUL_REPORT_HPP

#include <cstddef>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "midhaul/mimo.hpp"
#include "midhaul/planner.hpp"

namespace midhaul {

inline constexpr const char *metrics_csv_header = "cu_id,du_id,slnr_db,sinr_db,rate_bps";

// Doubles use %.17g so the CSV is an exact image of the in-memory values.
inline void write_metrics_csv(std::ostream &out, const std::vector<LinkMetrics> &metrics) {
    out << metrics_csv_header << "\n";
    for (const LinkMetrics &lm : metrics)
        out << lm.cu_id << ',' << lm.du_id << ',' << detail::format_double(lm.slnr_db) << ','
            << detail::format_double(lm.sinr_db) << ',' << detail::format_double(lm.rate_bps)
            << "\n";
}

inline void write_plan_report_text(std::ostream &out, const AssociationPlan &plan,
                                   const RadioParams &radio) {
    out << "selected CUs (" << plan.selected_cus.size() << "):";
    for (const auto &id : plan.selected_cus)
        out << ' ' << id;
    out << "\n";
    out << "rate target: " << detail::format_double(radio.rate_target_bps) << " bps\n";
    out << "feasible: " << (plan.feasible ? "yes" : "no") << "\n";
    out << "links (" << plan.metrics.size() << "):\n";
    for (const LinkMetrics &lm : plan.metrics) {
        char row[160];
        std::snprintf(row, sizeof row, "  %-8s <- %-8s slnr %8.2f dB  sinr %8.2f dB  rate %.4g bps",
                      lm.du_id.c_str(), lm.cu_id.c_str(), lm.slnr_db, lm.sinr_db, lm.rate_bps);
        out << row << "\n";
    }
    if (!plan.unserved_dus.empty()) {
        out << "unserved DUs:";
        for (const auto &id : plan.unserved_dus)
            out << ' ' << id;
        out << "\n";
    }
    if (!plan.bottleneck_dus.empty()) {
        out << "bottleneck DUs (below target or unserved):";
        for (const auto &id : plan.bottleneck_dus)
            out << ' ' << id;
        out << "\n";
    }
}

inline nlohmann::json plan_report_json(const AssociationPlan &plan, const RadioParams &radio) {
    nlohmann::json links = nlohmann::json::array();
    for (const LinkMetrics &lm : plan.metrics)
        links.push_back({{"cu_id", lm.cu_id},
                         {"du_id", lm.du_id},
                         {"slnr_db", lm.slnr_db},
                         {"sinr_db", lm.sinr_db},
                         {"rate_bps", lm.rate_bps}});
    return {{"selected_cus", plan.selected_cus},
            {"rate_target_bps", radio.rate_target_bps},
            {"feasible", plan.feasible},
            {"links", links},
            {"unserved_dus", plan.unserved_dus},
            {"bottleneck_dus", plan.bottleneck_dus}};
}

// One labeled result column group per swept configuration.
struct SweepEntry {
    std::string label; // column suffix, e.g. "1cu" or "16x16"
    AssociationPlan plan;
};

// Per-DU plot data: one row per DU (1-based du_index plus id), a SINR and a
// rate column per sweep entry, and the constant peak-rate / cap-activation
// SINR reference columns. DUs unserved in some configuration get empty cells
// there.
inline void write_plot_data_csv(std::ostream &out, const std::vector<std::string> &du_ids,
                                const std::vector<SweepEntry> &entries,
                                const RadioParams &radio) {
    out << "du_index,du_id";
    for (const auto &e : entries)
        out << ",sinr_db_" << e.label;
    for (const auto &e : entries)
        out << ",rate_bps_" << e.label;
    out << ",peak_rate_bps,cap_sinr_db\n";

    std::vector<std::map<std::string, const LinkMetrics *>> by_du(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i)
        for (const LinkMetrics &lm : entries[i].plan.metrics)
            by_du[i][lm.du_id] = &lm;

    const double peak = peak_link_rate_bps(radio);
    const double cap_db = rate_cap_sinr_db(radio);
    for (std::size_t d = 0; d < du_ids.size(); ++d) {
        out << (d + 1) << ',' << du_ids[d];
        for (std::size_t i = 0; i < entries.size(); ++i) {
            auto it = by_du[i].find(du_ids[d]);
            out << ',';
            if (it != by_du[i].end())
                out << detail::format_double(it->second->sinr_db);
        }
        for (std::size_t i = 0; i < entries.size(); ++i) {
            auto it = by_du[i].find(du_ids[d]);
            out << ',';
            if (it != by_du[i].end())
                out << detail::format_double(it->second->rate_bps);
        }
        out << ',' << detail::format_double(peak) << ',' << detail::format_double(cap_db) << "\n";
    }
}

} // namespace midhaul

#endif
