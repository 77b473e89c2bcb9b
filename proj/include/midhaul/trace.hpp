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
// Canonical path-record file format. One CSV row per propagation path:
//
//   path_id,cu_id,du_id,rx_power_dbm,aod_az_deg,aod_el_deg,aoa_az_deg,aoa_el_deg,delay_s,phase_deg
//
// Angles follow the conventions in geometry.hpp (elevation from zenith).
// The phase column is in degrees for readability; in memory it is radians.

#ifndef MIDHAUL_TRACE_HPP
#define MIDHAUL_TRACE_HPP

#include <cstdio>
#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "midhaul/geometry.hpp"
#include "midhaul/scene.hpp"
#include "midhaul/units.hpp"

namespace midhaul {

// One ray-traced (or synthesized) propagation path between a CU and a DU.
// rx_power_dbm is the power received over this path with isotropic antennas
// at both ends; array and element gains enter later via spatial signatures.
struct PathRecord {
    long long path_id = 0;
    std::string cu_id;
    std::string du_id;
    double rx_power_dbm = 0.0;
    double aod_az_deg = 0.0; // departure direction at the CU
    double aod_el_deg = 90.0;
    double aoa_az_deg = 0.0; // arrival direction at the DU (points back along the incoming ray)
    double aoa_el_deg = 90.0;
    double delay_s = 0.0;
    double phase_rad = 0.0; // in [0, 2*pi)
};

struct RadioParams {
    double carrier_hz = 140e9;
    double bandwidth_hz = 2e9;
    double tx_power_dbm = 43.0;
    double rate_target_bps = 10e9;
    double loss_factor = 0.15;            // fraction of bandwidth lost to overhead
    double max_spectral_efficiency = 5.9; // bits/s/Hz cap per link
    double noise_figure_db = 7.0;
    std::optional<double> noise_power_dbm; // overrides the thermal-floor computation when set

    // Per-DU noise power in watts: either the explicit override or
    // thermal floor -174 dBm/Hz over the bandwidth plus the noise figure.
    double noise_power_w() const {
        double dbm = noise_power_dbm ? *noise_power_dbm
                                     : -174.0 + 10.0 * std::log10(bandwidth_hz) + noise_figure_db;
        return dbm_to_watts(dbm);
    }

    void validate() const {
        if (carrier_hz <= 0.0)
            throw std::invalid_argument("carrier_hz must be positive");
        if (bandwidth_hz <= 0.0)
            throw std::invalid_argument("bandwidth_hz must be positive");
        if (loss_factor < 0.0 || loss_factor >= 1.0)
            throw std::invalid_argument("loss_factor must be in [0, 1)");
        if (max_spectral_efficiency <= 0.0)
            throw std::invalid_argument("max_spectral_efficiency must be positive");
        if (noise_power_w() <= 0.0)
            throw std::invalid_argument("noise power must be positive");
    }
};

inline constexpr const char *trace_csv_header =
    "path_id,cu_id,du_id,rx_power_dbm,aod_az_deg,aod_el_deg,aoa_az_deg,aoa_el_deg,delay_s,phase_deg";

inline constexpr const char *node_csv_header = "node_id,kind,x_m,y_m,z_m";

namespace detail {

inline std::vector<std::string> split_csv_row(const std::string &line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            fields.push_back(cur);
            cur.clear();
        } else if (ch != '\r') {
            cur += ch;
        }
    }
    fields.push_back(cur);
    return fields;
}

inline double parse_double_field(const std::string &s, int line_no, int col) {
    try {
        std::size_t used = 0;
        double v = std::stod(s, &used);
        while (used < s.size() && (s[used] == ' ' || s[used] == '\t'))
            ++used;
        if (used != s.size())
            throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception &) {
        throw std::invalid_argument("malformed number '" + s + "' at line " +
                                    std::to_string(line_no) + ", column " + std::to_string(col));
    }
}

inline long long parse_int_field(const std::string &s, int line_no, int col) {
    try {
        std::size_t used = 0;
        long long v = std::stoll(s, &used);
        if (used != s.size())
            throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception &) {
        throw std::invalid_argument("malformed integer '" + s + "' at line " +
                                    std::to_string(line_no) + ", column " + std::to_string(col));
    }
}

inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

inline double wrap_phase_rad(double phase) {
    double p = std::fmod(phase, two_pi);
    if (p < 0.0)
        p += two_pi;
    return p;
}

} // namespace detail

inline std::vector<PathRecord> parse_trace(std::istream &in) {
    std::string line;
    if (!std::getline(in, line))
        throw std::invalid_argument("empty trace stream: missing header");
    if (!line.empty() && line.back() == '\r')
        line.pop_back();
    if (line != trace_csv_header)
        throw std::invalid_argument("bad trace header, expected: " +
                                    std::string(trace_csv_header));

    std::vector<PathRecord> records;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || (line.size() == 1 && line[0] == '\r'))
            continue;
        auto f = detail::split_csv_row(line);
        if (f.size() != 10)
            throw std::invalid_argument("malformed row at line " + std::to_string(line_no) +
                                        ": expected 10 columns, got " + std::to_string(f.size()));
        PathRecord r;
        r.path_id = detail::parse_int_field(f[0], line_no, 1);
        r.cu_id = f[1];
        r.du_id = f[2];
        if (r.cu_id.empty() || r.du_id.empty())
            throw std::invalid_argument("empty node id at line " + std::to_string(line_no));
        r.rx_power_dbm = detail::parse_double_field(f[3], line_no, 4);
        r.aod_az_deg = wrap_azimuth_deg(detail::parse_double_field(f[4], line_no, 5));
        r.aod_el_deg = detail::parse_double_field(f[5], line_no, 6);
        r.aoa_az_deg = wrap_azimuth_deg(detail::parse_double_field(f[6], line_no, 7));
        r.aoa_el_deg = detail::parse_double_field(f[7], line_no, 8);
        r.delay_s = detail::parse_double_field(f[8], line_no, 9);
        r.phase_rad = detail::wrap_phase_rad(deg_to_rad(detail::parse_double_field(f[9], line_no, 10)));

        if (r.aod_el_deg < 0.0 || r.aod_el_deg > 180.0)
            throw std::invalid_argument("aod_el_deg out of [0, 180] at line " +
                                        std::to_string(line_no));
        if (r.aoa_el_deg < 0.0 || r.aoa_el_deg > 180.0)
            throw std::invalid_argument("aoa_el_deg out of [0, 180] at line " +
                                        std::to_string(line_no));
        if (r.delay_s < 0.0)
            throw std::invalid_argument("negative delay at line " + std::to_string(line_no));
        if (!std::isfinite(r.rx_power_dbm))
            throw std::invalid_argument("non-finite rx_power at line " + std::to_string(line_no));
        records.push_back(std::move(r));
    }
    return records;
}

inline std::string serialize_trace(const std::vector<PathRecord> &records) {
    std::string out = trace_csv_header;
    out += '\n';
    for (const PathRecord &r : records) {
        out += std::to_string(r.path_id);
        out += ',';
        out += r.cu_id;
        out += ',';
        out += r.du_id;
        out += ',';
        out += detail::format_double(r.rx_power_dbm);
        out += ',';
        out += detail::format_double(r.aod_az_deg);
        out += ',';
        out += detail::format_double(r.aod_el_deg);
        out += ',';
        out += detail::format_double(r.aoa_az_deg);
        out += ',';
        out += detail::format_double(r.aoa_el_deg);
        out += ',';
        out += detail::format_double(r.delay_s);
        out += ',';
        out += detail::format_double(rad_to_deg(r.phase_rad));
        out += '\n';
    }
    return out;
}

inline std::vector<Node> parse_nodes(std::istream &in) {
    std::string line;
    if (!std::getline(in, line))
        throw std::invalid_argument("empty node stream: missing header");
    if (!line.empty() && line.back() == '\r')
        line.pop_back();
    if (line != node_csv_header)
        throw std::invalid_argument("bad node header, expected: " + std::string(node_csv_header));

    std::vector<Node> nodes;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || (line.size() == 1 && line[0] == '\r'))
            continue;
        auto f = detail::split_csv_row(line);
        if (f.size() != 5)
            throw std::invalid_argument("malformed row at line " + std::to_string(line_no) +
                                        ": expected 5 columns, got " + std::to_string(f.size()));
        Node n;
        n.id = f[0];
        if (n.id.empty())
            throw std::invalid_argument("empty node id at line " + std::to_string(line_no));
        if (f[1] == "CU")
            n.kind = NodeKind::CU;
        else if (f[1] == "DU")
            n.kind = NodeKind::DU;
        else
            throw std::invalid_argument("unknown node kind '" + f[1] + "' at line " +
                                        std::to_string(line_no) + ", column 2");
        n.position.x = detail::parse_double_field(f[2], line_no, 3);
        n.position.y = detail::parse_double_field(f[3], line_no, 4);
        n.position.z = detail::parse_double_field(f[4], line_no, 5);
        if (n.position.z < 0.0)
            throw std::invalid_argument("negative node height at line " + std::to_string(line_no));
        nodes.push_back(std::move(n));
    }
    return nodes;
}

inline std::string serialize_nodes(const std::vector<Node> &nodes) {
    std::string out = node_csv_header;
    out += '\n';
    for (const Node &n : nodes) {
        out += n.id;
        out += ',';
        out += to_string(n.kind);
        out += ',';
        out += detail::format_double(n.position.x);
        out += ',';
        out += detail::format_double(n.position.y);
        out += ',';
        out += detail::format_double(n.position.z);
        out += '\n';
    }
    return out;
}

// Effective linear power gain of one path relative to the transmit power.
inline double path_gain_linear(const PathRecord &record, double tx_power_dbm) {
    if (!std::isfinite(tx_power_dbm))
        throw std::invalid_argument("tx_power_dbm must be finite");
    return db_to_linear(record.rx_power_dbm - tx_power_dbm);
}

// Immutable bundle of everything a planning run consumes.
struct Scenario {
    std::vector<Node> nodes;
    std::vector<PathRecord> paths;
    RadioParams radio;

    const Node *find_node(const std::string &id) const {
        for (const Node &n : nodes)
            if (n.id == id)
                return &n;
        return nullptr;
    }
};

// Assembles and validates a Scenario: node ids unique, every path references
// an existing CU/DU pair, per-pair path counts within the configured maximum.
inline Scenario make_scenario(std::vector<Node> nodes, std::vector<PathRecord> paths,
                              RadioParams radio, int max_paths_per_pair = 25) {
    radio.validate();
    std::map<std::string, NodeKind> kinds;
    for (const Node &n : nodes) {
        if (!kinds.emplace(n.id, n.kind).second)
            throw std::invalid_argument("duplicate node id '" + n.id + "'");
        if (n.position.z < 0.0)
            throw std::invalid_argument("node '" + n.id + "' has negative height");
    }
    std::map<std::pair<std::string, std::string>, int> per_pair;
    for (const PathRecord &p : paths) {
        auto cu = kinds.find(p.cu_id);
        if (cu == kinds.end() || cu->second != NodeKind::CU)
            throw std::invalid_argument("path " + std::to_string(p.path_id) +
                                        " references unknown CU '" + p.cu_id + "'");
        auto du = kinds.find(p.du_id);
        if (du == kinds.end() || du->second != NodeKind::DU)
            throw std::invalid_argument("path " + std::to_string(p.path_id) +
                                        " references unknown DU '" + p.du_id + "'");
        int &count = per_pair[{p.cu_id, p.du_id}];
        if (++count > max_paths_per_pair)
            throw std::invalid_argument("pair " + p.cu_id + "-" + p.du_id + " exceeds " +
                                        std::to_string(max_paths_per_pair) + " paths");
    }
    return Scenario{std::move(nodes), std::move(paths), radio};
}

} // namespace midhaul

#endif
