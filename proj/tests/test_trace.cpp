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

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <sstream>

#include "midhaul/trace.hpp"
#include "midhaul/units.hpp"

#include "helpers.hpp"

using namespace midhaul;
using Catch::Approx;

namespace {

std::vector<PathRecord> parse_text(const std::string &text) {
    std::istringstream in(text);
    return parse_trace(in);
}

} // namespace

TEST_CASE("example row converts degrees and seconds") {
    std::string text = std::string(trace_csv_header) +
                       "\n1,CU1,DU1,-80.0,45.0,95.0,-135.0,85.0,3.3356e-7,180.0\n";
    std::vector<PathRecord> records = parse_text(text);
    REQUIRE(records.size() == 1);
    const PathRecord &p = records.front();
    CHECK(p.path_id == 1);
    CHECK(p.cu_id == "CU1");
    CHECK(p.du_id == "DU1");
    CHECK(p.rx_power_dbm == Approx(-80.0));
    CHECK(p.aod_az_deg == Approx(45.0));
    CHECK(p.aod_el_deg == Approx(95.0));
    CHECK(p.aoa_az_deg == Approx(-135.0));
    CHECK(p.aoa_el_deg == Approx(85.0));
    CHECK(p.delay_s == Approx(333.56e-9));
    CHECK(p.phase_rad == Approx(pi));
}

TEST_CASE("header-only file parses to an empty list") {
    CHECK(parse_text(std::string(trace_csv_header) + "\n").empty());
}

TEST_CASE("serialize writes header-only for empty and two lines for one record") {
    CHECK(serialize_trace({}) == std::string(trace_csv_header) + "\n");
    PathRecord p;
    p.path_id = 7;
    p.cu_id = "CU1";
    p.du_id = "DU2";
    std::string text = serialize_trace({p});
    CHECK(std::count(text.begin(), text.end(), '\n') == 2);
    CHECK(text.rfind(trace_csv_header, 0) == 0);
}

TEST_CASE("round trip preserves 1000 random records") {
    auto gen = testhelp::rng(7);
    std::vector<PathRecord> records;
    for (int i = 0; i < 1000; ++i)
        records.push_back(testhelp::random_path_record(gen, i + 1, "CU1", "DU1"));
    std::vector<PathRecord> parsed = parse_text(serialize_trace(records));
    REQUIRE(parsed.size() == records.size());
    for (std::size_t i = 0; i < records.size(); ++i) {
        const PathRecord &a = records[i], &b = parsed[i];
        CHECK(a.path_id == b.path_id);
        CHECK(a.cu_id == b.cu_id);
        CHECK(a.du_id == b.du_id);
        CHECK(b.rx_power_dbm == Approx(a.rx_power_dbm).epsilon(1e-12));
        CHECK(b.aod_az_deg == Approx(a.aod_az_deg).epsilon(1e-12));
        CHECK(b.aod_el_deg == Approx(a.aod_el_deg).epsilon(1e-12).margin(1e-12));
        CHECK(b.aoa_az_deg == Approx(a.aoa_az_deg).epsilon(1e-12));
        CHECK(b.aoa_el_deg == Approx(a.aoa_el_deg).epsilon(1e-12).margin(1e-12));
        CHECK(b.delay_s == Approx(a.delay_s).epsilon(1e-12).margin(1e-300));
        CHECK(b.phase_rad == Approx(a.phase_rad).epsilon(1e-12).margin(1e-12));
    }
}

TEST_CASE("parse errors name the offending location") {
    CHECK_THROWS_WITH(parse_text("bogus header\nrow\n"),
                      Catch::Matchers::ContainsSubstring("header"));
    // wrong column count
    CHECK_THROWS_WITH(parse_text(std::string(trace_csv_header) + "\n1,CU1,DU1,-80.0\n"),
                      Catch::Matchers::ContainsSubstring("line 2"));
    // non-numeric power (column 4)
    CHECK_THROWS_WITH(
        parse_text(std::string(trace_csv_header) +
                   "\n1,CU1,DU1,oops,45.0,95.0,-135.0,85.0,3.3e-7,180.0\n"),
        Catch::Matchers::ContainsSubstring("column 4") &&
            Catch::Matchers::ContainsSubstring("line 2"));
    // out-of-range elevation
    CHECK_THROWS_WITH(
        parse_text(std::string(trace_csv_header) +
                   "\n1,CU1,DU1,-80.0,45.0,200.0,-135.0,85.0,3.3e-7,180.0\n"),
        Catch::Matchers::ContainsSubstring("out of [0, 180]"));
    // negative delay
    CHECK_THROWS_AS(parse_text(std::string(trace_csv_header) +
                               "\n1,CU1,DU1,-80.0,45.0,95.0,-135.0,85.0,-1e-9,180.0\n"),
                    std::invalid_argument);
}

TEST_CASE("azimuth columns are wrapped into range") {
    std::vector<PathRecord> records =
        parse_text(std::string(trace_csv_header) +
                   "\n1,CU1,DU1,-80.0,270.0,95.0,180.0,85.0,3.3e-7,0.0\n");
    REQUIRE(records.size() == 1);
    CHECK(records[0].aod_az_deg == Approx(-90.0));
    CHECK(records[0].aoa_az_deg == Approx(-180.0));
}

TEST_CASE("path gain relative to isotropic endpoints") {
    PathRecord p;
    p.rx_power_dbm = 43.0;
    CHECK(path_gain_linear(p, 43.0) == Approx(1.0));
    p.rx_power_dbm = 13.0;
    CHECK(path_gain_linear(p, 43.0) == Approx(1e-3));
    p.rx_power_dbm = -80.0;
    CHECK(path_gain_linear(p, 43.0) == Approx(std::pow(10.0, -12.3)));
    CHECK(path_gain_linear(p, 43.0) > 0.0);
}

TEST_CASE("node inventory round trip and parsing") {
    std::vector<Node> nodes = {
        {"CU1", NodeKind::CU, {1.5, 2.5, 30.0}},
        {"DU1", NodeKind::DU, {100.0, 200.0, 12.0}},
    };
    std::istringstream in(serialize_nodes(nodes));
    std::vector<Node> parsed = parse_nodes(in);
    REQUIRE(parsed.size() == 2);
    CHECK(parsed[0].id == "CU1");
    CHECK(parsed[0].kind == NodeKind::CU);
    CHECK(parsed[1].position.y == Approx(200.0));

    std::istringstream bad("node_id,kind,x_m,y_m,z_m\nN1,ROUTER,0,0,0\n");
    CHECK_THROWS_WITH(parse_nodes(bad), Catch::Matchers::ContainsSubstring("kind"));
}

TEST_CASE("scenario enforces referential integrity and pair caps") {
    std::vector<Node> nodes = {
        {"CU1", NodeKind::CU, {0, 0, 30}},
        {"DU1", NodeKind::DU, {100, 0, 10}},
    };
    PathRecord p;
    p.path_id = 1;
    p.cu_id = "CU1";
    p.du_id = "DU1";
    p.rx_power_dbm = -80.0;
    CHECK_NOTHROW(make_scenario(nodes, {p}, RadioParams{}));

    PathRecord stray = p;
    stray.du_id = "DU9";
    CHECK_THROWS_WITH(make_scenario(nodes, {stray}, RadioParams{}),
                      Catch::Matchers::ContainsSubstring("DU9"));

    std::vector<Node> dup = nodes;
    dup.push_back({"CU1", NodeKind::DU, {5, 5, 10}});
    CHECK_THROWS_WITH(make_scenario(dup, {}, RadioParams{}),
                      Catch::Matchers::ContainsSubstring("duplicate"));

    std::vector<PathRecord> many;
    for (int i = 0; i < 3; ++i) {
        PathRecord q = p;
        q.path_id = i + 1;
        many.push_back(q);
    }
    CHECK_THROWS_WITH(make_scenario(nodes, many, RadioParams{}, 2),
                      Catch::Matchers::ContainsSubstring("paths"));
}

TEST_CASE("radio defaults and noise floor") {
    RadioParams radio;
    CHECK(radio.carrier_hz == Approx(140e9));
    CHECK(radio.bandwidth_hz == Approx(2e9));
    CHECK(radio.tx_power_dbm == Approx(43.0));
    CHECK(radio.rate_target_bps == Approx(10e9));
    // -174 + 10*log10(2e9) + 7 = -73.99 dBm
    CHECK(watts_to_dbm(radio.noise_power_w()) == Approx(-73.99).margin(0.01));
    radio.noise_power_dbm = -80.0;
    CHECK(watts_to_dbm(radio.noise_power_w()) == Approx(-80.0));

    RadioParams bad;
    bad.loss_factor = 1.0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}
