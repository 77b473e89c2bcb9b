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
#include <random>

#include "midhaul/channel.hpp"

#include "helpers.hpp"

using namespace midhaul;
using Catch::Approx;

namespace {

// one CU-DU path with unit gain relative to a 0 dBm transmitter
PathRecord make_path(long long id, double rx_dbm, double phase_rad, double delay_s = 0.0) {
    PathRecord p;
    p.path_id = id;
    p.cu_id = "CU1";
    p.du_id = "DU1";
    p.rx_power_dbm = rx_dbm;
    p.aod_az_deg = 20.0;
    p.aod_el_deg = 85.0;
    p.aoa_az_deg = -160.0;
    p.aoa_el_deg = 95.0;
    p.delay_s = delay_s;
    p.phase_rad = phase_rad;
    return p;
}

struct PairStates {
    ArrayState du;
    ArrayState cu;
};

PairStates aligned_states(const PathRecord &p, int du_side = 2, int cu_side = 3) {
    ArrayConfig du_config;
    du_config.rows = du_side;
    du_config.cols = du_side;
    ArrayConfig cu_config;
    cu_config.rows = cu_side;
    cu_config.cols = cu_side;
    return {align_du(du_config, {p}), align_cu(cu_config, {{p}})};
}

} // namespace

TEST_CASE("single unit-gain zero-phase path is an exact outer product") {
    PathRecord p = make_path(1, 0.0, 0.0);
    PairStates s = aligned_states(p);
    ChannelMatrix cm = synthesize_channel({p}, s.du, s.cu, 140e9, 0.0);
    CHECK(cm.cu_id == "CU1");
    CHECK(cm.du_id == "DU1");

    Eigen::VectorXcd a_du =
        steering_vector(s.du, direction_from_angles(p.aoa_az_deg, p.aoa_el_deg), 140e9);
    Eigen::VectorXcd a_cu =
        steering_vector(s.cu, direction_from_angles(p.aod_az_deg, p.aod_el_deg), 140e9);
    Eigen::MatrixXcd expected = a_du * a_cu.transpose(); // plain transpose, no conjugation
    REQUIRE(cm.h.rows() == expected.rows());
    REQUIRE(cm.h.cols() == expected.cols());
    CHECK((cm.h - expected).cwiseAbs().maxCoeff() < 1e-12);

    // rank 1: second singular value negligible
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(cm.h);
    CHECK(svd.singularValues()(1) < 1e-9 * svd.singularValues()(0));

    // phase pi flips the sign
    PathRecord flipped = make_path(1, 0.0, pi);
    ChannelMatrix cm_pi = synthesize_channel({flipped}, s.du, s.cu, 140e9, 0.0);
    CHECK((cm_pi.h + expected).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("two antiphase copies cancel to the zero matrix") {
    PathRecord p0 = make_path(1, 0.0, 0.0);
    PathRecord p1 = make_path(2, 0.0, pi);
    PairStates s = aligned_states(p0);
    ChannelMatrix cm = synthesize_channel({p0, p1}, s.du, s.cu, 140e9, 0.0);
    CHECK(cm.h.cwiseAbs().maxCoeff() < 1e-12);
    // exp(j*pi) carries ~1e-16 of imaginary residue, so the gain is not
    // exactly -inf, just far below anything physical
    CHECK(channel_frobenius_gain_db(cm.h) < -240.0);
}

TEST_CASE("delay enters the phase as 2*pi*f*delay") {
    double f = 140e9;
    double delay = 1.25e-9;
    PathRecord p = make_path(1, 0.0, 0.0, delay);
    PairStates s = aligned_states(p);
    ChannelMatrix with_delay = synthesize_channel({p}, s.du, s.cu, f, 0.0);
    ChannelMatrix base = synthesize_channel({make_path(1, 0.0, 0.0)}, s.du, s.cu, f, 0.0);
    std::complex<double> rot = std::polar(1.0, two_pi * f * delay);
    CHECK((with_delay.h - rot * base.h).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("synthesis is linear in the path set and scales with sqrt(gain)") {
    auto gen = testhelp::rng(3);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<PathRecord> set_a, set_b, both;
    for (int i = 0; i < 3; ++i) {
        PathRecord p = testhelp::random_path_record(gen, i + 1, "CU1", "DU1");
        set_a.push_back(p);
        both.push_back(p);
    }
    for (int i = 0; i < 2; ++i) {
        PathRecord p = testhelp::random_path_record(gen, i + 4, "CU1", "DU1");
        set_b.push_back(p);
        both.push_back(p);
    }
    PairStates s = aligned_states(set_a.front());
    double tx = 43.0;
    ChannelMatrix ha = synthesize_channel(set_a, s.du, s.cu, 140e9, tx);
    ChannelMatrix hb = synthesize_channel(set_b, s.du, s.cu, 140e9, tx);
    ChannelMatrix hab = synthesize_channel(both, s.du, s.cu, 140e9, tx);
    CHECK((hab.h - ha.h - hb.h).cwiseAbs().maxCoeff() < 1e-12);

    // +10 dB on every path multiplies H by sqrt(10)
    std::vector<PathRecord> boosted = set_a;
    for (PathRecord &p : boosted)
        p.rx_power_dbm += 10.0;
    ChannelMatrix hboost = synthesize_channel(boosted, s.du, s.cu, 140e9, tx);
    CHECK((hboost.h - std::sqrt(10.0) * ha.h).cwiseAbs().maxCoeff() <
          1e-9 * ha.h.cwiseAbs().maxCoeff());

    // rank <= path count
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(hab.h);
    Eigen::Index rank = 0;
    for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
        if (svd.singularValues()(i) > 1e-9 * svd.singularValues()(0))
            ++rank;
    CHECK(rank <= 5);
}

TEST_CASE("single-path Frobenius norm is sqrt(gain) times signature norms") {
    PathRecord p = make_path(1, -62.0, 1.3, 4.5e-8);
    PairStates s = aligned_states(p, 3, 4);
    double tx = 43.0;
    ChannelMatrix cm = synthesize_channel({p}, s.du, s.cu, 140e9, tx);
    Eigen::VectorXcd a_du =
        steering_vector(s.du, direction_from_angles(p.aoa_az_deg, p.aoa_el_deg), 140e9);
    Eigen::VectorXcd a_cu =
        steering_vector(s.cu, direction_from_angles(p.aod_az_deg, p.aod_el_deg), 140e9);
    double expected = std::sqrt(path_gain_linear(p, tx)) * a_du.norm() * a_cu.norm();
    CHECK(cm.h.norm() == Approx(expected).epsilon(1e-9));
}

TEST_CASE("frobenius gain examples and brute-force oracle") {
    CHECK(channel_frobenius_gain_db(Eigen::MatrixXcd::Zero(3, 3)) ==
          -std::numeric_limits<double>::infinity());
    CHECK(channel_frobenius_gain_db(Eigen::MatrixXcd::Identity(2, 2)) ==
          Approx(10.0 * std::log10(2.0)));

    auto gen = testhelp::rng(9);
    Eigen::MatrixXcd h = testhelp::random_channel(gen, 4, 6);
    double sum = 0.0;
    for (Eigen::Index r = 0; r < h.rows(); ++r)
        for (Eigen::Index c = 0; c < h.cols(); ++c)
            sum += std::norm(h(r, c));
    CHECK(channel_frobenius_gain_db(h) == Approx(10.0 * std::log10(sum)).epsilon(1e-12));
}

TEST_CASE("synthesis input validation") {
    PathRecord p = make_path(1, 0.0, 0.0);
    PairStates s = aligned_states(p);
    CHECK_THROWS_AS(synthesize_channel({}, s.du, s.cu, 140e9, 0.0), std::invalid_argument);
    PathRecord other = p;
    other.du_id = "DU2";
    CHECK_THROWS_WITH(synthesize_channel({p, other}, s.du, s.cu, 140e9, 0.0),
                      Catch::Matchers::ContainsSubstring("pair"));
}
