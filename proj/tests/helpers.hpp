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
// Shared test fixtures: seeded randomness, rotation matrices and the
// brute-force oracles the derived-value tests compare against.

#ifndef MIDHAUL_TESTS_HELPERS_HPP
#define MIDHAUL_TESTS_HELPERS_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "midhaul/geometry.hpp"
#include "midhaul/scene.hpp"
#include "midhaul/trace.hpp"

namespace testhelp {

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64{seed}; }

inline Eigen::MatrixXcd random_channel(std::mt19937_64 &gen, Eigen::Index rows,
                                       Eigen::Index cols) {
    std::normal_distribution<double> normal(0.0, 1.0);
    Eigen::MatrixXcd h(rows, cols);
    for (Eigen::Index r = 0; r < rows; ++r)
        for (Eigen::Index c = 0; c < cols; ++c)
            h(r, c) = std::complex<double>(normal(gen), normal(gen)) / std::sqrt(2.0);
    return h;
}

inline Eigen::VectorXcd random_unit_vector(std::mt19937_64 &gen, Eigen::Index n) {
    Eigen::VectorXcd v = random_channel(gen, n, 1);
    return v / v.norm();
}

// Rodrigues rotation of v about the unit axis by angle_rad.
inline midhaul::Vec3 rotate(const midhaul::Vec3 &v, const midhaul::Vec3 &axis, double angle_rad) {
    midhaul::Vec3 k = midhaul::normalized(axis);
    double c = std::cos(angle_rad), s = std::sin(angle_rad);
    midhaul::Vec3 kxv = midhaul::cross(k, v);
    double kdv = midhaul::dot(k, v);
    return {v.x * c + kxv.x * s + k.x * kdv * (1.0 - c),
            v.y * c + kxv.y * s + k.y * kdv * (1.0 - c),
            v.z * c + kxv.z * s + k.z * kdv * (1.0 - c)};
}

inline midhaul::PathRecord random_path_record(std::mt19937_64 &gen, long long path_id,
                                              const std::string &cu_id,
                                              const std::string &du_id) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    midhaul::PathRecord p;
    p.path_id = path_id;
    p.cu_id = cu_id;
    p.du_id = du_id;
    p.rx_power_dbm = -120.0 + 100.0 * u(gen);
    p.aod_az_deg = -180.0 + 360.0 * u(gen);
    p.aod_el_deg = 180.0 * u(gen);
    p.aoa_az_deg = -180.0 + 360.0 * u(gen);
    p.aoa_el_deg = 180.0 * u(gen);
    p.delay_s = 3e-6 * u(gen);
    p.phase_rad = midhaul::two_pi * u(gen);
    return p;
}

// Independent blockage oracle: samples the open segment at roughly step_m
// spacing and reports true iff some sample lies strictly inside a building.
inline bool segment_blocked_by_sampling(const midhaul::Vec3 &a, const midhaul::Vec3 &b,
                                        const std::vector<midhaul::Building> &buildings,
                                        double step_m = 0.01) {
    midhaul::Vec3 d = b - a;
    double len = midhaul::norm(d);
    if (len <= 0.0)
        return false;
    auto steps = static_cast<long long>(std::ceil(len / step_m));
    for (long long i = 1; i < steps; ++i) {
        double t = static_cast<double>(i) / static_cast<double>(steps);
        midhaul::Vec3 p{a.x + d.x * t, a.y + d.y * t, a.z + d.z * t};
        for (const midhaul::Building &bld : buildings) {
            if (p.x > bld.x0 && p.x < bld.x1 && p.y > bld.y0 && p.y < bld.y1 && p.z > 0.0 &&
                p.z < bld.height)
                return true;
        }
    }
    return false;
}

// Exact minimum set cover by bitmask enumeration; returns 0 when no subset of
// the sets covers the universe. universe_mask has one bit per element.
inline int min_set_cover_size(const std::vector<std::uint32_t> &sets,
                              std::uint32_t universe_mask) {
    const std::uint32_t n = static_cast<std::uint32_t>(sets.size());
    int best = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::uint32_t covered = 0;
        for (std::uint32_t i = 0; i < n; ++i)
            if (mask & (1u << i))
                covered |= sets[i];
        if ((covered & universe_mask) == universe_mask) {
            int size = __builtin_popcount(mask);
            if (best == 0 || size < best)
                best = size;
        }
    }
    return best;
}

} // namespace testhelp

#endif
