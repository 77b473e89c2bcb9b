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

#ifndef MIDHAUL_SCENE_HPP
#define MIDHAUL_SCENE_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "midhaul/geometry.hpp"

namespace midhaul {

enum class NodeKind { CU, DU };

inline const char *to_string(NodeKind k) { return k == NodeKind::CU ? "CU" : "DU"; }

struct Node {
    std::string id;
    NodeKind kind = NodeKind::DU;
    Vec3 position; // meters, z is antenna height above ground
};

// Axis-aligned building box. Footprint [x0,x1]x[y0,y1], extruded from z=0 to z=height.
struct Building {
    double x0 = 0.0, y0 = 0.0, x1 = 0.0, y1 = 0.0;
    double height = 0.0;

    void validate() const {
        if (x1 <= x0 || y1 <= y0)
            throw std::invalid_argument("building footprint must have positive area");
        if (height <= 0.0)
            throw std::invalid_argument("building height must be positive");
    }
};

struct SceneConfig {
    double area_side_m = 500.0;
    int grid_rows = 7;
    int grid_cols = 7;
    double min_building_height_m = 10.0;
    double max_building_height_m = 60.0;
    int cu_count = 8;
    int du_count = 36;
    double mast_height_m = 2.0; // antenna mast above the roof
    std::uint64_t seed = 1;

    void validate() const {
        if (area_side_m <= 0.0)
            throw std::invalid_argument("area_side_m must be positive");
        if (grid_rows < 1 || grid_cols < 1)
            throw std::invalid_argument("building grid must be at least 1x1");
        if (min_building_height_m <= 0.0 || max_building_height_m < min_building_height_m)
            throw std::invalid_argument("invalid building height range");
        if (cu_count < 1 || du_count < 1)
            throw std::invalid_argument("cu_count and du_count must be at least 1");
        if (mast_height_m < 0.0)
            throw std::invalid_argument("mast_height_m must be non-negative");
    }
};

struct Scene {
    std::vector<Building> buildings;
    std::vector<Node> nodes;
};

namespace detail {

// Deterministic uniform double in [lo, hi), independent of the standard
// library's distribution implementation.
inline double uniform_double(std::mt19937_64 &rng, double lo, double hi) {
    double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
}

} // namespace detail

// Places one building per grid cell (jittered footprint, random height) and
// puts CU nodes on the tallest rooftops, DU nodes on the next-tallest ones.
// Every CU ends up strictly higher than every DU.
inline Scene generate_scene(const SceneConfig &config) {
    config.validate();

    const int total_nodes = config.cu_count + config.du_count;
    const int rooftops = config.grid_rows * config.grid_cols;
    if (total_nodes > rooftops)
        throw std::invalid_argument("scene capacity exceeded: " + std::to_string(total_nodes) +
                                    " nodes requested but only " + std::to_string(rooftops) +
                                    " rooftops available");

    std::mt19937_64 rng(config.seed);
    Scene scene;
    scene.buildings.reserve(static_cast<std::size_t>(rooftops));

    const double cell_w = config.area_side_m / config.grid_cols;
    const double cell_h = config.area_side_m / config.grid_rows;

    std::set<double> used_heights; // exact duplicate heights are redrawn so the
                                   // tallest-first ordering is strict
    for (int r = 0; r < config.grid_rows; ++r) {
        for (int c = 0; c < config.grid_cols; ++c) {
            Building b;
            double w = detail::uniform_double(rng, 0.35, 0.60) * cell_w;
            double d = detail::uniform_double(rng, 0.35, 0.60) * cell_h;
            double ox = detail::uniform_double(rng, 0.05, 0.95 - w / cell_w) * cell_w;
            double oy = detail::uniform_double(rng, 0.05, 0.95 - d / cell_h) * cell_h;
            b.x0 = c * cell_w + ox;
            b.y0 = r * cell_h + oy;
            b.x1 = b.x0 + w;
            b.y1 = b.y0 + d;
            do {
                b.height = detail::uniform_double(rng, config.min_building_height_m,
                                                  config.max_building_height_m);
            } while (!used_heights.insert(b.height).second);
            b.validate();
            scene.buildings.push_back(b);
        }
    }

    // Tallest rooftops first; heights are unique by construction.
    std::vector<std::size_t> order(scene.buildings.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return scene.buildings[a].height > scene.buildings[b].height;
    });

    auto place = [&](std::size_t building_idx, NodeKind kind, int number) {
        const Building &b = scene.buildings[building_idx];
        Node n;
        n.kind = kind;
        n.id = std::string(to_string(kind)) + std::to_string(number);
        n.position = {0.5 * (b.x0 + b.x1), 0.5 * (b.y0 + b.y1), b.height + config.mast_height_m};
        scene.nodes.push_back(n);
    };

    for (int i = 0; i < config.cu_count; ++i)
        place(order[static_cast<std::size_t>(i)], NodeKind::CU, i + 1);
    for (int i = 0; i < config.du_count; ++i)
        place(order[static_cast<std::size_t>(config.cu_count + i)], NodeKind::DU, i + 1);

    return scene;
}

namespace detail {

// True iff the open segment a-b crosses the strict interior of the box.
// Contact with faces, edges or corners alone does not count.
inline bool segment_crosses_building(const Vec3 &a, const Vec3 &b, const Building &bld) {
    double lo = 0.0, hi = 1.0;
    auto clip = [&](double p, double d, double mn, double mx) {
        if (std::abs(d) < 1e-15)
            return p > mn && p < mx; // parallel to the slab: must lie strictly inside
        double t0 = (mn - p) / d, t1 = (mx - p) / d;
        if (t0 > t1)
            std::swap(t0, t1);
        lo = std::max(lo, t0);
        hi = std::min(hi, t1);
        return true;
    };
    const Vec3 d = b - a;
    if (!clip(a.x, d.x, bld.x0, bld.x1))
        return false;
    if (!clip(a.y, d.y, bld.y0, bld.y1))
        return false;
    if (!clip(a.z, d.z, 0.0, bld.height))
        return false;
    return hi - lo > 1e-12;
}

} // namespace detail

inline bool line_of_sight(const Vec3 &a, const Vec3 &b, const std::vector<Building> &buildings) {
    for (const Building &bld : buildings)
        if (detail::segment_crosses_building(a, b, bld))
            return false;
    return true;
}

} // namespace midhaul

#endif
