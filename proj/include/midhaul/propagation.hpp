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
// Simplified synthetic propagation: free-space loss with linear atmospheric
// absorption on LOS paths, plus optional single-bounce specular reflections
// off vertical building walls. A stand-in for an external ray tracer; the
// downstream pipeline consumes only PathRecords, so fidelity is pluggable.

#ifndef MIDHAUL_PROPAGATION_HPP
#define MIDHAUL_PROPAGATION_HPP

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "midhaul/scene.hpp"
#include "midhaul/trace.hpp"
#include "midhaul/units.hpp"

namespace midhaul {

struct PathSynthesisParams {
    double absorption_db_per_m = 0.0015; // 1.5 dB/km
    bool reflections = true;
    double reflection_loss_db = 10.0; // extra loss per wall bounce
    int max_paths_per_pair = 25;
};

// Friis free-space transmission loss, 20*log10(4*pi*d/lambda).
inline double free_space_path_loss_db(double distance_m, double carrier_hz) {
    if (carrier_hz <= 0.0)
        throw std::invalid_argument("carrier frequency must be positive");
    if (distance_m <= 0.0)
        throw std::invalid_argument("distance must be positive");
    return 20.0 * std::log10(4.0 * pi * distance_m / wavelength_m(carrier_hz));
}

namespace detail {

struct Candidate {
    double rx_power_dbm;
    double distance_m;
    Vec3 depart_dir; // unit, at the CU
    Vec3 arrive_dir; // unit, at the DU (points back along the incoming ray)
};

// Specular reflection point of a->b off an axis-aligned vertical wall plane,
// found by mirroring `a` across the plane. Returns false when the geometry
// does not admit a bounce (endpoints on opposite sides, or the reflection
// point misses the finite wall rectangle).
inline bool reflect_off_wall(const Vec3 &a, const Vec3 &b, int axis, double plane, double lo0,
                             double hi0, double height, Vec3 &point) {
    double pa = axis == 0 ? a.x : a.y;
    double pb = axis == 0 ? b.x : b.y;
    if ((pa - plane) * (pb - plane) <= 0.0)
        return false; // same strict side required
    Vec3 mirrored = a;
    if (axis == 0)
        mirrored.x = 2.0 * plane - a.x;
    else
        mirrored.y = 2.0 * plane - a.y;
    double pm = axis == 0 ? mirrored.x : mirrored.y;
    double denom = pb - pm;
    if (std::abs(denom) < 1e-15)
        return false;
    double t = (plane - pm) / denom;
    if (t <= 0.0 || t >= 1.0)
        return false;
    point = mirrored + t * (b - mirrored);
    double other = axis == 0 ? point.y : point.x;
    if (other <= lo0 || other >= hi0)
        return false;
    if (point.z <= 0.0 || point.z >= height)
        return false;
    return true;
}

} // namespace detail

// Emits PathRecords for every CU-DU pair of the scene: one LOS path when the
// direct segment is clear, plus at most one single-bounce reflection per
// vertical wall. Each pair keeps at most max_paths_per_pair records
// (strongest first). Path ids are assigned sequentially in emission order.
inline std::vector<PathRecord> synthesize_paths(const Scene &scene, const RadioParams &radio,
                                                const PathSynthesisParams &params = {}) {
    radio.validate();
    if (params.max_paths_per_pair < 1)
        throw std::invalid_argument("max_paths_per_pair must be at least 1");

    const double lambda = wavelength_m(radio.carrier_hz);

    std::vector<const Node *> cus, dus;
    for (const Node &n : scene.nodes)
        (n.kind == NodeKind::CU ? cus : dus).push_back(&n);

    auto make_candidate = [&](double distance, const Vec3 &depart, const Vec3 &arrive,
                              double extra_loss_db) {
        detail::Candidate c;
        c.distance_m = distance;
        c.depart_dir = depart;
        c.arrive_dir = arrive;
        c.rx_power_dbm = radio.tx_power_dbm - free_space_path_loss_db(distance, radio.carrier_hz) -
                         params.absorption_db_per_m * distance - extra_loss_db;
        return c;
    };

    std::vector<PathRecord> records;
    long long next_id = 1;
    for (const Node *cu : cus) {
        for (const Node *du : dus) {
            std::vector<detail::Candidate> candidates;
            const Vec3 &a = cu->position;
            const Vec3 &b = du->position;

            if (line_of_sight(a, b, scene.buildings)) {
                double d = norm(b - a);
                candidates.push_back(make_candidate(d, normalized(b - a), normalized(a - b), 0.0));
            }

            if (params.reflections) {
                for (const Building &bld : scene.buildings) {
                    struct Wall {
                        int axis;
                        double plane, lo, hi;
                    };
                    const Wall walls[4] = {{0, bld.x0, bld.y0, bld.y1},
                                           {0, bld.x1, bld.y0, bld.y1},
                                           {1, bld.y0, bld.x0, bld.x1},
                                           {1, bld.y1, bld.x0, bld.x1}};
                    for (const Wall &w : walls) {
                        Vec3 p;
                        if (!detail::reflect_off_wall(a, b, w.axis, w.plane, w.lo, w.hi,
                                                      bld.height, p))
                            continue;
                        if (!line_of_sight(a, p, scene.buildings) ||
                            !line_of_sight(p, b, scene.buildings))
                            continue;
                        double d = norm(p - a) + norm(b - p);
                        candidates.push_back(make_candidate(d, normalized(p - a),
                                                            normalized(p - b),
                                                            params.reflection_loss_db));
                    }
                }
            }

            if (candidates.size() > static_cast<std::size_t>(params.max_paths_per_pair)) {
                std::stable_sort(candidates.begin(), candidates.end(),
                                 [](const detail::Candidate &x, const detail::Candidate &y) {
                                     return x.rx_power_dbm > y.rx_power_dbm;
                                 });
                candidates.resize(static_cast<std::size_t>(params.max_paths_per_pair));
            }

            for (const detail::Candidate &c : candidates) {
                PathRecord r;
                r.path_id = next_id++;
                r.cu_id = cu->id;
                r.du_id = du->id;
                r.rx_power_dbm = c.rx_power_dbm;
                DirectionAngles aod = angles_from_direction(c.depart_dir);
                DirectionAngles aoa = angles_from_direction(c.arrive_dir);
                r.aod_az_deg = aod.az_deg;
                r.aod_el_deg = aod.el_deg;
                r.aoa_az_deg = aoa.az_deg;
                r.aoa_el_deg = aoa.el_deg;
                r.delay_s = c.distance_m / speed_of_light_mps;
                r.phase_rad = detail::wrap_phase_rad(-two_pi * c.distance_m / lambda);
                records.push_back(std::move(r));
            }
        }
    }
    return records;
}

} // namespace midhaul

#endif
