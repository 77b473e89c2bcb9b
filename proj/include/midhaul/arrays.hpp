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
// Uniform planar arrays: element pattern, spatial signatures and boresight
// alignment. Array-local frame: x along boresight, z along the array
// up-vector, y completing the right-handed triad. Elements sit in the local
// y-z plane on a rows x cols grid (rows stacked along z), indexed row-major.
// Local pattern angles: elevation from the local zenith (z), azimuth from
// boresight (x) toward y; the pattern peaks at elevation 90, azimuth 0.

#ifndef MIDHAUL_ARRAYS_HPP
#define MIDHAUL_ARRAYS_HPP

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <vector>

#include "midhaul/geometry.hpp"
#include "midhaul/trace.hpp"
#include "midhaul/units.hpp"

namespace midhaul {

// Parabolic-in-dB element pattern with a hard attenuation floor: 65 deg 3 dB
// beamwidth in both planes, 30 dB maximum attenuation, 8 dBi peak gain.
struct ElementPattern {
    double beamwidth_deg = 65.0;
    double max_attenuation_db = 30.0;
    double max_gain_dbi = 8.0;
};

struct ArrayConfig {
    int rows = 16;
    int cols = 16;
    double spacing_wavelengths = 0.5;
    ElementPattern pattern;

    int size() const { return rows * cols; }

    void validate() const {
        if (rows < 1 || cols < 1)
            throw std::invalid_argument("array must have at least one element");
        if (spacing_wavelengths <= 0.0)
            throw std::invalid_argument("element spacing must be positive");
        if (pattern.beamwidth_deg <= 0.0)
            throw std::invalid_argument("pattern beamwidth must be positive");
    }
};

// An installed array: geometry plus orientation. boresight and up are unit
// vectors in the global frame with up orthogonal to boresight.
struct ArrayState {
    ArrayConfig config;
    Vec3 boresight{1.0, 0.0, 0.0};
    Vec3 up{0.0, 0.0, 1.0};
};

// Orients an array toward `boresight`, fixing roll with `up_hint` (projected
// orthogonal to the boresight; falls back to the global x axis when the
// boresight is vertical).
inline ArrayState make_array_state(const ArrayConfig &config, const Vec3 &boresight,
                                   const Vec3 &up_hint = {0.0, 0.0, 1.0}) {
    config.validate();
    ArrayState s;
    s.config = config;
    s.boresight = normalized(boresight);
    Vec3 u = up_hint - dot(up_hint, s.boresight) * s.boresight;
    if (norm(u) < 1e-9) {
        Vec3 alt{1.0, 0.0, 0.0};
        u = alt - dot(alt, s.boresight) * s.boresight;
        if (norm(u) < 1e-9) {
            alt = {0.0, 1.0, 0.0};
            u = alt - dot(alt, s.boresight) * s.boresight;
        }
    }
    s.up = normalized(u);
    return s;
}

// Element gain in dB for a direction given in local pattern angles.
inline double element_gain_db(const ElementPattern &p, double local_az_deg, double local_el_deg) {
    double bw2 = p.beamwidth_deg * p.beamwidth_deg;
    double att_v = std::min(12.0 * (local_el_deg - 90.0) * (local_el_deg - 90.0) / bw2,
                            p.max_attenuation_db);
    double att_h = std::min(12.0 * local_az_deg * local_az_deg / bw2, p.max_attenuation_db);
    return p.max_gain_dbi - std::min(att_v + att_h, p.max_attenuation_db);
}

// Convenience overload taking a direction expressed in the array-local frame.
inline double element_gain_db(const ElementPattern &p, const Vec3 &local_dir) {
    DirectionAngles a = angles_from_direction(local_dir);
    return element_gain_db(p, a.az_deg, a.el_deg);
}

// Spatial signature of the array toward a global direction: per-element
// amplitude sqrt(element gain) with the planar phase progression
// exp(j * 2*pi/lambda * <element position, direction>), row-major order.
inline Eigen::VectorXcd steering_vector(const ArrayState &state, const Vec3 &direction,
                                        double carrier_hz) {
    state.config.validate();
    if (carrier_hz <= 0.0)
        throw std::invalid_argument("carrier frequency must be positive");

    const Vec3 x_l = state.boresight;
    const Vec3 z_l = state.up;
    const Vec3 y_l = cross(z_l, x_l);

    const Vec3 d = normalized(direction);
    const double dx = dot(d, x_l), dy = dot(d, y_l), dz = dot(d, z_l);

    DirectionAngles local = angles_from_direction({dx, dy, dz});
    const double amp =
        std::sqrt(db_to_linear(element_gain_db(state.config.pattern, local.az_deg, local.el_deg)));

    const double lambda = wavelength_m(carrier_hz);
    const double spacing = state.config.spacing_wavelengths * lambda;
    const int rows = state.config.rows, cols = state.config.cols;
    const double row_mid = 0.5 * (rows - 1), col_mid = 0.5 * (cols - 1);

    Eigen::VectorXcd a(rows * cols);
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            // element at (0, py, pz) in the local frame
            double py = (c - col_mid) * spacing;
            double pz = (r - row_mid) * spacing;
            double phase = two_pi / lambda * (py * dy + pz * dz);
            a(r * cols + c) = std::polar(amp, phase);
        }
    }
    return a;
}

namespace detail {

// Strongest path by rx power; equal powers resolved toward the lowest path_id.
inline const PathRecord &strongest_path(const std::vector<PathRecord> &paths) {
    if (paths.empty())
        throw std::invalid_argument("strongest_path: empty path list");
    const PathRecord *best = &paths.front();
    for (const PathRecord &p : paths) {
        if (p.rx_power_dbm > best->rx_power_dbm ||
            (p.rx_power_dbm == best->rx_power_dbm && p.path_id < best->path_id))
            best = &p;
    }
    return *best;
}

} // namespace detail

// DU alignment: boresight along the arrival direction of the strongest path.
inline ArrayState align_du(const ArrayConfig &config, const std::vector<PathRecord> &du_paths) {
    if (du_paths.empty())
        throw std::invalid_argument("align_du: DU has no paths to align to");
    const PathRecord &best = detail::strongest_path(du_paths);
    return make_array_state(config, direction_from_angles(best.aoa_az_deg, best.aoa_el_deg));
}

// CU alignment: boresight along the normalized vector sum of the strongest
// departure direction of each connected DU (spherical mean by vector
// averaging). Degenerate sums (near-antipodal departures) are an error.
inline ArrayState align_cu(const ArrayConfig &config,
                           const std::vector<std::vector<PathRecord>> &paths_per_du) {
    if (paths_per_du.empty())
        throw std::invalid_argument("align_cu: no connected DUs");
    Vec3 sum{0.0, 0.0, 0.0};
    for (const auto &du_paths : paths_per_du) {
        if (du_paths.empty())
            throw std::invalid_argument("align_cu: connected DU has an empty path list");
        const PathRecord &best = detail::strongest_path(du_paths);
        sum = sum + direction_from_angles(best.aod_az_deg, best.aod_el_deg);
    }
    if (norm(sum) < 1e-9)
        throw std::invalid_argument(
            "align_cu: departure directions cancel out; set the boresight manually");
    return make_array_state(config, normalized(sum));
}

} // namespace midhaul

#endif
