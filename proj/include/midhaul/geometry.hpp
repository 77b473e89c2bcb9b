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

#ifndef MIDHAUL_GEOMETRY_HPP
#define MIDHAUL_GEOMETRY_HPP

#include <cmath>
#include <stdexcept>

#include "midhaul/units.hpp"

namespace midhaul {

// Global frame: x east, y north, z up (meters).
// Direction angles: elevation measured from zenith (+z), range [0, 180] deg;
// azimuth measured from +x toward +y, range [-180, 180) deg.
struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

inline Vec3 operator+(const Vec3 &a, const Vec3 &b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec3 operator-(const Vec3 &a, const Vec3 &b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec3 operator*(double s, const Vec3 &v) { return {s * v.x, s * v.y, s * v.z}; }
inline Vec3 operator-(const Vec3 &v) { return {-v.x, -v.y, -v.z}; }

inline double dot(const Vec3 &a, const Vec3 &b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(const Vec3 &a, const Vec3 &b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(const Vec3 &v) { return std::sqrt(dot(v, v)); }

inline Vec3 normalized(const Vec3 &v) {
    double n = norm(v);
    if (n <= 0.0)
        throw std::invalid_argument("cannot normalize a zero vector");
    return {v.x / n, v.y / n, v.z / n};
}

struct DirectionAngles {
    double az_deg = 0.0;
    double el_deg = 0.0;
};

// Wraps an azimuth into [-180, 180).
inline double wrap_azimuth_deg(double az_deg) {
    double a = std::fmod(az_deg + 180.0, 360.0);
    if (a < 0.0)
        a += 360.0;
    return a - 180.0;
}

inline Vec3 direction_from_angles(double az_deg, double el_deg) {
    double az = deg_to_rad(az_deg), el = deg_to_rad(el_deg);
    double s = std::sin(el);
    return {s * std::cos(az), s * std::sin(az), std::cos(el)};
}

// Inverse of direction_from_angles for unit vectors. Straight up/down maps to
// azimuth 0 by convention (the angle is otherwise undefined there).
inline DirectionAngles angles_from_direction(const Vec3 &d) {
    Vec3 u = normalized(d);
    double c = u.z;
    if (c > 1.0)
        c = 1.0;
    if (c < -1.0)
        c = -1.0;
    DirectionAngles out;
    out.el_deg = rad_to_deg(std::acos(c));
    double horiz = std::hypot(u.x, u.y);
    out.az_deg = (horiz < 1e-12) ? 0.0 : wrap_azimuth_deg(rad_to_deg(std::atan2(u.y, u.x)));
    return out;
}

} // namespace midhaul

#endif
