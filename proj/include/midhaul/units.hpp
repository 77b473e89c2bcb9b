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

#ifndef MIDHAUL_UNITS_HPP
#define MIDHAUL_UNITS_HPP

#include <cmath>
#include <limits>

namespace midhaul {

inline constexpr double pi = 3.14159265358979323846;
inline constexpr double two_pi = 2.0 * pi;
inline constexpr double speed_of_light_mps = 299792458.0;

inline constexpr double deg_to_rad(double deg) { return deg * pi / 180.0; }
inline constexpr double rad_to_deg(double rad) { return rad * 180.0 / pi; }

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

// 10*log10(x); returns -inf for x <= 0 so zero-power quantities stay representable
inline double linear_to_db(double x) {
    if (x <= 0.0)
        return -std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(x);
}

inline double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }
inline double watts_to_dbm(double watts) { return linear_to_db(watts) + 30.0; }

inline double wavelength_m(double carrier_hz) { return speed_of_light_mps / carrier_hz; }

} // namespace midhaul

#endif
