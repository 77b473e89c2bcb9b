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

#ifndef MIDHAUL_CHANNEL_HPP
#define MIDHAUL_CHANNEL_HPP

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "midhaul/arrays.hpp"
#include "midhaul/trace.hpp"
#include "midhaul/units.hpp"

namespace midhaul {

// Narrowband MIMO channel for one CU-DU pair: M (DU elements) x N (CU elements).
struct ChannelMatrix {
    std::string cu_id;
    std::string du_id;
    Eigen::MatrixXcd h;
};

// Sums the per-path rank-1 contributions
//   a_du(AoA_k) * a_cu(AoD_k)^T * sqrt(g(k)) * exp(j*(2*pi*f*delay_k + phase_k))
// over all paths of one pair. Delay enters only through the carrier-phase
// term (single-tap narrowband model); phase_k is in radians.
inline ChannelMatrix synthesize_channel(const std::vector<PathRecord> &paths,
                                        const ArrayState &du_state, const ArrayState &cu_state,
                                        double carrier_hz, double tx_power_dbm) {
    if (paths.empty())
        throw std::invalid_argument("synthesize_channel: empty path list");
    ChannelMatrix out;
    out.cu_id = paths.front().cu_id;
    out.du_id = paths.front().du_id;

    const int m = du_state.config.size();
    const int n = cu_state.config.size();
    out.h = Eigen::MatrixXcd::Zero(m, n);

    for (const PathRecord &p : paths) {
        if (p.cu_id != out.cu_id || p.du_id != out.du_id)
            throw std::invalid_argument("synthesize_channel: mixed CU-DU pairs in path list (" +
                                        out.cu_id + "-" + out.du_id + " vs " + p.cu_id + "-" +
                                        p.du_id + ")");
        Eigen::VectorXcd a_du = steering_vector(
            du_state, direction_from_angles(p.aoa_az_deg, p.aoa_el_deg), carrier_hz);
        Eigen::VectorXcd a_cu = steering_vector(
            cu_state, direction_from_angles(p.aod_az_deg, p.aod_el_deg), carrier_hz);
        double g = path_gain_linear(p, tx_power_dbm);
        std::complex<double> coeff =
            std::sqrt(g) * std::polar(1.0, two_pi * carrier_hz * p.delay_s + p.phase_rad);
        out.h.noalias() += coeff * (a_du * a_cu.transpose());
    }

    if (!out.h.allFinite())
        throw std::invalid_argument("synthesize_channel: non-finite channel entries");
    return out;
}

// Total channel power 10*log10(sum |h_ij|^2); -inf for an all-zero matrix.
inline double channel_frobenius_gain_db(const Eigen::MatrixXcd &h) {
    return linear_to_db(h.squaredNorm());
}

inline double channel_frobenius_gain_db(const ChannelMatrix &ch) {
    return channel_frobenius_gain_db(ch.h);
}

} // namespace midhaul

#endif
