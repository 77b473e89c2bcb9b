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
// Downlink MU-MIMO precoding for one CU serving K DUs on the same band:
// SLNR-optimal precoders (leakage-based), a zero-forcing baseline, MRC
// receive combining, SINR and the capped per-link rate. One stream per DU,
// equal transmit power split across the group.

#ifndef MIDHAUL_MIMO_HPP
#define MIDHAUL_MIMO_HPP

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "midhaul/trace.hpp"
#include "midhaul/units.hpp"

namespace midhaul {

enum class PrecoderKind { Slnr, Zf };

struct LinkMetrics {
    std::string cu_id;
    std::string du_id;
    double slnr_db = 0.0;
    double sinr_db = 0.0;
    double rate_bps = 0.0;
};

// Precoding state of one CU group: unit-norm precoder and power share per
// served DU, in a fixed DU order.
struct PrecodedGroup {
    std::string cu_id;
    std::vector<std::string> du_ids;
    std::vector<Eigen::VectorXcd> precoders; // unit norm, length N each
    std::vector<double> powers_w;            // equal split of the total transmit power
};

namespace detail {

inline void check_group(const std::vector<Eigen::MatrixXcd> &channels, std::size_t i) {
    if (channels.empty())
        throw std::invalid_argument("channel group is empty");
    if (i >= channels.size())
        throw std::invalid_argument("channel index out of range");
    const Eigen::Index n = channels.front().cols();
    for (const auto &h : channels) {
        if (h.cols() != n)
            throw std::invalid_argument("channel group has inconsistent CU element counts");
        if (!h.allFinite())
            throw std::invalid_argument("channel group has non-finite entries");
    }
}

// Deterministic eigenvector phase: largest-magnitude entry made real positive
// (ties toward the lowest index).
inline Eigen::VectorXcd fix_phase(Eigen::VectorXcd w) {
    Eigen::Index best = 0;
    double best_mag = 0.0;
    for (Eigen::Index k = 0; k < w.size(); ++k) {
        double m = std::abs(w(k));
        if (m > best_mag) {
            best_mag = m;
            best = k;
        }
    }
    if (best_mag > 0.0)
        w *= std::conj(w(best)) / best_mag;
    return w;
}

} // namespace detail

// Vertical stack of all H_j with j != i, in index order. For a single-DU
// group this is the 0 x N empty matrix.
inline Eigen::MatrixXcd extended_channel(const std::vector<Eigen::MatrixXcd> &channels,
                                         std::size_t i) {
    detail::check_group(channels, i);
    const Eigen::Index n = channels.front().cols();
    Eigen::Index rows = 0;
    for (std::size_t j = 0; j < channels.size(); ++j)
        if (j != i)
            rows += channels[j].rows();
    Eigen::MatrixXcd stacked(rows, n);
    Eigen::Index at = 0;
    for (std::size_t j = 0; j < channels.size(); ++j) {
        if (j == i)
            continue;
        stacked.middleRows(at, channels[j].rows()) = channels[j];
        at += channels[j].rows();
    }
    return stacked;
}

namespace detail {

// Shared core: SLNR precoder from precomputed Gram matrices.
//   gram_i        = H_i^H H_i
//   gram_leakage  = sum_{j != i} H_j^H H_j
// The precoder is the dominant eigenvector of
//   (M_i sigma_i^2 I + gram_leakage)^-1 gram_i,
// solved as the generalized Hermitian problem gram_i x = lambda B x.
inline Eigen::VectorXcd slnr_precoder_from_grams(const Eigen::MatrixXcd &gram_i,
                                                 const Eigen::MatrixXcd &gram_leakage,
                                                 double noise_w, int du_elements) {
    const Eigen::Index n = gram_i.cols();
    Eigen::MatrixXcd b = gram_leakage;
    b.diagonal().array() += static_cast<double>(du_elements) * noise_w;
    Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
        gram_i, b, Eigen::ComputeEigenvectors | Eigen::Ax_lBx);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("SLNR eigensolve failed");
    Eigen::VectorXcd w = solver.eigenvectors().col(n - 1);
    w.normalize();
    return fix_phase(std::move(w));
}

} // namespace detail

// SLNR-optimal unit-norm precoder for DU i within a group of K co-served DUs.
// du_elements defaults to the row count of H_i.
inline Eigen::VectorXcd slnr_precoder(const std::vector<Eigen::MatrixXcd> &channels, std::size_t i,
                                      double noise_w, int du_elements = 0) {
    detail::check_group(channels, i);
    if (noise_w <= 0.0)
        throw std::invalid_argument("noise power must be positive");
    if (du_elements <= 0)
        du_elements = static_cast<int>(channels[i].rows());

    const Eigen::Index n = channels.front().cols();
    Eigen::MatrixXcd leakage = Eigen::MatrixXcd::Zero(n, n);
    for (std::size_t j = 0; j < channels.size(); ++j)
        if (j != i)
            leakage.noalias() += channels[j].adjoint() * channels[j];
    return detail::slnr_precoder_from_grams(channels[i].adjoint() * channels[i], leakage, noise_w,
                                            du_elements);
}

// SLNR precoders for the whole group. Equivalent to calling slnr_precoder for
// each DU, but the per-DU Gram matrices are computed once.
inline std::vector<Eigen::VectorXcd> slnr_precoders(const std::vector<Eigen::MatrixXcd> &channels,
                                                    const std::vector<double> &noise_w) {
    detail::check_group(channels, 0);
    if (noise_w.size() != channels.size())
        throw std::invalid_argument("need one noise power per DU");

    const Eigen::Index n = channels.front().cols();
    std::vector<Eigen::MatrixXcd> grams;
    grams.reserve(channels.size());
    Eigen::MatrixXcd total = Eigen::MatrixXcd::Zero(n, n);
    for (const auto &h : channels) {
        grams.push_back(h.adjoint() * h);
        total += grams.back();
    }
    std::vector<Eigen::VectorXcd> out;
    out.reserve(channels.size());
    for (std::size_t i = 0; i < channels.size(); ++i) {
        if (noise_w[i] <= 0.0)
            throw std::invalid_argument("noise power must be positive");
        out.push_back(detail::slnr_precoder_from_grams(
            grams[i], total - grams[i], noise_w[i], static_cast<int>(channels[i].rows())));
    }
    return out;
}

// Zero-forcing precoders: W_i lies in the null space of the extended channel
// and, within it, maximizes |H_i W_i|. Requires the CU to have at least as
// many elements as all served DUs combined.
inline std::vector<Eigen::VectorXcd> zf_precoders(const std::vector<Eigen::MatrixXcd> &channels) {
    detail::check_group(channels, 0);
    const Eigen::Index n = channels.front().cols();
    Eigen::Index total_du_elements = 0;
    for (const auto &h : channels)
        total_du_elements += h.rows();
    if (total_du_elements > n)
        throw std::invalid_argument(
            "zero forcing infeasible: CU has " + std::to_string(n) + " elements but the group needs " +
            std::to_string(total_du_elements));

    std::vector<Eigen::VectorXcd> out;
    out.reserve(channels.size());
    for (std::size_t i = 0; i < channels.size(); ++i) {
        Eigen::MatrixXcd stacked = extended_channel(channels, i);
        Eigen::MatrixXcd basis; // orthonormal null-space basis of the extended channel
        if (stacked.rows() == 0) {
            basis = Eigen::MatrixXcd::Identity(n, n);
        } else {
            Eigen::JacobiSVD<Eigen::MatrixXcd> svd(stacked, Eigen::ComputeFullV);
            const auto &sv = svd.singularValues();
            double tol = std::max(stacked.rows(), stacked.cols()) *
                         std::numeric_limits<double>::epsilon() * sv(0);
            Eigen::Index rank = 0;
            while (rank < sv.size() && sv(rank) > tol)
                ++rank;
            basis = svd.matrixV().rightCols(n - rank);
        }
        Eigen::MatrixXcd projected = channels[i] * basis;
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(projected, Eigen::ComputeFullV);
        Eigen::VectorXcd w = basis * svd.matrixV().col(0);
        w.normalize();
        out.push_back(detail::fix_phase(std::move(w)));
    }
    return out;
}

// SLNR of a given precoder: |H_i W|^2 / (M_i sigma^2 + |H_ext W|^2), in dB.
inline double slnr_db(const std::vector<Eigen::MatrixXcd> &channels, std::size_t i,
                      const Eigen::VectorXcd &w, double noise_w, int du_elements = 0) {
    detail::check_group(channels, i);
    if (du_elements <= 0)
        du_elements = static_cast<int>(channels[i].rows());
    double signal = (channels[i] * w).squaredNorm();
    double leak = 0.0;
    for (std::size_t j = 0; j < channels.size(); ++j)
        if (j != i)
            leak += (channels[j] * w).squaredNorm();
    return linear_to_db(signal / (static_cast<double>(du_elements) * noise_w + leak));
}

// Unit-norm maximum-ratio combiner matched to the effective channel H*w;
// all-zero when the effective channel vanishes.
inline Eigen::VectorXcd mrc_combiner(const Eigen::MatrixXcd &h, const Eigen::VectorXcd &w) {
    Eigen::VectorXcd e = h * w;
    double n = e.norm();
    if (n <= 0.0)
        return Eigen::VectorXcd::Zero(h.rows());
    return e / n;
}

// Post-combining SINR of DU i in its group. extra_interference_w adds power
// from outside the group (e.g. other CUs) at the combiner output.
inline double sinr_linear(const std::vector<Eigen::MatrixXcd> &channels,
                          const std::vector<Eigen::VectorXcd> &precoders,
                          const std::vector<double> &powers_w, double noise_w, std::size_t i,
                          double extra_interference_w = 0.0) {
    detail::check_group(channels, i);
    if (precoders.size() != channels.size() || powers_w.size() != channels.size())
        throw std::invalid_argument("need one precoder and one power per DU");
    if (noise_w <= 0.0)
        throw std::invalid_argument("noise power must be positive");

    Eigen::VectorXcd effective = channels[i] * precoders[i];
    double gain = effective.norm();
    if (gain <= 0.0)
        return 0.0;
    Eigen::VectorXcd v = effective / gain;
    double signal = powers_w[i] * gain * gain;
    double interference = extra_interference_w;
    for (std::size_t j = 0; j < channels.size(); ++j)
        if (j != i)
            interference += powers_w[j] * std::norm((v.adjoint() * (channels[i] * precoders[j]))(0));
    return signal / (noise_w + interference);
}

inline double sinr_db(const std::vector<Eigen::MatrixXcd> &channels,
                      const std::vector<Eigen::VectorXcd> &precoders,
                      const std::vector<double> &powers_w, double noise_w, std::size_t i,
                      double extra_interference_w = 0.0) {
    return linear_to_db(sinr_linear(channels, precoders, powers_w, noise_w, i,
                                    extra_interference_w));
}

// Per-link rate: B * (1 - beta) * min(log2(1 + SINR), rho_max).
inline double link_rate_bps(double sinr_linear_value, const RadioParams &radio) {
    if (sinr_linear_value < 0.0)
        throw std::invalid_argument("SINR must be non-negative");
    double se = std::min(std::log2(1.0 + sinr_linear_value), radio.max_spectral_efficiency);
    return radio.bandwidth_hz * (1.0 - radio.loss_factor) * se;
}

// Rate ceiling B * (1 - beta) * rho_max.
inline double peak_link_rate_bps(const RadioParams &radio) {
    return radio.bandwidth_hz * (1.0 - radio.loss_factor) * radio.max_spectral_efficiency;
}

// SINR at which the rate cap activates: 2^rho_max - 1.
inline double rate_cap_sinr_db(const RadioParams &radio) {
    return linear_to_db(std::pow(2.0, radio.max_spectral_efficiency) - 1.0);
}

} // namespace midhaul

#endif
