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
// CU-subset selection and CU-DU association. Phase one greedily picks the CU
// covering the most unserved DUs above a received-power threshold; phase two
// associates every DU to its strongest selected CU. An outer loop grows the
// subset until every link sustains the target rate, or, in exhaustive mode,
// enumerates CU subsets by size for the true minimum under the same policy.

#ifndef MIDHAUL_PLANNER_HPP
#define MIDHAUL_PLANNER_HPP

#include <algorithm>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "midhaul/arrays.hpp"
#include "midhaul/channel.hpp"
#include "midhaul/mimo.hpp"
#include "midhaul/trace.hpp"

namespace midhaul {

// Bipartite CU-DU connectivity. Ids are kept sorted; per-pair path lists are
// stored for every pair (channel synthesis and interference need paths even
// below the edge threshold), while edges exist only where at least one path
// meets the threshold.
struct ConnectivityGraph {
    std::vector<std::string> cu_ids; // sorted ascending
    std::vector<std::string> du_ids; // sorted ascending
    std::vector<std::vector<std::vector<PathRecord>>> pair_paths; // [cu][du], all paths
    std::vector<std::vector<double>> strength_dbm; // [cu][du], best path power; -inf if no path
    std::vector<std::vector<bool>> edge;           // [cu][du]

    std::size_t cu_index(const std::string &id) const {
        auto it = std::lower_bound(cu_ids.begin(), cu_ids.end(), id);
        if (it == cu_ids.end() || *it != id)
            throw std::invalid_argument("unknown CU id '" + id + "'");
        return static_cast<std::size_t>(it - cu_ids.begin());
    }
    std::size_t du_index(const std::string &id) const {
        auto it = std::lower_bound(du_ids.begin(), du_ids.end(), id);
        if (it == du_ids.end() || *it != id)
            throw std::invalid_argument("unknown DU id '" + id + "'");
        return static_cast<std::size_t>(it - du_ids.begin());
    }
};

inline ConnectivityGraph build_connectivity(const Scenario &scenario, double threshold_dbm) {
    ConnectivityGraph g;
    for (const Node &n : scenario.nodes)
        (n.kind == NodeKind::CU ? g.cu_ids : g.du_ids).push_back(n.id);
    std::sort(g.cu_ids.begin(), g.cu_ids.end());
    std::sort(g.du_ids.begin(), g.du_ids.end());

    const std::size_t nc = g.cu_ids.size(), nd = g.du_ids.size();
    g.pair_paths.assign(nc, std::vector<std::vector<PathRecord>>(nd));
    g.strength_dbm.assign(nc, std::vector<double>(nd, -std::numeric_limits<double>::infinity()));
    g.edge.assign(nc, std::vector<bool>(nd, false));

    for (const PathRecord &p : scenario.paths) {
        std::size_t c = g.cu_index(p.cu_id);
        std::size_t d = g.du_index(p.du_id);
        g.pair_paths[c][d].push_back(p);
        g.strength_dbm[c][d] = std::max(g.strength_dbm[c][d], p.rx_power_dbm);
        if (p.rx_power_dbm >= threshold_dbm)
            g.edge[c][d] = true;
    }
    // deterministic per-pair order regardless of input ordering
    for (auto &row : g.pair_paths)
        for (auto &paths : row)
            std::sort(paths.begin(), paths.end(),
                      [](const PathRecord &a, const PathRecord &b) { return a.path_id < b.path_id; });
    return g;
}

// Full greedy CU ordering: while DUs remain uncovered, pick the CU covering
// the most new DUs (ties: higher summed strength over the newly covered DUs,
// then lower cu_id). Once coverage is complete the remaining CUs follow in
// total-edge-strength order, which is what the outer feasibility loop uses
// to grow the subset past plain set cover.
inline std::vector<std::size_t> greedy_cu_order(const ConnectivityGraph &g) {
    const std::size_t nc = g.cu_ids.size(), nd = g.du_ids.size();
    std::vector<bool> covered(nd, false);
    std::vector<bool> used(nc, false);
    std::vector<std::size_t> order;
    order.reserve(nc);

    for (std::size_t round = 0; round < nc; ++round) {
        std::size_t best = nc;
        std::size_t best_count = 0;
        double best_sum = -std::numeric_limits<double>::infinity();
        for (std::size_t c = 0; c < nc; ++c) {
            if (used[c])
                continue;
            std::size_t count = 0;
            double newly_sum = 0.0, total_sum = 0.0;
            bool any_edge = false;
            for (std::size_t d = 0; d < nd; ++d) {
                if (!g.edge[c][d])
                    continue;
                any_edge = true;
                total_sum += g.strength_dbm[c][d];
                if (!covered[d]) {
                    ++count;
                    newly_sum += g.strength_dbm[c][d];
                }
            }
            double sum = count > 0 ? newly_sum
                                   : (any_edge ? total_sum
                                               : -std::numeric_limits<double>::infinity());
            if (best == nc || count > best_count || (count == best_count && sum > best_sum)) {
                best = c;
                best_count = count;
                best_sum = sum;
            }
        }
        used[best] = true;
        order.push_back(best);
        for (std::size_t d = 0; d < nd; ++d)
            if (g.edge[best][d])
                covered[d] = true;
    }
    return order;
}

// Minimal greedy prefix that covers every DU. Errors out when some DU cannot
// be covered by any CU at the current threshold.
inline std::vector<std::string> greedy_select(const ConnectivityGraph &g) {
    const std::size_t nd = g.du_ids.size();
    std::vector<std::string> uncoverable;
    for (std::size_t d = 0; d < nd; ++d) {
        bool reachable = false;
        for (std::size_t c = 0; c < g.cu_ids.size() && !reachable; ++c)
            reachable = g.edge[c][d];
        if (!reachable)
            uncoverable.push_back(g.du_ids[d]);
    }
    if (!uncoverable.empty()) {
        std::string msg = "uncoverable DUs:";
        for (const auto &id : uncoverable)
            msg += " " + id;
        throw std::invalid_argument(msg);
    }

    std::vector<std::size_t> order = greedy_cu_order(g);
    std::vector<bool> covered(nd, false);
    std::size_t remaining = nd;
    std::vector<std::string> selected;
    for (std::size_t c : order) {
        selected.push_back(g.cu_ids[c]);
        for (std::size_t d = 0; d < nd; ++d)
            if (g.edge[c][d] && !covered[d]) {
                covered[d] = true;
                --remaining;
            }
        if (remaining == 0)
            break;
    }
    return selected;
}

// Association phase: every DU goes to the selected CU with the strongest edge
// (ties: lower cu_id). DUs without an edge to any selected CU are returned
// separately; callers that require full coverage treat them as an error.
struct Association {
    std::vector<std::pair<std::string, std::string>> du_to_cu; // (du_id, cu_id), du order
    std::vector<std::string> unserved_dus;
};

inline Association associate(const std::vector<std::string> &selected_cus,
                             const ConnectivityGraph &g) {
    std::vector<std::size_t> sel;
    sel.reserve(selected_cus.size());
    for (const auto &id : selected_cus)
        sel.push_back(g.cu_index(id));
    std::sort(sel.begin(), sel.end()); // ascending id order makes ties pick the lower cu_id

    Association out;
    for (std::size_t d = 0; d < g.du_ids.size(); ++d) {
        std::size_t best = g.cu_ids.size();
        double best_strength = -std::numeric_limits<double>::infinity();
        for (std::size_t c : sel) {
            if (g.edge[c][d] && g.strength_dbm[c][d] > best_strength) {
                best = c;
                best_strength = g.strength_dbm[c][d];
            }
        }
        if (best == g.cu_ids.size())
            out.unserved_dus.push_back(g.du_ids[d]);
        else
            out.du_to_cu.emplace_back(g.du_ids[d], g.cu_ids[best]);
    }
    return out;
}

struct PlanOptions {
    double power_threshold_dbm = -std::numeric_limits<double>::infinity();
    ArrayConfig cu_array{};
    ArrayConfig du_array{};
    PrecoderKind precoder = PrecoderKind::Slnr;
    bool inter_cu_interference = false;
};

// Result of selecting, associating and evaluating a CU subset against the
// scenario's rate target. feasible is true only when every DU is assigned
// and every assigned link reaches the target rate.
struct AssociationPlan {
    std::vector<std::string> selected_cus; // in selection order
    std::vector<std::pair<std::string, std::string>> assignment; // (du_id, cu_id)
    std::vector<LinkMetrics> metrics;      // one row per assigned DU
    std::vector<std::string> unserved_dus;
    std::vector<std::string> bottleneck_dus; // below-target or unserved DUs
    bool feasible = false;

    double min_rate_bps() const {
        double m = std::numeric_limits<double>::infinity();
        for (const auto &lm : metrics)
            m = std::min(m, lm.rate_bps);
        return metrics.empty() ? 0.0 : m;
    }
    std::size_t links_meeting(double rate_target_bps) const {
        std::size_t n = 0;
        for (const auto &lm : metrics)
            if (lm.rate_bps >= rate_target_bps)
                ++n;
        return n;
    }
};

enum class PlanMode { GreedyLoop, Exhaustive };

namespace detail {

struct GroupEval {
    std::size_t cu;                 // graph index
    std::vector<std::size_t> dus;   // graph indices, ascending
    ArrayState cu_state;
    std::vector<ArrayState> du_states;
    std::vector<Eigen::MatrixXcd> channels;
    std::vector<Eigen::VectorXcd> precoders;
    std::vector<double> powers_w;
};

} // namespace detail

// Aligns arrays, synthesizes channels, precodes each CU group and fills in
// per-link SLNR/SINR/rate. Group membership comes from `association`; the
// scenario's DUs that are not assigned stay unserved and make the plan
// infeasible.
inline AssociationPlan evaluate_plan(const Scenario &scenario, const ConnectivityGraph &g,
                                     const std::vector<std::string> &selected_cus,
                                     const Association &association, const PlanOptions &options) {
    options.cu_array.validate();
    options.du_array.validate();

    AssociationPlan plan;
    plan.selected_cus = selected_cus;
    plan.assignment = association.du_to_cu;
    plan.unserved_dus = association.unserved_dus;

    const RadioParams &radio = scenario.radio;
    const double noise_w = radio.noise_power_w();
    const double total_power_w = dbm_to_watts(radio.tx_power_dbm);

    // group assigned DUs per CU
    std::map<std::size_t, std::vector<std::size_t>> groups;
    for (const auto &[du_id, cu_id] : association.du_to_cu)
        groups[g.cu_index(cu_id)].push_back(g.du_index(du_id));

    std::vector<detail::GroupEval> evals;
    for (auto &[cu, dus] : groups) {
        detail::GroupEval ev;
        ev.cu = cu;
        std::sort(dus.begin(), dus.end());
        ev.dus = dus;
        try {
            std::vector<std::vector<PathRecord>> group_paths;
            group_paths.reserve(dus.size());
            for (std::size_t d : dus)
                group_paths.push_back(g.pair_paths[cu][d]);

            for (std::size_t j = 0; j < dus.size(); ++j)
                ev.du_states.push_back(align_du(options.du_array, group_paths[j]));
            ev.cu_state = align_cu(options.cu_array, group_paths);

            for (std::size_t j = 0; j < dus.size(); ++j)
                ev.channels.push_back(synthesize_channel(group_paths[j], ev.du_states[j],
                                                         ev.cu_state, radio.carrier_hz,
                                                         radio.tx_power_dbm)
                                          .h);

            if (options.precoder == PrecoderKind::Zf) {
                ev.precoders = zf_precoders(ev.channels);
            } else {
                ev.precoders = slnr_precoders(ev.channels,
                                              std::vector<double>(dus.size(), noise_w));
            }
            ev.powers_w.assign(dus.size(), total_power_w / static_cast<double>(dus.size()));
        } catch (const std::exception &e) {
            throw std::runtime_error("evaluating CU " + g.cu_ids[cu] + " group: " + e.what());
        }
        evals.push_back(std::move(ev));
    }

    for (const auto &ev : evals) {
        for (std::size_t j = 0; j < ev.dus.size(); ++j) {
            double extra_w = 0.0;
            if (options.inter_cu_interference) {
                // power leaking from every other selected CU into this DU,
                // observed through this DU's own combiner
                Eigen::VectorXcd v = mrc_combiner(ev.channels[j], ev.precoders[j]);
                for (const auto &other : evals) {
                    if (other.cu == ev.cu)
                        continue;
                    const auto &paths = g.pair_paths[other.cu][ev.dus[j]];
                    if (paths.empty())
                        continue;
                    Eigen::MatrixXcd h_cross =
                        synthesize_channel(paths, ev.du_states[j], other.cu_state,
                                           radio.carrier_hz, radio.tx_power_dbm)
                            .h;
                    for (std::size_t k = 0; k < other.precoders.size(); ++k)
                        extra_w += other.powers_w[k] *
                                   std::norm((v.adjoint() * (h_cross * other.precoders[k]))(0));
                }
            }
            LinkMetrics lm;
            lm.cu_id = g.cu_ids[ev.cu];
            lm.du_id = g.du_ids[ev.dus[j]];
            lm.slnr_db = slnr_db(ev.channels, j, ev.precoders[j], noise_w);
            double gamma = sinr_linear(ev.channels, ev.precoders, ev.powers_w, noise_w, j, extra_w);
            lm.sinr_db = linear_to_db(gamma);
            lm.rate_bps = link_rate_bps(gamma, radio);
            plan.metrics.push_back(lm);
        }
    }
    std::sort(plan.metrics.begin(), plan.metrics.end(),
              [](const LinkMetrics &a, const LinkMetrics &b) { return a.du_id < b.du_id; });

    for (const auto &lm : plan.metrics)
        if (lm.rate_bps < radio.rate_target_bps)
            plan.bottleneck_dus.push_back(lm.du_id);
    for (const auto &id : plan.unserved_dus)
        plan.bottleneck_dus.push_back(id);
    std::sort(plan.bottleneck_dus.begin(), plan.bottleneck_dus.end());

    plan.feasible = plan.unserved_dus.empty() && plan.bottleneck_dus.empty() &&
                    plan.metrics.size() == g.du_ids.size();
    return plan;
}

namespace detail {

// Best-effort ordering for infeasible outcomes: more links at target, then
// higher minimum rate, then fewer CUs.
inline bool plan_better(const AssociationPlan &a, const AssociationPlan &b,
                        double rate_target_bps) {
    auto ka = a.links_meeting(rate_target_bps), kb = b.links_meeting(rate_target_bps);
    if (ka != kb)
        return ka > kb;
    if (a.min_rate_bps() != b.min_rate_bps())
        return a.min_rate_bps() > b.min_rate_bps();
    return a.selected_cus.size() < b.selected_cus.size();
}

} // namespace detail

// Plan with the first k CUs of the greedy order (coverage first, then
// strength). DUs out of reach of those k CUs are reported unserved. This is
// the sweep primitive; k may be below the full-coverage prefix.
inline AssociationPlan plan_with_cu_count(const Scenario &scenario, const PlanOptions &options,
                                          std::size_t k) {
    ConnectivityGraph g = build_connectivity(scenario, options.power_threshold_dbm);
    if (k < 1 || k > g.cu_ids.size())
        throw std::invalid_argument("requested CU count " + std::to_string(k) +
                                    " outside 1.." + std::to_string(g.cu_ids.size()));
    std::vector<std::size_t> order = greedy_cu_order(g);
    std::vector<std::string> selected;
    for (std::size_t i = 0; i < k; ++i)
        selected.push_back(g.cu_ids[order[i]]);
    return evaluate_plan(scenario, g, selected, associate(selected, g), options);
}

// Minimum-CU planning. Greedy-loop mode grows the greedy prefix until the
// plan is feasible; exhaustive mode enumerates subsets by size (then
// lexicographically) and returns the first feasible one, which is optimal
// under the fixed association and precoding policy. When nothing is feasible
// the best-effort plan is returned flagged infeasible, bottlenecks listed.
inline AssociationPlan plan_minimum_cus(const Scenario &scenario, const PlanOptions &options,
                                        PlanMode mode = PlanMode::GreedyLoop) {
    ConnectivityGraph g = build_connectivity(scenario, options.power_threshold_dbm);
    const std::size_t nc = g.cu_ids.size();
    if (nc == 0)
        throw std::invalid_argument("scenario has no CUs");
    const double target = scenario.radio.rate_target_bps;

    std::optional<AssociationPlan> best;
    auto consider = [&](AssociationPlan p) -> const AssociationPlan * {
        if (!best || detail::plan_better(p, *best, target))
            best = std::move(p);
        return &*best;
    };

    if (mode == PlanMode::GreedyLoop) {
        std::vector<std::size_t> order = greedy_cu_order(g);
        // smallest prefix achieving maximal coverage
        std::vector<bool> covered(g.du_ids.size(), false);
        std::size_t k0 = nc;
        std::size_t covered_count = 0, max_coverable = 0;
        for (std::size_t d = 0; d < g.du_ids.size(); ++d)
            for (std::size_t c = 0; c < nc; ++c)
                if (g.edge[c][d]) {
                    ++max_coverable;
                    break;
                }
        for (std::size_t i = 0; i < nc; ++i) {
            for (std::size_t d = 0; d < g.du_ids.size(); ++d)
                if (g.edge[order[i]][d] && !covered[d]) {
                    covered[d] = true;
                    ++covered_count;
                }
            if (covered_count == max_coverable) {
                k0 = i + 1;
                break;
            }
        }
        for (std::size_t k = k0; k <= nc; ++k) {
            std::vector<std::string> selected;
            for (std::size_t i = 0; i < k; ++i)
                selected.push_back(g.cu_ids[order[i]]);
            AssociationPlan plan =
                evaluate_plan(scenario, g, selected, associate(selected, g), options);
            if (plan.feasible)
                return plan;
            consider(std::move(plan));
        }
        return *best;
    }

    // exhaustive: subsets in increasing size, lexicographic within a size
    std::vector<std::size_t> subset;
    for (std::size_t size = 1; size <= nc; ++size) {
        subset.assign(size, 0);
        for (std::size_t i = 0; i < size; ++i)
            subset[i] = i;
        while (true) {
            bool covers = true;
            for (std::size_t d = 0; d < g.du_ids.size() && covers; ++d) {
                bool has_any = false, has_sel = false;
                for (std::size_t c = 0; c < nc; ++c)
                    if (g.edge[c][d]) {
                        has_any = true;
                        break;
                    }
                for (std::size_t c : subset)
                    if (g.edge[c][d]) {
                        has_sel = true;
                        break;
                    }
                covers = !has_any || has_sel; // unreachable DUs cannot veto every subset
            }
            if (covers) {
                std::vector<std::string> selected;
                for (std::size_t c : subset)
                    selected.push_back(g.cu_ids[c]);
                AssociationPlan plan =
                    evaluate_plan(scenario, g, selected, associate(selected, g), options);
                if (plan.feasible)
                    return plan;
                consider(std::move(plan));
            }
            // next combination
            std::size_t i = size;
            while (i > 0 && subset[i - 1] == nc - size + i - 1)
                --i;
            if (i == 0)
                break;
            ++subset[i - 1];
            for (std::size_t j = i; j < size; ++j)
                subset[j] = subset[j - 1] + 1;
        }
    }
    if (!best)
        throw std::runtime_error("no CU subset could be evaluated");
    return *best;
}

} // namespace midhaul

#endif
