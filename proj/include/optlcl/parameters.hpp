#pragma once
// Structural quantities of a problem, extracted from its tuple-overlap
// graph.  Every beta is the optimal per-node value over closed walks inside
// one subgraph view; the delta flags describe how the flexible and self-loop
// views relate.  Witnesses back each finite value so downstream users can
// replay them.

#include <optional>
#include <tuple>
#include <vector>

#include "optlcl/debruijn.hpp"
#include "optlcl/walk_table.hpp"

namespace optlcl {

struct BetaResult {
    CostValue value;                        // nullopt when the view is empty
    std::optional<std::vector<int>> walk;   // closed walk achieving it
};

// Optimal per-node walk value within the masked subgraph, over closed walks
// of length 1..gamma.  Longer closed walks decompose into simple cycles, so
// this horizon is exhaustive.  Witness ties prefer the smallest start node,
// then the shortest walk.
inline BetaResult beta_of_subgraph(const DebruijnGraph& g,
                                   const NodeMask& mask) {
    BetaResult r;
    bool minimize = g.problem.objective == Objective::Min;
    int horizon = static_cast<int>(g.gamma);
    int best_s = -1, best_k = -1;
    for (int s = 0; s < g.num_nodes(); ++s) {
        if (!mask[s]) continue;
        WalkTable t = build_walk_table(g, mask, s, horizon);
        for (int k = 1; k <= horizon; ++k) {
            if (!t.has(k, s)) continue;
            Rational v = walk_value(g, t.val[k][s], k);
            if (!r.value || (minimize ? v < *r.value : v > *r.value)) {
                r.value = v;
                best_s = s;
                best_k = k;
            }
        }
    }
    if (best_s >= 0) {
        WalkTable t = build_walk_table(g, mask, best_s, best_k);
        r.walk = t.reconstruct(best_k, best_s);
    }
    return r;
}

// Two coprime closed-walk lengths at one node.  Beyond k0 = (k1-1)(k2-1) +
// max(k1, k2) every length is a nonnegative combination reachable as a
// closed walk, so smaller k0 means shorter patch walks downstream.
struct CoprimePair {
    int node = -1;
    int k1 = 0;
    int k2 = 0;

    long long k0() const {
        return static_cast<long long>(k1 - 1) * (k2 - 1) + std::max(k1, k2);
    }
};

namespace detail {

inline void consider_pair(std::optional<CoprimePair>& best, int node, int a,
                          int b) {
    CoprimePair cand{node, a, b};
    if (!best || cand.k0() < best->k0() ||
        (cand.k0() == best->k0() &&
         std::tie(cand.node, cand.k1, cand.k2) <
             std::tie(best->node, best->k1, best->k2)))
        best = cand;
}

}  // namespace detail

// Best coprime pair among the given per-node admissible lengths.
inline std::optional<CoprimePair> best_coprime_pair(
    const std::vector<int>& lengths, int node,
    std::optional<CoprimePair> best = std::nullopt) {
    for (size_t i = 0; i < lengths.size(); ++i)
        for (size_t j = i + 1; j < lengths.size(); ++j)
            if (std::gcd(lengths[i], lengths[j]) == 1)
                detail::consider_pair(best, node, lengths[i], lengths[j]);
    return best;
}

// For sum problems: a node carrying two coprime closed walks whose per-node
// value is exactly beta.  Existence makes the flexible optimum achievable at
// every large length simultaneously.
inline std::optional<CoprimePair> find_exact_coprime_pair(
    const DebruijnGraph& g, const NodeMask& mask, const Rational& beta) {
    std::optional<CoprimePair> best;
    int horizon = flexibility_horizon(g);
    for (int v = 0; v < g.num_nodes(); ++v) {
        if (!mask[v]) continue;
        WalkTable t = build_walk_table(g, mask, v, horizon);
        std::vector<int> exact;
        for (int k = 1; k <= horizon; ++k) {
            if (!t.has(k, v)) continue;
            // Scaled total equals beta * k exactly.  The table keeps the
            // objective-best total, which meets beta * k iff some walk does.
            __int128 lhs = static_cast<__int128>(t.val[k][v]) * beta.den;
            __int128 rhs = static_cast<__int128>(beta.num) * g.cost_scale * k;
            if (lhs == rhs) exact.push_back(k);
        }
        best = best_coprime_pair(exact, v, best);
    }
    return best;
}

struct ThresholdResult {
    CostValue value;  // threshold cost, nullopt when no threshold works
    std::optional<CoprimePair> pair;
};

// Node mask of the cost-threshold subgraph for min/max aggregation
// problems: keep nodes with cost <= l (min objective, max aggregation) or
// cost >= l (max objective, min aggregation).
inline NodeMask threshold_mask(const DebruijnGraph& g, const Rational& l) {
    NodeMask m(g.num_nodes(), 0);
    bool keep_below = g.problem.aggregation == Aggregation::Max;
    for (int v = 0; v < g.num_nodes(); ++v)
        m[v] = (keep_below ? !(l < g.node_cost[v]) : !(g.node_cost[v] < l))
                   ? 1
                   : 0;
    return m;
}

// Tightest node-cost threshold whose subgraph still contains a flexible
// node: the smallest for min objective, the largest for max.
inline ThresholdResult compute_beta_coprime(const DebruijnGraph& g) {
    std::vector<Rational> costs = g.node_cost;
    std::sort(costs.begin(), costs.end());
    costs.erase(std::unique(costs.begin(), costs.end()), costs.end());
    if (g.problem.objective == Objective::Max)
        std::reverse(costs.begin(), costs.end());

    for (const Rational& l : costs) {
        NodeMask m = threshold_mask(g, l);
        std::optional<CoprimePair> best;
        int horizon = flexibility_horizon(g);
        for (int v = 0; v < g.num_nodes(); ++v) {
            if (!m[v]) continue;
            best = best_coprime_pair(closed_walk_lengths(g, m, v, horizon), v,
                                     best);
        }
        if (best) return {l, best};
    }
    return {std::nullopt, std::nullopt};
}

// Full parameter report.  Fields irrelevant to the problem's aggregation
// stay disengaged ("unset"): sum problems have no threshold parameter,
// min/max problems have no flexible or self-loop gap parameters.
struct ProblemParameters {
    std::optional<CostValue> beta_opt;
    std::optional<CostValue> beta_flex;
    std::optional<bool> delta_flex;
    std::optional<CostValue> beta_gap;
    std::optional<bool> delta_gap;
    std::optional<CostValue> beta_const;
    std::optional<CostValue> beta_coprime;

    std::optional<std::vector<int>> opt_walk, flex_walk, gap_walk, const_walk;
    std::optional<CoprimePair> exact_pair;     // sum, when delta_flex is false
    std::optional<CoprimePair> coprime_pair;   // min/max threshold witness
};

inline ProblemParameters compute_parameters(const DebruijnGraph& g) {
    ProblemParameters p;
    SubgraphViews views = subgraph_views(g);

    BetaResult opt = beta_of_subgraph(g, views.opt);
    p.beta_opt = opt.value;
    p.opt_walk = opt.walk;

    BetaResult cst = beta_of_subgraph(g, views.self_loops);
    p.beta_const = cst.value;
    p.const_walk = cst.walk;

    if (g.problem.aggregation == Aggregation::Sum) {
        BetaResult flex = beta_of_subgraph(g, views.flex);
        p.beta_flex = flex.value;
        p.flex_walk = flex.walk;

        BetaResult gap = beta_of_subgraph(g, views.gap);
        p.beta_gap = gap.value;
        p.gap_walk = gap.walk;

        if (flex.value) {
            p.exact_pair = find_exact_coprime_pair(g, views.flex, *flex.value);
            p.delta_flex = !p.exact_pair.has_value();
        } else {
            p.delta_flex = true;  // vacuous: no walk meets a missing optimum
        }
        p.delta_gap = (*p.beta_gap != *p.beta_const);
    } else {
        ThresholdResult th = compute_beta_coprime(g);
        p.beta_coprime = th.value;
        p.coprime_pair = th.pair;
    }
    return p;
}

}  // namespace optlcl
