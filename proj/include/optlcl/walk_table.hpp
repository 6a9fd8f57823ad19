#pragma once
// Dynamic program over walks that start at a fixed source node.  Entry
// (k, v) holds the best achievable value among walks of length exactly k
// from the source to v, where the value of a walk w_0, ..., w_k combines the
// costs of w_1 .. w_k only: the start window is excluded so that closed-walk
// values match cyclic-labeling values without double counting.
//
// Values are kept as integers scaled by the graph's common cost denominator.
// For sum problems the entry is the scaled total (callers divide by length
// for the per-node average); for min/max problems it is the scaled
// aggregate.

#include <climits>
#include <vector>

#include "optlcl/debruijn.hpp"

namespace optlcl {

constexpr long long kNoWalk = LLONG_MIN;

struct WalkTable {
    int source = -1;
    int horizon = 0;
    // val[k][v] and pred[k][v]; val == kNoWalk means no such walk.
    std::vector<std::vector<long long>> val;
    std::vector<std::vector<int>> pred;

    bool has(int k, int v) const { return val[k][v] != kNoWalk; }

    // Walk node ids w_0 .. w_k with w_k == v.
    std::vector<int> reconstruct(int k, int v) const {
        std::vector<int> walk(k + 1);
        for (int i = k; i >= 0; --i) {
            walk[i] = v;
            v = i > 0 ? pred[i][v] : -1;
        }
        return walk;
    }
};

// Ties prefer the smallest predecessor id, which makes every reconstructed
// witness deterministic.
inline WalkTable build_walk_table(const DebruijnGraph& g, const NodeMask& mask,
                                  int source, int horizon) {
    int n = g.num_nodes();
    WalkTable t;
    t.source = source;
    t.horizon = horizon;
    t.val.assign(horizon + 1, std::vector<long long>(n, kNoWalk));
    t.pred.assign(horizon + 1, std::vector<int>(n, -1));
    if (!mask[source]) return t;
    t.val[0][source] = 0;

    bool minimize = g.problem.objective == Objective::Min;
    Aggregation aggr = g.problem.aggregation;

    for (int k = 1; k <= horizon; ++k) {
        for (int v = 0; v < n; ++v) {
            if (!mask[v]) continue;
            long long best = kNoWalk;
            int best_pred = -1;
            for (int u : g.in_edges[v]) {
                long long base = t.val[k - 1][u];
                if (base == kNoWalk) continue;
                long long c = g.node_cost_scaled[v];
                long long cand;
                switch (aggr) {
                    case Aggregation::Sum:
                        cand = base + c;
                        break;
                    case Aggregation::Min:
                        cand = (k == 1) ? c : std::min(base, c);
                        break;
                    default:
                        cand = (k == 1) ? c : std::max(base, c);
                        break;
                }
                bool better = best == kNoWalk ||
                              (minimize ? cand < best : cand > best);
                if (better) {
                    best = cand;
                    best_pred = u;
                }
            }
            t.val[k][v] = best;
            t.pred[k][v] = best_pred;
        }
    }
    return t;
}

// Per-node value of a closed walk of length k whose table entry is raw:
// sums average over the k counted windows, min/max report the aggregate.
inline Rational walk_value(const DebruijnGraph& g, long long raw, int k) {
    if (g.problem.aggregation == Aggregation::Sum)
        return rat_make(raw, g.cost_scale * static_cast<__int128>(k));
    return rat_make(raw, g.cost_scale);
}

}  // namespace optlcl
