#pragma once
// Ground-truth evaluation of cyclic labelings.  The brute-force enumerator
// is the independent oracle: it never touches the graph machinery, only the
// cost table.  The dynamic-programming optimum must agree with it wherever
// the enumeration budget allows.

#include <cstdlib>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "optlcl/debruijn.hpp"
#include "optlcl/walk_table.hpp"

namespace optlcl {

// Value of one labeling of the n-cycle: sum problems report the total over
// all n windows, min/max problems the aggregate.  Any forbidden window makes
// the labeling invalid (nullopt).
inline CostValue solution_value(const OptLcl& p, const std::vector<int>& labels) {
    int n = static_cast<int>(labels.size());
    if (n == 0) return std::nullopt;
    std::optional<Rational> acc;
    std::vector<int> window(p.window_width());
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j <= p.radius; ++j) window[j] = labels[(i + j) % n];
        const CostValue& c = p.costs[p.tuple_index(window)];
        if (!c) return std::nullopt;
        if (!acc) {
            acc = *c;
        } else if (p.aggregation == Aggregation::Sum) {
            acc = *acc + *c;
        } else if (p.aggregation == Aggregation::Min) {
            acc = std::min(*acc, *c);
        } else {
            acc = std::max(*acc, *c);
        }
    }
    return acc;
}

inline long long enum_budget() {
    if (const char* env = std::getenv("OPTLCL_ENUM_BUDGET"))
        return std::atoll(env);
    return 2'000'000;
}

struct BruteforceResult {
    bool within_budget = false;
    CostValue value;  // nullopt when no labeling is valid
};

// Enumerates every labeling of the n-cycle; refuses (within_budget false)
// when |labels|^n exceeds the budget.
inline BruteforceResult opt_bruteforce(const OptLcl& p, int n,
                                       long long budget = enum_budget()) {
    BruteforceResult r;
    long long total = 1;
    for (int i = 0; i < n; ++i) {
        total *= p.num_labels();
        if (total > budget) return r;
    }
    r.within_budget = true;
    bool minimize = p.objective == Objective::Min;
    std::vector<int> labels(n, 0);
    for (long long it = 0; it < total; ++it) {
        long long x = it;
        for (int i = 0; i < n; ++i) {
            labels[i] = static_cast<int>(x % p.num_labels());
            x /= p.num_labels();
        }
        CostValue v = solution_value(p, labels);
        if (!v) continue;
        if (!r.value || (minimize ? *v < *r.value : *v > *r.value)) r.value = v;
    }
    return r;
}

// Optimum over closed walks of length exactly n, i.e. over all valid
// labelings of the n-cycle.  Sum problems report the total.  Ties prefer
// the smallest start node, then the walk table's predecessor rule, which
// pins down one canonical witness.
inline CostValue opt_dp(const DebruijnGraph& g, int n, int* witness_start = nullptr) {
    CostValue best;
    bool minimize = g.problem.objective == Objective::Min;
    NodeMask all = g.full_mask();
    if (witness_start) *witness_start = -1;
    for (int s = 0; s < g.num_nodes(); ++s) {
        WalkTable t = build_walk_table(g, all, s, n);
        if (!t.has(n, s)) continue;
        Rational v = rat_make(t.val[n][s], g.cost_scale);
        if (!best || (minimize ? v < *best : v > *best)) {
            best = v;
            if (witness_start) *witness_start = s;
        }
    }
    return best;
}

// Canonical optimal labeling of the n-cycle, nullopt when none exists.
inline std::optional<std::vector<int>> opt_labeling(const DebruijnGraph& g,
                                                    int n) {
    int start = -1;
    opt_dp(g, n, &start);
    if (start < 0) return std::nullopt;
    WalkTable t = build_walk_table(g, g.full_mask(), start, n);
    return walk_to_labels(g, t.reconstruct(n, start));
}

struct Evaluation {
    bool valid = false;             // labeling uses no forbidden window
    CostValue value;                // labeling value (nullopt when invalid)
    CostValue opt;                  // optimum for this cycle length
    std::optional<Rational> ratio;  // value/opt (min) or opt/value (max)
    std::optional<bool> alpha_ok;   // set when an alpha was supplied
};

// Product-form approximation test; no division, exact rationals throughout.
inline bool within_alpha(const OptLcl& p, const Rational& alpha,
                         const Rational& opt, const Rational& value) {
    if (p.objective == Objective::Min) return !(alpha * opt < value);
    return !(value * alpha < opt);
}

inline Evaluation evaluate(const DebruijnGraph& g,
                           const std::optional<Rational>& alpha,
                           const std::vector<int>& labels) {
    Evaluation e;
    e.value = solution_value(g.problem, labels);
    e.valid = e.value.has_value();
    e.opt = opt_dp(g, static_cast<int>(labels.size()));
    if (!e.valid || !e.opt) {
        if (alpha) e.alpha_ok = false;
        return e;
    }
    if (alpha) e.alpha_ok = within_alpha(g.problem, *alpha, *e.opt, *e.value);
    bool is_min = g.problem.objective == Objective::Min;
    const Rational& num = is_min ? *e.value : *e.opt;
    const Rational& den = is_min ? *e.opt : *e.value;
    if (den.num != 0)
        e.ratio = num / den;
    else if (num.num == 0)
        e.ratio = Rational{1, 1};  // both sides optimal at zero
    return e;
}

}  // namespace optlcl
