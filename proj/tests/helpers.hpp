#pragma once
// Shared test utilities: seeded random problem instances small enough for
// brute-force cross-checks.

#include <random>
#include <string>
#include <vector>

#include "optlcl/problem.hpp"

namespace testutil {

using namespace optlcl;

// Random problem with up to 3 labels, radius up to 2, and roughly a quarter
// of the windows forbidden.  Only the four legal objective/aggregation
// combinations are produced.
inline OptLcl random_problem(std::mt19937_64& rng) {
    OptLcl p;
    p.name = "random";
    int k = 1 + static_cast<int>(rng() % 3);
    static const char* names[] = {"a", "b", "c"};
    for (int i = 0; i < k; ++i) p.labels.push_back(names[i]);
    p.radius = static_cast<int>(rng() % 3);
    p.objective = (rng() & 1) ? Objective::Min : Objective::Max;
    if (rng() & 1)
        p.aggregation = Aggregation::Sum;
    else
        p.aggregation = p.objective == Objective::Min ? Aggregation::Max
                                                      : Aggregation::Min;
    p.costs.assign(p.gamma(), CostValue{});
    for (long long t = 0; t < p.gamma(); ++t) {
        if (rng() % 4 == 0) continue;  // forbidden window
        long long num = static_cast<long long>(rng() % 7);
        long long den = 1 + static_cast<long long>(rng() % 2);
        p.costs[t] = rat_make(num, den);
    }
    return p;
}

// Random labeling of an n-cycle.
inline std::vector<int> random_labels(std::mt19937_64& rng, const OptLcl& p,
                                      int n) {
    std::vector<int> labels(n);
    for (int i = 0; i < n; ++i)
        labels[i] = static_cast<int>(rng() % p.num_labels());
    return labels;
}

}  // namespace testutil
