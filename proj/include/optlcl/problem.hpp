#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "optlcl/rational.hpp"

namespace optlcl {

enum class Objective { Min, Max };
enum class Aggregation { Sum, Min, Max };

inline std::string to_string(Objective o) { return o == Objective::Min ? "min" : "max"; }
inline std::string to_string(Aggregation a) {
    switch (a) {
        case Aggregation::Sum: return "sum";
        case Aggregation::Min: return "min";
        default: return "max";
    }
}

// An optimization LCL on directed cycles: labels, window radius r, and a
// cost on every (r+1)-tuple (node label first, then the r successors).
// Supported (objective, aggregation) pairs: (min,sum), (max,sum),
// (min,max), (max,min). costs has exactly |labels|^(r+1) entries indexed
// by tuple_index.
struct OptLcl {
    std::string name;
    std::vector<std::string> labels;
    int radius = 1;
    Objective objective = Objective::Min;
    Aggregation aggregation = Aggregation::Sum;
    std::vector<CostValue> costs;

    int num_labels() const { return (int)labels.size(); }
    int window_width() const { return radius + 1; }

    // |labels|^(radius+1): tuple count before pruning.
    long long gamma() const {
        long long g = 1;
        for (int i = 0; i <= radius; ++i) g *= num_labels();
        return g;
    }

    // Tuple (t0..tr) of label ids -> dense index, big-endian in t0.
    long long tuple_index(const std::vector<int>& tuple) const {
        long long idx = 0;
        for (int t : tuple) idx = idx * num_labels() + t;
        return idx;
    }

    std::vector<int> tuple_of_index(long long idx) const {
        std::vector<int> t(window_width());
        for (int i = window_width() - 1; i >= 0; --i) {
            t[i] = (int)(idx % num_labels());
            idx /= num_labels();
        }
        return t;
    }

    const CostValue& cost_of_tuple(const std::vector<int>& tuple) const {
        return costs[tuple_index(tuple)];
    }

    int label_id(const std::string& label) const {
        for (size_t i = 0; i < labels.size(); ++i)
            if (labels[i] == label) return (int)i;
        return -1;
    }

    std::string tuple_to_string(long long idx, const char* sep = " ") const {
        auto t = tuple_of_index(idx);
        std::string s;
        for (size_t i = 0; i < t.size(); ++i) {
            if (i) s += sep;
            s += labels[t[i]];
        }
        return s;
    }

    long long count_finite_costs() const {
        long long c = 0;
        for (const auto& v : costs)
            if (v) ++c;
        return c;
    }
};

// Canonical problem-file text for an OptLcl; parse_problem(serialize(p))
// reproduces p field for field.
inline std::string serialize(const OptLcl& p) {
    std::string out;
    if (!p.name.empty()) out += "# " + p.name + "\n";
    out += "alphabet:";
    for (const auto& l : p.labels) out += " " + l;
    out += "\nradius: " + std::to_string(p.radius);
    out += "\nobjective: " + to_string(p.objective);
    out += "\naggregation: " + to_string(p.aggregation) + "\n";
    for (long long i = 0; i < (long long)p.costs.size(); ++i)
        out += "cost " + p.tuple_to_string(i) + " = " + to_string(p.costs[i]) + "\n";
    return out;
}

}  // namespace optlcl
