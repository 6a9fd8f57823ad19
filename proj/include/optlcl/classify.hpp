#pragma once
// Complexity classification of (problem, alpha) pairs.  The decision tables
// scan sufficient conditions from cheapest class to most expensive; the
// first row that fires wins.  All comparisons are exact rationals, and any
// comparison against an absent value fails (an unattainable optimum can
// never satisfy a bound).

#include <optional>
#include <string>
#include <vector>

#include "optlcl/parameters.hpp"

namespace optlcl {

enum class ComplexityClass { A, B, C, D, E };
enum class Strategy {
    ConstantSolution,
    ConstantFragment,
    Flexible,
    Optimal,
    None
};

inline char class_letter(ComplexityClass c) {
    switch (c) {
        case ComplexityClass::A: return 'A';
        case ComplexityClass::B: return 'B';
        case ComplexityClass::C: return 'C';
        case ComplexityClass::D: return 'D';
        default: return 'E';
    }
}

// Round complexities per class, deterministic and randomized.
inline std::string det_complexity(ComplexityClass c) {
    switch (c) {
        case ComplexityClass::A: return "O(1)";
        case ComplexityClass::B: return "Theta(log* n)";
        case ComplexityClass::C: return "Theta(log* n)";
        case ComplexityClass::D: return "Theta(n)";
        default: return "unsolvable";
    }
}

inline std::string rand_complexity(ComplexityClass c) {
    switch (c) {
        case ComplexityClass::A: return "O(1)";
        case ComplexityClass::B: return "O(1)";
        case ComplexityClass::C: return "Theta(log* n)";
        case ComplexityClass::D: return "Theta(n)";
        default: return "unsolvable";
    }
}

inline Strategy strategy_of(ComplexityClass c) {
    switch (c) {
        case ComplexityClass::A: return Strategy::ConstantSolution;
        case ComplexityClass::B: return Strategy::ConstantFragment;
        case ComplexityClass::C: return Strategy::Flexible;
        case ComplexityClass::D: return Strategy::Optimal;
        default: return Strategy::None;
    }
}

inline std::string strategy_name(Strategy s) {
    switch (s) {
        case Strategy::ConstantSolution: return "constant_solution";
        case Strategy::ConstantFragment: return "constant_fragment";
        case Strategy::Flexible: return "flexible";
        case Strategy::Optimal: return "optimal";
        default: return "none";
    }
}

// When a row fires, the matching round complexity is also a lower bound for
// the approximation problem; the note records which argument makes it tight.
inline std::string lower_bound_note(ComplexityClass c) {
    switch (c) {
        case ComplexityClass::A:
            return "O(1) is trivially tight";
        case ComplexityClass::B:
            return "Omega(log* n) deterministic via the constant-output "
                   "Ramsey argument; randomized O(1) is tight";
        case ComplexityClass::C:
            return "Omega(log* n) deterministic and randomized via the "
                   "gap-threshold argument";
        case ComplexityClass::D:
            return "Omega(n) deterministic and randomized: better ratios "
                   "need global coordination";
        default:
            return "no finite-round algorithm achieves this ratio";
    }
}

struct Classification {
    ComplexityClass cls = ComplexityClass::E;
    Strategy strategy = Strategy::None;
    std::string matched_condition;
    std::string note;  // lower-bound tightness
};

namespace detail {

inline Classification make_classification(ComplexityClass c,
                                          std::string condition) {
    Classification r;
    r.cls = c;
    r.strategy = strategy_of(c);
    r.matched_condition = std::move(condition);
    r.note = lower_bound_note(c);
    return r;
}

// value `cmp` bound with bound possibly absent; absent never satisfies.
inline bool ge(const CostValue& a, const CostValue& b) {
    return a && b && !(*a < *b);
}
inline bool gt(const CostValue& a, const CostValue& b) {
    return a && b && *b < *a;
}
inline bool le(const CostValue& a, const CostValue& b) {
    return a && b && !(*b < *a);
}
inline bool lt(const CostValue& a, const CostValue& b) {
    return a && b && *a < *b;
}

}  // namespace detail

// For min problems the scaled optimum is alpha * beta_opt; for max problems
// the table uses beta_opt / alpha.  Both stay exact rationals.
inline CostValue scaled_opt(const OptLcl& p, const ProblemParameters& params,
                            const Rational& alpha) {
    if (!params.beta_opt || !*params.beta_opt) return std::nullopt;
    Rational b = **params.beta_opt;
    return p.objective == Objective::Min ? alpha * b : b / alpha;
}

inline Classification classify(const OptLcl& p,
                               const ProblemParameters& params,
                               const Rational& alpha) {
    using detail::ge;
    using detail::gt;
    using detail::le;
    using detail::lt;
    using detail::make_classification;
    bool is_min = p.objective == Objective::Min;
    CostValue s = scaled_opt(p, params, alpha);

    auto flat = [&](const std::optional<CostValue>& v) -> CostValue {
        return v ? *v : CostValue{};
    };
    CostValue b_const = flat(params.beta_const);

    if (p.aggregation == Aggregation::Sum) {
        CostValue b_flex = flat(params.beta_flex);
        CostValue b_gap = flat(params.beta_gap);
        bool d_flex = params.delta_flex.value_or(true);
        bool d_gap = params.delta_gap.value_or(true);
        if (!b_flex)
            return make_classification(ComplexityClass::E, "beta_flex = bot");
        if (is_min) {
            if (ge(s, b_const))
                return make_classification(ComplexityClass::A,
                                           "alpha*beta_opt >= beta_const");
            if (!d_gap && ge(s, b_gap))
                return make_classification(
                    ComplexityClass::B,
                    "alpha*beta_opt >= beta_gap and delta_gap false");
            if (d_gap && gt(s, b_gap))
                return make_classification(
                    ComplexityClass::B,
                    "alpha*beta_opt > beta_gap and delta_gap true");
            if (!d_flex && ge(s, b_flex))
                return make_classification(
                    ComplexityClass::C,
                    "alpha*beta_opt >= beta_flex and delta_flex false");
            if (d_flex && gt(s, b_flex))
                return make_classification(
                    ComplexityClass::C,
                    "alpha*beta_opt > beta_flex and delta_flex true");
            return make_classification(ComplexityClass::D,
                                       "alpha*beta_opt < beta_flex, or equal "
                                       "with the strict row required");
        }
        if (le(s, b_const))
            return make_classification(ComplexityClass::A,
                                       "(1/alpha)*beta_opt <= beta_const");
        if (!d_gap && le(s, b_gap))
            return make_classification(
                ComplexityClass::B,
                "(1/alpha)*beta_opt <= beta_gap and delta_gap false");
        if (d_gap && lt(s, b_gap))
            return make_classification(
                ComplexityClass::B,
                "(1/alpha)*beta_opt < beta_gap and delta_gap true");
        if (!d_flex && le(s, b_flex))
            return make_classification(
                ComplexityClass::C,
                "(1/alpha)*beta_opt <= beta_flex and delta_flex false");
        if (d_flex && lt(s, b_flex))
            return make_classification(
                ComplexityClass::C,
                "(1/alpha)*beta_opt < beta_flex and delta_flex true");
        return make_classification(ComplexityClass::D,
                                   "(1/alpha)*beta_opt > beta_flex, or equal "
                                   "with the strict row required");
    }

    // min-max and max-min problems
    CostValue b_cop = flat(params.beta_coprime);
    if (!b_cop)
        return make_classification(ComplexityClass::E, "beta_coprime = bot");
    if (is_min) {
        if (ge(s, b_const))
            return make_classification(ComplexityClass::A,
                                       "alpha*beta_opt >= beta_const");
        if (ge(s, b_cop))
            return make_classification(ComplexityClass::C,
                                       "alpha*beta_opt >= beta_coprime");
        return make_classification(ComplexityClass::D,
                                   "alpha*beta_opt < beta_coprime");
    }
    if (le(s, b_const))
        return make_classification(ComplexityClass::A,
                                   "(1/alpha)*beta_opt <= beta_const");
    if (le(s, b_cop))
        return make_classification(ComplexityClass::C,
                                   "(1/alpha)*beta_opt <= beta_coprime");
    return make_classification(ComplexityClass::D,
                               "(1/alpha)*beta_opt > beta_coprime");
}

struct AlphaInterval {
    Rational lo{1, 1};
    bool lo_closed = true;
    std::optional<Rational> hi;  // nullopt = unbounded
    bool hi_closed = false;
    Classification cls;

    std::string to_string() const {
        std::string s;
        if (hi && lo == *hi) return "{" + optlcl::to_string(lo) + "}";
        s += lo_closed ? '[' : '(';
        s += optlcl::to_string(lo);
        s += ',';
        s += hi ? optlcl::to_string(*hi) : std::string("inf");
        s += hi_closed ? ']' : ')';
        return s;
    }
};

struct ThresholdReport {
    std::vector<AlphaInterval> intervals;  // partition of [1, inf)
    bool degenerate = false;  // beta_opt zero or absent: class independent of alpha
};

// Class boundaries can only sit where alpha crosses a ratio of two betas.
// The report samples every breakpoint, every open region between
// neighbouring breakpoints, and the tail, then merges equal-class atoms.
inline ThresholdReport threshold_report(const OptLcl& p,
                                        const ProblemParameters& params) {
    ThresholdReport report;
    const Rational one{1, 1};

    bool flat_opt = !params.beta_opt || !*params.beta_opt ||
                    (**params.beta_opt).num == 0;
    std::vector<Rational> breaks;
    if (!flat_opt) {
        Rational b_opt = **params.beta_opt;
        auto add_ratio = [&](const std::optional<CostValue>& v) {
            if (!v || !*v || (**v).num == 0) return;
            Rational r = p.objective == Objective::Min ? **v / b_opt
                                                       : b_opt / **v;
            if (!(r < one)) breaks.push_back(r);
        };
        add_ratio(params.beta_const);
        add_ratio(params.beta_gap);
        add_ratio(params.beta_flex);
        add_ratio(params.beta_coprime);
        std::sort(breaks.begin(), breaks.end());
        breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
    } else {
        report.degenerate = true;
    }

    // Atoms in order: [1, b1), {b1}, (b1, b2), {b2}, ..., (bm, inf).  Each
    // atom has constant class; open atoms are sampled at an interior point.
    std::vector<AlphaInterval> atoms;
    auto push_point = [&](const Rational& b) {
        AlphaInterval a;
        a.lo = b;
        a.hi = b;
        a.lo_closed = a.hi_closed = true;
        a.cls = classify(p, params, b);
        atoms.push_back(a);
    };
    auto push_open = [&](const Rational& lo, bool lo_closed,
                         const std::optional<Rational>& hi) {
        AlphaInterval a;
        a.lo = lo;
        a.lo_closed = lo_closed;
        a.hi = hi;
        a.hi_closed = false;
        Rational sample = hi ? (lo + *hi) / Rational{2, 1}
                             : lo + one;
        a.cls = classify(p, params, sample);
        atoms.push_back(a);
    };

    Rational cursor = one;
    bool cursor_closed = true;
    for (const Rational& b : breaks) {
        if (cursor < b) push_open(cursor, cursor_closed, b);
        push_point(b);
        cursor = b;
        cursor_closed = false;
    }
    push_open(cursor, cursor_closed, std::nullopt);

    // Merge maximal runs of equal class.
    for (size_t i = 0; i < atoms.size();) {
        size_t j = i;
        while (j + 1 < atoms.size() && atoms[j + 1].cls.cls == atoms[i].cls.cls)
            ++j;
        AlphaInterval iv = atoms[i];
        iv.hi = atoms[j].hi;
        iv.hi_closed = atoms[j].hi_closed;
        report.intervals.push_back(iv);
        i = j + 1;
    }
    return report;
}

}  // namespace optlcl
