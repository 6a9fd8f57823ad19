#pragma once
// Turns a classification into an executable plan: an anchor window placed at
// segment boundaries, a table of closed anchor-to-anchor walks covering
// every segment length in [a_min, b_max], and, for the randomized fragment
// strategy, a self-loop filler with connector paths for rare long segments.
//
// Budget reasoning (min problems; max mirrored): a cycle split into
// segments of lengths g_i labeled by closed anchor walks costs the sum of
// the walk costs.  If every stored walk of length g costs at most
// g * beta_target + slack(g) with slack(g) <= g * margin, the whole cycle
// meets alpha * beta_opt * n.  The ladder doubles a_min until every length
// in range passes that per-length check exactly.

#include <cmath>
#include <deque>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "optlcl/classify.hpp"
#include "optlcl/parameters.hpp"
#include "optlcl/verify.hpp"
#include "optlcl/walk_table.hpp"

namespace optlcl {

struct SynthesisPlan {
    Strategy strategy = Strategy::None;
    std::string problem_name;
    Rational alpha{1, 1};

    std::optional<int> loop_node;  // self-loop: constant output / long filler
    std::optional<int> anchor;     // window placed at segment boundaries
    int level = 0;                 // boundary-selection ladder depth
    long long a_min = 0;           // smallest segment length
    long long b_max = 0;           // largest table-covered segment length
    std::map<long long, std::vector<int>> gap_walks;  // length -> labels
    std::vector<int> conn_in;   // labels: anchor -> loop path (fragment)
    std::vector<int> conn_out;  // labels: loop -> anchor path (fragment)
    long long mark_prob_inv = 0;  // marking probability 1/this (fragment)
    long long long_cut = 0;       // mark lookback window (fragment)
    long long n0 = 1;             // guarantees hold from this n on
    Rational beta_target{0, 1};   // per-node target rate
    Rational c_slack{0, 1};       // max per-segment excess over the target

    bool needs_boundaries() const {
        return strategy == Strategy::Flexible ||
               strategy == Strategy::ConstantFragment;
    }
};

struct SynthesisError : std::runtime_error {
    explicit SynthesisError(const std::string& m) : std::runtime_error(m) {}
};

namespace detail {

// Mask of one strongly connected component, intersected with `within`.
inline NodeMask scc_mask(const DebruijnGraph& g, int member,
                         const NodeMask& within) {
    NodeMask m(g.num_nodes(), 0);
    for (int v = 0; v < g.num_nodes(); ++v)
        m[v] = (within[v] && g.scc_id[v] == g.scc_id[member]) ? 1 : 0;
    return m;
}

// Shortest path from -> to inside the mask (BFS); node sequence inclusive.
inline std::vector<int> shortest_path(const DebruijnGraph& g,
                                      const NodeMask& mask, int from, int to) {
    std::vector<int> prev(g.num_nodes(), -2);
    std::deque<int> queue{from};
    prev[from] = -1;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        if (u == to) break;
        for (int w : g.out_edges[u]) {
            if (!mask[w] || prev[w] != -2) continue;
            prev[w] = u;
            queue.push_back(w);
        }
    }
    if (prev[to] == -2)
        throw SynthesisError("no connector path inside the component");
    std::vector<int> path;
    for (int v = to; v != -1; v = prev[v]) path.push_back(v);
    std::reverse(path.begin(), path.end());
    return path;
}

// Per-length budget check for the stored walk value.  For sum problems the
// excess of the best walk over g * beta_target must fit g * margin_scale;
// for min/max aggregation the walk aggregate must not cross beta_target
// (walks live inside the threshold subgraph, so this holds by construction
// and the check is a safety net).
inline bool within_budget(const DebruijnGraph& g, long long raw, long long k,
                          const Rational& beta_target, const Rational& margin,
                          Rational* slack_out) {
    bool is_min = g.problem.objective == Objective::Min;
    if (g.problem.aggregation == Aggregation::Sum) {
        Rational total = rat_make(raw, g.cost_scale);
        Rational target = beta_target * Rational{static_cast<long long>(k), 1};
        Rational slack = is_min ? total - target : target - total;
        if (slack < Rational{0, 1}) slack = Rational{0, 1};
        if (slack_out && *slack_out < slack) *slack_out = slack;
        Rational allowance =
            margin * Rational{static_cast<long long>(k), 1};
        return !(allowance < slack);
    }
    Rational aggr = rat_make(raw, g.cost_scale);
    return is_min ? !(beta_target < aggr) : !(aggr < beta_target);
}

}  // namespace detail

// Ladder outcome: level k gives boundary gaps in [2^k, 3^k]; accept the
// smallest k whose full gap range is covered by affordable walks.
struct LadderResult {
    int level = 0;
    int anchor = -1;
    long long a_min = 0;
    long long b_max = 0;
    std::map<long long, std::vector<int>> gap_walks;
    Rational c_slack{0, 1};
};

// Candidate anchors inside the mask: an exact-cost pair node first when one
// exists, then the best Frobenius pair, then remaining flexible nodes.  The
// list is capped; the ladder takes the first anchor that works per level, so
// order encodes preference.
inline std::vector<int> anchor_candidates(
    const DebruijnGraph& g, const NodeMask& mask,
    const std::optional<Rational>& exact_beta) {
    std::vector<int> cand;
    auto push = [&](int v) {
        for (int c : cand)
            if (c == v) return;
        cand.push_back(v);
    };
    if (exact_beta) {
        auto exact = find_exact_coprime_pair(g, mask, *exact_beta);
        if (exact) push(exact->node);
    }
    std::optional<CoprimePair> best;
    int horizon = flexibility_horizon(g);
    for (int v = 0; v < g.num_nodes(); ++v) {
        if (!mask[v]) continue;
        best = best_coprime_pair(closed_walk_lengths(g, mask, v, horizon), v,
                                 best);
    }
    if (best) push(best->node);
    for (int v = 0; v < g.num_nodes() && cand.size() < 16; ++v)
        if (mask[v] && is_flexible_node(g, mask, v)) push(v);
    if (cand.empty())
        throw SynthesisError("no coprime walk pair in the component");
    return cand;
}

// Try ladder levels in order and anchors in preference order within each
// level, so the accepted level (hence the stored table and the simulated
// locality) is as small as any candidate anchor allows.  floor_b can grow
// the covered range beyond 3^k, e.g. for randomized-boundary tail bounds.
template <typename FloorFn>
inline LadderResult run_ladder(const DebruijnGraph& g, const NodeMask& mask,
                               const std::vector<int>& anchors,
                               const Rational& beta_target,
                               const Rational& margin, long long extra_b,
                               long long min_b, FloorFn floor_b) {
    constexpr int kMaxLevel = 14;
    for (int k = 1; k <= kMaxLevel; ++k) {
        long long a = 1LL << k;
        long long b = 1;
        for (int i = 0; i < k; ++i) b *= 3;
        b = std::max(std::max(b + extra_b, min_b), floor_b(a));
        if ((b + 1) * static_cast<long long>(g.num_nodes()) > 4'000'000)
            throw SynthesisError("segment table too large at this margin");
        for (int anchor : anchors) {
            WalkTable t =
                build_walk_table(g, mask, anchor, static_cast<int>(b));
            bool ok = true;
            Rational slack{0, 1};
            for (long long x = a; x <= b && ok; ++x) {
                if (!t.has(static_cast<int>(x), anchor) ||
                    !detail::within_budget(g, t.val[x][anchor], x, beta_target,
                                           margin, &slack))
                    ok = false;
            }
            if (!ok) continue;
            LadderResult r;
            r.level = k;
            r.anchor = anchor;
            r.a_min = a;
            r.b_max = b;
            r.c_slack = slack;
            for (long long x = a; x <= b; ++x) {
                auto walk = t.reconstruct(static_cast<int>(x), anchor);
                r.gap_walks[x] = walk_to_labels(g, walk);
            }
            return r;
        }
    }
    throw SynthesisError("no affordable segment-length range found");
}

inline long long no_floor(long long) { return 0; }

inline SynthesisPlan synthesize(const DebruijnGraph& g,
                                const ProblemParameters& params,
                                const Rational& alpha,
                                const Classification& cls) {
    SynthesisPlan plan;
    plan.strategy = cls.strategy;
    plan.problem_name = g.problem.name;
    plan.alpha = alpha;
    bool is_min = g.problem.objective == Objective::Min;
    SubgraphViews views = subgraph_views(g);

    auto margin_against = [&](const Rational& target) {
        if (!params.beta_opt || !*params.beta_opt)
            throw SynthesisError("beta_opt missing");
        Rational scaled = is_min ? alpha * **params.beta_opt
                                 : **params.beta_opt / alpha;
        Rational m = is_min ? scaled - target : target - scaled;
        if (m < Rational{0, 1})
            throw SynthesisError("negative margin: classification mismatch");
        return m;
    };

    switch (cls.strategy) {
        case Strategy::None:
            throw SynthesisError("unsolvable problems have no plan");
        case Strategy::Optimal:
            return plan;  // the runner brute-forces from the full view
        case Strategy::ConstantSolution: {
            if (!params.const_walk)
                throw SynthesisError("no self-loop for a constant plan");
            plan.loop_node = params.const_walk->front();
            plan.beta_target = **params.beta_const;
            return plan;
        }
        case Strategy::Flexible: {
            NodeMask mask;
            std::optional<Rational> exact;
            if (g.problem.aggregation == Aggregation::Sum) {
                plan.beta_target = **params.beta_flex;
                // With an exact coprime witness, anchor in its component so
                // zero-margin ladders can succeed; otherwise the optimum's
                // component keeps the slack bounded.
                int member = params.exact_pair ? params.exact_pair->node
                                               : params.flex_walk->front();
                mask = detail::scc_mask(g, member, views.flex);
                exact = plan.beta_target;
            } else {
                plan.beta_target = **params.beta_coprime;
                mask = threshold_mask(g, plan.beta_target);
                mask = detail::scc_mask(g, params.coprime_pair->node, mask);
            }
            auto anchors = anchor_candidates(g, mask, exact);
            Rational margin = margin_against(plan.beta_target);
            LadderResult lr = run_ladder(g, mask, anchors, plan.beta_target,
                                         margin, 0, 0, no_floor);
            plan.anchor = lr.anchor;
            plan.level = lr.level;
            plan.a_min = lr.a_min;
            plan.b_max = lr.b_max;
            plan.gap_walks = std::move(lr.gap_walks);
            plan.c_slack = lr.c_slack;
            plan.n0 = std::max<long long>(4, 3 * plan.b_max);
            return plan;
        }
        case Strategy::ConstantFragment: {
            plan.beta_target = **params.beta_gap;
            NodeMask mask = detail::scc_mask(g, params.gap_walk->front(),
                                             views.gap);
            // Cheapest self-loop in this component feeds long segments.
            int loop = -1;
            for (int v = 0; v < g.num_nodes(); ++v) {
                if (!mask[v] || !g.node_self_loop[v]) continue;
                if (loop == -1 ||
                    (is_min ? g.node_cost[v] < g.node_cost[loop]
                            : g.node_cost[loop] < g.node_cost[v]))
                    loop = v;
            }
            if (loop == -1)
                throw SynthesisError("gap component lost its self-loop");
            plan.loop_node = loop;

            bool exact_loop = params.delta_gap && !*params.delta_gap;
            std::vector<int> anchors =
                exact_loop ? std::vector<int>{loop}
                           : anchor_candidates(g, mask, plan.beta_target);

            // Half the margin pays for short-segment slack.  The boundary
            // process marks each node with probability 1/long_cut and cuts at
            // isolated marks, so segment lengths are geometric-tailed with
            // rate q below; grow b_max until a segment outgrows the stored
            // table only with negligible probability, keeping loop-filled
            // stretches too rare to dent the remaining margin.
            Rational margin = margin_against(plan.beta_target);
            Rational half = margin / Rational{2, 1};
            double loss = std::abs(to_double(g.node_cost[loop]) -
                                   to_double(plan.beta_target));
            auto tail_floor = [&](long long a) -> long long {
                if (loss < 1e-12) return 0;  // filler runs at the target rate
                double p = 1.0 / static_cast<double>(a);
                double q = p * std::pow(1.0 - p, static_cast<double>(a - 1));
                return a + static_cast<long long>(
                               std::ceil(std::log(1e6) / q));
            };
            // Connectors are shortest paths, so 2 * num_nodes bounds their
            // total length before the anchor is even chosen.
            long long conn_bound = 2LL * g.num_nodes() + 2;
            LadderResult lr = run_ladder(g, mask, anchors, plan.beta_target,
                                         half, 16, conn_bound, tail_floor);
            plan.anchor = lr.anchor;
            plan.level = lr.level;
            plan.a_min = lr.a_min;
            plan.b_max = lr.b_max;
            plan.gap_walks = std::move(lr.gap_walks);
            plan.c_slack = lr.c_slack;
            plan.mark_prob_inv = plan.a_min;
            plan.long_cut = plan.a_min;
            // Guarantees hold once a boundary exists somewhere w.h.p.: the
            // per-segment cost overheads are n-independent, so n0 is the
            // cycle length where P(no isolated mark) drops below 1/200.
            {
                double p = 1.0 / static_cast<double>(plan.mark_prob_inv);
                double q = p * std::pow(1.0 - p,
                                        static_cast<double>(plan.long_cut - 1));
                plan.n0 = std::max<long long>(
                    4, static_cast<long long>(std::ceil(std::log(200.0) / q)));
            }

            auto in_path = detail::shortest_path(g, mask, lr.anchor, loop);
            auto out_path = detail::shortest_path(g, mask, loop, lr.anchor);
            for (size_t i = 0; i + 1 < in_path.size(); ++i)
                plan.conn_in.push_back(g.first_label(in_path[i]));
            for (size_t i = 0; i + 1 < out_path.size(); ++i)
                plan.conn_out.push_back(g.first_label(out_path[i]));
            return plan;
        }
    }
    throw SynthesisError("unreachable");
}

inline const std::vector<int>& gap_walk(const SynthesisPlan& plan,
                                        long long g) {
    auto it = plan.gap_walks.find(g);
    if (it == plan.gap_walks.end())
        throw std::out_of_range("gap length outside [a_min, b_max]");
    return it->second;
}

// --- plan serialization (text, replayable) ------------------------------

inline std::string labels_to_names(const OptLcl& p,
                                   const std::vector<int>& labels) {
    std::string s;
    for (size_t i = 0; i < labels.size(); ++i) {
        if (i) s += ' ';
        s += p.labels[labels[i]];
    }
    return s;
}

inline std::string node_to_names(const DebruijnGraph& g, int v) {
    return labels_to_names(g.problem,
                           g.problem.tuple_of_index(g.node_tuple[v]));
}

inline std::string dump_plan(const DebruijnGraph& g,
                             const SynthesisPlan& plan) {
    std::ostringstream out;
    out << "plan\n";
    out << "problem = " << plan.problem_name << "\n";
    out << "strategy = " << strategy_name(plan.strategy) << "\n";
    out << "alpha = " << to_string(plan.alpha) << "\n";
    out << "level = " << plan.level << "\n";
    out << "a_min = " << plan.a_min << "\n";
    out << "b_max = " << plan.b_max << "\n";
    out << "mark_prob_inv = " << plan.mark_prob_inv << "\n";
    out << "long_cut = " << plan.long_cut << "\n";
    out << "n0 = " << plan.n0 << "\n";
    out << "beta_target = " << to_string(plan.beta_target) << "\n";
    out << "c_slack = " << to_string(plan.c_slack) << "\n";
    if (plan.anchor)
        out << "anchor = " << node_to_names(g, *plan.anchor) << "\n";
    if (plan.loop_node)
        out << "loop = " << node_to_names(g, *plan.loop_node) << "\n";
    out << "conn_in =" << (plan.conn_in.empty() ? "" : " ")
        << labels_to_names(g.problem, plan.conn_in) << "\n";
    out << "conn_out =" << (plan.conn_out.empty() ? "" : " ")
        << labels_to_names(g.problem, plan.conn_out) << "\n";
    for (const auto& [len, labels] : plan.gap_walks)
        out << "walk " << len << " = " << labels_to_names(g.problem, labels)
            << "\n";
    out << "end\n";
    return out.str();
}

namespace detail {

inline std::vector<int> names_to_labels(const OptLcl& p,
                                        const std::string& text) {
    std::vector<int> out;
    std::istringstream in(text);
    std::string name;
    while (in >> name) {
        int id = p.label_id(name);
        if (id < 0) throw SynthesisError("unknown label in plan: " + name);
        out.push_back(id);
    }
    return out;
}

inline int names_to_node(const DebruijnGraph& g, const std::string& text) {
    std::vector<int> labels = names_to_labels(g.problem, text);
    if (static_cast<int>(labels.size()) != g.problem.window_width())
        throw SynthesisError("plan window has the wrong width");
    int v = g.tuple_node[g.problem.tuple_index(labels)];
    if (v < 0) throw SynthesisError("plan window has no finite cost");
    return v;
}

}  // namespace detail

inline SynthesisPlan load_plan(const DebruijnGraph& g,
                               const std::string& text) {
    SynthesisPlan plan;
    std::istringstream in(text);
    std::string line;
    bool started = false, ended = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (!started) {
            if (line != "plan") throw SynthesisError("missing plan header");
            started = true;
            continue;
        }
        if (line == "end") {
            ended = true;
            break;
        }
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw SynthesisError("bad plan line: " + line);
        auto trim = [](std::string s) {
            size_t a = s.find_first_not_of(" \t");
            size_t b = s.find_last_not_of(" \t");
            return a == std::string::npos ? std::string()
                                          : s.substr(a, b - a + 1);
        };
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key == "problem") {
            plan.problem_name = value;
            if (value != g.problem.name)
                throw SynthesisError("plan is for problem " + value);
        } else if (key == "strategy") {
            bool found = false;
            for (Strategy s :
                 {Strategy::ConstantSolution, Strategy::ConstantFragment,
                  Strategy::Flexible, Strategy::Optimal, Strategy::None})
                if (strategy_name(s) == value) {
                    plan.strategy = s;
                    found = true;
                }
            if (!found) throw SynthesisError("unknown strategy: " + value);
        } else if (key == "alpha") {
            auto r = parse_rational(value);
            if (!r) throw SynthesisError("bad alpha in plan");
            plan.alpha = *r;
        } else if (key == "beta_target") {
            auto r = parse_rational(value);
            if (!r) throw SynthesisError("bad beta_target in plan");
            plan.beta_target = *r;
        } else if (key == "c_slack") {
            auto r = parse_rational(value);
            if (!r) throw SynthesisError("bad c_slack in plan");
            plan.c_slack = *r;
        } else if (key == "level") {
            plan.level = std::stoi(value);
        } else if (key == "a_min") {
            plan.a_min = std::stoll(value);
        } else if (key == "b_max") {
            plan.b_max = std::stoll(value);
        } else if (key == "mark_prob_inv") {
            plan.mark_prob_inv = std::stoll(value);
        } else if (key == "long_cut") {
            plan.long_cut = std::stoll(value);
        } else if (key == "n0") {
            plan.n0 = std::stoll(value);
        } else if (key == "anchor") {
            plan.anchor = detail::names_to_node(g, value);
        } else if (key == "loop") {
            plan.loop_node = detail::names_to_node(g, value);
        } else if (key == "conn_in") {
            plan.conn_in = detail::names_to_labels(g.problem, value);
        } else if (key == "conn_out") {
            plan.conn_out = detail::names_to_labels(g.problem, value);
        } else if (key.rfind("walk ", 0) == 0) {
            long long len = std::stoll(key.substr(5));
            auto labels = detail::names_to_labels(g.problem, value);
            if (static_cast<long long>(labels.size()) != len)
                throw SynthesisError("walk length mismatch in plan");
            plan.gap_walks[len] = std::move(labels);
        } else {
            throw SynthesisError("unknown plan key: " + key);
        }
    }
    if (!started || !ended) throw SynthesisError("truncated plan");
    return plan;
}

}  // namespace optlcl
