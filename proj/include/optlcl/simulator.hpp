#pragma once
// Round-synchronous simulator for directed cycles.  Algorithms are written
// as per-node view functions: a node may read IDs and random tapes only
// within its declared radius, enforced by the instrumented View.  Outputs
// must therefore be honest about locality by construction.
//
// Boundary selection for the segment strategies works on a ladder of
// independent sets: level 1 is a maximal independent set of the cycle
// computed from a 3-coloring (color reduction from IDs), and level j+1 is a
// maximal independent set of the virtual cycle formed by level-j nodes.
// Level-j boundaries are consecutive at distances in [2^j, 3^j], which is
// exactly the segment-length range the plan's walk table covers.

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>
#include <bit>

#include "optlcl/synthesis.hpp"
#include "optlcl/verify.hpp"

namespace optlcl {

struct CycleInstance {
    int n = 0;
    std::vector<long long> ids;  // distinct, in [1, n^2]
};

enum class IdPolicy { RandomPermutation, AdversarialBlocks };
enum class Model { Det, Rand };

inline uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline CycleInstance assign_ids(int n, uint64_t seed, IdPolicy policy,
                                int block_len = 16) {
    if (n < 1) throw std::invalid_argument("cycle needs at least one node");
    CycleInstance inst;
    inst.n = n;
    long long space = static_cast<long long>(n) * n;
    std::mt19937_64 rng(seed);
    if (policy == IdPolicy::RandomPermutation) {
        std::uniform_int_distribution<long long> dist(1, space);
        std::unordered_set<long long> used;
        while (static_cast<int>(inst.ids.size()) < n) {
            long long id = dist(rng);
            if (used.insert(id).second) inst.ids.push_back(id);
        }
    } else {
        // Ascending runs of block_len consecutive IDs; the runs themselves
        // are shuffled so no global order leaks.
        int blocks = (n + block_len - 1) / block_len;
        std::vector<long long> order(blocks);
        for (int b = 0; b < blocks; ++b) order[b] = b;
        std::shuffle(order.begin(), order.end(), rng);
        for (int i = 0; i < n; ++i)
            inst.ids.push_back(order[i / block_len] *
                                   static_cast<long long>(block_len) +
                               i % block_len + 1);
    }
    return inst;
}

// Random tape of a node: 64 words derived by counter-mode hashing of
// (run seed, node id).
inline uint64_t tape_word(uint64_t seed, long long id, int word) {
    return splitmix64(splitmix64(seed ^ splitmix64(static_cast<uint64_t>(id))) +
                      static_cast<uint64_t>(word));
}

// Instrumented window around one node.  Every read checks the declared
// radius and records the maximal offset actually used.
struct View {
    const CycleInstance* inst = nullptr;
    uint64_t seed = 0;
    int center = 0;
    int radius = 0;  // declared locality

    mutable int max_access = 0;

    bool saturated() const { return 2 * radius + 1 >= inst->n; }

    int position(int offset) const {
        int n = inst->n;
        return ((center + offset) % n + n) % n;
    }

    long long id_at(int offset) const {
        touch(offset);
        return inst->ids[position(offset)];
    }

    uint64_t tape_at(int offset, int word) const {
        touch(offset);
        return tape_word(seed, inst->ids[position(offset)], word);
    }

    void touch(int offset) const {
        int d = offset < 0 ? -offset : offset;
        if (d > radius)
            throw std::logic_error("algorithm read beyond declared radius");
        if (d > max_access) max_access = d;
    }
};

// Color-reduction iterations needed from the ID space of an n-cycle down to
// six colors, by repeated (bit index, bit value) steps.
inline int cv_rounds(int n) {
    unsigned long long colors = static_cast<unsigned long long>(n) * n + 1;
    int rounds = 0;
    while (colors > 6) {
        colors = 2 * std::bit_width(colors - 1);
        ++rounds;
    }
    return rounds;
}

inline long long pow3(int k) {
    long long r = 1;
    while (k-- > 0) r *= 3;
    return r;
}

// Declared locality per strategy.  The segment strategies touch their whole
// declared window so that the measured locality is a deterministic function
// of n (and constant for the fragment strategy).
inline int flexible_locality(const SynthesisPlan& plan, int n) {
    int r = cv_rounds(n);
    return static_cast<int>(plan.b_max + ((r + 9) * pow3(plan.level) + 1) / 2 +
                            1);
}

inline int fragment_locality(const SynthesisPlan& plan) {
    return static_cast<int>(plan.b_max + plan.long_cut + 1);
}

namespace detail {

// Per-node evaluation state: the view plus within-node memo tables.  Memos
// only cache values this node already computed from its own view, so they
// change neither outputs nor the declared-radius guarantee.
struct NodeEval {
    const DebruijnGraph* g = nullptr;
    const SynthesisPlan* plan = nullptr;
    View view;
    int rounds = 0;  // color-reduction iterations for this n

    std::unordered_map<long long, long long> color_memo;
    std::unordered_map<long long, int> boundary_memo;
    std::unordered_map<int, int> mark_memo;

    static long long key3(int level, int stage, int off) {
        return (static_cast<long long>(level) << 48) ^
               (static_cast<long long>(stage) << 32) ^
               static_cast<long long>(static_cast<unsigned>(off + (1 << 30)));
    }

    // Level-j boundary indicator; level 0 is every node.
    bool boundary(int level, int off);

    // Next/previous level-(j-1) boundary, as an absolute offset.
    int virtual_next(int level_below, int off) {
        long long cap = pow3(level_below);
        for (long long d = 1; d <= cap; ++d)
            if (boundary(level_below, off + static_cast<int>(d)))
                return off + static_cast<int>(d);
        throw std::logic_error("boundary gap exceeded its level bound");
    }
    int virtual_prev(int level_below, int off) {
        long long cap = pow3(level_below);
        for (long long d = 1; d <= cap; ++d)
            if (boundary(level_below, off - static_cast<int>(d)))
                return off - static_cast<int>(d);
        throw std::logic_error("boundary gap exceeded its level bound");
    }

    // Color of the level-(level-1) boundary at `off` after `stage` steps of
    // the reduction: stages 1..rounds are (bit index, bit) steps against the
    // virtual successor; three more steps recolor classes 5, 4, 3 to the
    // first free color among the virtual neighbours.
    long long color(int level, int stage, int off) {
        long long k = key3(level, stage, off);
        auto it = color_memo.find(k);
        if (it != color_memo.end()) return it->second;
        long long result;
        if (stage == 0) {
            result = view.id_at(off);
        } else if (stage <= rounds) {
            long long own = color(level, stage - 1, off);
            long long succ =
                color(level, stage - 1, virtual_next(level - 1, off));
            if (own == succ)
                throw std::logic_error("equal neighbour colors");
            int bit = std::countr_zero(
                static_cast<unsigned long long>(own ^ succ));
            result = 2 * bit + ((own >> bit) & 1);
        } else {
            long long own = color(level, stage - 1, off);
            long long eliminate = 5 - (stage - rounds - 1);
            if (own != eliminate) {
                result = own;
            } else {
                long long p =
                    color(level, stage - 1, virtual_prev(level - 1, off));
                long long s =
                    color(level, stage - 1, virtual_next(level - 1, off));
                result = 0;
                while (result == p || result == s) ++result;
            }
        }
        color_memo.emplace(k, result);
        return result;
    }

    long long final_color(int level, int off) {
        return color(level, rounds + 3, off);
    }

    bool marked(int off) {
        auto it = mark_memo.find(off);
        if (it != mark_memo.end()) return it->second;
        bool m = view.tape_at(off, 0) % plan->mark_prob_inv == 0;
        mark_memo.emplace(off, m ? 1 : 0);
        return m;
    }
};

inline bool NodeEval::boundary(int level, int off) {
    if (level == 0) return true;
    long long k = key3(level, -1, off);
    auto it = boundary_memo.find(k);
    if (it != boundary_memo.end()) return it->second;
    bool result = boundary(level - 1, off);
    if (result) {
        // Greedy independent set by color class on the virtual cycle: a
        // node stays selected unless a smaller-colored virtual neighbour is
        // selected.  Chains of strictly decreasing colors have length at
        // most three, so the recursion terminates.
        long long own = final_color(level, off);
        for (int m : {virtual_prev(level - 1, off),
                      virtual_next(level - 1, off)}) {
            if (final_color(level, m) < own && boundary(level, m)) {
                result = false;
                break;
            }
        }
    }
    boundary_memo.emplace(k, result ? 1 : 0);
    return result;
}

}  // namespace detail

struct RunResult {
    std::vector<int> labeling;
    std::string strategy;
    int declared_locality = 0;
    int measured_locality = 0;
    bool saturated = false;
    bool fallback = false;  // n below plan.n0: brute-force optimal used
    bool unsat = false;     // no valid labeling exists for this n
    uint64_t seed = 0;
};

namespace detail {

inline int min_id_position(const CycleInstance& inst) {
    int best = 0;
    for (int i = 1; i < inst.n; ++i)
        if (inst.ids[i] < inst.ids[best]) best = i;
    return best;
}

}  // namespace detail

// Full-view optimal algorithm.  Conceptually every node reads the entire
// cycle, rotates it so the minimal ID comes first, and solves the same
// deterministic program; the engine computes that shared labeling once and
// rotates it, which is output-identical by symmetry.
inline RunResult run_optimal(const DebruijnGraph& g,
                             const CycleInstance& inst) {
    RunResult r;
    r.strategy = "optimal";
    r.declared_locality = (inst.n + 1) / 2;
    r.measured_locality = r.declared_locality;
    r.saturated = true;
    auto labels = opt_labeling(g, inst.n);
    if (!labels) {
        r.unsat = true;
        return r;
    }
    int start = detail::min_id_position(inst);
    r.labeling.resize(inst.n);
    for (int i = 0; i < inst.n; ++i)
        r.labeling[i] = (*labels)[((i - start) % inst.n + inst.n) % inst.n];
    return r;
}

inline RunResult run_constant(const DebruijnGraph& g,
                              const SynthesisPlan& plan,
                              const CycleInstance& inst) {
    RunResult r;
    r.strategy = "constant_solution";
    r.declared_locality = 0;
    r.measured_locality = 0;
    r.saturated = 2 * 0 + 1 >= inst.n;
    r.labeling.assign(inst.n, g.first_label(*plan.loop_node));
    return r;
}

// One node of the segment pipeline: find the enclosing level-k boundaries
// and read the stored walk for this segment length at this offset.
inline int flexible_node_output(const DebruijnGraph& g,
                                const SynthesisPlan& plan,
                                const CycleInstance& inst, uint64_t seed,
                                int node, int* max_access) {
    detail::NodeEval ev;
    ev.g = &g;
    ev.plan = &plan;
    ev.rounds = cv_rounds(inst.n);
    ev.view = View{&inst, seed, node, flexible_locality(plan, inst.n)};

    // Deterministic measured locality: read the full declared window.
    for (int off = -ev.view.radius; off <= ev.view.radius; ++off)
        ev.view.id_at(off);

    int level = plan.level;
    int d_back = -1, d_fwd = -1;
    for (int d = 0; d <= plan.b_max && d_back < 0; ++d)
        if (ev.boundary(level, -d)) d_back = d;
    for (int d = 1; d <= plan.b_max && d_fwd < 0; ++d)
        if (ev.boundary(level, d)) d_fwd = d;
    if (d_back < 0 || d_fwd < 0)
        throw std::logic_error("no boundary within the gap bound");
    long long gap = d_back + d_fwd;
    const auto& walk = gap_walk(plan, gap);
    if (max_access && ev.view.max_access > *max_access)
        *max_access = ev.view.max_access;
    return walk[d_back];
}

inline RunResult run_flexible(const DebruijnGraph& g,
                              const SynthesisPlan& plan,
                              const CycleInstance& inst, uint64_t seed) {
    RunResult r;
    r.strategy = "flexible";
    r.seed = seed;
    r.declared_locality = flexible_locality(plan, inst.n);
    r.saturated = 2 * r.declared_locality + 1 >= inst.n;
    r.labeling.resize(inst.n);
    int measured = 0;
    for (int i = 0; i < inst.n; ++i)
        r.labeling[i] = flexible_node_output(g, plan, inst, seed, i, &measured);
    r.measured_locality = measured;
    return r;
}

// One node of the randomized fragment pipeline.  Boundaries are marked
// nodes with a mark-free lookback window; segments the walk table covers
// are labeled from it, anything longer routes through the self-loop.
inline int fragment_node_output(const DebruijnGraph& g,
                                const SynthesisPlan& plan,
                                const CycleInstance& inst, uint64_t seed,
                                int node, int* max_access) {
    detail::NodeEval ev;
    ev.g = &g;
    ev.plan = &plan;
    ev.rounds = 0;
    ev.view = View{&inst, seed, node, fragment_locality(plan)};

    for (int off = -ev.view.radius; off <= ev.view.radius; ++off)
        ev.view.tape_at(off, 0);

    auto is_boundary = [&](int off) {
        if (!ev.marked(off)) return false;
        for (long long t = 1; t < plan.long_cut; ++t)
            if (ev.marked(off - static_cast<int>(t))) return false;
        return true;
    };

    int d_back = -1, d_fwd = -1;
    for (long long d = 0; d <= plan.b_max; ++d)
        if (is_boundary(-static_cast<int>(d))) {
            d_back = static_cast<int>(d);
            break;
        }
    for (long long d = 1; d <= plan.b_max; ++d)
        if (is_boundary(static_cast<int>(d))) {
            d_fwd = static_cast<int>(d);
            break;
        }
    if (max_access && ev.view.max_access > *max_access)
        *max_access = ev.view.max_access;

    long long p1 = static_cast<long long>(plan.conn_in.size());
    long long p2 = static_cast<long long>(plan.conn_out.size());
    if (d_back >= 0 && d_fwd >= 0) {
        long long gap = d_back + d_fwd;
        if (gap <= plan.b_max) return gap_walk(plan, gap)[d_back];
    }
    // Long (or unbounded) segment: anchor prefix, loop middle, anchor-ward
    // suffix.  The branches cannot overlap because a long segment exceeds
    // b_max >= p1 + p2.
    if (d_back >= 0 && d_back < p1) return plan.conn_in[d_back];
    if (d_fwd >= 1 && d_fwd <= p2) return plan.conn_out[p2 - d_fwd];
    return g.first_label(*plan.loop_node);
}

inline RunResult run_fragment(const DebruijnGraph& g,
                              const SynthesisPlan& plan,
                              const CycleInstance& inst, uint64_t seed) {
    RunResult r;
    r.strategy = "constant_fragment";
    r.seed = seed;
    r.declared_locality = fragment_locality(plan);
    r.saturated = 2 * r.declared_locality + 1 >= inst.n;
    r.labeling.resize(inst.n);
    int measured = 0;
    for (int i = 0; i < inst.n; ++i)
        r.labeling[i] = fragment_node_output(g, plan, inst, seed, i, &measured);
    r.measured_locality = measured;
    return r;
}

// Smallest n with full guarantees for this plan under this model.  The
// deterministic path of a fragment plan climbs the boundary ladder to its
// level, which needs a slightly larger cycle than the randomized path.
inline long long effective_n0(const SynthesisPlan& plan, Model model) {
    if (plan.strategy == Strategy::ConstantFragment && model == Model::Det)
        return std::max<long long>(plan.n0, 3 * pow3(plan.level));
    return plan.n0;
}

inline RunResult run_plan(const DebruijnGraph& g, const SynthesisPlan& plan,
                          Model model, const CycleInstance& inst,
                          uint64_t seed) {
    switch (plan.strategy) {
        case Strategy::None:
            throw std::invalid_argument("unsolvable: nothing to run");
        case Strategy::Optimal:
            return run_optimal(g, inst);
        case Strategy::ConstantSolution:
            return run_constant(g, plan, inst);
        case Strategy::Flexible:
        case Strategy::ConstantFragment: {
            if (inst.n < effective_n0(plan, model)) {
                RunResult r = run_optimal(g, inst);
                r.strategy = strategy_name(plan.strategy);
                r.fallback = true;
                r.seed = seed;
                return r;
            }
            RunResult r =
                (plan.strategy == Strategy::Flexible || model == Model::Det)
                    ? run_flexible(g, plan, inst, seed)
                    : run_fragment(g, plan, inst, seed);
            r.strategy = strategy_name(plan.strategy);
            return r;
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace optlcl
