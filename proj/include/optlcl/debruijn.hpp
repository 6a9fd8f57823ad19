#pragma once
// Directed tuple-overlap graph of a cyclic window problem.  Nodes are the
// windows with finite cost; there is an edge u -> v when v can follow u in a
// cyclic labeling, i.e. the last r labels of u equal the first r labels of v.
// Closed walks of length n correspond one-to-one to valid labelings of the
// n-node directed cycle.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "optlcl/problem.hpp"

namespace optlcl {

using NodeMask = std::vector<char>;  // mask[v] != 0 keeps node v

struct DebruijnGraph {
    OptLcl problem;
    long long gamma = 0;  // window count before pruning: |labels|^(r+1)

    std::vector<long long> node_tuple;  // node id -> window index, ascending
    std::vector<int> tuple_node;        // window index -> node id or -1
    std::vector<Rational> node_cost;
    std::vector<long long> node_cost_scaled;  // node_cost * cost_scale
    long long cost_scale = 1;                 // lcm of cost denominators

    std::vector<std::vector<int>> out_edges;
    std::vector<std::vector<int>> in_edges;
    std::vector<char> node_self_loop;

    std::vector<int> scc_id;  // condensation component per node
    int num_sccs = 0;

    int num_nodes() const { return static_cast<int>(node_tuple.size()); }

    int first_label(int v) const {
        return problem.tuple_of_index(node_tuple[v]).front();
    }

    NodeMask full_mask() const { return NodeMask(node_tuple.size(), 1); }
};

namespace detail {

// Iterative Tarjan; recursion would overflow on long chains.
inline void tarjan_sccs(DebruijnGraph& g) {
    int n = g.num_nodes();
    g.scc_id.assign(n, -1);
    g.num_sccs = 0;
    std::vector<int> index(n, -1), lowlink(n, 0);
    std::vector<char> on_stack(n, 0);
    std::vector<int> stack;
    int next_index = 0;

    struct Frame {
        int v;
        size_t edge;
    };
    std::vector<Frame> call;

    for (int root = 0; root < n; ++root) {
        if (index[root] != -1) continue;
        call.push_back({root, 0});
        while (!call.empty()) {
            auto& f = call.back();
            int v = f.v;
            if (f.edge == 0) {
                index[v] = lowlink[v] = next_index++;
                stack.push_back(v);
                on_stack[v] = 1;
            }
            bool descended = false;
            while (f.edge < g.out_edges[v].size()) {
                int w = g.out_edges[v][f.edge++];
                if (index[w] == -1) {
                    call.push_back({w, 0});
                    descended = true;
                    break;
                }
                if (on_stack[w]) lowlink[v] = std::min(lowlink[v], index[w]);
            }
            if (descended) continue;
            if (lowlink[v] == index[v]) {
                while (true) {
                    int w = stack.back();
                    stack.pop_back();
                    on_stack[w] = 0;
                    g.scc_id[w] = g.num_sccs;
                    if (w == v) break;
                }
                ++g.num_sccs;
            }
            call.pop_back();
            if (!call.empty()) {
                int parent = call.back().v;
                lowlink[parent] = std::min(lowlink[parent], lowlink[v]);
            }
        }
    }
}

}  // namespace detail

inline DebruijnGraph build_graph(const OptLcl& problem) {
    DebruijnGraph g;
    g.problem = problem;
    g.gamma = problem.gamma();

    g.tuple_node.assign(g.gamma, -1);
    for (long long t = 0; t < g.gamma; ++t) {
        if (problem.costs[t].has_value()) {
            g.tuple_node[t] = g.num_nodes();
            g.node_tuple.push_back(t);
            g.node_cost.push_back(*problem.costs[t]);
        }
    }

    g.cost_scale = 1;
    for (const auto& c : g.node_cost)
        g.cost_scale = std::lcm(g.cost_scale, c.den);
    for (const auto& c : g.node_cost)
        g.node_cost_scaled.push_back(c.num * (g.cost_scale / c.den));

    int n = g.num_nodes();
    g.out_edges.assign(n, {});
    g.in_edges.assign(n, {});
    g.node_self_loop.assign(n, 0);
    long long base = problem.num_labels();
    // Dropping the first label of u leaves the window prefix any successor
    // must extend: successors are suffix * base + c over all labels c.
    long long suffix_mod = 1;
    for (int i = 0; i < problem.radius; ++i) suffix_mod *= base;
    for (int u = 0; u < n; ++u) {
        long long suffix = g.node_tuple[u] % suffix_mod;
        for (long long c = 0; c < base; ++c) {
            int v = g.tuple_node[suffix * base + c];
            if (v == -1) continue;
            g.out_edges[u].push_back(v);
            g.in_edges[v].push_back(u);
            if (v == u) g.node_self_loop[u] = 1;
        }
    }

    detail::tarjan_sccs(g);
    return g;
}

// Lengths k in [1, max_len] for which a closed walk of length exactly k
// through v exists using only masked nodes.
inline std::vector<int> closed_walk_lengths(const DebruijnGraph& g,
                                            const NodeMask& mask, int v,
                                            int max_len) {
    std::vector<int> lengths;
    if (!mask[v]) return lengths;
    int n = g.num_nodes();
    std::vector<char> cur(n, 0), next(n, 0);
    cur[v] = 1;
    for (int k = 1; k <= max_len; ++k) {
        std::fill(next.begin(), next.end(), 0);
        for (int u = 0; u < n; ++u) {
            if (!cur[u]) continue;
            for (int w : g.out_edges[u])
                if (mask[w]) next[w] = 1;
        }
        std::swap(cur, next);
        if (cur[v]) lengths.push_back(k);
    }
    return lengths;
}

inline bool has_coprime_pair(const std::vector<int>& lengths) {
    for (size_t i = 0; i < lengths.size(); ++i)
        for (size_t j = i + 1; j < lengths.size(); ++j)
            if (std::gcd(lengths[i], lengths[j]) == 1) return true;
    return lengths.size() == 1 && lengths[0] == 1;
}

// A node is flexible when it carries closed walks of two coprime lengths;
// beyond every sufficiently large length a closed walk of that exact length
// then exists.  Searching lengths up to 2*gamma + 1 is exhaustive: longer
// walks revisit nodes and decompose into short cycles.
inline int flexibility_horizon(const DebruijnGraph& g) {
    return static_cast<int>(2 * g.gamma + 1);
}

inline bool is_flexible_node(const DebruijnGraph& g, const NodeMask& mask,
                             int v) {
    auto lengths = closed_walk_lengths(g, mask, v, flexibility_horizon(g));
    return has_coprime_pair(lengths);
}

// Closed walks through v never leave v's strongly connected component, so
// flexibility is a component property; test one representative per SCC.
inline std::vector<char> flexible_sccs(const DebruijnGraph& g) {
    std::vector<char> flex(g.num_sccs, 0);
    std::vector<int> rep(g.num_sccs, -1);
    for (int v = g.num_nodes() - 1; v >= 0; --v) rep[g.scc_id[v]] = v;
    NodeMask all = g.full_mask();
    for (int s = 0; s < g.num_sccs; ++s)
        flex[s] = is_flexible_node(g, all, rep[s]) ? 1 : 0;
    return flex;
}

struct SubgraphViews {
    NodeMask opt;         // every node
    NodeMask flex;        // nodes in flexible components
    NodeMask gap;         // flexible components containing a self-loop
    NodeMask self_loops;  // self-loop nodes inside gap components
};

inline SubgraphViews subgraph_views(const DebruijnGraph& g) {
    SubgraphViews v;
    v.opt = g.full_mask();
    int n = g.num_nodes();
    v.flex.assign(n, 0);
    v.gap.assign(n, 0);
    v.self_loops.assign(n, 0);

    auto flex = flexible_sccs(g);
    std::vector<char> scc_loop(g.num_sccs, 0);
    for (int u = 0; u < n; ++u)
        if (g.node_self_loop[u]) scc_loop[g.scc_id[u]] = 1;

    for (int u = 0; u < n; ++u) {
        int s = g.scc_id[u];
        if (!flex[s]) continue;
        v.flex[u] = 1;
        if (!scc_loop[s]) continue;
        v.gap[u] = 1;
        if (g.node_self_loop[u]) v.self_loops[u] = 1;
    }
    return v;
}

inline bool mask_empty(const NodeMask& m) {
    return std::find(m.begin(), m.end(), 1) == m.end();
}

// A closed walk w_0, ..., w_k (w_0 == w_k) labels the k-cycle by the first
// label of each of w_0 .. w_{k-1}.
inline std::vector<int> walk_to_labels(const DebruijnGraph& g,
                                       const std::vector<int>& walk) {
    if (walk.size() < 2 || walk.front() != walk.back())
        throw std::invalid_argument("walk_to_labels: walk is not closed");
    std::vector<int> labels;
    for (size_t i = 0; i + 1 < walk.size(); ++i)
        labels.push_back(g.first_label(walk[i]));
    return labels;
}

// Inverse direction: a cyclic labeling induces one window per node; the
// windows form a closed walk exactly when every window has finite cost.
inline std::optional<std::vector<int>> labels_to_walk(
    const DebruijnGraph& g, const std::vector<int>& labels) {
    int n = static_cast<int>(labels.size());
    if (n == 0) return std::nullopt;
    std::vector<int> walk;
    for (int i = 0; i < n; ++i) {
        std::vector<int> window(g.problem.window_width());
        for (int j = 0; j <= g.problem.radius; ++j)
            window[j] = labels[(i + j) % n];
        int v = g.tuple_node[g.problem.tuple_index(window)];
        if (v == -1) return std::nullopt;
        walk.push_back(v);
    }
    walk.push_back(walk.front());
    return walk;
}

inline bool is_closed_walk(const DebruijnGraph& g,
                           const std::vector<int>& walk) {
    if (walk.size() < 2 || walk.front() != walk.back()) return false;
    for (size_t i = 0; i + 1 < walk.size(); ++i) {
        const auto& outs = g.out_edges[walk[i]];
        if (std::find(outs.begin(), outs.end(), walk[i + 1]) == outs.end())
            return false;
    }
    return true;
}

}  // namespace optlcl
