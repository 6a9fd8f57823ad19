#include <algorithm>
#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "optlcl/catalog.hpp"
#include "optlcl/debruijn.hpp"

using namespace optlcl;

namespace {

int node_of(const DebruijnGraph& g, const std::vector<const char*>& labels) {
    std::vector<int> t;
    for (const char* l : labels) t.push_back(g.problem.label_id(l));
    return g.tuple_node[g.problem.tuple_index(t)];
}

int count_edges(const DebruijnGraph& g) {
    int e = 0;
    for (const auto& out : g.out_edges) e += static_cast<int>(out.size());
    return e;
}

}  // namespace

TEST_CASE("independent-set graph has three windows and five shifts") {
    DebruijnGraph g = build_graph(builtin_example("max-independent-set"));
    REQUIRE(g.num_nodes() == 3);
    CHECK(g.gamma == 4);
    CHECK(count_edges(g) == 5);
    int n00 = node_of(g, {"0", "0"});
    int n01 = node_of(g, {"0", "1"});
    int n10 = node_of(g, {"1", "0"});
    REQUIRE(n00 >= 0);
    REQUIRE(n01 >= 0);
    REQUIRE(n10 >= 0);
    CHECK(g.node_self_loop[n00]);
    CHECK_FALSE(g.node_self_loop[n01]);
    auto has_edge = [&](int u, int v) {
        const auto& out = g.out_edges[u];
        return std::find(out.begin(), out.end(), v) != out.end();
    };
    CHECK(has_edge(n00, n00));
    CHECK(has_edge(n00, n01));
    CHECK(has_edge(n01, n10));
    CHECK(has_edge(n10, n00));
    CHECK(has_edge(n10, n01));
    CHECK_FALSE(has_edge(n01, n01));
    CHECK(g.num_sccs == 1);
}

TEST_CASE("closed walk lengths collect per-node cycle lengths") {
    DebruijnGraph g = build_graph(builtin_example("max-independent-set"));
    int n00 = node_of(g, {"0", "0"});
    int n01 = node_of(g, {"0", "1"});
    CHECK(closed_walk_lengths(g, g.full_mask(), n00, 5) ==
          std::vector<int>{1, 2, 3, 4, 5});
    CHECK(closed_walk_lengths(g, g.full_mask(), n01, 5) ==
          std::vector<int>{2, 3, 4, 5});
    CHECK(is_flexible_node(g, g.full_mask(), n00));
    CHECK(is_flexible_node(g, g.full_mask(), n01));
}

TEST_CASE("radius zero gives the complete shift graph") {
    OptLcl p = parse_problem(
        "alphabet: a b\nradius: 0\nobjective: min\naggregation: sum\n"
        "cost a = 1\ncost b = 2\n",
        "t");
    DebruijnGraph g = build_graph(p);
    CHECK(g.num_nodes() == 2);
    CHECK(count_edges(g) == 4);
    CHECK(g.node_self_loop[0]);
    CHECK(g.node_self_loop[1]);
}

TEST_CASE("coloring graph splits thresholds but stays one component") {
    DebruijnGraph g = build_graph(builtin_example("min-vertex-coloring"));
    CHECK(g.num_nodes() == 6);
    CHECK(g.num_sccs == 1);
    int n12 = node_of(g, {"1", "2"});
    auto lens = closed_walk_lengths(g, g.full_mask(), n12, 3);
    CHECK(lens == std::vector<int>{2, 3});
}

TEST_CASE("views: flexible needs coprime lengths, gap needs a self-loop") {
    DebruijnGraph mis = build_graph(builtin_example("max-independent-set"));
    SubgraphViews v = subgraph_views(mis);
    CHECK(v.opt == mis.full_mask());
    CHECK(v.flex == mis.full_mask());
    CHECK(v.gap == mis.full_mask());
    int loops = 0;
    for (char c : v.self_loops) loops += c;
    CHECK(loops == 1);

    // The two-palette problem: {b,w} alternation is rigid (even lengths
    // only), the {1,2,3} palette is flexible, no self-loop anywhere.
    OptLcl p = parse_problem(
        "alphabet: b w 1 2 3\nradius: 1\nobjective: min\naggregation: sum\n"
        "cost b w = 1\ncost w b = 1\ncost 1 2 = 2\ncost 2 1 = 2\n"
        "cost 2 3 = 2\ncost 3 2 = 2\ncost 1 3 = 2\ncost 3 1 = 2\n"
        "default = bot\n",
        "two-palettes");
    DebruijnGraph g = build_graph(p);
    SubgraphViews w = subgraph_views(g);
    int flex_nodes = 0, gap_nodes = 0;
    for (char c : w.flex) flex_nodes += c;
    for (char c : w.gap) gap_nodes += c;
    CHECK(flex_nodes == 6);  // the {1,2,3} pairs only
    CHECK(gap_nodes == 0);   // no self-loop in any flexible component
    int nbw = node_of(g, {"b", "w"});
    CHECK_FALSE(is_flexible_node(g, g.full_mask(), nbw));
}

TEST_CASE("walks and labelings are two views of the same cycle") {
    DebruijnGraph g = build_graph(builtin_example("max-independent-set"));
    int n01 = node_of(g, {"0", "1"});
    int n10 = node_of(g, {"1", "0"});
    std::vector<int> walk{n01, n10, n01};
    std::vector<int> labels = walk_to_labels(g, walk);
    CHECK(labels == std::vector<int>{0, 1});
    auto back = labels_to_walk(g, labels);
    REQUIRE(back.has_value());
    CHECK(*back == walk);

    // A labeling with a forbidden window has no walk.
    CHECK_FALSE(labels_to_walk(g, {1, 1}).has_value());
    CHECK_THROWS(walk_to_labels(g, {n01, n10}));
}

TEST_CASE("random problems: closed walks of length n match valid labelings") {
    std::mt19937_64 rng(20240811);
    int checked = 0;
    for (int iter = 0; iter < 60; ++iter) {
        OptLcl p = testutil::random_problem(rng);
        DebruijnGraph g = build_graph(p);
        if (g.num_nodes() == 0) continue;
        for (int n = 1; n <= 5; ++n) {
            std::vector<int> labels = testutil::random_labels(rng, p, n);
            auto walk = labels_to_walk(g, labels);
            bool valid = true;
            for (int i = 0; i < n && valid; ++i) {
                std::vector<int> t;
                for (int j = 0; j <= p.radius; ++j)
                    t.push_back(labels[(i + j) % n]);
                if (!p.cost_of_tuple(t)) valid = false;
            }
            CHECK(walk.has_value() == valid);
            if (walk) {
                CHECK(is_closed_walk(g, *walk));
                CHECK(walk_to_labels(g, *walk) == labels);
                ++checked;
            }
        }
    }
    CHECK(checked > 50);
}
