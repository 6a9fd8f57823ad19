#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "optlcl/parse.hpp"
#include "optlcl/problem.hpp"

namespace optlcl {

// Built-in problem catalog. Each entry is stored as problem-file text and
// goes through the regular parser, so the catalog doubles as a parser
// fixture. Window order is node label first, then successors.

inline const std::vector<std::pair<std::string, std::string>>& builtin_sources() {
    static const std::vector<std::pair<std::string, std::string>> sources = {
        {"max-independent-set",
         "# utility 1 for each selected node; selected nodes may not be adjacent\n"
         "alphabet: 0 1\n"
         "radius: 1\n"
         "objective: max\n"
         "aggregation: sum\n"
         "cost 0 0 = 0\n"
         "cost 0 1 = 0\n"
         "cost 1 0 = 1\n"
         "cost 1 1 = bot\n"},
        {"min-dominating-set",
         "# cost 1 per selected node; every node sees a selected node within 2 hops\n"
         "alphabet: 0 1\n"
         "radius: 2\n"
         "objective: min\n"
         "aggregation: sum\n"
         "cost 0 0 0 = bot\n"
         "cost 0 0 1 = 0\n"
         "cost 0 1 0 = 0\n"
         "cost 0 1 1 = 0\n"
         "cost 1 0 0 = 1\n"
         "cost 1 0 1 = 1\n"
         "cost 1 1 0 = 1\n"
         "cost 1 1 1 = 1\n"},
        {"min-vertex-coloring",
         "# proper coloring; minimize the largest color used\n"
         "alphabet: 1 2 3\n"
         "radius: 1\n"
         "objective: min\n"
         "aggregation: max\n"
         "cost 1 1 = bot\n"
         "cost 1 2 = 1\n"
         "cost 1 3 = 1\n"
         "cost 2 1 = 2\n"
         "cost 2 2 = bot\n"
         "cost 2 3 = 2\n"
         "cost 3 1 = 3\n"
         "cost 3 2 = 3\n"
         "cost 3 3 = bot\n"},
        {"max-domatic-partition",
         "# labels pick a k-partition of which every class dominates; maximize k\n"
         "alphabet: a1 a2 b2 a3 b3 c3\n"
         "radius: 2\n"
         "objective: max\n"
         "aggregation: min\n"
         "cost a1 a1 a1 = 1\n"
         "cost a2 a2 b2 = 2\n"
         "cost a2 b2 a2 = 2\n"
         "cost a2 b2 b2 = 2\n"
         "cost b2 a2 a2 = 2\n"
         "cost b2 a2 b2 = 2\n"
         "cost b2 b2 a2 = 2\n"
         "cost a3 b3 c3 = 3\n"
         "cost a3 c3 b3 = 3\n"
         "cost b3 a3 c3 = 3\n"
         "cost b3 c3 a3 = 3\n"
         "cost c3 a3 b3 = 3\n"
         "cost c3 b3 a3 = 3\n"
         "default = bot\n"},
        {"sloppy-coloring",
         "# three palettes at different prices: {b,w} at 1, {1,2,3} at 2,\n"
         "# {a,b2,c} at 3 with the double-booked aa at 100\n"
         "alphabet: b w 1 2 3 a b2 c\n"
         "radius: 1\n"
         "objective: min\n"
         "aggregation: sum\n"
         "cost b w = 1\n"
         "cost w b = 1\n"
         "cost 1 2 = 2\n"
         "cost 2 1 = 2\n"
         "cost 2 3 = 2\n"
         "cost 3 2 = 2\n"
         "cost 1 3 = 2\n"
         "cost 3 1 = 2\n"
         "cost a b2 = 3\n"
         "cost b2 a = 3\n"
         "cost b2 c = 3\n"
         "cost c b2 = 3\n"
         "cost a c = 3\n"
         "cost c a = 3\n"
         "cost a a = 100\n"
         "default = bot\n"},
    };
    return sources;
}

inline std::vector<std::string> builtin_names() {
    std::vector<std::string> names;
    for (const auto& [name, _] : builtin_sources()) names.push_back(name);
    return names;
}

inline OptLcl builtin_example(const std::string& name) {
    for (const auto& [n, text] : builtin_sources())
        if (n == name) return parse_problem(text, n);
    throw std::runtime_error("unknown built-in example: " + name);
}

inline std::vector<OptLcl> builtin_examples() {
    std::vector<OptLcl> out;
    for (const auto& [n, text] : builtin_sources()) out.push_back(parse_problem(text, n));
    return out;
}

}  // namespace optlcl
