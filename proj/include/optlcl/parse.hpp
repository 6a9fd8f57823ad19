#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "optlcl/problem.hpp"

namespace optlcl {

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

namespace detail {
inline std::vector<std::string> tokenize(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}
}  // namespace detail

// Parses the line-oriented problem format:
//   alphabet: <label>...          (distinct, whitespace-free labels)
//   radius: <non-negative int>
//   objective: min|max
//   aggregation: sum|min|max
//   cost <label>{radius+1} = <rational>|bot
//   default = <rational>|bot      (fills unlisted tuples; at most once)
// '#' starts a comment; blank lines are ignored. Costs must be
// non-negative; (min,min) and (max,max) are rejected.
inline OptLcl parse_problem(const std::string& text, const std::string& name = "") {
    OptLcl p;
    p.name = name;
    bool have_alphabet = false, have_radius = false, have_obj = false, have_aggr = false;
    std::optional<CostValue> default_cost;
    int default_line = 0;
    struct PendingCost {
        long long index;
        int line;
    };
    std::vector<std::pair<PendingCost, CostValue>> entries;
    std::unordered_set<long long> seen;

    auto parse_cost_value = [](const std::string& tok, int line) -> CostValue {
        if (tok == "bot") return std::nullopt;
        auto r = parse_rational(tok);
        if (!r) throw ParseError(line, "malformed cost value '" + tok + "'");
        if (r->is_negative()) throw ParseError(line, "negative cost '" + tok + "'");
        return *r;
    };

    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw = raw.substr(0, hash);
        auto toks = detail::tokenize(raw);
        if (toks.empty()) continue;

        if (toks[0] == "alphabet:") {
            if (have_alphabet) throw ParseError(lineno, "duplicate alphabet directive");
            if (toks.size() < 2) throw ParseError(lineno, "alphabet needs at least one label");
            std::unordered_set<std::string> uniq;
            for (size_t i = 1; i < toks.size(); ++i) {
                if (!uniq.insert(toks[i]).second)
                    throw ParseError(lineno, "duplicate label '" + toks[i] + "'");
                p.labels.push_back(toks[i]);
            }
            have_alphabet = true;
        } else if (toks[0] == "radius:") {
            if (have_radius) throw ParseError(lineno, "duplicate radius directive");
            if (toks.size() != 2) throw ParseError(lineno, "radius needs one integer");
            try {
                p.radius = std::stoi(toks[1]);
            } catch (const std::exception&) {
                throw ParseError(lineno, "malformed radius '" + toks[1] + "'");
            }
            if (p.radius < 0) throw ParseError(lineno, "radius must be non-negative");
            have_radius = true;
        } else if (toks[0] == "objective:") {
            if (toks.size() != 2 || (toks[1] != "min" && toks[1] != "max"))
                throw ParseError(lineno, "objective must be min or max");
            p.objective = toks[1] == "min" ? Objective::Min : Objective::Max;
            have_obj = true;
        } else if (toks[0] == "aggregation:") {
            if (toks.size() != 2 || (toks[1] != "sum" && toks[1] != "min" && toks[1] != "max"))
                throw ParseError(lineno, "aggregation must be sum, min or max");
            p.aggregation = toks[1] == "sum"    ? Aggregation::Sum
                            : toks[1] == "min" ? Aggregation::Min
                                               : Aggregation::Max;
            have_aggr = true;
        } else if (toks[0] == "cost") {
            if (!have_alphabet || !have_radius)
                throw ParseError(lineno, "cost line before alphabet/radius");
            int arity = p.window_width();
            if ((int)toks.size() != 1 + arity + 2 || toks[1 + arity] != "=")
                throw ParseError(lineno, "cost line needs " + std::to_string(arity) +
                                             " labels, '=', and one value");
            std::vector<int> tuple;
            for (int i = 0; i < arity; ++i) {
                int id = p.label_id(toks[1 + i]);
                if (id < 0) throw ParseError(lineno, "unknown label '" + toks[1 + i] + "'");
                tuple.push_back(id);
            }
            long long idx = p.tuple_index(tuple);
            if (!seen.insert(idx).second)
                throw ParseError(lineno, "duplicate cost entry for tuple");
            entries.push_back({{idx, lineno}, parse_cost_value(toks[1 + arity + 1], lineno)});
        } else if (toks[0] == "default") {
            if (toks.size() != 3 || toks[1] != "=")
                throw ParseError(lineno, "default line needs '=' and one value");
            if (default_cost) throw ParseError(lineno, "duplicate default directive");
            default_cost = parse_cost_value(toks[2], lineno);
            default_line = lineno;
        } else {
            throw ParseError(lineno, "unknown directive '" + toks[0] + "'");
        }
    }

    if (!have_alphabet) throw ParseError(lineno, "missing alphabet directive");
    if (!have_radius) throw ParseError(lineno, "missing radius directive");
    if (!have_obj) throw ParseError(lineno, "missing objective directive");
    if (!have_aggr) throw ParseError(lineno, "missing aggregation directive");
    if (p.objective == Objective::Min && p.aggregation == Aggregation::Min)
        throw ParseError(lineno, "unsupported combination (min,min)");
    if (p.objective == Objective::Max && p.aggregation == Aggregation::Max)
        throw ParseError(lineno, "unsupported combination (max,max)");

    long long gamma = p.gamma();
    if (gamma > 2'000'000)
        throw ParseError(lineno, "tuple space too large (|alphabet|^(radius+1) > 2e6)");
    (void)default_line;
    p.costs.assign((size_t)gamma, std::nullopt);
    std::vector<bool> filled((size_t)gamma, false);
    for (const auto& [pc, val] : entries) {
        p.costs[(size_t)pc.index] = val;
        filled[(size_t)pc.index] = true;
    }
    if (default_cost) {
        for (long long i = 0; i < gamma; ++i)
            if (!filled[(size_t)i]) p.costs[(size_t)i] = *default_cost;
    } else {
        for (long long i = 0; i < gamma; ++i)
            if (!filled[(size_t)i])
                throw ParseError(lineno, "no cost for tuple (" + p.tuple_to_string(i) +
                                             ") and no default given");
    }
    return p;
}

inline OptLcl parse_problem_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open problem file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    std::string base = path;
    auto slash = base.find_last_of('/');
    if (slash != std::string::npos) base = base.substr(slash + 1);
    return parse_problem(buf.str(), base);
}

}  // namespace optlcl
