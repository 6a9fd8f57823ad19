// Command-line front end: parse -> parameters -> classify -> synthesize ->
// simulate -> verify, plus catalog listing and table reproduction.
//
// Output is plain text (key = value lines) or CSV; --json emits one JSON
// object per report with the same field names.  Field names are the
// compatibility contract, so add keys rather than renaming them.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "optlcl/catalog.hpp"
#include "optlcl/classify.hpp"
#include "optlcl/parse.hpp"
#include "optlcl/simulator.hpp"
#include "optlcl/synthesis.hpp"
#include "optlcl/verify.hpp"

using nlohmann::ordered_json;
using namespace optlcl;

namespace {

// Key/value report that renders as text lines or one JSON object.
struct Report {
    bool as_json = false;
    ordered_json obj = ordered_json::object();
    std::string text;

    void put(const std::string& key, const ordered_json& jval,
             const std::string& tval) {
        obj[key] = jval;
        text += key + " = " + tval + "\n";
    }
    void put(const std::string& key, const std::string& v) {
        put(key, ordered_json(v), v);
    }
    void put(const std::string& key, long long v) {
        put(key, ordered_json(v), std::to_string(v));
    }
    void put(const std::string& key, bool v) {
        put(key, ordered_json(v), v ? "true" : "false");
    }
    void put_quoted(const std::string& key, const std::string& v) {
        obj[key] = v;
        text += key + " = \"" + v + "\"\n";
    }
    void print() const {
        if (as_json)
            std::cout << obj.dump(2) << "\n";
        else
            std::cout << text;
    }
};

bool all_single_char(const OptLcl& p) {
    for (const auto& l : p.labels)
        if (l.size() != 1) return false;
    return true;
}

// Label strings concatenate when unambiguous, otherwise space-separate.
std::string join_labels(const OptLcl& p, const std::vector<int>& labels) {
    std::string sep = all_single_char(p) ? "" : " ";
    std::string s;
    for (size_t i = 0; i < labels.size(); ++i) {
        if (i) s += sep;
        s += p.labels[labels[i]];
    }
    return s;
}

std::string node_name(const DebruijnGraph& g, int v) {
    const char* sep = all_single_char(g.problem) ? "" : " ";
    return g.problem.tuple_to_string(g.node_tuple[v], sep);
}

std::string fmt_param(const std::optional<CostValue>& v) {
    if (!v) return "unset";
    return to_string(*v);
}

ordered_json json_param(const std::optional<CostValue>& v) {
    if (!v) return nullptr;
    return to_string(*v);
}

std::string fmt_opt_bool(const std::optional<bool>& v) {
    if (!v) return "unset";
    return *v ? "true" : "false";
}

ordered_json json_opt_bool(const std::optional<bool>& v) {
    if (!v) return nullptr;
    return *v;
}

std::string fmt_double(double v) {
    std::ostringstream out;
    out.precision(6);
    out << v;
    return out.str();
}

std::string display_strategy(Strategy s) {
    switch (s) {
        case Strategy::ConstantSolution: return "Constant solution";
        case Strategy::ConstantFragment: return "Constant fragment";
        case Strategy::Flexible: return "Flexible";
        case Strategy::Optimal: return "Optimal";
        default: return "Unsolvable";
    }
}

struct ProblemArgs {
    std::string example;
    std::string file;
};

void add_problem_args(CLI::App* sub, ProblemArgs& args) {
    sub->add_option("--example", args.example, "built-in catalog problem");
    sub->add_option("--file", args.file, "problem description file");
}

OptLcl load_problem(const ProblemArgs& args) {
    if (args.example.empty() == args.file.empty())
        throw std::runtime_error("give exactly one of --example or --file");
    if (!args.example.empty()) return builtin_example(args.example);
    return parse_problem_file(args.file);
}

Rational parse_alpha(const std::string& s) {
    auto r = parse_rational(s);
    if (!r) throw std::runtime_error("alpha must be a rational like 3/2");
    if (*r < Rational{1, 1}) throw std::runtime_error("alpha must be >= 1");
    return *r;
}

struct NRange {
    long long lo = 0;
    long long hi = 0;
    bool is_range = false;
};

NRange parse_n_range(const std::string& s) {
    NRange r;
    auto pos = s.find("..");
    try {
        if (pos == std::string::npos) {
            r.lo = r.hi = std::stoll(s);
        } else {
            r.lo = std::stoll(s.substr(0, pos));
            r.hi = std::stoll(s.substr(pos + 2));
            r.is_range = true;
        }
    } catch (const std::exception&) {
        throw std::runtime_error("bad --n value: " + s);
    }
    if (r.lo < 1 || r.hi < r.lo)
        throw std::runtime_error("n range must satisfy 1 <= lo <= hi");
    return r;
}

struct Pipeline {
    OptLcl problem;
    DebruijnGraph graph;
    ProblemParameters params;
};

Pipeline make_pipeline(const ProblemArgs& args) {
    Pipeline p;
    p.problem = load_problem(args);
    p.graph = build_graph(p.problem);
    p.params = compute_parameters(p.graph);
    return p;
}

void put_parameters(Report& rep, const ProblemParameters& params) {
    rep.put("beta_opt", json_param(params.beta_opt),
            fmt_param(params.beta_opt));
    rep.put("beta_flex", json_param(params.beta_flex),
            fmt_param(params.beta_flex));
    rep.put("delta_flex", json_opt_bool(params.delta_flex),
            fmt_opt_bool(params.delta_flex));
    rep.put("beta_gap", json_param(params.beta_gap), fmt_param(params.beta_gap));
    rep.put("delta_gap", json_opt_bool(params.delta_gap),
            fmt_opt_bool(params.delta_gap));
    rep.put("beta_const", json_param(params.beta_const),
            fmt_param(params.beta_const));
    rep.put("beta_coprime", json_param(params.beta_coprime),
            fmt_param(params.beta_coprime));
}

int cmd_params(const ProblemArgs& args, bool witness, bool as_json) {
    Pipeline p = make_pipeline(args);
    Report rep;
    rep.as_json = as_json;
    rep.put("problem", p.problem.name);
    rep.put("objective", to_string(p.problem.objective));
    rep.put("aggregation", to_string(p.problem.aggregation));
    rep.put("radius", static_cast<long long>(p.problem.radius));
    rep.put("gamma", p.graph.gamma);
    rep.put("nodes", static_cast<long long>(p.graph.num_nodes()));
    put_parameters(rep, p.params);
    if (witness) {
        auto put_walk = [&](const char* key,
                            const std::optional<std::vector<int>>& walk) {
            if (!walk) return;
            rep.put(key, join_labels(p.problem, walk_to_labels(p.graph, *walk)));
        };
        put_walk("beta_opt_witness", p.params.opt_walk);
        put_walk("beta_flex_witness", p.params.flex_walk);
        put_walk("beta_gap_witness", p.params.gap_walk);
        put_walk("beta_const_witness", p.params.const_walk);
        auto put_pair = [&](const char* key,
                            const std::optional<CoprimePair>& pair) {
            if (!pair) return;
            std::string v = "node=" + node_name(p.graph, pair->node) +
                            " k1=" + std::to_string(pair->k1) +
                            " k2=" + std::to_string(pair->k2);
            ordered_json j{{"node", node_name(p.graph, pair->node)},
                           {"k1", pair->k1},
                           {"k2", pair->k2}};
            rep.put(key, j, v);
        };
        put_pair("exact_pair", p.params.exact_pair);
        put_pair("coprime_pair", p.params.coprime_pair);
    }
    rep.print();
    return 0;
}

void put_classification(Report& rep, const Classification& cls) {
    rep.put("class", std::string(1, class_letter(cls.cls)));
    rep.put("strategy", strategy_name(cls.strategy));
    rep.put("det", det_complexity(cls.cls));
    rep.put("rand", rand_complexity(cls.cls));
    rep.put_quoted("matched", cls.matched_condition);
    rep.put_quoted("note", cls.note);
}

int cmd_classify(const ProblemArgs& args, const std::string& alpha_str,
                 bool as_json) {
    Pipeline p = make_pipeline(args);
    Rational alpha = parse_alpha(alpha_str);
    Classification cls = classify(p.problem, p.params, alpha);
    Report rep;
    rep.as_json = as_json;
    rep.put("problem", p.problem.name);
    rep.put("alpha", to_string(alpha));
    put_classification(rep, cls);
    rep.print();
    return 0;
}

int cmd_thresholds(const ProblemArgs& args, const std::string& format,
                   bool as_json) {
    Pipeline p = make_pipeline(args);
    ThresholdReport rep = threshold_report(p.problem, p.params);
    if (as_json) {
        ordered_json out;
        out["problem"] = p.problem.name;
        out["degenerate"] = rep.degenerate;
        out["intervals"] = ordered_json::array();
        for (const auto& iv : rep.intervals)
            out["intervals"].push_back(
                {{"interval", iv.to_string()},
                 {"class", std::string(1, class_letter(iv.cls.cls))},
                 {"strategy", strategy_name(iv.cls.strategy)}});
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    if (format == "csv") {
        std::cout << "interval,class,strategy\n";
        for (const auto& iv : rep.intervals)
            std::cout << iv.to_string() << "," << class_letter(iv.cls.cls)
                      << "," << strategy_name(iv.cls.strategy) << "\n";
        return 0;
    }
    std::cout << "problem = " << p.problem.name << "\n";
    for (const auto& iv : rep.intervals)
        std::cout << iv.to_string() << " class " << class_letter(iv.cls.cls)
                  << " " << strategy_name(iv.cls.strategy) << "\n";
    return 0;
}

void put_plan(Report& rep, const Pipeline& p, const SynthesisPlan& plan) {
    rep.put("strategy", strategy_name(plan.strategy));
    rep.put("beta_target", to_string(plan.beta_target));
    if (plan.loop_node)
        rep.put("loop", node_name(p.graph, *plan.loop_node));
    if (plan.anchor) {
        rep.put("anchor", node_name(p.graph, *plan.anchor));
        rep.put("level", static_cast<long long>(plan.level));
        rep.put("a_min", plan.a_min);
        rep.put("b_max", plan.b_max);
        rep.put("gap_walks", static_cast<long long>(plan.gap_walks.size()));
        rep.put("c_slack", to_string(plan.c_slack));
        rep.put("n0", plan.n0);
    }
    if (plan.strategy == Strategy::ConstantFragment) {
        rep.put("conn_in", join_labels(p.problem, plan.conn_in));
        rep.put("conn_out", join_labels(p.problem, plan.conn_out));
        rep.put("mark_prob_inv", plan.mark_prob_inv);
        rep.put("long_cut", plan.long_cut);
    }
}

int cmd_synthesize(const ProblemArgs& args, const std::string& alpha_str,
                   const std::string& out_path, bool as_json) {
    Pipeline p = make_pipeline(args);
    Rational alpha = parse_alpha(alpha_str);
    Classification cls = classify(p.problem, p.params, alpha);
    if (cls.strategy == Strategy::None)
        throw std::runtime_error("unsolvable at alpha = " + to_string(alpha) +
                                 ": nothing to synthesize");
    SynthesisPlan plan = synthesize(p.graph, p.params, alpha, cls);
    Report rep;
    rep.as_json = as_json;
    rep.put("problem", p.problem.name);
    rep.put("alpha", to_string(alpha));
    rep.put("class", std::string(1, class_letter(cls.cls)));
    put_plan(rep, p, plan);
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot write plan file: " + out_path);
        out << dump_plan(p.graph, plan);
        rep.put("plan_file", out_path);
    }
    rep.print();
    return 0;
}

IdPolicy parse_ids(const std::string& s) {
    return s == "adversarial" ? IdPolicy::AdversarialBlocks
                              : IdPolicy::RandomPermutation;
}

Model parse_model(const std::string& s) {
    return s == "rand" ? Model::Rand : Model::Det;
}

SynthesisPlan plan_for_run(const Pipeline& p, const Rational& alpha,
                           const Classification& cls,
                           const std::string& plan_path) {
    if (plan_path.empty()) {
        if (cls.strategy == Strategy::None)
            throw std::runtime_error("unsolvable at alpha = " +
                                     to_string(alpha) + ": no algorithm");
        return synthesize(p.graph, p.params, alpha, cls);
    }
    std::ifstream in(plan_path);
    if (!in) throw std::runtime_error("cannot open plan file: " + plan_path);
    std::stringstream buf;
    buf << in.rdbuf();
    return load_plan(p.graph, buf.str());
}

int cmd_run(const ProblemArgs& args, const std::string& alpha_str, long long n,
            const std::string& model_str, uint64_t seed,
            const std::string& ids_str, const std::string& plan_path,
            bool as_json) {
    Pipeline p = make_pipeline(args);
    Rational alpha = parse_alpha(alpha_str);
    Classification cls = classify(p.problem, p.params, alpha);
    SynthesisPlan plan = plan_for_run(p, alpha, cls, plan_path);
    Model model = parse_model(model_str);
    if (n < 1) throw std::runtime_error("n must be >= 1");
    if (n > 2'000'000) throw std::runtime_error("n too large for simulation");
    CycleInstance inst =
        assign_ids(static_cast<int>(n), seed, parse_ids(ids_str));
    RunResult r = run_plan(p.graph, plan, model, inst, seed);

    Report rep;
    rep.as_json = as_json;
    rep.put("problem", p.problem.name);
    rep.put("alpha", to_string(alpha));
    rep.put("n", n);
    rep.put("model", model_str);
    rep.put("seed", static_cast<long long>(seed));
    rep.put("ids", ids_str);
    rep.put("class", std::string(1, class_letter(cls.cls)));
    rep.put("strategy", r.strategy);
    rep.put("declared_locality", static_cast<long long>(r.declared_locality));
    rep.put("measured_locality", static_cast<long long>(r.measured_locality));
    rep.put("saturated", r.saturated);
    rep.put("fallback", r.fallback);
    rep.put("unsatisfiable", r.unsat);
    bool ok = true;
    if (r.unsat) {
        rep.put("value", ordered_json(nullptr), "bot");
        rep.put("opt", ordered_json(nullptr), "bot");
        rep.put("ratio", ordered_json(nullptr), "unset");
        rep.put("valid", false);
        rep.put("alpha_ok", true);  // vacuous: no labeling exists at this n
    } else {
        Evaluation e = evaluate(p.graph, alpha, r.labeling);
        rep.put("value", json_param(std::make_optional(e.value)),
                to_string(e.value));
        rep.put("opt", json_param(std::make_optional(e.opt)), to_string(e.opt));
        if (e.ratio)
            rep.put("ratio", to_string(*e.ratio));
        else
            rep.put("ratio", ordered_json(nullptr), "unset");
        rep.put("valid", e.valid);
        ok = e.alpha_ok.value_or(false);
        rep.put("alpha_ok", ok);
    }
    rep.print();
    bool randomized_run =
        plan.strategy == Strategy::ConstantFragment && model == Model::Rand;
    if (!ok && !randomized_run) return 1;
    return 0;
}

int cmd_sweep(const ProblemArgs& args, const std::string& alpha_str,
              const std::string& n_str, long long step, long long seeds,
              const std::string& model_str, const std::string& ids_str,
              bool as_json) {
    Pipeline p = make_pipeline(args);
    Rational alpha = parse_alpha(alpha_str);
    Classification cls = classify(p.problem, p.params, alpha);
    if (cls.strategy == Strategy::None)
        throw std::runtime_error("unsolvable at alpha = " + to_string(alpha) +
                                 ": no algorithm");
    SynthesisPlan plan = synthesize(p.graph, p.params, alpha, cls);
    Model model = parse_model(model_str);
    IdPolicy policy = parse_ids(ids_str);
    NRange range = parse_n_range(n_str);
    if (seeds < 1) throw std::runtime_error("--seeds must be >= 1");
    if (range.hi > 2'000'000)
        throw std::runtime_error("n too large for simulation");

    // Default grid: at most 25 points, endpoints included.
    if (step <= 0) step = std::max<long long>(1, (range.hi - range.lo) / 24);
    std::vector<long long> ns;
    for (long long n = range.lo; n <= range.hi; n += step) ns.push_back(n);
    if (ns.back() != range.hi) ns.push_back(range.hi);

    bool minimize = p.problem.objective == Objective::Min;
    long long ok_count = 0, total = 0;
    ordered_json rows = ordered_json::array();
    std::ostringstream csv;
    csv << "n,seed,strategy,locality,value,opt,ratio,valid\n";
    for (long long n : ns) {
        CostValue opt = opt_dp(p.graph, static_cast<int>(n));
        for (long long seed = 1; seed <= seeds; ++seed) {
            CycleInstance inst = assign_ids(static_cast<int>(n),
                                            static_cast<uint64_t>(seed), policy);
            RunResult r = run_plan(p.graph, plan, model, inst,
                                   static_cast<uint64_t>(seed));
            CostValue value = r.unsat
                                  ? CostValue{}
                                  : solution_value(p.problem, r.labeling);
            bool valid = value.has_value();
            bool ok;
            std::string ratio_str;
            double ratio_num = 0.0;
            bool has_ratio = false;
            if (r.unsat) {
                ok = true;  // vacuous: nothing to approximate
            } else if (!valid || !opt) {
                ok = false;
            } else {
                ok = within_alpha(p.problem, alpha, *opt, *value);
                double v = to_double(*value), o = to_double(*opt);
                double num = minimize ? v : o, den = minimize ? o : v;
                if (den != 0.0) {
                    ratio_num = num / den;
                    has_ratio = true;
                } else if (num == 0.0) {
                    ratio_num = 1.0;
                    has_ratio = true;
                }
                if (has_ratio) ratio_str = fmt_double(ratio_num);
            }
            ++total;
            if (ok) ++ok_count;
            csv << n << "," << seed << "," << r.strategy << ","
                << r.measured_locality << "," << to_string(value) << ","
                << to_string(opt) << "," << ratio_str << ","
                << (valid ? "true" : "false") << "\n";
            if (as_json) {
                ordered_json row{{"n", n},
                                 {"seed", seed},
                                 {"strategy", r.strategy},
                                 {"locality", r.measured_locality},
                                 {"value", to_string(value)},
                                 {"opt", to_string(opt)},
                                 {"valid", valid},
                                 {"alpha_ok", ok}};
                row["ratio"] = has_ratio ? ordered_json(ratio_num)
                                         : ordered_json(nullptr);
                rows.push_back(row);
            }
        }
    }
    double fraction = total ? static_cast<double>(ok_count) / total : 1.0;
    if (as_json) {
        ordered_json out;
        out["problem"] = p.problem.name;
        out["alpha"] = to_string(alpha);
        out["model"] = model_str;
        out["rows"] = rows;
        out["runs"] = total;
        out["alpha_ok_runs"] = ok_count;
        out["alpha_ok_fraction"] = fraction;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << csv.str();
        std::cout << "# alpha_ok " << fmt_double(fraction) << " (" << ok_count
                  << "/" << total << ")\n";
    }
    bool randomized_run =
        plan.strategy == Strategy::ConstantFragment && model == Model::Rand;
    if (!randomized_run && ok_count != total) return 1;
    return 0;
}

int cmd_oracle(const ProblemArgs& args, const std::string& n_str, bool witness,
               const std::string& format, bool as_json) {
    Pipeline p = make_pipeline(args);
    NRange range = parse_n_range(n_str);
    if (range.hi > 2'000'000) throw std::runtime_error("n too large");

    auto row = [&](long long n) {
        CostValue opt = opt_dp(p.graph, static_cast<int>(n));
        std::string wit;
        if (witness && opt) {
            auto labels = opt_labeling(p.graph, static_cast<int>(n));
            if (labels) wit = join_labels(p.problem, *labels);
        }
        return std::make_pair(opt, wit);
    };

    if (!range.is_range && format != "csv") {
        auto [opt, wit] = row(range.lo);
        Report rep;
        rep.as_json = as_json;
        rep.put("problem", p.problem.name);
        rep.put("n", range.lo);
        rep.put("opt", json_param(std::make_optional(opt)), to_string(opt));
        if (!opt) rep.put("unsatisfiable", true);
        if (witness && opt) rep.put("witness", wit);
        rep.print();
        return 0;
    }
    ordered_json rows = ordered_json::array();
    std::ostringstream csv;
    csv << (witness ? "n,opt,witness\n" : "n,opt\n");
    for (long long n = range.lo; n <= range.hi; ++n) {
        auto [opt, wit] = row(n);
        csv << n << "," << to_string(opt);
        if (witness) csv << "," << wit;
        csv << "\n";
        if (as_json) {
            ordered_json r{{"n", n}, {"opt", json_param(std::make_optional(opt))}};
            if (witness) r["witness"] = wit;
            rows.push_back(r);
        }
    }
    if (as_json) {
        ordered_json out;
        out["problem"] = p.problem.name;
        out["rows"] = rows;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << csv.str();
    }
    return 0;
}

int cmd_examples(const std::string& name, bool as_json) {
    if (!name.empty()) {
        OptLcl p = builtin_example(name);
        if (as_json) {
            ordered_json out{{"name", name}, {"source", serialize(p)}};
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << serialize(p);
        }
        return 0;
    }
    ordered_json rows = ordered_json::array();
    for (const auto& n : builtin_names()) {
        OptLcl p = builtin_example(n);
        std::string obj = to_string(p.objective);
        std::string aggr = to_string(p.aggregation);
        if (as_json) {
            rows.push_back({{"name", n},
                            {"objective", obj},
                            {"aggregation", aggr},
                            {"radius", p.radius},
                            {"labels", p.labels.size()}});
        } else {
            std::cout << n << " (" << obj << " " << aggr << ", radius "
                      << p.radius << ", " << p.labels.size() << " labels)\n";
        }
    }
    if (as_json) std::cout << rows.dump(2) << "\n";
    return 0;
}

std::string param_line(const ProblemParameters& params) {
    std::string s;
    s += "beta_opt=" + fmt_param(params.beta_opt);
    s += " beta_flex=" + fmt_param(params.beta_flex);
    s += " delta_flex=" + fmt_opt_bool(params.delta_flex);
    s += " beta_gap=" + fmt_param(params.beta_gap);
    s += " delta_gap=" + fmt_opt_bool(params.delta_gap);
    s += " beta_const=" + fmt_param(params.beta_const);
    s += " beta_coprime=" + fmt_param(params.beta_coprime);
    return s;
}

std::string threshold_line(const ThresholdReport& rep) {
    std::string s;
    for (size_t i = 0; i < rep.intervals.size(); ++i) {
        if (i) s += " | ";
        s += rep.intervals[i].to_string() + " " +
             display_strategy(rep.intervals[i].cls.strategy);
    }
    return s;
}

// Frozen expected table rows; `tables --check` is the golden surface.
const std::vector<std::pair<std::string, std::string>> kExpectedParams = {
    {"max-independent-set",
     "beta_opt=1/2 beta_flex=1/2 delta_flex=true beta_gap=1/2 delta_gap=true "
     "beta_const=0 beta_coprime=unset"},
    {"min-dominating-set",
     "beta_opt=1/3 beta_flex=1/3 delta_flex=true beta_gap=1/3 delta_gap=true "
     "beta_const=1 beta_coprime=unset"},
    {"min-vertex-coloring",
     "beta_opt=2 beta_flex=unset delta_flex=unset beta_gap=unset "
     "delta_gap=unset beta_const=bot beta_coprime=3"},
    {"max-domatic-partition",
     "beta_opt=3 beta_flex=unset delta_flex=unset beta_gap=unset "
     "delta_gap=unset beta_const=1 beta_coprime=2"},
    {"sloppy-coloring",
     "beta_opt=1 beta_flex=2 delta_flex=false beta_gap=3 delta_gap=true "
     "beta_const=100 beta_coprime=unset"},
};

const std::vector<std::pair<std::string, std::string>> kExpectedThresholds = {
    {"max-independent-set", "{1} Optimal | (1,inf) Constant fragment"},
    {"min-dominating-set",
     "{1} Optimal | (1,3) Constant fragment | [3,inf) Constant solution"},
    {"min-vertex-coloring", "[1,3/2) Optimal | [3/2,inf) Flexible"},
    {"max-domatic-partition",
     "[1,3/2) Optimal | [3/2,3) Flexible | [3,inf) Constant solution"},
    {"sloppy-coloring",
     "[1,2) Optimal | [2,3] Flexible | (3,100) Constant fragment | "
     "[100,inf) Constant solution"},
};

int cmd_tables(bool check, const std::string& format, bool as_json) {
    std::vector<std::pair<std::string, std::string>> actual_params;
    std::vector<std::pair<std::string, std::string>> actual_thresholds;
    std::vector<ThresholdReport> reports;
    for (const auto& name : builtin_names()) {
        ProblemArgs args;
        args.example = name;
        Pipeline p = make_pipeline(args);
        ThresholdReport rep = threshold_report(p.problem, p.params);
        actual_params.emplace_back(name, param_line(p.params));
        actual_thresholds.emplace_back(name, threshold_line(rep));
        reports.push_back(std::move(rep));
    }

    if (check) {
        int mismatches = 0;
        auto diff = [&](const char* table,
                        const std::vector<std::pair<std::string, std::string>>&
                            expected,
                        const std::vector<std::pair<std::string, std::string>>&
                            actual) {
            for (size_t i = 0; i < expected.size(); ++i) {
                if (i >= actual.size() || actual[i] != expected[i]) {
                    ++mismatches;
                    std::cout << "MISMATCH " << table << " "
                              << expected[i].first << "\n";
                    std::cout << "  expected: " << expected[i].second << "\n";
                    std::cout << "  actual:   "
                              << (i < actual.size() ? actual[i].second
                                                    : std::string("<missing>"))
                              << "\n";
                }
            }
        };
        diff("parameters", kExpectedParams, actual_params);
        diff("thresholds", kExpectedThresholds, actual_thresholds);
        if (mismatches == 0) {
            std::cout << "parameters check: ok\n";
            std::cout << "thresholds check: ok\n";
            return 0;
        }
        return 1;
    }

    if (as_json) {
        ordered_json out;
        out["parameters"] = ordered_json::array();
        for (const auto& [name, line] : actual_params)
            out["parameters"].push_back({{"example", name}, {"row", line}});
        out["thresholds"] = ordered_json::array();
        for (size_t i = 0; i < reports.size(); ++i) {
            ordered_json ivs = ordered_json::array();
            for (const auto& iv : reports[i].intervals)
                ivs.push_back({{"interval", iv.to_string()},
                               {"class", std::string(1, class_letter(iv.cls.cls))},
                               {"strategy", strategy_name(iv.cls.strategy)}});
            out["thresholds"].push_back(
                {{"example", actual_thresholds[i].first}, {"intervals", ivs}});
        }
        std::cout << out.dump(2) << "\n";
        return 0;
    }

    if (format == "csv") {
        std::cout << "example,interval,class,strategy\n";
        for (size_t i = 0; i < reports.size(); ++i)
            for (const auto& iv : reports[i].intervals)
                std::cout << actual_thresholds[i].first << ","
                          << iv.to_string() << "," << class_letter(iv.cls.cls)
                          << "," << strategy_name(iv.cls.strategy) << "\n";
        return 0;
    }

    std::cout << "parameters:\n";
    for (const auto& [name, line] : actual_params)
        std::cout << name << ": " << line << "\n";
    std::cout << "\nthresholds:\n";
    for (const auto& [name, line] : actual_thresholds)
        std::cout << name << ": " << line << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"opt LCL classifier, synthesizer, and simulator for directed cycles"};
    app.require_subcommand(1);

    ProblemArgs prob;
    std::string alpha_str, model_str = "det", ids_str = "random";
    std::string n_str, format = "text", out_path, plan_path, example_name;
    long long n_single = 0, seeds = 1, step = 0;
    uint64_t seed = 1;
    bool witness = false, as_json = false, check = false;

    auto* c_params = app.add_subcommand("params", "compute problem parameters");
    add_problem_args(c_params, prob);
    c_params->add_flag("--witness", witness, "include witness walks");
    c_params->add_flag("--json", as_json, "JSON output");

    auto* c_classify =
        app.add_subcommand("classify", "complexity class at a given alpha");
    add_problem_args(c_classify, prob);
    c_classify->add_option("--alpha", alpha_str, "approximation ratio p/q")
        ->required();
    c_classify->add_flag("--json", as_json, "JSON output");

    auto* c_thresholds =
        app.add_subcommand("thresholds", "class as a function of alpha");
    add_problem_args(c_thresholds, prob);
    c_thresholds->add_option("--format", format, "text|csv")
        ->check(CLI::IsMember({"text", "csv"}));
    c_thresholds->add_flag("--json", as_json, "JSON output");

    auto* c_synth =
        app.add_subcommand("synthesize", "build an algorithm plan");
    add_problem_args(c_synth, prob);
    c_synth->add_option("--alpha", alpha_str, "approximation ratio p/q")
        ->required();
    c_synth->add_option("--out", out_path, "write the plan to this file");
    c_synth->add_flag("--json", as_json, "JSON output");

    auto* c_run = app.add_subcommand("run", "simulate one cycle instance");
    add_problem_args(c_run, prob);
    c_run->add_option("--alpha", alpha_str, "approximation ratio p/q")
        ->required();
    c_run->add_option("--n", n_single, "cycle length")->required();
    c_run->add_option("--model", model_str, "det|rand")
        ->check(CLI::IsMember({"det", "rand"}));
    c_run->add_option("--seed", seed, "RNG seed");
    c_run->add_option("--ids", ids_str, "random|adversarial")
        ->check(CLI::IsMember({"random", "adversarial"}));
    c_run->add_option("--plan", plan_path, "replay a dumped plan file");
    c_run->add_flag("--json", as_json, "JSON output");

    auto* c_sweep = app.add_subcommand("sweep", "batch runs over n and seeds");
    add_problem_args(c_sweep, prob);
    c_sweep->add_option("--alpha", alpha_str, "approximation ratio p/q")
        ->required();
    c_sweep->add_option("--n", n_str, "cycle length or range lo..hi")
        ->required();
    c_sweep->add_option("--step", step, "grid stride (default: about 25 points)");
    c_sweep->add_option("--seeds", seeds, "seeds 1..k per n");
    c_sweep->add_option("--model", model_str, "det|rand")
        ->check(CLI::IsMember({"det", "rand"}));
    c_sweep->add_option("--ids", ids_str, "random|adversarial")
        ->check(CLI::IsMember({"random", "adversarial"}));
    c_sweep->add_flag("--json", as_json, "JSON output");

    auto* c_oracle =
        app.add_subcommand("oracle", "exact optimum for a cycle length");
    add_problem_args(c_oracle, prob);
    c_oracle->add_option("--n", n_str, "cycle length or range lo..hi")
        ->required();
    c_oracle->add_flag("--witness", witness, "include an optimal labeling");
    c_oracle->add_option("--format", format, "text|csv")
        ->check(CLI::IsMember({"text", "csv"}));
    c_oracle->add_flag("--json", as_json, "JSON output");

    auto* c_examples = app.add_subcommand("examples", "list built-in problems");
    c_examples->add_option("--example", example_name,
                           "print this problem's description");
    c_examples->add_flag("--json", as_json, "JSON output");

    auto* c_tables =
        app.add_subcommand("tables", "reproduce the catalog tables");
    c_tables->add_flag("--check", check, "diff against expected values");
    c_tables->add_option("--format", format, "text|csv")
        ->check(CLI::IsMember({"text", "csv"}));
    c_tables->add_flag("--json", as_json, "JSON output");

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_params->parsed()) return cmd_params(prob, witness, as_json);
        if (c_classify->parsed())
            return cmd_classify(prob, alpha_str, as_json);
        if (c_thresholds->parsed())
            return cmd_thresholds(prob, format, as_json);
        if (c_synth->parsed())
            return cmd_synthesize(prob, alpha_str, out_path, as_json);
        if (c_run->parsed())
            return cmd_run(prob, alpha_str, n_single, model_str, seed, ids_str,
                           plan_path, as_json);
        if (c_sweep->parsed())
            return cmd_sweep(prob, alpha_str, n_str, step, seeds, model_str,
                             ids_str, as_json);
        if (c_oracle->parsed())
            return cmd_oracle(prob, n_str, witness, format, as_json);
        if (c_examples->parsed()) return cmd_examples(example_name, as_json);
        if (c_tables->parsed()) return cmd_tables(check, format, as_json);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
