#include <random>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "optlcl/catalog.hpp"
#include "optlcl/verify.hpp"

using namespace optlcl;

namespace {

struct Fixture {
    OptLcl p;
    DebruijnGraph g;
};

Fixture fixture(const char* name) {
    Fixture f;
    f.p = builtin_example(name);
    f.g = build_graph(f.p);
    return f;
}

Rational rat(long long n, long long d = 1) { return rat_make(n, d); }

std::vector<int> labels_of(const OptLcl& p, const std::string& s) {
    std::vector<int> out;
    for (char c : s) out.push_back(p.label_id(std::string(1, c)));
    return out;
}

}  // namespace

TEST_CASE("known optima on the catalog") {
    Fixture mis = fixture("max-independent-set");
    CHECK(*opt_dp(mis.g, 5) == rat(2));
    CHECK(*opt_dp(mis.g, 6) == rat(3));
    CHECK(*opt_dp(mis.g, 1000) == rat(500));
    CHECK(*opt_dp(mis.g, 1001) == rat(500));

    Fixture mds = fixture("min-dominating-set");
    CHECK(*opt_dp(mds.g, 6) == rat(2));
    CHECK(*opt_dp(mds.g, 7) == rat(3));
    CHECK(*opt_dp(mds.g, 30) == rat(10));

    Fixture mvc = fixture("min-vertex-coloring");
    CHECK(*opt_dp(mvc.g, 8) == rat(2));
    CHECK(*opt_dp(mvc.g, 9) == rat(3));
    CHECK_FALSE(opt_dp(mvc.g, 1));  // a 1-cycle needs equal neighbours

    Fixture slop = fixture("sloppy-coloring");
    CHECK(*opt_dp(slop.g, 4) == rat(4));
    CHECK(*opt_dp(slop.g, 5) == rat(10));  // odd cycles switch palettes
}

TEST_CASE("dp agrees with exhaustive enumeration") {
    std::mt19937_64 rng(654321);
    int agreements = 0;
    for (int it = 0; it < 50; ++it) {
        OptLcl p = testutil::random_problem(rng);
        DebruijnGraph g = build_graph(p);
        for (int n = 1; n <= 7; ++n) {
            BruteforceResult br = opt_bruteforce(p, n);
            if (!br.within_budget) continue;
            CostValue dp = opt_dp(g, n);
            CAPTURE(it, n);
            CHECK(dp == br.value);
            ++agreements;
        }
    }
    CHECK(agreements > 200);
}

TEST_CASE("optimal labelings replay to the optimal value") {
    std::mt19937_64 rng(202020);
    for (int it = 0; it < 30; ++it) {
        OptLcl p = testutil::random_problem(rng);
        DebruijnGraph g = build_graph(p);
        for (int n : {3, 5, 8}) {
            CostValue dp = opt_dp(g, n);
            auto labels = opt_labeling(g, n);
            CAPTURE(it, n);
            REQUIRE(labels.has_value() == dp.has_value());
            if (labels) {
                REQUIRE(static_cast<int>(labels->size()) == n);
                CHECK(solution_value(p, *labels) == dp);
            }
        }
    }
}

TEST_CASE("solution values are rotation invariant") {
    std::mt19937_64 rng(878787);
    for (int it = 0; it < 40; ++it) {
        OptLcl p = testutil::random_problem(rng);
        int n = 2 + static_cast<int>(rng() % 9);
        std::vector<int> labels = testutil::random_labels(rng, p, n);
        CostValue base = solution_value(p, labels);
        std::vector<int> rotated(labels.begin() + 1, labels.end());
        rotated.push_back(labels.front());
        CHECK(solution_value(p, rotated) == base);
    }
}

TEST_CASE("evaluation combines value, optimum, and the alpha check") {
    Fixture mis = fixture("max-independent-set");
    SECTION("an optimal labeling") {
        Evaluation e = evaluate(mis.g, rat(1), labels_of(mis.p, "1010"));
        CHECK(e.valid);
        CHECK(*e.value == rat(2));
        CHECK(*e.opt == rat(2));
        REQUIRE(e.ratio);
        CHECK(*e.ratio == rat(1));
        CHECK(*e.alpha_ok);
    }
    SECTION("a forbidden window") {
        Evaluation e = evaluate(mis.g, rat(2), labels_of(mis.p, "1100"));
        CHECK_FALSE(e.valid);
        CHECK_FALSE(e.value.has_value());
        REQUIRE(e.alpha_ok.has_value());
        CHECK_FALSE(*e.alpha_ok);
    }
    SECTION("a weak but approximate labeling") {
        Evaluation e = evaluate(mis.g, rat(2), labels_of(mis.p, "100100"));
        CHECK(e.valid);
        CHECK(*e.value == rat(2));
        CHECK(*e.opt == rat(3));
        REQUIRE(e.ratio);
        CHECK(*e.ratio == rat(3, 2));
        CHECK(*e.alpha_ok);  // 2 * value >= opt
    }
    SECTION("no alpha requested") {
        Evaluation e = evaluate(mis.g, std::nullopt, labels_of(mis.p, "1010"));
        CHECK_FALSE(e.alpha_ok.has_value());
    }

    Fixture mds = fixture("min-dominating-set");
    SECTION("min problems divide the other way") {
        Evaluation e = evaluate(mds.g, rat(3), labels_of(mds.p, "111111"));
        CHECK(e.valid);
        CHECK(*e.value == rat(6));
        CHECK(*e.opt == rat(2));
        REQUIRE(e.ratio);
        CHECK(*e.ratio == rat(3));
        CHECK(*e.alpha_ok);  // right at alpha = 3
        Evaluation tight = evaluate(mds.g, rat(2), labels_of(mds.p, "111111"));
        REQUIRE(tight.alpha_ok.has_value());
        CHECK_FALSE(*tight.alpha_ok);
    }

    SECTION("zero-value labelings leave the ratio unset") {
        Evaluation e = evaluate(mis.g, rat(2), labels_of(mis.p, "000"));
        CHECK(e.valid);
        CHECK(*e.value == rat(0));
        CHECK(*e.opt == rat(1));
        CHECK_FALSE(e.ratio.has_value());  // opt / 0 has no finite value
        REQUIRE(e.alpha_ok.has_value());
        CHECK_FALSE(*e.alpha_ok);  // 2 * 0 < 1
    }
    SECTION("zero over zero counts as optimal") {
        // a 1-cycle only admits the empty selection, so opt is zero too
        Evaluation e = evaluate(mis.g, rat(2), labels_of(mis.p, "0"));
        CHECK(e.valid);
        CHECK(*e.value == rat(0));
        CHECK(*e.opt == rat(0));
        REQUIRE(e.ratio);
        CHECK(*e.ratio == rat(1));
        CHECK(*e.alpha_ok);
    }
}

TEST_CASE("the enumeration budget refuses oversized instances") {
    Fixture mvc = fixture("min-vertex-coloring");
    BruteforceResult r = opt_bruteforce(mvc.p, 40, 1000);
    CHECK_FALSE(r.within_budget);
    CHECK_FALSE(r.value.has_value());
    BruteforceResult ok = opt_bruteforce(mvc.p, 4, 1000);
    CHECK(ok.within_budget);
    CHECK(*ok.value == rat(2));
}
