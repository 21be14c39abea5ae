#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <set>

#include "schurlab/det.hpp"
#include "schurlab/identities.hpp"
#include "schurlab/sampling.hpp"
#include "schurlab/symfunc.hpp"

using namespace schurlab;

namespace {

CheckConfig make_config(const std::string& id, int n = -1, int m = -1, int D = -1,
                        int trials = -1, uint64_t seed = 1) {
    CheckConfig c;
    c.id = id;
    c.n = n;
    c.m = m;
    c.D = D;
    c.trials = trials;
    c.seed = seed;
    return c;
}

Json normalized(const CheckReport& report) {
    CheckReport copy = report;
    copy.elapsed_ms = 0;
    return copy.to_json();
}

// det of the n x n matrix with entry (i, j) = xi^(j-1) + sign * xi^(top-j)
Rational det_power_point(const std::vector<Rational>& xs, int top, int sign) {
    const int n = static_cast<int>(xs.size());
    RationalMatrix mat(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 1; j <= n; ++j)
            mat[i][j - 1] = rat_pow(xs[i], j - 1) + Rational(sign) * rat_pow(xs[i], top - j);
    return det_rational(mat);
}

Rational pair_product_at(const std::vector<Rational>& xs) {
    Rational acc = 1;
    for (size_t i = 0; i < xs.size(); ++i)
        for (size_t j = i + 1; j < xs.size(); ++j)
            acc *= (xs[i] - xs[j]) * (xs[i] * xs[j] - 1);
    return acc;
}

Rational linear_product_at(const std::vector<Rational>& xs, bool squares) {
    Rational acc = 1;
    for (const Rational& x : xs) acc *= squares ? Rational(1 - x * x) : Rational(1 - x);
    return acc;
}

// signed expansion over sign words at one of the special parameter pairs
Rational special_expansion(const std::vector<Rational>& xs, int m, SpecialPair tag,
                           const std::vector<Rational>& params) {
    const int n = static_cast<int>(xs.size());
    Rational total = 0;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        SignVector xi(n);
        Rational widthpow = 1;
        for (int i = 0; i < n; ++i) {
            xi[i] = (mask & (1u << i)) ? -1 : 1;
            if (xi[i] == -1) widthpow *= rat_pow(xs[i], m);
        }
        Rational beta = beta_special(xi, m, tag, xs);
        if (beta == 0) continue;
        total += beta * product_side_at(xs, xi, params) * widthpow;
    }
    return total;
}

}  // namespace

TEST_CASE("catalog shape") {
    const auto& entries = catalog();
    CHECK(entries.size() == 23);
    std::set<std::string> ids;
    for (const auto& e : entries) {
        CHECK(ids.insert(e.id).second);  // no duplicate ids
        CHECK(!e.statement.empty());
        CHECK(catalog_listing().find(e.id) != std::string::npos);
        CHECK(catalog_find(e.id) == &e);
    }
    CHECK(catalog_find("littlewood1") != nullptr);
    CHECK(catalog_find("nope") == nullptr);
    CHECK(catalog_find("eq3")->kind == CheckKind::series);
    CHECK(catalog_find("thm2")->kind == CheckKind::exact_poly);
    CHECK(catalog_find("thm5")->kind == CheckKind::point);
    CHECK(catalog_find("m_to_inf")->kind == CheckKind::limit);
}

TEST_CASE("config resolution fills defaults and rejects bad shapes") {
    CheckConfig resolved = make_config("iw2").resolved();
    CHECK(resolved.n == 2);
    CHECK(resolved.D == 6);
    CHECK(resolved.trials == 0);
    CHECK(make_config("thm5").resolved().trials == 20);
    CHECK(make_config("iw2", 4, -1, 3).resolved().D == 3);

    CHECK_THROWS_AS(make_config("unknown").resolved(), UsageError);
    CHECK_THROWS_AS(make_config("eq3", 0).resolved(), UsageError);
    CHECK_THROWS_AS(make_config("eq3", 13).resolved(), UsageError);
    CHECK_THROWS_AS(make_config("cor1b", -1, 2).resolved(), UsageError);
    CHECK_THROWS_AS(make_config("cor1c", 3).resolved(), UsageError);
    CHECK_THROWS_AS(make_config("thm4", 3).resolved(), UsageError);
}

TEST_CASE("every generating function identity holds at modest truncation") {
    for (const char* id : {"littlewood1", "littlewood2", "iw2", "eq3", "eq4", "eq5", "thm1",
                           "remark3a", "remark3b"}) {
        CheckReport r = run_check(make_config(id, 2, -1, 5));
        CHECK_MESSAGE(r.pass, r.to_text());
    }
    // cap zero leaves just the empty shape on both sides
    CHECK(run_check(make_config("eq3", 2, -1, 0)).pass);
}

TEST_CASE("every exact polynomial identity holds at small size") {
    CHECK(run_check(make_config("remark1", 2, 1)).pass);
    CHECK(run_check(make_config("thm2", 2, 2)).pass);
    CHECK(run_check(make_config("thm3", 2, 1)).pass);
    CHECK(run_check(make_config("thm4", 2, 2)).pass);
    CHECK(run_check(make_config("cor2a", 3)).pass);
    CHECK(run_check(make_config("cor2b", 3)).pass);
    CHECK(run_check(make_config("cor2c", 2)).pass);
    CHECK(run_check(make_config("eq13", 3)).pass);
    CHECK(run_check(make_config("eq14", 2)).pass);
}

TEST_CASE("series truncation is graded") {
    ContextPtr ctx = VarContext::make(2, {"a", "b"});
    TruncatedSeries wide = weighted_schur_series(SeriesWeight::two_parameter, ctx, 2, 6);
    TruncatedSeries narrow = weighted_schur_series(SeriesWeight::two_parameter, ctx, 2, 3);
    CHECK(wide.retruncated(3) == narrow);
}

TEST_CASE("inverse product expansions") {
    ContextPtr ctx = VarContext::make(1, {"a", "b"});
    MultiPoly a = MultiPoly::variable(ctx, "a"), b = MultiPoly::variable(ctx, "b");
    MultiPoly x = MultiPoly::variable(ctx, 0);
    TruncatedSeries s = inverse_product(ctx, {a * x, b * x}, {}, 1);
    CHECK(s.body() == MultiPoly::constant(ctx, 1) + (a + b) * x);

    ContextPtr ctx2 = VarContext::make(2, {"a", "b"});
    MultiPoly a2 = MultiPoly::variable(ctx2, "a"), b2 = MultiPoly::variable(ctx2, "b");
    MultiPoly x1 = MultiPoly::variable(ctx2, 0), x2 = MultiPoly::variable(ctx2, 1);
    TruncatedSeries t = inverse_product(
        ctx2, {a2 * x1, b2 * x1, a2 * x2, b2 * x2, x1 * x2}, {}, 2);
    // coefficient of x1*x2 collects the pair factor and the two linear factors
    MultiPoly coeff = (a2 + b2) * (a2 + b2) + MultiPoly::constant(ctx2, 1);
    CHECK(t.body().coeff({1, 1, 0, 0}) == 1);
    MultiPoly diff = t.body() - coeff * x1 * x2;
    for (const auto& [mono, c] : diff.terms())
        CHECK(!(mono[0] == 1 && mono[1] == 1));
}

TEST_CASE("weighted sums at tiny caps") {
    ContextPtr c1 = x_context(1);
    MultiPoly x = MultiPoly::variable(c1, 0);
    CHECK(weighted_schur_series(SeriesWeight::unit, c1, 1, 2).body() ==
          MultiPoly::constant(c1, 1) + x + x * x);
    ContextPtr c2 = x_context(2);
    MultiPoly x1 = MultiPoly::variable(c2, 0), x2 = MultiPoly::variable(c2, 1);
    CHECK(weighted_schur_series(SeriesWeight::even_columns_indicator, c2, 2, 2).body() ==
          MultiPoly::constant(c2, 1) + x1 * x2);
}

TEST_CASE("rectangle sums at explicit points") {
    std::vector<Rational> pt = {rat(1, 2), rat(1, 7)};
    CHECK(rect_sum_plain_at(0, pt) == 1);
    CHECK(rect_sum_two_at(0, pt, rat(2, 3), rat(1, 5)) == 1);
    CHECK(rect_sum_plain_at(2, {rat(1, 2)}) == rat(7, 4));
    // width 1 keeps the empty shape, one cell, and the vertical domino
    Rational a = rat(1, 3), b = rat(1, 5);
    Rational expect = 1 + (a + b) * (pt[0] + pt[1]) + (1 + a * b) * pt[0] * pt[1];
    CHECK(rect_sum_two_at(1, pt, a, b) == expect);
    CHECK(rect_sum_even_at(2, {rat(1, 2)}) == rat(5, 4));
    CHECK(rect_sum_even_cols_at(2, pt) == 1 + pt[0] * pt[1] + rat_pow(pt[0] * pt[1], 2));
}

TEST_CASE("point identity with one variable holds at every width") {
    for (int m = 0; m <= 4; ++m) {
        CheckReport r = run_check(make_config("thm5", 1, m, -1, 10, 11));
        CHECK_MESSAGE(r.pass, r.to_text());
    }
}

TEST_CASE("point identity with two variables fails and reports the witness") {
    CheckReport r = run_check(make_config("thm5", 2, 0, -1, 20, 7));
    REQUIRE_FALSE(r.pass);
    REQUIRE(r.witness.is_object());
    CHECK(r.witness["kind"] == "point");
    CHECK(r.witness["x"] == Json::array({"-4/9", "2/19"}));
    CHECK(r.witness["a"] == "8/11");
    CHECK(r.witness["b"] == "4/7");
    CHECK(r.witness["lhs"] == "1");
    CHECK(r.witness["rhs"] == "79891272773809343/78333645607389250");

    // three variables fail as well; larger widths change nothing
    CHECK_FALSE(run_check(make_config("thm5", 3, 1, -1, 5, 3)).pass);
    CHECK_FALSE(run_check(make_config("thm5", 2, 3, -1, 5, 3)).pass);
}

TEST_CASE("special parameter corollaries hold") {
    CHECK(run_check(make_config("cor1a", 2, 2, -1, 10)).pass);
    CHECK(run_check(make_config("cor1a", 3, 1, -1, 10)).pass);
    CHECK(run_check(make_config("cor1b", 2, 1, -1, 10)).pass);
    CHECK(run_check(make_config("cor1b", 2, 3, -1, 10)).pass);
    CHECK(run_check(make_config("cor1c", 2, 2, -1, 10)).pass);
    CHECK(run_check(make_config("m_to_inf", 2, -1, -1, 3)).pass);
}

TEST_CASE("determinant and sign-word routes agree at sampled points") {
    PointSampler sampler(derive_seed(42, "dets"));
    for (int n = 2; n <= 3; ++n) {
        std::vector<Rational> xs = sampler.draw_distinct(n, false, {});
        Rational pairs = pair_product_at(xs);
        for (int m = 0; m <= 3; ++m) {
            // alternant over the plain rectangle sum
            Rational det_m = det_power_point(xs, m + 2 * n, -1);
            Rational plain = rect_sum_plain_at(m, xs);
            CHECK(det_m == plain * linear_product_at(xs, false) * pairs);
            CHECK(plain == special_expansion(xs, m, SpecialPair::one_zero, {rat(1), rat(0)}));

            // even-row variant; widening an even-part rectangle by one is free
            Rational det_e = det_power_point(xs, 2 * m + 2 * n + 1, -1);
            Rational even_rows = rect_sum_even_at(2 * m, xs);
            CHECK(det_e == even_rows * linear_product_at(xs, true) * pairs);
            CHECK(even_rows == rect_sum_even_at(2 * m + 1, xs));
            CHECK(even_rows == special_expansion(xs, 2 * m + 1, SpecialPair::one_minus_one,
                                                 {rat(1), rat(-1)}));

            // even-column variant needs an even variable count
            if (n % 2 == 0) {
                int top = m + 2 * n - 1;
                Rational sum2 = det_power_point(xs, top, -1) + det_power_point(xs, top, +1);
                Rational even_cols = rect_sum_even_cols_at(m, xs);
                CHECK(sum2 == even_cols * 2 * pairs);
                CHECK(even_cols ==
                      special_expansion(xs, m, SpecialPair::zero_zero, {rat(0), rat(0)}));
            }
        }
    }
}

TEST_CASE("a planted weight defect is caught with a monomial witness") {
    CheckConfig cfg = make_config("thm1", 2, -1, 4);
    cfg.mutation = WeightMutation::drop_delta_term;
    CheckReport r = run_check(cfg);
    REQUIRE_FALSE(r.pass);
    CHECK(r.witness["kind"] == "monomial");
    CHECK(r.witness.contains("monomial"));
    CHECK(r.witness["lhs"] != r.witness["rhs"]);
    // the same configuration passes without the mutation
    CHECK(run_check(make_config("thm1", 2, -1, 4)).pass);
}

TEST_CASE("reports are deterministic given a seed") {
    CheckConfig cfg = make_config("thm5", 2, 1, -1, 4, 99);
    Json first = normalized(run_check(cfg));
    Json second = normalized(run_check(cfg));
    CHECK(first.dump() == second.dump());
    CHECK(first["params"]["seed"] == 99);
    CHECK(first["verdict"] == "fail");

    std::string text = run_check(make_config("eq3", 2, -1, 4)).to_text();
    CHECK(text.rfind("PASS eq3", 0) == 0);
    CHECK(text.find("elapsed") == std::string::npos);
}

TEST_CASE("suites preserve order and honor the thread override") {
    std::vector<CheckConfig> configs = {make_config("eq13", 3), make_config("eq3", 2, -1, 4),
                                        make_config("cor2a", 2)};
    auto reports = run_suite(configs);
    REQUIRE(reports.size() == 3);
    CHECK(reports[0].config.id == "eq13");
    CHECK(reports[1].config.id == "eq3");
    CHECK(reports[2].config.id == "cor2a");
    for (const auto& r : reports) CHECK(r.pass);

    setenv("SCHURLAB_THREADS", "2", 1);
    auto threaded = run_suite(configs);
    unsetenv("SCHURLAB_THREADS");
    for (size_t i = 0; i < reports.size(); ++i)
        CHECK(normalized(reports[i]).dump() == normalized(threaded[i]).dump());

    setenv("SCHURLAB_THREADS", "abc", 1);
    CHECK_THROWS_AS(run_suite(configs), UsageError);
    unsetenv("SCHURLAB_THREADS");

    // bad configs are rejected before any check runs
    CHECK_THROWS_AS(run_suite({make_config("eq3"), make_config("nope")}), UsageError);
}

TEST_CASE("default suite covers the whole catalog") {
    auto configs = default_suite(5);
    CHECK(configs.size() == catalog().size());
    std::set<std::string> ids;
    for (const auto& c : configs) {
        CHECK(c.seed == 5);
        ids.insert(c.id);
    }
    CHECK(ids.size() == catalog().size());
}

TEST_CASE("suite files round-trip") {
    Json doc;
    doc["seed"] = 5;
    doc["checks"] = Json::array();
    doc["checks"].push_back(Json{{"id", "littlewood1"}, {"n", 2}, {"D", 4}});
    doc["checks"].push_back(Json{{"id", "eq13"}, {"n", 3}, {"seed", 8}});
    auto configs = suite_from_json(doc);
    REQUIRE(configs.size() == 2);
    CHECK(configs[0].id == "littlewood1");
    CHECK(configs[0].n == 2);
    CHECK(configs[0].D == 4);
    CHECK(configs[0].m == -1);
    CHECK(configs[0].seed == 5);
    CHECK(configs[1].seed == 8);

    // bare arrays work too
    auto bare = suite_from_json(Json::array({Json{{"id", "eq3"}}}));
    REQUIRE(bare.size() == 1);
    CHECK(bare[0].seed == 1);

    CHECK_THROWS_AS(suite_from_json(Json{{"seed", 3}}), UsageError);
    CHECK_THROWS_AS(suite_from_json(Json::array({Json{{"n", 2}}})), UsageError);

    auto reports = run_suite(configs);
    Json arr = suite_report_json(reports);
    REQUIRE(arr.is_array());
    CHECK(arr.size() == 2);
    CHECK(arr[0]["id"] == "littlewood1");
    CHECK(arr[1]["verdict"] == "pass");
}

// The width generating function sum over all shapes with at most n rows,
// weighted by the two-parameter column weight and a width power u^(lambda_1),
// decomposes over chains of subsets of the variables. Each chain contributes
// its ordering factor times a product of geometric brackets, one per prefix
// of the chain, and the cumulative sums of the u-coefficients reproduce the
// rectangle sums. This pins the decomposition the pole analysis rests on.
namespace {

using Taylor = std::vector<Rational>;

Taylor taylor_mul(const Taylor& f, const Taylor& g) {
    Taylor out(f.size(), Rational(0));
    for (size_t i = 0; i < f.size(); ++i)
        for (size_t j = 0; i + j < f.size(); ++j) out[i + j] += f[i] * g[j];
    return out;
}

Taylor block_taylor(int block_size, const Rational& p, const Rational& a, const Rational& b,
                    bool last, int len) {
    Taylor out(len, Rational(0));
    if (block_size % 2 == 1) {
        Rational ca = a / (a - b), cb = b / (a - b);
        for (int k = 0; k < len; ++k)
            out[k] = ca * rat_pow(a * p, k) - cb * rat_pow(b * p, k);
    } else {
        Rational ab = a * b;
        for (int k = 0; k < len; ++k)
            out[k] = (rat_pow(p, k) - ab * rat_pow(ab * p, k)) / (1 - ab);
    }
    if (!last) out[0] -= 1;
    return out;
}

void chain_sum(unsigned remaining, const std::vector<int>& level, int depth,
               const std::vector<Rational>& xs, const Rational& a, const Rational& b, int len,
               Taylor& total) {
    const int n = static_cast<int>(xs.size());
    if (remaining == 0) {
        Rational pi = 1;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (level[i] < level[j]) pi *= xs[i] / (xs[i] - xs[j]);
        Taylor acc(len, Rational(0));
        acc[0] = 1;
        for (int d = 0; d < depth; ++d) {
            // each factor sees the whole prefix of the chain, not just the
            // batch that entered at this step
            Rational p = 1;
            int size = 0;
            for (int i = 0; i < n; ++i)
                if (level[i] <= d) {
                    p *= xs[i];
                    ++size;
                }
            acc = taylor_mul(acc, block_taylor(size, p, a, b, d == depth - 1, len));
        }
        for (int k = 0; k < len; ++k) total[k] += pi * acc[k];
        return;
    }
    // pick the next batch as any nonempty subset of the remaining variables
    for (unsigned sub = remaining; sub != 0; sub = (sub - 1) & remaining) {
        std::vector<int> next = level;
        for (int i = 0; i < n; ++i)
            if (sub & (1u << i)) next[i] = depth;
        chain_sum(remaining & ~sub, next, depth + 1, xs, a, b, len, total);
    }
}

}  // namespace

TEST_CASE("chain decomposition of the width generating function") {
    const int len = 5;
    struct Case {
        std::vector<Rational> xs;
        Rational a, b;
    };
    for (const Case& c : {Case{{rat(1, 4), rat(-7, 10)}, rat(3, 10), rat(5, 14)},
                          Case{{rat(1, 3), rat(2, 7), rat(-1, 5)}, rat(1, 6), rat(3, 8)}}) {
        const int n = static_cast<int>(c.xs.size());
        Taylor total(len, Rational(0));
        chain_sum((1u << n) - 1, std::vector<int>(n, -1), 0, c.xs, c.a, c.b, len, total);
        Rational running = 0;
        for (int m = 0; m < len; ++m) {
            running += total[m];
            CHECK(running == rect_sum_two_at(m, c.xs, c.a, c.b));
        }
    }
}
