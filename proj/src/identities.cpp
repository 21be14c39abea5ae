#include "schurlab/identities.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <thread>

#include "schurlab/det.hpp"
#include "schurlab/sampling.hpp"
#include "schurlab/symfunc.hpp"

namespace schurlab {

namespace {

const char* kPairProduct = "prod over i<j of 1/(1 - xi*xj)";

std::vector<CatalogEntry> build_catalog() {
    std::vector<CatalogEntry> entries;
    auto add = [&](std::string id, CheckKind kind, std::string stmt, int n, int m, int D,
                   int trials) {
        entries.push_back({std::move(id), kind, std::move(stmt), n, m, D, trials});
    };
    add("littlewood1", CheckKind::series,
        std::string("sum over all partitions of a^(odd-height columns) * schur = prod over i of "
                    "1/(1 - a*xi) * ") + kPairProduct,
        2, 0, 6, 0);
    add("littlewood2", CheckKind::series,
        std::string("sum over all partitions of a^(odd-length rows) * schur = prod over i of "
                    "(1 + a*xi)/(1 - xi^2) * ") + kPairProduct,
        2, 0, 6, 0);
    add("iw2", CheckKind::series,
        std::string("sum of the two-parameter column weight * schur = prod over i of "
                    "1/((1 - a*xi)(1 - b*xi)) * ") + kPairProduct,
        2, 0, 6, 0);
    add("eq3", CheckKind::series,
        std::string("sum over all partitions of schur = prod over i of 1/(1 - xi) * ") +
            kPairProduct,
        2, 0, 6, 0);
    add("eq4", CheckKind::series,
        std::string("sum over even-row partitions of schur = prod over i of 1/(1 - xi^2) * ") +
            kPairProduct,
        2, 0, 6, 0);
    add("eq5", CheckKind::series,
        std::string("sum over even-column partitions of schur = ") + kPairProduct, 2, 0, 6, 0);
    add("thm1", CheckKind::series,
        std::string("sum of the three-parameter column weight * schur = prod over i of "
                    "1/((1 - a*xi)(1 - b*xi)(1 - c*xi)) * ") + kPairProduct,
        2, 0, 5, 0);
    add("remark3a", CheckKind::series,
        std::string("sum of the conjugate two-parameter weight * schur = prod over i of "
                    "(1 + a*xi)(1 + b*xi)/(1 - xi^2) * ") + kPairProduct,
        2, 0, 6, 0);
    add("remark3b", CheckKind::series,
        std::string("sum of the conjugate three-parameter weight * schur = prod over i of "
                    "(1 + a*xi)(1 + b*xi)(1 + c*xi)/(1 - xi^2) * ") + kPairProduct,
        2, 0, 5, 0);
    add("remark1", CheckKind::exact_poly,
        "prod over i of (1 + xi) times the even-row Schur sum bounded by width 2m equals the "
        "unrestricted Schur sum bounded by width 2m+1",
        2, 2, 0, 0);
    add("thm5", CheckKind::point,
        "width-m two-parameter Schur sum at a point equals the signed expansion over all sign "
        "words: beta * product side at twisted coordinates * extra width powers",
        2, 2, 0, 20);
    add("cor1a", CheckKind::point,
        "parameters (1,0): width-m Schur sum equals the sign-word expansion with beta = 1", 2, 2,
        0, 20);
    add("cor1b", CheckKind::point,
        "parameters (1,-1), odd width: even-row width-m Schur sum equals the sign-word expansion "
        "with beta = prod of inverted minus coordinates",
        2, 3, 0, 20);
    add("cor1c", CheckKind::point,
        "parameters (0,0), even variable count: even-column width-m Schur sum equals the "
        "expansion over sign words with an even number of minus signs",
        2, 2, 0, 20);
    add("thm2", CheckKind::exact_poly,
        "det(xi^(j-1) - xi^(m+2n-j)) = width-m Schur sum * prod (1 - xi) * prod over i<j of "
        "(xi - xj)(xi*xj - 1)",
        3, 3, 0, 0);
    add("thm3", CheckKind::exact_poly,
        "det(xi^(j-1) - xi^(2m+2n+1-j)) = even-row width-2m Schur sum * prod (1 - xi^2) * prod "
        "over i<j of (xi - xj)(xi*xj - 1)",
        3, 2, 0, 0);
    add("thm4", CheckKind::exact_poly,
        "even n: det(xi^(j-1) - xi^(m+2n-1-j)) + det(xi^(j-1) + xi^(m+2n-1-j)) = 2 * "
        "even-column width-m Schur sum * prod over i<j of (xi - xj)(xi*xj - 1)",
        2, 3, 0, 0);
    add("cor2a", CheckKind::exact_poly,
        "det(xi^(j-1) - xi^(2n-j)) = prod (1 - xi) * prod over i<j of (xi - xj)(xi*xj - 1)", 4, 0,
        0, 0);
    add("cor2b", CheckKind::exact_poly,
        "det(xi^(j-1) - xi^(2n+1-j)) = prod (1 - xi^2) * prod over i<j of (xi - xj)(xi*xj - 1)",
        4, 0, 0, 0);
    add("cor2c", CheckKind::exact_poly,
        "det(xi^(j-1) + xi^(2n-1-j)) = 2 * prod over i<j of (xi - xj)(xi*xj - 1)", 4, 0, 0, 0);
    add("eq13", CheckKind::exact_poly, "det(xj^(i-1)) = prod over i<j of (xj - xi)", 4, 0, 0, 0);
    add("eq14", CheckKind::exact_poly,
        "for every sign word, the cleared pair factors multiply back to (xi - xj)(1 - xi*xj), "
        "pairwise and as a full product",
        3, 0, 0, 0);
    add("m_to_inf", CheckKind::limit,
        "at positive points, the gap between the width-m two-parameter Schur sum and the full "
        "product side strictly shrinks along m = 2,4,6,8",
        2, 0, 0, 5);
    return entries;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = build_catalog();
    return entries;
}

const CatalogEntry* catalog_find(const std::string& id) {
    for (const auto& e : catalog())
        if (e.id == id) return &e;
    return nullptr;
}

std::string catalog_listing() {
    std::string out;
    for (const auto& e : catalog()) out += "  " + e.id + ": " + e.statement + "\n";
    return out;
}

CheckConfig CheckConfig::resolved() const {
    const CatalogEntry* entry = catalog_find(id);
    if (!entry)
        throw UsageError("unknown identity id '" + id + "'; known ids:\n" + catalog_listing());
    CheckConfig r = *this;
    if (r.n < 0) r.n = entry->n;
    if (r.m < 0) r.m = entry->m;
    if (r.D < 0) r.D = entry->D;
    if (r.trials < 0) r.trials = entry->trials;
    if (r.n < 1) throw UsageError("variable count must be at least 1");
    if (r.n > 12) throw UsageError("variable count capped at 12 for desk-scale runs");
    if (entry->kind == CheckKind::series && r.D < 0) throw UsageError("cap must be nonnegative");
    if ((entry->kind == CheckKind::point || entry->kind == CheckKind::limit) && r.trials < 1)
        throw UsageError("trial count must be positive");
    if (id == "cor1b" && r.m % 2 == 0)
        throw UsageError("cor1b is stated for odd widths; pass an odd --m");
    if ((id == "cor1c" || id == "thm4") && r.n % 2 == 1)
        throw UsageError(id + " is stated for an even number of variables; pass an even --n");
    return r;
}

TruncatedSeries inverse_product(const ContextPtr& ctx, const std::vector<MultiPoly>& inv_terms,
                                const std::vector<MultiPoly>& poly_factors, int cap) {
    TruncatedSeries acc = TruncatedSeries::one(ctx, cap);
    for (const MultiPoly& t : inv_terms) acc = acc * expand_inverse_linear(t, cap);
    for (const MultiPoly& p : poly_factors) acc = acc * p;
    return acc;
}

namespace {

MultiPoly weight_for(SeriesWeight w, const Partition& lambda, const ContextPtr& ctx,
                     WeightMutation mutation) {
    switch (w) {
        case SeriesWeight::unit:
            return MultiPoly::constant(ctx, 1);
        case SeriesWeight::even_rows_indicator:
            return MultiPoly::constant(ctx, all_parts_even(lambda) ? 1 : 0);
        case SeriesWeight::even_columns_indicator:
            return MultiPoly::constant(ctx, conjugate_even(lambda) ? 1 : 0);
        case SeriesWeight::odd_column_power:
            return MultiPoly::variable(ctx, "a").pow(odd_column_count(lambda));
        case SeriesWeight::odd_row_power:
            return MultiPoly::variable(ctx, "a").pow(odd_row_count(lambda));
        case SeriesWeight::two_parameter:
            return weight_two(lambda).embedded(ctx);
        case SeriesWeight::three_parameter:
            return weight_three(lambda, mutation).embedded(ctx);
        case SeriesWeight::two_parameter_conjugate:
            return weight_two(conjugate(lambda)).embedded(ctx);
        case SeriesWeight::three_parameter_conjugate:
            return weight_three(conjugate(lambda), mutation).embedded(ctx);
    }
    throw UsageError("unknown series weight");
}

}  // namespace

TruncatedSeries weighted_schur_series(SeriesWeight w, const ContextPtr& ctx, int n, int D,
                                      WeightMutation mutation) {
    MultiPoly acc = MultiPoly::zero(ctx);
    for (const Partition& lambda : partitions_up_to(D, n)) {
        MultiPoly wt = weight_for(w, lambda, ctx, mutation);
        if (wt.is_zero()) continue;
        acc += schur(lambda, n).embedded(ctx) * wt;
    }
    return TruncatedSeries(std::move(acc), D);
}

Rational product_side_at(const std::vector<Rational>& xs, const SignVector& xi,
                         const std::vector<Rational>& params) {
    const int n = static_cast<int>(xs.size());
    if (static_cast<int>(xi.size()) != n) throw UsageError("sign word length must match point");
    std::vector<Rational> ys(n);
    for (int i = 0; i < n; ++i) {
        if (xs[i] == 0) throw SingularPoint("zero coordinate");
        ys[i] = xi[i] > 0 ? xs[i] : 1 / xs[i];
    }
    Rational value = 1;
    for (const Rational& p : params)
        for (int i = 0; i < n; ++i) {
            Rational d = 1 - p * ys[i];
            if (d == 0) throw SingularPoint("vanishing linear factor");
            value /= d;
        }
    for (int j = 0; j < n; ++j)
        for (int k = j + 1; k < n; ++k) {
            Rational d = 1 - ys[j] * ys[k];
            if (d == 0) throw SingularPoint("vanishing pair factor");
            value /= d;
        }
    return value;
}

namespace {

Rational rect_sum_at(int m, const std::vector<Rational>& xs, ParityFilter parity,
                     const Rational* a, const Rational* b) {
    const int n = static_cast<int>(xs.size());
    Rational total = 0;
    for (const Partition& lambda : partitions_in_box(m, n, parity)) {
        Rational w = 1;
        if (a) w = weight_two_at(lambda, *a, *b);
        total += w * schur_eval(lambda, xs);
    }
    return total;
}

}  // namespace

Rational rect_sum_two_at(int m, const std::vector<Rational>& xs, const Rational& a,
                         const Rational& b) {
    return rect_sum_at(m, xs, ParityFilter::any, &a, &b);
}

Rational rect_sum_plain_at(int m, const std::vector<Rational>& xs) {
    return rect_sum_at(m, xs, ParityFilter::any, nullptr, nullptr);
}

Rational rect_sum_even_at(int m, const std::vector<Rational>& xs) {
    return rect_sum_at(m, xs, ParityFilter::even_parts, nullptr, nullptr);
}

Rational rect_sum_even_cols_at(int m, const std::vector<Rational>& xs) {
    return rect_sum_at(m, xs, ParityFilter::even_columns, nullptr, nullptr);
}

namespace {

// ---------- series checks ----------

struct SeriesSpec {
    SeriesWeight weight;
    std::vector<std::string> params;
    // factor builders run per variable index i (0-based)
    bool inv_ax = false, inv_bx = false, inv_cx = false;  // 1/(1 - p*xi)
    bool inv_x = false;                                   // 1/(1 - xi)
    bool inv_x2 = false;                                  // 1/(1 - xi^2)
    bool plus_ax = false, plus_bx = false, plus_cx = false, plus_x = false;  // (1 + p*xi)
};

SeriesSpec series_spec(const std::string& id) {
    SeriesSpec s;
    if (id == "littlewood1") {
        s = {SeriesWeight::odd_column_power, {"a"}};
        s.inv_ax = true;
    } else if (id == "littlewood2") {
        s = {SeriesWeight::odd_row_power, {"a"}};
        s.inv_x2 = s.plus_ax = true;
    } else if (id == "iw2") {
        s = {SeriesWeight::two_parameter, {"a", "b"}};
        s.inv_ax = s.inv_bx = true;
    } else if (id == "eq3") {
        s = {SeriesWeight::unit, {}};
        s.inv_x = true;
    } else if (id == "eq4") {
        s = {SeriesWeight::even_rows_indicator, {}};
        s.inv_x2 = true;
    } else if (id == "eq5") {
        s = {SeriesWeight::even_columns_indicator, {}};
    } else if (id == "thm1") {
        s = {SeriesWeight::three_parameter, {"a", "b", "c"}};
        s.inv_ax = s.inv_bx = s.inv_cx = true;
    } else if (id == "remark3a") {
        s = {SeriesWeight::two_parameter_conjugate, {"a", "b"}};
        s.inv_x2 = s.plus_ax = s.plus_bx = true;
    } else if (id == "remark3b") {
        s = {SeriesWeight::three_parameter_conjugate, {"a", "b", "c"}};
        s.inv_x2 = s.plus_ax = s.plus_bx = s.plus_cx = true;
    } else {
        throw UsageError("not a series identity: " + id);
    }
    return s;
}

Json monomial_witness(const MultiPoly::TermDiff& diff) {
    Json w;
    w["kind"] = "monomial";
    w["monomial"] = diff.monomial;
    w["lhs"] = rat_str(diff.lhs);
    w["rhs"] = rat_str(diff.rhs);
    return w;
}

bool check_series(const CheckConfig& cfg, Json& witness) {
    const SeriesSpec spec = series_spec(cfg.id);
    ContextPtr ctx = VarContext::make(cfg.n, spec.params);
    const int D = cfg.D;

    TruncatedSeries lhs = weighted_schur_series(spec.weight, ctx, cfg.n, D, cfg.mutation);

    std::vector<MultiPoly> inv, polys;
    auto var = [&](const std::string& name) { return MultiPoly::variable(ctx, name); };
    const MultiPoly one = MultiPoly::constant(ctx, 1);
    for (int i = 0; i < cfg.n; ++i) {
        MultiPoly x = MultiPoly::variable(ctx, i);
        if (spec.inv_ax) inv.push_back(var("a") * x);
        if (spec.inv_bx) inv.push_back(var("b") * x);
        if (spec.inv_cx) inv.push_back(var("c") * x);
        if (spec.inv_x) inv.push_back(x);
        if (spec.inv_x2) inv.push_back(x * x);
        if (spec.plus_ax) polys.push_back(one + var("a") * x);
        if (spec.plus_bx) polys.push_back(one + var("b") * x);
        if (spec.plus_cx) polys.push_back(one + var("c") * x);
        if (spec.plus_x) polys.push_back(one + x);
    }
    for (int j = 0; j < cfg.n; ++j)
        for (int k = j + 1; k < cfg.n; ++k)
            inv.push_back(MultiPoly::variable(ctx, j) * MultiPoly::variable(ctx, k));

    TruncatedSeries rhs = inverse_product(ctx, inv, polys, D);

    auto diff = lhs.body().first_difference(rhs.body());
    if (!diff) return true;
    witness = monomial_witness(*diff);
    return false;
}

// ---------- exact polynomial checks ----------

MultiPoly power_mono(const ContextPtr& ctx, int var, int e) {
    ExpVec mono(ctx->size(), 0);
    mono[var] = e;
    return MultiPoly::monomial(ctx, std::move(mono), 1);
}

MultiPoly pair_product_poly(const ContextPtr& ctx, int n) {
    MultiPoly acc = MultiPoly::constant(ctx, 1);
    const MultiPoly one = MultiPoly::constant(ctx, 1);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            MultiPoly xi = MultiPoly::variable(ctx, i), xj = MultiPoly::variable(ctx, j);
            acc = acc * (xi - xj) * (xi * xj - one);
        }
    return acc;
}

MultiPoly rect_schur_sum_poly(int m, int n, ParityFilter parity) {
    ContextPtr ctx = x_context(n);
    MultiPoly acc = MultiPoly::zero(ctx);
    for (const Partition& lambda : partitions_in_box(m, n, parity)) acc += schur(lambda, n);
    return acc;
}

bool compare_polys(const MultiPoly& lhs, const MultiPoly& rhs, Json& witness) {
    auto diff = lhs.first_difference(rhs);
    if (!diff) return true;
    witness = monomial_witness(*diff);
    return false;
}

bool check_exact_poly(const CheckConfig& cfg, Json& witness) {
    const int n = cfg.n, m = cfg.m;
    ContextPtr ctx = x_context(n);
    const MultiPoly one = MultiPoly::constant(ctx, 1);

    if (cfg.id == "remark1") {
        MultiPoly lhs = rect_schur_sum_poly(2 * m, n, ParityFilter::even_parts);
        for (int i = 0; i < n; ++i) lhs = lhs * (one + MultiPoly::variable(ctx, i));
        MultiPoly rhs = rect_schur_sum_poly(2 * m + 1, n, ParityFilter::any);
        return compare_polys(lhs, rhs, witness);
    }

    if (cfg.id == "eq13") {
        PolyMatrix mat(n, std::vector<MultiPoly>(n, MultiPoly::zero(ctx)));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) mat[i][j] = power_mono(ctx, j, i);
        MultiPoly rhs = one;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                rhs = rhs * (MultiPoly::variable(ctx, j) - MultiPoly::variable(ctx, i));
        return compare_polys(det_exact(mat), rhs, witness);
    }

    if (cfg.id == "eq14") {
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            SignVector xi(n);
            for (int i = 0; i < n; ++i) xi[i] = (mask & (1u << i)) ? -1 : 1;
            MultiPoly full_g = one, full_h = one, full_ref = one;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                    MultiPoly a = MultiPoly::variable(ctx, i), b = MultiPoly::variable(ctx, j);
                    MultiPoly g, h;
                    if (xi[i] > 0 && xi[j] > 0) {
                        g = a - b;
                        h = one - a * b;
                    } else if (xi[i] > 0) {
                        g = a * b - one;
                        h = b - a;
                    } else if (xi[j] > 0) {
                        g = one - a * b;
                        h = a - b;
                    } else {
                        g = b - a;
                        h = a * b - one;
                    }
                    MultiPoly ref = (a - b) * (one - a * b);
                    if (g * h != ref) {
                        witness = Json{{"kind", "pair"},
                                       {"signs", signs_string(xi)},
                                       {"pair", {i + 1, j + 1}},
                                       {"lhs", (g * h).to_string()},
                                       {"rhs", ref.to_string()}};
                        return false;
                    }
                    full_g = full_g * g;
                    full_h = full_h * h;
                    full_ref = full_ref * ref;
                }
            if (full_g * full_h != full_ref) {
                witness = Json{{"kind", "product"}, {"signs", signs_string(xi)}};
                return false;
            }
        }
        return true;
    }

    // determinant families; width 0 gives the cor2 forms
    auto power_matrix = [&](int top, int sign) {
        // entry (i, j): xi^(j-1) + sign * xi^(top-j)
        PolyMatrix mat(n, std::vector<MultiPoly>(n, MultiPoly::zero(ctx)));
        for (int i = 0; i < n; ++i)
            for (int j = 1; j <= n; ++j) {
                MultiPoly lo = power_mono(ctx, i, j - 1);
                MultiPoly hi = power_mono(ctx, i, top - j);
                mat[i][j - 1] = sign > 0 ? lo + hi : lo - hi;
            }
        return mat;
    };

    if (cfg.id == "thm4") {
        const int top = m + 2 * n - 1;
        MultiPoly lhs = det_exact(power_matrix(top, -1)) + det_exact(power_matrix(top, +1));
        MultiPoly rhs = rect_schur_sum_poly(m, n, ParityFilter::even_columns).scaled(2) *
                        pair_product_poly(ctx, n);
        return compare_polys(lhs, rhs, witness);
    }

    int width = m;
    ParityFilter parity = ParityFilter::any;
    int top = 0;       // exponent offset: entry j uses top - j
    int sign = -1;     // matrix entry xi^(j-1) + sign*xi^(top-j)
    Rational scale = 1;
    bool square_linear = false;  // prod (1 - xi^2) instead of (1 - xi)
    bool linear = true;
    if (cfg.id == "thm2" || cfg.id == "cor2a") {
        if (cfg.id == "cor2a") width = 0;
        top = width + 2 * n;
    } else if (cfg.id == "thm3" || cfg.id == "cor2b") {
        if (cfg.id == "cor2b") width = 0;
        top = 2 * width + 2 * n + 1;
        parity = ParityFilter::even_parts;
        square_linear = true;
    } else if (cfg.id == "cor2c") {
        width = 0;
        top = 2 * n - 1;
        parity = ParityFilter::even_columns;
        sign = 1;
        scale = 2;
        linear = false;
    } else {
        throw UsageError("not an exact polynomial identity: " + cfg.id);
    }

    MultiPoly lhs = det_exact(power_matrix(top, sign));

    int sum_width = (cfg.id == "thm3") ? 2 * width : width;
    MultiPoly rhs = rect_schur_sum_poly(sum_width, n, parity).scaled(scale);
    if (linear)
        for (int i = 0; i < n; ++i) {
            MultiPoly x = MultiPoly::variable(ctx, i);
            rhs = rhs * (square_linear ? one - x * x : one - x);
        }
    rhs = rhs * pair_product_poly(ctx, n);
    return compare_polys(lhs, rhs, witness);
}

// ---------- point checks ----------

Json point_witness(int trial, const std::vector<Rational>& xs, const Rational& a,
                   const Rational& b, const Rational& lhs, const Rational& rhs) {
    Json xj = Json::array();
    for (const auto& x : xs) xj.push_back(rat_str(x));
    return Json{{"kind", "point"}, {"trial", trial},    {"x", xj},
                {"a", rat_str(a)}, {"b", rat_str(b)},   {"lhs", rat_str(lhs)},
                {"rhs", rat_str(rhs)}};
}

Rational sign_word_expansion(const std::vector<Rational>& xs, int m, const Rational& a,
                             const Rational& b, std::optional<SpecialPair> tag) {
    const int n = static_cast<int>(xs.size());
    Rational total = 0;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        SignVector xi(n);
        Rational widthpow = 1;
        for (int i = 0; i < n; ++i) {
            xi[i] = (mask & (1u << i)) ? -1 : 1;
            if (xi[i] == -1) widthpow *= rat_pow(xs[i], m);
        }
        Rational beta = tag ? beta_special(xi, m, *tag, xs) : beta_value(xi, m, a, b, xs);
        if (beta == 0) continue;
        total += beta * product_side_at(xs, xi, {a, b}) * widthpow;
    }
    return total;
}

bool check_point(const CheckConfig& cfg, Json& witness) {
    PointSampler sampler(derive_seed(cfg.seed, cfg.id));
    const int budget_per_trial = 200;
    for (int trial = 0; trial < cfg.trials; ++trial) {
        int attempts = 0;
        while (true) {
            if (++attempts > budget_per_trial)
                throw SamplingError("retry budget exhausted in trial " + std::to_string(trial) +
                                    " of " + cfg.id);
            try {
                std::vector<Rational> xs = sampler.draw_distinct(cfg.n, true, {});
                Rational a, b;
                Rational lhs, rhs;
                if (cfg.id == "thm5") {
                    auto ps = sampler.draw_distinct(2, false, xs);
                    a = ps[0];
                    b = ps[1];
                    lhs = rect_sum_two_at(cfg.m, xs, a, b);
                    rhs = sign_word_expansion(xs, cfg.m, a, b, std::nullopt);
                } else if (cfg.id == "cor1a") {
                    a = 1;
                    b = 0;
                    lhs = rect_sum_plain_at(cfg.m, xs);
                    rhs = sign_word_expansion(xs, cfg.m, a, b, SpecialPair::one_zero);
                } else if (cfg.id == "cor1b") {
                    a = 1;
                    b = -1;
                    lhs = rect_sum_even_at(cfg.m, xs);
                    rhs = sign_word_expansion(xs, cfg.m, a, b, SpecialPair::one_minus_one);
                } else if (cfg.id == "cor1c") {
                    a = 0;
                    b = 0;
                    lhs = rect_sum_even_cols_at(cfg.m, xs);
                    rhs = sign_word_expansion(xs, cfg.m, a, b, SpecialPair::zero_zero);
                } else {
                    throw UsageError("not a point identity: " + cfg.id);
                }
                if (lhs != rhs) {
                    witness = point_witness(trial, xs, a, b, lhs, rhs);
                    return false;
                }
                break;
            } catch (const SingularPoint&) {
                continue;  // resample
            }
        }
    }
    return true;
}

bool check_limit(const CheckConfig& cfg, Json& witness) {
    PointSampler sampler(derive_seed(cfg.seed, cfg.id));
    const std::vector<int> widths = {2, 4, 6, 8};
    for (int trial = 0; trial < cfg.trials; ++trial) {
        std::vector<Rational> xs = sampler.draw_distinct(cfg.n, false, {});
        auto ps = sampler.draw_distinct(2, false, xs);
        const Rational a = ps[0], b = ps[1];
        SignVector all_plus(cfg.n, 1);
        Rational target = product_side_at(xs, all_plus, {a, b});
        std::vector<Rational> gaps;
        for (int m : widths) gaps.push_back(abs(rect_sum_two_at(m, xs, a, b) - target));
        for (size_t k = 1; k < gaps.size(); ++k) {
            if (!(gaps[k] < gaps[k - 1])) {
                Json gj = Json::array();
                for (const auto& g : gaps) gj.push_back(rat_str(g));
                witness = point_witness(trial, xs, a, b, gaps[k - 1], gaps[k]);
                witness["kind"] = "limit";
                witness["widths"] = widths;
                witness["gaps"] = gj;
                return false;
            }
        }
    }
    return true;
}

}  // namespace

CheckReport run_check(const CheckConfig& raw) {
    CheckConfig cfg = raw.resolved();
    const CatalogEntry* entry = catalog_find(cfg.id);
    CheckReport report;
    report.config = cfg;
    const auto start = std::chrono::steady_clock::now();
    switch (entry->kind) {
        case CheckKind::series:
            report.pass = check_series(cfg, report.witness);
            break;
        case CheckKind::exact_poly:
            report.pass = check_exact_poly(cfg, report.witness);
            break;
        case CheckKind::point:
            report.pass = check_point(cfg, report.witness);
            break;
        case CheckKind::limit:
            report.pass = check_limit(cfg, report.witness);
            break;
    }
    report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    return report;
}

std::vector<CheckReport> run_suite(const std::vector<CheckConfig>& configs) {
    // validate everything up front so a bad config fails before work starts
    for (const auto& c : configs) (void)c.resolved();

    int threads = static_cast<int>(std::thread::hardware_concurrency());
    if (const char* env = std::getenv("SCHURLAB_THREADS")) {
        try {
            threads = std::stoi(env);
        } catch (const std::exception&) {
            throw UsageError("SCHURLAB_THREADS must be an integer");
        }
    }
    threads = std::max(1, std::min<int>(threads, static_cast<int>(configs.size())));

    std::vector<CheckReport> reports(configs.size());
    std::vector<std::string> errors(configs.size());
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        while (true) {
            size_t idx = next.fetch_add(1);
            if (idx >= configs.size()) return;
            try {
                reports[idx] = run_check(configs[idx]);
            } catch (const std::exception& e) {
                errors[idx] = e.what();
            }
        }
    };
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    for (const auto& err : errors)
        if (!err.empty()) throw SamplingError(err);
    return reports;
}

std::vector<CheckConfig> default_suite(uint64_t seed) {
    std::vector<CheckConfig> configs;
    auto add = [&](const std::string& id, int n = -1, int m = -1, int D = -1, int trials = -1) {
        CheckConfig c;
        c.id = id;
        c.n = n;
        c.m = m;
        c.D = D;
        c.trials = trials;
        c.seed = seed;
        configs.push_back(c);
    };
    add("littlewood1");
    add("littlewood2");
    add("iw2");
    add("eq3");
    add("eq4");
    add("eq5");
    add("thm1");
    add("remark3a");
    add("remark3b");
    add("remark1");
    add("thm5", -1, -1, -1, 10);
    add("cor1a", -1, -1, -1, 10);
    add("cor1b", -1, -1, -1, 10);
    add("cor1c", -1, -1, -1, 10);
    add("thm2");
    add("thm3");
    add("thm4");
    add("cor2a");
    add("cor2b");
    add("cor2c");
    add("eq13");
    add("eq14");
    add("m_to_inf", -1, -1, -1, 3);
    return configs;
}

Json CheckReport::to_json() const {
    Json j;
    j["id"] = config.id;
    j["params"] = Json{{"n", config.n},
                       {"m", config.m},
                       {"D", config.D},
                       {"trials", config.trials},
                       {"seed", config.seed}};
    j["verdict"] = pass ? "pass" : "fail";
    if (!pass) j["witness"] = witness;
    j["elapsed_ms"] = elapsed_ms;
    return j;
}

std::string CheckReport::to_text() const {
    std::string line = pass ? "PASS " : "FAIL ";
    line += config.id;
    line += " n=" + std::to_string(config.n) + " m=" + std::to_string(config.m) +
            " D=" + std::to_string(config.D) + " trials=" + std::to_string(config.trials) +
            " seed=" + std::to_string(config.seed);
    if (!pass) line += " witness: " + witness.dump();
    return line;
}

Json suite_report_json(const std::vector<CheckReport>& reports) {
    Json arr = Json::array();
    for (const auto& r : reports) arr.push_back(r.to_json());
    return arr;
}

std::vector<CheckConfig> suite_from_json(const Json& doc) {
    uint64_t base_seed = 1;
    const Json* list = nullptr;
    if (doc.is_array()) {
        list = &doc;
    } else if (doc.is_object() && doc.contains("checks")) {
        if (doc.contains("seed")) base_seed = doc["seed"].get<uint64_t>();
        list = &doc["checks"];
    } else {
        throw UsageError("suite file must be a JSON array or an object with a 'checks' array");
    }
    std::vector<CheckConfig> configs;
    for (const auto& item : *list) {
        if (!item.is_object() || !item.contains("id"))
            throw UsageError("each suite entry needs an 'id'");
        CheckConfig c;
        c.id = item["id"].get<std::string>();
        c.n = item.value("n", -1);
        c.m = item.value("m", -1);
        c.D = item.value("D", -1);
        c.trials = item.value("trials", -1);
        c.seed = item.value("seed", base_seed);
        configs.push_back(c);
    }
    return configs;
}

}  // namespace schurlab
