#include "schurlab/weights.hpp"

#include <algorithm>
#include <mutex>

#include "schurlab/symfunc.hpp"

namespace schurlab {

namespace {

ContextPtr make_param_ctx(std::vector<std::string> names) {
    return VarContext::make(0, std::move(names));
}

MultiPoly param_var(const ContextPtr& ctx, const char* name) {
    return MultiPoly::variable(ctx, std::string(name));
}

}  // namespace

ContextPtr param_context_ab() {
    static ContextPtr ctx = make_param_ctx({"a", "b"});
    return ctx;
}

ContextPtr param_context_abc() {
    static ContextPtr ctx = make_param_ctx({"a", "b", "c"});
    return ctx;
}

MultiPoly weight_two(const Partition& lambda) {
    const auto ctx = param_context_ab();
    const MultiPoly a = param_var(ctx, "a"), b = param_var(ctx, "b");
    MultiPoly result = MultiPoly::constant(ctx, 1);
    const auto profile = column_profile(lambda);
    for (size_t idx = 0; idx < profile.size(); ++idx) {
        const int j = static_cast<int>(idx) + 1;
        const int c = profile[idx];
        MultiPoly block = MultiPoly::zero(ctx);
        for (int k = 0; k <= c; ++k)
            block += (j % 2 == 1) ? a.pow(c - k) * b.pow(k) : (a * b).pow(k);
        result = result * block;
    }
    return result;
}

MultiPoly weight_two_strips(const Partition& lambda) {
    const auto ctx = param_context_ab();
    const MultiPoly a = param_var(ctx, "a"), b = param_var(ctx, "b");
    MultiPoly result = MultiPoly::zero(ctx);
    for (const Partition& mu : horizontal_strips(lambda))
        result += a.pow(odd_column_count(mu)) * b.pow(lambda.size() - mu.size());
    return result;
}

Rational weight_two_at(const Partition& lambda, const Rational& a, const Rational& b) {
    return weight_two(lambda).eval({a, b});
}

MultiPoly p_weight(int r) {
    const auto ctx = param_context_abc();
    if (r < 0) return MultiPoly::zero(ctx);
    const MultiPoly a = param_var(ctx, "a"), b = param_var(ctx, "b"), c = param_var(ctx, "c");
    MultiPoly result = MultiPoly::zero(ctx);
    for (int k = 0; k <= r; ++k) {
        MultiPoly left = MultiPoly::zero(ctx);
        for (int s = 0; s <= k; ++s) left += a.pow(k - s) * b.pow(s);
        MultiPoly right = MultiPoly::zero(ctx);
        for (int t = 0; t <= r - k; ++t) right += (a * b).pow(t);
        result += left * right * c.pow(k);
    }
    return result;
}

MultiPoly q_weight(int r) {
    const auto ctx = param_context_abc();
    if (r < 0) return MultiPoly::zero(ctx);
    const MultiPoly abc =
        param_var(ctx, "a") * param_var(ctx, "b") * param_var(ctx, "c");
    MultiPoly result = MultiPoly::zero(ctx);
    for (int k = 0; k <= r; ++k)
        result += complete_h(ctx, {0, 1, 2}, r - k) * abc.pow(k);
    return result;
}

MultiPoly profile_weight(const std::vector<int>& xi) {
    const auto ctx = param_context_abc();
    for (int v : xi)
        if (v < 0) return MultiPoly::zero(ctx);
    MultiPoly result = MultiPoly::constant(ctx, 1);
    for (size_t idx = 0; idx < xi.size(); ++idx) {
        const int pos = static_cast<int>(idx) + 1;
        if (pos == 1)
            result = result * complete_h(ctx, {0, 1, 2}, xi[idx]);
        else if (pos % 2 == 0)
            result = result * p_weight(xi[idx]);
        else
            result = result * q_weight(xi[idx]);
    }
    return result;
}

MultiPoly weight_three(const Partition& lambda, WeightMutation mutation) {
    const auto ctx = param_context_abc();
    const MultiPoly minus_abc =
        -(param_var(ctx, "a") * param_var(ctx, "b") * param_var(ctx, "c"));
    const auto profile = column_profile(lambda);
    const int l = static_cast<int>(profile.size());
    MultiPoly result = MultiPoly::zero(ctx);
    // subsets of decrement positions 1..l; position i lowers entries i, i+1
    for (unsigned mask = 0; mask < (1u << l); ++mask) {
        if (mutation == WeightMutation::drop_delta_term && mask == 1u) continue;
        std::vector<int> xi(profile.begin(), profile.end());
        xi.push_back(0);  // room for decrements at the last position
        int bits = 0;
        for (int i = 0; i < l; ++i)
            if (mask & (1u << i)) {
                --xi[i];
                --xi[i + 1];
                ++bits;
            }
        MultiPoly term = profile_weight(xi);
        if (term.is_zero()) continue;
        result += term * minus_abc.pow(bits);
    }
    return result;
}

MultiPoly weight_three_pairs(const Partition& lambda) {
    const auto ctx = param_context_abc();
    const MultiPoly a = param_var(ctx, "a"), b = param_var(ctx, "b"), c = param_var(ctx, "c");
    MultiPoly result = MultiPoly::zero(ctx);
    for (const Partition& mu : horizontal_strips(lambda))
        for (const Partition& nu : horizontal_strips(mu))
            result += a.pow(odd_column_count(nu)) * b.pow(mu.size() - nu.size()) *
                      c.pow(lambda.size() - mu.size());
    return result;
}

namespace {

MultiPoly family_sum(const Partition& lambda, const PairFilter& filter) {
    const auto ctx = param_context_abc();
    const MultiPoly a = param_var(ctx, "a"), b = param_var(ctx, "b"), c = param_var(ctx, "c");
    MultiPoly result = MultiPoly::zero(ctx);
    for (const StripPair& pair : enumerate_pairs(lambda, filter))
        result += a.pow(pair.nu.odd_column_count()) *
                  b.pow(pair.mu.size() - pair.nu.cells()) *
                  c.pow(lambda.size() - pair.mu.size());
    return result;
}

}  // namespace

MultiPoly pair_family_sum(const Partition& lambda) { return family_sum(lambda, {}); }

MultiPoly pair_family_sum_rows(const Partition& lambda, const std::vector<int>& J) {
    PairFilter filter;
    filter.required_rows = J;
    return family_sum(lambda, filter);
}

std::optional<Partition> delta_partition(const Partition& lambda, const std::vector<int>& J) {
    auto profile = column_profile(lambda);
    profile.push_back(0);
    for (int i : J) {
        if (i < 1 || i > static_cast<int>(profile.size()) - 1) return std::nullopt;
        --profile[i - 1];
        --profile[i];
    }
    for (int v : profile)
        if (v < 0) return std::nullopt;
    return partition_from_profile(profile);
}

SignVector parse_signs(const std::string& word) {
    SignVector xi;
    for (char ch : word) {
        if (ch == '+')
            xi.push_back(1);
        else if (ch == '-')
            xi.push_back(-1);
        else
            throw UsageError("sign word must use only '+' and '-'");
    }
    return xi;
}

std::string signs_string(const SignVector& xi) {
    std::string out;
    for (int v : xi) out += (v > 0 ? '+' : '-');
    return out;
}

namespace {

Rational minus_product(const SignVector& xi, const std::vector<Rational>& xs) {
    if (xi.size() != xs.size()) throw UsageError("sign word length must match point size");
    Rational pi = 1;
    for (size_t i = 0; i < xi.size(); ++i) {
        if (xi[i] != 1 && xi[i] != -1) throw UsageError("sign entries must be +1 or -1");
        if (xi[i] == -1) pi *= xs[i];
    }
    if (pi == 0) throw SingularPoint("zero coordinate in sign product");
    return pi;
}

}  // namespace

Rational d_factor(const SignVector& xi, const std::vector<Rational>& xs, const Rational& z) {
    return 1 - z / minus_product(xi, xs);
}

Rational beta_value(const SignVector& xi, int m, const Rational& a, const Rational& b,
                    const std::vector<Rational>& xs) {
    if (m < 0) throw UsageError("rectangle width must be nonnegative");
    const Rational pi = minus_product(xi, xs);
    auto D = [&](const Rational& z) { return Rational(1 - z / pi); };
    const int minus_count =
        static_cast<int>(std::count(xi.begin(), xi.end(), -1));

    if (minus_count % 2 == 1) {
        if (a == b) throw SingularPoint("parameters must differ for the odd branch");
        const Rational common = D(a) * D(b) / (a - b);
        auto half = [&](const Rational& t) -> Rational {
            if (t == 0) return 0;
            const Rational dt = D(1 / t);
            if (dt == 0) throw SingularPoint("vanishing D-factor at 1/parameter");
            return rat_pow(t, m + 1) / dt;
        };
        return common * (half(a) - half(b));
    }

    const Rational ab = a * b;
    if (ab == 1) throw SingularPoint("parameter product equals one");
    Rational correction = 0;
    if (ab != 0) {
        const Rational dab = D(1 / ab);
        if (dab == 0) throw SingularPoint("vanishing D-factor at the inverse product");
        correction = rat_pow(ab, m + 1) * D(1) / dab;
    }
    return D(ab) / (1 - ab) * (1 - correction);
}

Rational beta_special(const SignVector& xi, int m, SpecialPair tag,
                      const std::vector<Rational>& xs) {
    const int minus_count =
        static_cast<int>(std::count(xi.begin(), xi.end(), -1));
    switch (tag) {
        case SpecialPair::one_zero:
            return 1;
        case SpecialPair::one_minus_one:
            return m % 2 == 0 ? Rational(1) : Rational(1 / minus_product(xi, xs));
        case SpecialPair::zero_zero:
            return minus_count % 2 == 0 ? Rational(1) : Rational(0);
    }
    throw UsageError("unknown special parameter pair");
}

int specialize_weight(const Partition& lambda, SpecialPair tag) {
    const std::vector<int> profile = column_profile(lambda);
    switch (tag) {
        case SpecialPair::one_zero:
            return 1;
        case SpecialPair::one_minus_one:
            for (int c : profile)
                if (c % 2 != 0) return 0;
            return 1;
        case SpecialPair::zero_zero:
            for (size_t j = 0; j < profile.size(); ++j)
                if (j % 2 == 0 && profile[j] != 0) return 0;
            return 1;
    }
    throw UsageError("unknown special parameter pair");
}

}  // namespace schurlab
