#include "schurlab/symfunc.hpp"

#include <map>
#include <mutex>

#include "schurlab/det.hpp"

namespace schurlab {

MultiPoly complete_h(const ContextPtr& ctx, const std::vector<int>& vars, int r) {
    if (r < 0) return MultiPoly::zero(ctx);
    MultiPoly::TermMap terms;
    ExpVec mono(ctx->size(), 0);
    auto rec = [&](auto&& self, size_t pos, int left) -> void {
        if (pos + 1 == vars.size()) {
            mono[vars[pos]] = left;
            terms.emplace(mono, Rational(1));
            mono[vars[pos]] = 0;
            return;
        }
        for (int e = 0; e <= left; ++e) {
            mono[vars[pos]] = e;
            self(self, pos + 1, left - e);
            mono[vars[pos]] = 0;
        }
    };
    if (vars.empty()) return r == 0 ? MultiPoly::constant(ctx, 1) : MultiPoly::zero(ctx);
    rec(rec, 0, r);
    return MultiPoly::from_terms(ctx, std::move(terms));
}

MultiPoly elementary_e(const ContextPtr& ctx, const std::vector<int>& vars, int r) {
    if (r < 0 || r > static_cast<int>(vars.size())) return MultiPoly::zero(ctx);
    MultiPoly::TermMap terms;
    ExpVec mono(ctx->size(), 0);
    auto rec = [&](auto&& self, size_t pos, int left) -> void {
        if (left == 0) {
            terms.emplace(mono, Rational(1));
            return;
        }
        if (pos >= vars.size() || static_cast<int>(vars.size() - pos) < left) return;
        mono[vars[pos]] = 1;
        self(self, pos + 1, left - 1);
        mono[vars[pos]] = 0;
        self(self, pos + 1, left);
    };
    rec(rec, 0, r);
    return MultiPoly::from_terms(ctx, std::move(terms));
}

ContextPtr x_context(int n) {
    static std::mutex mu;
    static std::map<int, ContextPtr> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    auto ctx = VarContext::make(n, {});
    cache.emplace(n, ctx);
    return ctx;
}

MultiPoly schur(const Partition& lambda, int n) {
    static std::mutex mu;
    static std::map<std::pair<std::vector<int>, int>, MultiPoly> cache;
    const auto key = std::make_pair(lambda.parts(), n);
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }

    ContextPtr ctx = x_context(n);
    MultiPoly result = MultiPoly::zero(ctx);
    if (lambda.length() <= n) {
        const int l = std::max(lambda.length(), 1);
        std::vector<int> vars(n);
        for (int i = 0; i < n; ++i) vars[i] = i;
        PolyMatrix m(l, std::vector<MultiPoly>(l, MultiPoly::zero(ctx)));
        for (int i = 1; i <= l; ++i)
            for (int j = 1; j <= l; ++j)
                m[i - 1][j - 1] = complete_h(ctx, vars, lambda.at(i) - i + j);
        result = det_exact(m);
    }

    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(key, result);
    return result;
}

MultiPoly schur_tableaux(const Partition& lambda, int n) {
    ContextPtr ctx = x_context(n);
    if (lambda.length() > n) return MultiPoly::zero(ctx);
    if (lambda.empty()) return MultiPoly::constant(ctx, 1);

    MultiPoly::TermMap terms;
    const int rows = lambda.length();
    std::vector<std::vector<int>> t(rows);
    for (int r = 0; r < rows; ++r) t[r].assign(lambda.at(r + 1), 0);
    ExpVec mono(ctx->size(), 0);

    // fill row-major; rows weakly increase, columns strictly increase
    auto rec = [&](auto&& self, int r, int c) -> void {
        if (r == rows) {
            auto [it, inserted] = terms.emplace(mono, Rational(1));
            if (!inserted) it->second += 1;
            return;
        }
        int nr = r, nc = c + 1;
        if (nc >= static_cast<int>(t[r].size())) {
            nr = r + 1;
            nc = 0;
        }
        int lo = 1;
        if (c > 0) lo = std::max(lo, t[r][c - 1]);
        if (r > 0) lo = std::max(lo, t[r - 1][c] + 1);
        for (int v = lo; v <= n; ++v) {
            t[r][c] = v;
            ++mono[v - 1];
            self(self, nr, nc);
            --mono[v - 1];
        }
        t[r][c] = 0;
    };
    rec(rec, 0, 0);
    return MultiPoly::from_terms(ctx, std::move(terms));
}

Rational schur_eval(const Partition& lambda, const std::vector<Rational>& xs) {
    const int n = static_cast<int>(xs.size());
    if (n == 0) return lambda.empty() ? Rational(1) : Rational(0);
    if (lambda.length() > n) return 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (xs[i] == xs[j]) throw SingularPoint("bialternant needs distinct coordinates");

    RationalMatrix num(n, std::vector<Rational>(n));
    RationalMatrix den(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 1; j <= n; ++j) {
            num[i][j - 1] = rat_pow(xs[i], lambda.at(j) + n - j);
            den[i][j - 1] = rat_pow(xs[i], n - j);
        }
    return det_rational(num) / det_rational(den);
}

std::vector<Partition> pieri_expand(const Partition& mu, int k, int n) {
    if (k < 0) throw UsageError("strip size must be nonnegative");
    std::vector<Partition> out;
    const int rows = std::min(mu.length() + 1, n);
    std::vector<int> lam(rows, 0);
    // interlacing downward: mu_{i-1} >= lambda_i >= mu_i, total excess k
    auto rec = [&](auto&& self, int row, int used) -> void {
        if (row == rows) {
            if (used == k) out.emplace_back(lam);
            return;
        }
        int lo = mu.at(row + 1);
        int hi = row == 0 ? mu.at(1) + (k - used) : std::min(mu.at(row), lo + (k - used));
        for (int v = hi; v >= lo; --v) {
            lam[row] = v;
            self(self, row + 1, used + v - mu.at(row + 1));
            lam[row] = 0;
        }
    };
    rec(rec, 0, 0);
    return out;
}

}  // namespace schurlab
