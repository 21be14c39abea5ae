#include "schurlab/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace schurlab {

ContextPtr VarContext::make(int num_series, std::vector<std::string> params) {
    if (num_series < 0) throw UsageError("negative series variable count");
    auto ctx = std::make_shared<VarContext>();
    for (int i = 1; i <= num_series; ++i) ctx->names_.push_back("x" + std::to_string(i));
    for (auto& p : params) ctx->names_.push_back(std::move(p));
    ctx->num_series_ = num_series;
    for (size_t i = 0; i < ctx->names_.size(); ++i)
        for (size_t j = i + 1; j < ctx->names_.size(); ++j)
            if (ctx->names_[i] == ctx->names_[j])
                throw UsageError("duplicate variable name: " + ctx->names_[i]);
    return ctx;
}

int VarContext::index_of(const std::string& name) const {
    for (int i = 0; i < size(); ++i)
        if (names_[i] == name) return i;
    return -1;
}

bool MonoOrder::operator()(const ExpVec& a, const ExpVec& b) const {
    int da = std::accumulate(a.begin(), a.end(), 0);
    int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da > db;
    return a > b;  // lexicographic: earlier variable with higher exponent wins
}

MultiPoly MultiPoly::constant(ContextPtr ctx, const Rational& c) {
    MultiPoly p(std::move(ctx));
    if (c != 0) p.terms_.emplace(ExpVec(p.ctx_->size(), 0), c);
    return p;
}

MultiPoly MultiPoly::variable(ContextPtr ctx, int var_index) {
    if (var_index < 0 || var_index >= ctx->size()) throw UsageError("variable index out of range");
    MultiPoly p(std::move(ctx));
    ExpVec e(p.ctx_->size(), 0);
    e[var_index] = 1;
    p.terms_.emplace(std::move(e), Rational(1));
    return p;
}

MultiPoly MultiPoly::variable(ContextPtr ctx, const std::string& name) {
    int idx = ctx->index_of(name);
    if (idx < 0) throw UsageError("unknown variable: " + name);
    return variable(std::move(ctx), idx);
}

MultiPoly MultiPoly::monomial(ContextPtr ctx, ExpVec exps, const Rational& coeff) {
    if (static_cast<int>(exps.size()) != ctx->size())
        throw UsageError("exponent vector size does not match context");
    MultiPoly p(std::move(ctx));
    if (coeff != 0) p.terms_.emplace(std::move(exps), coeff);
    return p;
}

MultiPoly MultiPoly::from_terms(ContextPtr ctx, TermMap terms) {
    MultiPoly p(std::move(ctx));
    for (auto it = terms.begin(); it != terms.end();) {
        if (static_cast<int>(it->first.size()) != p.ctx_->size())
            throw UsageError("exponent vector size does not match context");
        it = (it->second == 0) ? terms.erase(it) : std::next(it);
    }
    p.terms_ = std::move(terms);
    return p;
}

Rational MultiPoly::coeff(const ExpVec& mono) const {
    auto it = terms_.find(mono);
    return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::check_same_context(const MultiPoly& o) const {
    if (ctx_ == o.ctx_) return;
    if (ctx_ && o.ctx_ && *ctx_ == *o.ctx_) return;
    throw UsageError("polynomial context mismatch");
}

void MultiPoly::insert_term(const ExpVec& mono, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(mono, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    MultiPoly r = *this;
    r += o;
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    check_same_context(o);
    for (const auto& [m, c] : o.terms_) insert_term(m, c);
    return *this;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    MultiPoly r = *this;
    r -= o;
    return r;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    check_same_context(o);
    for (const auto& [m, c] : o.terms_) insert_term(m, -c);
    return *this;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(ctx_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    check_same_context(o);
    MultiPoly r(ctx_);
    const int n = ctx_ ? ctx_->size() : 0;
    ExpVec mono(n);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            for (int i = 0; i < n; ++i) mono[i] = ma[i] + mb[i];
            r.insert_term(mono, ca * cb);
        }
    }
    return r;
}

MultiPoly MultiPoly::scaled(const Rational& c) const {
    MultiPoly r(ctx_);
    if (c == 0) return r;
    for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
    return r;
}

MultiPoly MultiPoly::pow(int e) const {
    if (e < 0) throw UsageError("negative polynomial power");
    MultiPoly acc = constant(ctx_, 1);
    MultiPoly base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
    check_same_context(o);
    return terms_ == o.terms_;
}

int MultiPoly::series_degree() const {
    int best = -1;
    const int ns = ctx_ ? ctx_->num_series() : 0;
    for (const auto& [m, c] : terms_) {
        int d = std::accumulate(m.begin(), m.begin() + ns, 0);
        best = std::max(best, d);
    }
    return best;
}

MultiPoly MultiPoly::truncated(int cap) const {
    MultiPoly r(ctx_);
    const int ns = ctx_ ? ctx_->num_series() : 0;
    for (const auto& [m, c] : terms_) {
        int d = std::accumulate(m.begin(), m.begin() + ns, 0);
        if (d <= cap) r.terms_.emplace(m, c);
    }
    return r;
}

Rational MultiPoly::eval(const std::vector<Rational>& point) const {
    if (static_cast<int>(point.size()) != (ctx_ ? ctx_->size() : 0))
        throw UsageError("evaluation point size does not match context");
    Rational total = 0;
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (size_t i = 0; i < point.size(); ++i)
            if (m[i] != 0) t *= rat_pow(point[i], m[i]);
        total += t;
    }
    return total;
}

MultiPoly MultiPoly::substituted(int var_index, const Rational& value) const {
    if (!ctx_ || var_index < 0 || var_index >= ctx_->size())
        throw UsageError("substitution index out of range");
    MultiPoly r(ctx_);
    for (const auto& [m, c] : terms_) {
        ExpVec mono = m;
        Rational coeff = c;
        if (mono[var_index] != 0) {
            coeff *= rat_pow(value, mono[var_index]);
            mono[var_index] = 0;
        }
        r.insert_term(mono, coeff);
    }
    return r;
}

MultiPoly MultiPoly::embedded(const ContextPtr& target) const {
    if (!ctx_) throw UsageError("embedding a polynomial without context");
    std::vector<int> dest(ctx_->size());
    for (int i = 0; i < ctx_->size(); ++i) {
        dest[i] = target->index_of(ctx_->name(i));
        if (dest[i] < 0) throw UsageError("target context lacks variable " + ctx_->name(i));
    }
    MultiPoly r(target);
    for (const auto& [m, c] : terms_) {
        ExpVec mono(target->size(), 0);
        for (int i = 0; i < ctx_->size(); ++i) mono[dest[i]] = m[i];
        r.insert_term(mono, c);
    }
    return r;
}

MultiPoly MultiPoly::permuted(const std::vector<int>& perm) const {
    if (!ctx_ || static_cast<int>(perm.size()) != ctx_->size())
        throw UsageError("permutation size does not match context");
    MultiPoly r(ctx_);
    for (const auto& [m, c] : terms_) {
        ExpVec mono(ctx_->size(), 0);
        for (int i = 0; i < ctx_->size(); ++i) mono[perm[i]] = m[i];
        r.insert_term(mono, c);
    }
    return r;
}

MultiPoly MultiPoly::divided_exact(const MultiPoly& divisor) const {
    check_same_context(divisor);
    if (divisor.is_zero()) throw UsageError("exact division by zero polynomial");
    MultiPoly rem = *this;
    MultiPoly quot(ctx_);
    const auto& [dm, dc] = *divisor.terms_.begin();
    const int n = ctx_->size();
    while (!rem.is_zero()) {
        const auto& [rm, rc] = *rem.terms_.begin();
        ExpVec q(n);
        for (int i = 0; i < n; ++i) {
            q[i] = rm[i] - dm[i];
            if (q[i] < 0) throw UsageError("exact division failed: leading term not divisible");
        }
        Rational qc = rc / dc;
        MultiPoly qt = monomial(ctx_, std::move(q), qc);
        quot += qt;
        rem -= qt * divisor;
    }
    return quot;
}

std::string MultiPoly::monomial_string(const ExpVec& mono) const {
    std::string out;
    for (int i = 0; i < ctx_->size(); ++i) {
        if (mono[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += ctx_->name(i);
        if (mono[i] != 1) out += "^" + std::to_string(mono[i]);
    }
    return out.empty() ? "1" : out;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational a = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        std::string vars = monomial_string(m);
        if (vars == "1") {
            os << rat_str(a);
        } else if (a == 1) {
            os << vars;
        } else {
            os << rat_str(a) << "*" << vars;
        }
    }
    return os.str();
}

std::optional<MultiPoly::TermDiff> MultiPoly::first_difference(const MultiPoly& o) const {
    check_same_context(o);
    MultiPoly d = *this - o;
    if (d.is_zero()) return std::nullopt;
    const auto& [m, c] = *d.terms_.begin();
    (void)c;
    return TermDiff{monomial_string(m), coeff(m), o.coeff(m)};
}

}  // namespace schurlab
