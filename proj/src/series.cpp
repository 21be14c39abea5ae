#include "schurlab/series.hpp"

#include <numeric>

namespace schurlab {

TruncatedSeries::TruncatedSeries(MultiPoly body, int cap) : body_(body.truncated(cap)), cap_(cap) {
    if (cap < 0) throw UsageError("negative series cap");
}

TruncatedSeries TruncatedSeries::one(ContextPtr ctx, int cap) {
    return TruncatedSeries(MultiPoly::constant(std::move(ctx), 1), cap);
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
    if (cap_ != o.cap_) throw UsageError("series cap mismatch in addition");
    return TruncatedSeries(body_ + o.body_, cap_);
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const {
    if (cap_ != o.cap_) throw UsageError("series cap mismatch in subtraction");
    return TruncatedSeries(body_ - o.body_, cap_);
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
    int cap = std::min(cap_, o.cap_);
    return TruncatedSeries(truncated_product(body_, o.body_, cap), cap);
}

TruncatedSeries TruncatedSeries::operator*(const MultiPoly& p) const {
    return TruncatedSeries(truncated_product(body_, p, cap_), cap_);
}

TruncatedSeries TruncatedSeries::retruncated(int cap) const {
    if (cap > cap_)
        throw UsageError("cannot raise a series cap; recompute from scratch instead");
    return TruncatedSeries(body_, cap);
}

bool TruncatedSeries::operator==(const TruncatedSeries& o) const {
    return cap_ == o.cap_ && body_ == o.body_;
}

MultiPoly truncated_product(const MultiPoly& a, const MultiPoly& b, int cap) {
    if (a.context() != b.context() && !(a.context() && b.context() && *a.context() == *b.context()))
        throw UsageError("polynomial context mismatch");
    const auto& ctx = a.context();
    const int n = ctx ? ctx->size() : 0;
    const int ns = ctx ? ctx->num_series() : 0;

    std::vector<std::pair<const ExpVec*, const Rational*>> bt;
    std::vector<int> bdeg;
    for (const auto& [m, c] : b.terms()) {
        bt.emplace_back(&m, &c);
        bdeg.push_back(std::accumulate(m.begin(), m.begin() + ns, 0));
    }

    MultiPoly::TermMap acc;
    ExpVec mono(n);
    for (const auto& [ma, ca] : a.terms()) {
        int da = std::accumulate(ma.begin(), ma.begin() + ns, 0);
        for (size_t k = 0; k < bt.size(); ++k) {
            if (da + bdeg[k] > cap) continue;
            const ExpVec& mb = *bt[k].first;
            for (int i = 0; i < n; ++i) mono[i] = ma[i] + mb[i];
            auto [it, inserted] = acc.emplace(mono, ca * (*bt[k].second));
            if (!inserted) {
                it->second += ca * (*bt[k].second);
                if (it->second == 0) acc.erase(it);
            }
        }
    }

    return MultiPoly::from_terms(ctx, std::move(acc));
}

TruncatedSeries expand_inverse_linear(const MultiPoly& term, int cap) {
    if (term.term_count() != 1)
        throw UsageError("expand_inverse_linear expects a single monomial");
    int d = term.series_degree();
    if (d < 1)
        throw UsageError("expand_inverse_linear needs positive series degree to truncate");
    MultiPoly acc = MultiPoly::constant(term.context(), 1);
    MultiPoly p = MultiPoly::constant(term.context(), 1);
    for (int k = 1; k * d <= cap; ++k) {
        p = p * term;
        acc += p;
    }
    return TruncatedSeries(acc, cap);
}

}  // namespace schurlab
