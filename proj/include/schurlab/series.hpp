#pragma once

#include "schurlab/poly.hpp"

namespace schurlab {

// Power series in the context's series variables, kept exactly up to a total
// degree cap. Parameter variables never count toward the cap.
class TruncatedSeries {
public:
    TruncatedSeries(MultiPoly body, int cap);

    static TruncatedSeries one(ContextPtr ctx, int cap);

    const MultiPoly& body() const { return body_; }
    int cap() const { return cap_; }

    TruncatedSeries operator+(const TruncatedSeries& o) const;
    TruncatedSeries operator-(const TruncatedSeries& o) const;
    // Result cap is min(cap(), o.cap()).
    TruncatedSeries operator*(const TruncatedSeries& o) const;
    TruncatedSeries operator*(const MultiPoly& p) const;

    TruncatedSeries retruncated(int cap) const;

    bool operator==(const TruncatedSeries& o) const;
    bool operator!=(const TruncatedSeries& o) const { return !(*this == o); }

private:
    MultiPoly body_;
    int cap_;
};

// Degree-capped product that skips term pairs exceeding the cap.
MultiPoly truncated_product(const MultiPoly& a, const MultiPoly& b, int cap);

// Geometric expansion of (1 - t)^{-1} up to the cap, where t is a single
// monomial with positive series degree (otherwise truncation cannot close).
TruncatedSeries expand_inverse_linear(const MultiPoly& term, int cap);

}  // namespace schurlab
