#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "schurlab/rational.hpp"

namespace schurlab {

class VarContext;
using ContextPtr = std::shared_ptr<const VarContext>;

// Ordered variable set shared by a family of polynomials. Series variables
// (the x_i, subject to degree truncation) come first, parameters (a, b, c)
// after; parameters are never truncated.
class VarContext {
public:
    static ContextPtr make(int num_series, std::vector<std::string> params);

    int size() const { return static_cast<int>(names_.size()); }
    int num_series() const { return num_series_; }
    const std::string& name(int i) const { return names_[i]; }
    const std::vector<std::string>& names() const { return names_; }
    // -1 when absent
    int index_of(const std::string& name) const;

    bool operator==(const VarContext& o) const {
        return num_series_ == o.num_series_ && names_ == o.names_;
    }

private:
    std::vector<std::string> names_;
    int num_series_ = 0;
};

using ExpVec = std::vector<int>;

// Descending graded-lexicographic order: higher total degree first, ties by
// lexicographic comparison of exponent vectors. Map iteration order doubles
// as the canonical print order, so reports are stable.
struct MonoOrder {
    bool operator()(const ExpVec& a, const ExpVec& b) const;
};

// Sparse exact multivariate polynomial. Invariants: no explicit zero terms,
// all exponent vectors sized to the context.
class MultiPoly {
public:
    using TermMap = std::map<ExpVec, Rational, MonoOrder>;

    MultiPoly() = default;
    explicit MultiPoly(ContextPtr ctx) : ctx_(std::move(ctx)) {}

    static MultiPoly zero(ContextPtr ctx) { return MultiPoly(std::move(ctx)); }
    static MultiPoly constant(ContextPtr ctx, const Rational& c);
    static MultiPoly variable(ContextPtr ctx, int var_index);
    static MultiPoly variable(ContextPtr ctx, const std::string& name);
    static MultiPoly monomial(ContextPtr ctx, ExpVec exps, const Rational& coeff);
    // Adopts a prebuilt term map, dropping explicit zeros.
    static MultiPoly from_terms(ContextPtr ctx, TermMap terms);

    const ContextPtr& context() const { return ctx_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int term_count() const { return static_cast<int>(terms_.size()); }

    Rational coeff(const ExpVec& mono) const;

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const MultiPoly& o) { *this = *this * o; return *this; }

    MultiPoly scaled(const Rational& c) const;
    MultiPoly pow(int e) const;

    bool operator==(const MultiPoly& o) const;
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    // Total degree in the series variables only; -1 for the zero polynomial.
    int series_degree() const;
    // Drops every term whose series degree exceeds cap.
    MultiPoly truncated(int cap) const;

    Rational eval(const std::vector<Rational>& point) const;
    // Eliminates one variable by substituting an exact value for it.
    MultiPoly substituted(int var_index, const Rational& value) const;
    // Reinterprets in a context holding at least the same variable names.
    MultiPoly embedded(const ContextPtr& target) const;
    // Applies a permutation of the variables: exponent of var i moves to perm[i].
    MultiPoly permuted(const std::vector<int>& perm) const;

    // Exact division; throws UsageError when the divisor does not divide.
    MultiPoly divided_exact(const MultiPoly& divisor) const;

    std::string to_string() const;

    // First term of *this - o in canonical order, for failure witnesses.
    struct TermDiff {
        std::string monomial;
        Rational lhs, rhs;
    };
    std::optional<TermDiff> first_difference(const MultiPoly& o) const;

    std::string monomial_string(const ExpVec& mono) const;

private:
    void check_same_context(const MultiPoly& o) const;
    void insert_term(const ExpVec& mono, const Rational& c);

    ContextPtr ctx_;
    TermMap terms_;
};

}  // namespace schurlab
