#pragma once

#include <optional>

#include "schurlab/partition.hpp"
#include "schurlab/poly.hpp"
#include "schurlab/strips.hpp"

namespace schurlab {

// Parameter-only contexts shared by all weight polynomials.
ContextPtr param_context_ab();   // variables a, b
ContextPtr param_context_abc();  // variables a, b, c

// Two-parameter weight of a partition: product over the column profile of
// geometric blocks, sum over k of a^(c_j-k) b^k for odd j and of (ab)^k for
// even j. Polynomial in a, b with nonnegative integer coefficients.
MultiPoly weight_two(const Partition& lambda);

// Independent route: sum over horizontal strips mu of lambda of
// a^(odd columns of mu) * b^(cells of lambda/mu).
MultiPoly weight_two_strips(const Partition& lambda);

Rational weight_two_at(const Partition& lambda, const Rational& a, const Rational& b);

// Three-parameter block weights: position 1 of a profile carries the
// complete-homogeneous weight, even positions carry p_weight, odd positions
// from 3 up carry q_weight. Negative index gives zero, index 0 gives one.
MultiPoly p_weight(int r);
MultiPoly q_weight(int r);

// Product of block weights along a profile entry vector; zero when any
// entry is negative.
MultiPoly profile_weight(const std::vector<int>& xi);

enum class WeightMutation { none, drop_delta_term };

// Three-parameter weight via signed inclusion-exclusion over profile
// decrements. The mutation hook deliberately drops the first decrement term
// so the harness can prove a wrong weight is caught.
MultiPoly weight_three(const Partition& lambda, WeightMutation mutation = WeightMutation::none);

// Independent route: sum over pairs (mu, nu), mu a horizontal strip of
// lambda and nu a horizontal strip of mu, of a^c(nu) b^|mu/nu| c^|lambda/mu|.
MultiPoly weight_three_pairs(const Partition& lambda);

// Weighted sum over the full ambient-block pair family of lambda.
MultiPoly pair_family_sum(const Partition& lambda);

// Same sum restricted to pairs whose incompatible rows include all of J.
MultiPoly pair_family_sum_rows(const Partition& lambda, const std::vector<int>& J);

// Partition whose profile is the J-decrement of lambda's profile, when all
// entries stay nonnegative.
std::optional<Partition> delta_partition(const Partition& lambda, const std::vector<int>& J);

// Sign word over {+1,-1}; entry i matches series variable x_i.
using SignVector = std::vector<int>;

SignVector parse_signs(const std::string& word);  // "+-+" style
std::string signs_string(const SignVector& xi);

// 1 - z / prod of x_i over the minus positions.
Rational d_factor(const SignVector& xi, const std::vector<Rational>& xs, const Rational& z);

// Expansion coefficient at a rational point; the two branches depend on the
// parity of the number of minus signs. Throws SingularPoint on a vanishing
// denominator (a == b, or a D-factor hitting zero).
Rational beta_value(const SignVector& xi, int m, const Rational& a, const Rational& b,
                    const std::vector<Rational>& xs);

enum class SpecialPair { one_zero, one_minus_one, zero_zero };

// Closed forms for the three special parameter pairs.
Rational beta_special(const SignVector& xi, int m, SpecialPair tag,
                      const std::vector<Rational>& xs);

// Value of weight_two at the special pair, read directly off the column
// profile: (1,0) -> 1 always; (1,-1) -> 1 iff every profile entry is even;
// (0,0) -> 1 iff the entries at odd positions all vanish. Agrees with
// evaluating the weight polynomial at the pair.
int specialize_weight(const Partition& lambda, SpecialPair tag);

}  // namespace schurlab
