#pragma once

#include <gmpxx.h>

#include <string>

#include "schurlab/errors.hpp"

namespace schurlab {

// Arbitrary-precision rational. GMP keeps values in lowest terms with a
// positive denominator, which is exactly the canonical form we need.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw UsageError("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Accepts "p", "-p", "p/q". mpq_set_str does not canonicalize, so we do.
inline Rational parse_rational(const std::string& text) {
    Rational r;
    if (r.set_str(text, 10) != 0) throw UsageError("cannot parse rational: '" + text + "'");
    if (r.get_den() == 0) throw UsageError("rational with zero denominator: '" + text + "'");
    r.canonicalize();
    return r;
}

inline Rational rat_pow(const Rational& base, long exp) {
    if (exp < 0) {
        if (base == 0) throw SingularPoint("0 raised to a negative power");
        Rational inv = 1 / base;
        return rat_pow(inv, -exp);
    }
    Rational acc = 1, b = base;
    while (exp > 0) {
        if (exp & 1) acc *= b;
        b *= b;
        exp >>= 1;
    }
    return acc;
}

inline std::string rat_str(const Rational& r) { return r.get_str(); }

}  // namespace schurlab
