#pragma once

#include <gmpxx.h>

#include <string>

#include "bilip/errors.hpp"

namespace bilip {

// Exact rational scalar. mpq_class keeps gcd(num,den)=1 and den>0 once
// canonicalized; every constructor below canonicalizes.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw input_error("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational rat_from_string(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0) throw input_error("bad rational literal: '" + s + "'");
    if (q.get_den() == 0) throw input_error("rational with zero denominator: '" + s + "'");
    q.canonicalize();
    return q;
}

inline std::string rat_to_string(const Rational& q) { return q.get_str(); }

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

}  // namespace bilip
