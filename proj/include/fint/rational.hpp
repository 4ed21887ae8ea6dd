#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "fint/errors.hpp"

namespace fint {

// Exact rationals are GMP's canonical mpq (denominator > 0, gcd(num, den) = 1
// after every operation).
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational parse_rational(const std::string& s) {
    if (s.empty()) throw input_error("empty rational literal");
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw input_error("bad rational literal: " + s);
    if (q.get_den() == 0) throw input_error("zero denominator: " + s);
    q.canonicalize();
    return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline Integer lcm(const Integer& a, const Integer& b) {
    Integer r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Integer gcd(const Integer& a, const Integer& b) {
    Integer r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

}  // namespace fint
