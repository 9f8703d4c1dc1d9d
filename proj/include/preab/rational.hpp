#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace preab {

// Exact scalars. mpq_class arithmetic keeps canonical form, but the (num,
// den) constructor does not -- always build rationals through rat().
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rat: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational rat(const Integer& num, const Integer& den = 1) {
    if (den == 0) throw std::invalid_argument("rat: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Parses "p", "p/q" or "-p/q" (base 10). Throws on malformed input.
inline Rational rat_from_string(const std::string& s) {
    Rational q;
    if (s.empty() || q.set_str(s, 10) != 0)
        throw std::invalid_argument("rat_from_string: bad rational '" + s + "'");
    q.canonicalize();
    if (q.get_den() <= 0)
        throw std::invalid_argument("rat_from_string: bad denominator in '" + s + "'");
    return q;
}

// Canonical textual form: "p" when the denominator is 1, else "p/q".
inline std::string rat_to_string(const Rational& q) { return q.get_str(); }

inline Rational rat_abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

// Smallest integer n with n >= q.
inline Integer rat_ceil(const Rational& q) {
    Integer n;
    mpz_cdiv_q(n.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return n;
}

}  // namespace preab
