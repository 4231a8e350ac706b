#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <string>

namespace approxlab {

/// Exact rational used for every doubling constant, bound, and report field.
/// Pass/fail logic never touches floating point.
using Rational = mpq_class;

inline Rational make_ratio(std::uint64_t num, std::uint64_t den) {
    Rational q{mpz_class(num), mpz_class(den)};
    q.canonicalize();
    return q;
}

/// q^e with an integer exponent, e >= 0.
inline Rational rational_pow(const Rational& q, unsigned long e) {
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), q.get_num_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), q.get_den_mpz_t(), e);
    r.canonicalize();
    return r;
}

/// Smallest integer >= q.
inline mpz_class rational_ceil(const Rational& q) {
    mpz_class c;
    mpz_cdiv_q(c.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return c;
}

/// Rendered as "num/den" ("num" when the denominator is 1).
inline std::string to_frac_string(const Rational& q) {
    if (q.get_den() == 1)
        return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

} // namespace approxlab
