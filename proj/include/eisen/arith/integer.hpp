#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <string>

namespace eisen {

// GMP backs the big-number layer; everything above works with these two names.
using Integer = mpz_class;
using Rational = mpq_class;

/// num/den in lowest terms.
inline Rational make_rational(long num, long den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_zero(const Integer& x) { return sgn(x) == 0; }
inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

inline Integer zero_like(const Integer&) { return Integer(0); }
inline Rational zero_like(const Rational&) { return Rational(0); }
inline Integer one_like(const Integer&) { return Integer(1); }
inline Rational one_like(const Rational&) { return Rational(1); }

inline Integer times_int(const Integer& x, long k) { return x * k; }
inline Rational times_int(const Rational& x, long k) { return x * k; }

/// Multiplicative inverse in Q; throws InexactDivision for zero.
Rational inverse(const Rational& x);

/// Exact quotient; throws InexactDivision when b does not divide a.
Integer exact_div(const Integer& a, const Integer& b);
Rational exact_div(const Rational& a, const Rational& b);

Integer pow(const Integer& base, unsigned long e);
Integer ipow(unsigned long base, unsigned long e);

/// v_p(x) for x != 0; throws InfiniteValuation for zero.
long valuation(const Integer& x, unsigned long p);
/// v_p(x) = v_p(num) - v_p(den) for x != 0.
long valuation(const Rational& x, unsigned long p);

std::size_t bit_length(const Integer& x);

/// Size measure used for pivot selection (numerator bit length).
inline std::size_t pivot_score(const Rational& x) { return bit_length(x.get_num()); }
inline std::size_t pivot_score(const Integer& x) { return bit_length(x); }

std::string to_string(const Integer& x);
/// "n" for integers, "n/d" otherwise.
std::string to_string(const Rational& x);
Rational parse_rational(const std::string& text);

bool is_prime(unsigned long n);
bool is_odd_prime(unsigned long n);
/// Euler's totient.
unsigned long euler_phi(unsigned long n);

}  // namespace eisen
