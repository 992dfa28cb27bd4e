#include "eisen/arith/integer.hpp"

#include "eisen/errors.hpp"

namespace eisen {

Integer exact_div(const Integer& a, const Integer& b) {
    if (is_zero(b)) throw InexactDivision("division by zero");
    if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) throw InexactDivision();
    Integer q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Rational exact_div(const Rational& a, const Rational& b) {
    if (is_zero(b)) throw InexactDivision("division by zero");
    return Rational(a / b);
}

Rational inverse(const Rational& x) {
    if (is_zero(x)) throw InexactDivision("division by zero");
    return Rational(1) / x;
}

Integer pow(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

Integer ipow(unsigned long base, unsigned long e) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, e);
    return r;
}

long valuation(const Integer& x, unsigned long p) {
    if (is_zero(x)) throw InfiniteValuation();
    Integer rest;
    Integer pp(p);
    return static_cast<long>(mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), pp.get_mpz_t()));
}

long valuation(const Rational& x, unsigned long p) {
    return valuation(x.get_num(), p) - valuation(x.get_den(), p);
}

std::size_t bit_length(const Integer& x) {
    if (is_zero(x)) return 0;
    return mpz_sizeinbase(x.get_mpz_t(), 2);
}

std::string to_string(const Integer& x) { return x.get_str(10); }

std::string to_string(const Rational& x) {
    if (x.get_den() == 1) return x.get_num().get_str(10);
    return x.get_num().get_str(10) + "/" + x.get_den().get_str(10);
}

Rational parse_rational(const std::string& text) {
    Rational r;
    if (r.set_str(text, 10) != 0) throw ParameterError("not a rational number: " + text);
    if (r.get_den() == 0) throw ParameterError("zero denominator: " + text);
    r.canonicalize();
    return r;
}

bool is_prime(unsigned long n) {
    if (n < 2) return false;
    for (unsigned long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

bool is_odd_prime(unsigned long n) { return n != 2 && is_prime(n); }

unsigned long euler_phi(unsigned long n) {
    unsigned long result = n;
    for (unsigned long d = 2; d * d <= n; ++d) {
        if (n % d != 0) continue;
        while (n % d == 0) n /= d;
        result -= result / d;
    }
    if (n > 1) result -= result / n;
    return result;
}

}  // namespace eisen
