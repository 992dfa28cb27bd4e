#include "eisen/cyclotomic/shifted.hpp"

#include <map>
#include <string>

#include "eisen/errors.hpp"

namespace eisen {

namespace {

void require_odd_prime(unsigned long p) {
    if (!is_odd_prime(p)) throw ParameterError("p must be an odd prime, got " + std::to_string(p));
}

Integer binomial(unsigned long n, unsigned long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

/// (X+1)^e.
IntPoly shifted_power(unsigned long e) {
    std::vector<Integer> c(e + 1);
    for (unsigned long k = 0; k <= e; ++k) c[k] = binomial(e, k);
    return IntPoly(std::move(c));
}

/// a(X^k).
IntPoly inflate(const IntPoly& a, unsigned long k) {
    if (a.is_zero()) return {};
    std::vector<Integer> c(static_cast<std::size_t>(a.degree()) * k + 1);
    for (std::size_t i = 0; i < a.size(); ++i) c[i * k] = a.coeffs()[i];
    return IntPoly(std::move(c));
}

unsigned long upow(unsigned long b, unsigned e) {
    unsigned long r = 1;
    while (e--) r *= b;
    return r;
}

/// Σ_j C(N,j) (a X^{ax} Y^{ay})^{N-j} (b X^{bx} Y^{by})^j.
BivariatePoly two_term_power(long a, unsigned long ax, unsigned long ay, long b, unsigned long bx, unsigned long by,
                             unsigned long N) {
    std::map<unsigned long, std::map<unsigned long, Integer>> terms;
    for (unsigned long j = 0; j <= N; ++j) {
        Integer c = binomial(N, j) * pow(Integer(a), N - j) * pow(Integer(b), j);
        if (is_zero(c)) continue;
        const unsigned long xd = ax * (N - j) + bx * j;
        const unsigned long yd = ay * (N - j) + by * j;
        terms[yd][xd] += c;
    }
    std::vector<IntPoly> ycoeffs;
    for (const auto& [yd, xs] : terms) {
        if (ycoeffs.size() <= yd) ycoeffs.resize(yd + 1);
        std::vector<Integer> xc(xs.rbegin()->first + 1);
        for (const auto& [xd, c] : xs) xc[xd] = c;
        ycoeffs[yd] = IntPoly(std::move(xc));
    }
    return BivariatePoly(std::move(ycoeffs));
}

/// p-part of k.
Integer p_part(unsigned long k, unsigned long p) {
    Integer r = 1;
    while (k % p == 0) {
        k /= p;
        r *= static_cast<unsigned long>(p);
    }
    return r;
}

/// Membership of g in the ideal (c Y^e) of Z[X,Y]. Returns an empty string on success,
/// otherwise a description of the first offending coefficient.
std::string ideal_violation(const BivariatePoly& g, const Integer& c, std::size_t e) {
    for (std::size_t yd = 0; yd < g.size(); ++yd) {
        const IntPoly& row = g.coeffs()[yd];
        for (std::size_t xd = 0; xd < row.size(); ++xd) {
            const Integer& v = row.coeffs()[xd];
            if (is_zero(v)) continue;
            if (yd < e || !mpz_divisible_p(v.get_mpz_t(), c.get_mpz_t()))
                return "coefficient of X^" + std::to_string(xd) + " Y^" + std::to_string(yd) + " is " + to_string(v);
        }
    }
    return {};
}

std::string first_nondivisible(const IntPoly& g, const Integer& modulus) {
    for (std::size_t k = 0; k < g.size(); ++k) {
        const Integer& v = g.coeffs()[k];
        if (!mpz_divisible_p(v.get_mpz_t(), modulus.get_mpz_t()))
            return "coefficient of X^" + std::to_string(k) + " is " + to_string(v);
    }
    return {};
}

std::string pn_label(unsigned long p, unsigned n) { return "p=" + std::to_string(p) + " n=" + std::to_string(n); }

}  // namespace

IntPoly cyclotomic_prime_power(unsigned long p, unsigned n) {
    require_odd_prime(p);
    if (n < 1) throw ParameterError("n must be >= 1");
    const unsigned long step = upow(p, n - 1);
    std::vector<Integer> c(step * (p - 1) + 1);
    for (unsigned long k = 0; k < p; ++k) c[k * step] = 1;
    return IntPoly(std::move(c));
}

ShiftedCyclotomic phi_shifted(unsigned long p, unsigned n) {
    require_odd_prime(p);
    if (n < 1) throw ParameterError("n must be >= 1");
    const unsigned long pn = upow(p, n), pn1 = upow(p, n - 1);
    const IntPoly one = IntPoly::constant(Integer(1));
    ShiftedCyclotomic out;
    out.p = p;
    out.n = n;
    out.poly = exact_divide(shifted_power(pn) - one, shifted_power(pn1) - one);
    return out;
}

bool is_eisenstein(const IntPoly& poly, unsigned long p) {
    if (poly.degree() < 1 || poly.lc() != 1) return false;
    const Integer pp(p), p2 = pp * pp;
    for (long j = 0; j < poly.degree(); ++j)
        if (!mpz_divisible_p(poly.coeffs()[static_cast<std::size_t>(j)].get_mpz_t(), pp.get_mpz_t())) return false;
    return !mpz_divisible_p(poly.coeffs()[0].get_mpz_t(), p2.get_mpz_t());
}

CheckReport check_congruence_I(unsigned long p, unsigned n) {
    if (n < 2) throw ParameterError("congruence (I) needs n >= 2");
    const ShiftedCyclotomic cur = phi_shifted(p, n);
    const ShiftedCyclotomic prev = phi_shifted(p, n - 1);
    const Integer pn = ipow(p, n), pn1 = ipow(p, n - 1);
    const long threshold = static_cast<long>(upow(p, n - 1) * (p - 2));
    CheckReport rep{"cong-I", pn_label(p, n), 0, {}};
    for (long j = 0; j <= cur.degree(); ++j) {
        const bool divisible_by_p = j % static_cast<long>(p) == 0;
        const Integer value = divisible_by_p ? Integer(cur.d(j) - prev.d(j / static_cast<long>(p))) : cur.d(j);
        const Integer& modulus = j <= threshold ? pn : pn1;
        rep.expect(mpz_divisible_p(value.get_mpz_t(), modulus.get_mpz_t()), [&] {
            return CheckFailure{"j=" + std::to_string(j), "divisible by " + to_string(modulus), to_string(value)};
        });
    }
    return rep;
}

CheckReport check_congruence_II(unsigned long p, unsigned n) {
    if (n < 2) throw ParameterError("congruence (II) needs n >= 2");
    const unsigned long pn = upow(p, n), pn1 = upow(p, n - 1), pn2 = upow(p, n - 2);
    const Integer modulus = ipow(p, n);
    const IntPoly cur = phi_shifted(p, n).poly;
    const IntPoly prev = phi_shifted(p, n - 1).poly;
    const IntPoly lhs = cur - inflate(prev, p);
    const IntPoly rhs = (inflate(shifted_power(pn2), p) - shifted_power(pn1)).shifted(pn1 * (p - 2));
    CheckReport rep{"cong-II", pn_label(p, n), 0, {}};
    const std::string bad = first_nondivisible(lhs - rhs, modulus);
    rep.expect(bad.empty(), [&] { return CheckFailure{"(II)", "difference ≡ 0 mod " + to_string(modulus), bad}; });

    // F_k(X) = Φ_{p^k}(X+1) + X^{p^k - 2p^{k-1}} (X+1)^{p^{k-1}}.
    auto F = [&](const IntPoly& phi, unsigned long pk, unsigned long pk1) {
        return phi + shifted_power(pk1).shifted(pk - 2 * pk1);
    };
    const IntPoly Fn = F(cur, pn, pn1);
    const IntPoly Fn1 = F(prev, pn1, pn2);
    const std::string bad2 = first_nondivisible(Fn - inflate(Fn1, p), modulus);
    rep.expect(bad2.empty(), [&] { return CheckFailure{"(II')", "difference ≡ 0 mod " + to_string(modulus), bad2}; });
    return rep;
}

CheckReport check_binomial_congruences(unsigned long p, const BinomialBounds& bounds) {
    require_odd_prime(p);
    CheckReport rep{"binom", "p=" + std::to_string(p), 0, {}};
    const long lp = static_cast<long>(p);
    for (unsigned long k = 1; k <= bounds.k_max; ++k) {
        const BivariatePoly power = two_term_power(1, 1, 0, lp, 0, 1, k);
        // X^k + k X^{k-1} p Y.
        BivariatePoly linear({IntPoly::monomial(Integer(1), k), IntPoly::monomial(Integer(k * p), k - 1)});
        const Integer kp = p_part(k, p);
        const std::string bad2 = ideal_violation(power - linear, kp * p * p, 2);
        rep.expect(bad2.empty(), [&] {
            return CheckFailure{"k=" + std::to_string(k) + " mod k[p]p^2Y^2", "member of ideal", bad2};
        });
        const BivariatePoly xk({IntPoly::monomial(Integer(1), k)});
        const std::string bad1 = ideal_violation(power - xk, kp * p, 1);
        rep.expect(bad1.empty(), [&] {
            return CheckFailure{"k=" + std::to_string(k) + " mod k[p]pY", "member of ideal", bad1};
        });
    }
    for (unsigned alpha = 0; alpha <= bounds.alpha_max; ++alpha) {
        for (unsigned beta = 0; beta <= bounds.beta_max; ++beta) {
            const unsigned long pb = upow(p, beta), pa = upow(p, alpha);
            const BivariatePoly lhs = two_term_power(1, 1, 0, 1, 0, 1, pb * pa);
            const BivariatePoly rhs = two_term_power(1, pb, 0, 1, 0, pb, pa);
            const Integer modulus = ipow(p, alpha + 1);
            const std::string bad = ideal_violation(lhs - rhs, modulus, 0);
            rep.expect(bad.empty(), [&] {
                return CheckFailure{"alpha=" + std::to_string(alpha) + " beta=" + std::to_string(beta),
                                    "difference ≡ 0 mod " + to_string(modulus), bad};
            });
        }
    }
    return rep;
}

}  // namespace eisen
