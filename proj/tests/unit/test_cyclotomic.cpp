#include "doctest.h"

#include "eisen/cyclotomic/shifted.hpp"
#include "eisen/errors.hpp"

using namespace eisen;

namespace {
IntPoly zx(std::initializer_list<long> c) {
    std::vector<Integer> v;
    for (long x : c) v.emplace_back(x);
    return IntPoly(std::move(v));
}
}  // namespace

TEST_CASE("phi_shifted examples") {
    CHECK(phi_shifted(3, 1).poly == zx({3, 3, 1}));
    CHECK(phi_shifted(3, 2).poly == zx({3, 9, 18, 21, 15, 6, 1}));
    CHECK(phi_shifted(5, 1).poly == zx({5, 10, 10, 5, 1}));
    CHECK_THROWS_AS(phi_shifted(4, 1), ParameterError);
    CHECK_THROWS_AS(phi_shifted(2, 1), ParameterError);
}

TEST_CASE("phi_shifted is Eisenstein and divides (X+1)^{p^n} - 1") {
    for (unsigned long p : {3UL, 5UL, 7UL, 11UL}) {
        for (unsigned n = 1; n <= (p == 3 ? 4U : 2U); ++n) {
            const ShiftedCyclotomic phi = phi_shifted(p, n);
            CHECK(is_eisenstein(phi.poly, p));
            CHECK(phi.d(0) == Integer(p));
            CHECK(phi.poly.evaluate(Integer(0)) == Integer(p));
            long pn = 1;
            for (unsigned k = 0; k < n; ++k) pn *= static_cast<long>(p);
            CHECK(phi.degree() == pn / static_cast<long>(p) * static_cast<long>(p - 1));
            const IntPoly big = pow(zx({1, 1}), static_cast<unsigned long>(pn)) - zx({1});
            CHECK_NOTHROW(exact_divide(big, phi.poly));
            CHECK(cyclotomic_prime_power(p, n).compose(zx({1, 1})) == phi.poly);
        }
    }
}

TEST_CASE("congruence I and II") {
    const auto r = check_congruence_I(3, 2);
    CHECK(r.passed());
    CHECK(r.checks == 7);
    for (unsigned long p : {3UL, 5UL, 7UL}) {
        for (unsigned n = 2; n <= 3; ++n) {
            CHECK(check_congruence_I(p, n).passed());
            CHECK(check_congruence_II(p, n).passed());
        }
    }
    CHECK(check_congruence_I(3, 4).passed());
    CHECK(check_congruence_II(3, 4).passed());
    CHECK_THROWS_AS(check_congruence_I(3, 1), ParameterError);
}

TEST_CASE("binomial congruences") {
    for (unsigned long p : {3UL, 5UL}) {
        const auto r = check_binomial_congruences(p, BinomialBounds{});
        CHECK(r.passed());
        CHECK(r.checks == 2 * 10 + 9);
    }
}

TEST_CASE("binomial congruences on small bounds") {
    const auto r = check_binomial_congruences(3, BinomialBounds{1, 1, 1});
    CHECK(r.passed());
    CHECK(r.checks == 2 + 4);
}
