#include "doctest.h"

#include "eisen/arith/dense_poly.hpp"
#include "eisen/arith/integer.hpp"
#include "eisen/arith/linear_system.hpp"
#include "eisen/arith/resultant.hpp"
#include "eisen/errors.hpp"
#include "generators.hpp"

using namespace eisen;
using ZX = DensePoly<Integer>;
using QX = DensePoly<Rational>;

namespace {
ZX zx(std::initializer_list<long> c) {
    std::vector<Integer> v;
    for (long x : c) v.emplace_back(x);
    return ZX(std::move(v));
}
QX qx(std::initializer_list<long> c) {
    std::vector<Rational> v;
    for (long x : c) v.emplace_back(x);
    return QX(std::move(v));
}
}  // namespace

TEST_CASE("integer helpers") {
    CHECK(valuation(Integer(250), 5) == 3);
    CHECK(valuation(Rational(3, 25), 5) == -2);
    CHECK_THROWS_AS(valuation(Integer(0), 3), InfiniteValuation);
    CHECK(to_string(make_rational(-6, 4)) == "-3/2");
    CHECK(parse_rational("-3/2") == Rational(-3, 2));
    CHECK_THROWS_AS(parse_rational("x"), ParameterError);
    CHECK(euler_phi(40) == 16);
    CHECK(is_odd_prime(211));
    CHECK_FALSE(is_odd_prime(2));
    CHECK_THROWS_AS(exact_div(Integer(7), Integer(2)), InexactDivision);
}

TEST_CASE("polynomial arithmetic examples") {
    CHECK(zx({1, 1}) * zx({-1, 1}) == zx({-1, 0, 1}));
    const ZX cube = pow(zx({1, 1}), 3) - zx({1});
    CHECK(exact_divide(cube, zx({0, 1})) == zx({3, 3, 1}));
    CHECK_THROWS_AS(exact_divide(zx({1, 0, 1}), zx({1, 1})), InexactDivision);
    CHECK(zx({1, 2, 3}).derivative() == zx({2, 6}));
    CHECK(zx({1, 2, 3}).evaluate(Integer(2)) == Integer(17));
    CHECK(zx({0, 0, 1}).compose(zx({1, 1})) == zx({1, 2, 1}));
    CHECK(ZX().degree() == -1);
    CHECK(zx({0, 0}).is_zero());
    CHECK(to_string(zx({-3, 9, -6, 1})) == "X^3 - 6*X^2 + 9*X - 3");
}

TEST_CASE("resultant examples") {
    CHECK(resultant(qx({1, 0, 1}), qx({-2, 1})) == Rational(5));
    CHECK(resultant(qx({0, 1}), qx({0, 1})) == Rational(0));
    const QX phi9 = qx({1, 0, 0, 1, 0, 0, 1});
    CHECK(resultant(phi9, qx({-1, 1})) == Rational(3));
    CHECK(resultant_domain(zx({1, 0, 0, 1, 0, 0, 1}), zx({-1, 1})) == Integer(3));
    CHECK(resultant_domain(zx({1, 0, 1}), zx({-2, 1})) == Integer(5));
    CHECK_THROWS_AS(resultant(QX(), QX()), ParameterError);
}

TEST_CASE("resultant properties on random polynomials") {
    for (int trial = 0; trial < 60; ++trial) {
        const ZX a = testgen::random_int_poly(5, 6);
        const ZX b = testgen::random_int_poly(5, 6);
        const ZX c = testgen::random_int_poly(4, 6);
        const Integer rab = resultant_domain(a, b);
        const Integer rba = resultant_domain(b, a);
        const long sign = (a.degree() * b.degree()) % 2 ? -1 : 1;
        CHECK(rab == rba * sign);
        CHECK(resultant_domain(a, b * c) == rab * resultant_domain(a, c));
        const Rational rq = resultant(testgen::to_rational(a), testgen::to_rational(b));
        CHECK(rq == Rational(rab));
    }
}

TEST_CASE("exact division property") {
    for (int trial = 0; trial < 100; ++trial) {
        const ZX a = testgen::random_int_poly(6, 20);
        const ZX b = testgen::random_int_poly(4, 20);
        CHECK(exact_divide(a * b, b) == a);
    }
}

TEST_CASE("solve_unique examples") {
    LinearSystem<Rational> id(3, 3);
    for (int k = 0; k < 3; ++k) {
        id.at(k, k) = 1;
        id.rhs[k] = make_rational(k + 7, 3);
    }
    CHECK(solve_unique(id) == id.rhs);

    LinearSystem<Rational> one(1, 1);
    one.at(0, 0) = 2;
    one.rhs[0] = 3;
    CHECK(solve_unique(one)[0] == Rational(3, 2));

    LinearSystem<Rational> bad(2, 1);
    bad.at(0, 0) = 1;
    bad.at(1, 0) = 1;
    bad.rhs = {Rational(1), Rational(2)};
    CHECK_THROWS_AS(solve_unique(bad), InconsistentSystem);

    LinearSystem<Rational> under(1, 2);
    under.at(0, 0) = 1;
    under.at(0, 1) = 1;
    under.rhs = {Rational(1)};
    CHECK_THROWS_AS(solve_unique(under), UnderdeterminedSystem);
}

TEST_CASE("solve_unique reproduces rhs on random systems") {
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = static_cast<std::size_t>(testgen::small_int(1, 6));
        const std::size_t rows = n + static_cast<std::size_t>(testgen::small_int(0, 3));
        LinearSystem<Rational> sys(rows, n);
        LinearSystem<Integer> zsys(rows, n);
        std::vector<Rational> x(n);
        for (auto& v : x) {
            v = make_rational(testgen::small_int(-9, 9), testgen::small_int(1, 5));
        }
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < n; ++c) {
                const long v = r == c ? testgen::small_int(1, 9) : testgen::small_int(-9, 9) * (r > c);
                sys.at(r, c) = v;
                zsys.at(r, c) = v;
            }
        for (std::size_t r = 0; r < rows; ++r) {
            Rational acc = 0;
            for (std::size_t c = 0; c < n; ++c) acc += sys.at(r, c) * x[c];
            sys.rhs[r] = acc;
        }
        CHECK(solve_unique(sys) == x);

        Integer den = 1;
        for (const auto& v : x) den *= v.get_den();
        for (std::size_t r = 0; r < rows; ++r) zsys.rhs[r] = Integer(sys.rhs[r] * den);
        const auto ff = solve_fraction_free(zsys);
        CHECK(satisfies(zsys, ff));
        for (std::size_t c = 0; c < n; ++c)
        {
            Rational got(ff.numerators[c], ff.denominator);
            got.canonicalize();
            CHECK(got == x[c] * den);
        }
    }
}

TEST_CASE("bareiss determinant") {
    std::vector<Integer> m = {Integer(2), Integer(1), Integer(1), Integer(3)};
    CHECK(determinant_fraction_free(m, 2, Integer(1)) == Integer(5));
    std::vector<Integer> s = {Integer(0), Integer(1), Integer(1), Integer(0)};
    CHECK(determinant_fraction_free(s, 2, Integer(1)) == Integer(-1));
}
