#include "doctest.h"

#include <map>

#include "eisen/errors.hpp"
#include "eisen/padic/traces.hpp"

using namespace eisen;

namespace {
std::vector<Integer> ints(std::initializer_list<long> c) {
    std::vector<Integer> v;
    for (long x : c) v.emplace_back(x);
    return v;
}
}  // namespace

TEST_CASE("teichmuller lifts") {
    const auto t = teichmuller(5, 2);
    CHECK(t.xi[0] == 1);
    CHECK(t.xi[1] == 7);
    CHECK(t.xi[3] == 24);
    for (unsigned long p : {3UL, 7UL, 13UL}) {
        const auto ts = teichmuller(p, 6);
        const Integer& mod = ts.ring.modulus;
        CHECK(ts.xi[p - 2] == mod - 1);
        for (unsigned long j = 1; j < p; ++j) {
            Integer x = ts.xi[j - 1], xp;
            mpz_powm_ui(xp.get_mpz_t(), x.get_mpz_t(), p, mod.get_mpz_t());
            CHECK(xp == x);
            CHECK(Integer(x % static_cast<unsigned long>(p)) == Integer(j));
            for (unsigned long k = 1; k < p; ++k) {
                const Integer prod = (ts.xi[j - 1] * ts.xi[k - 1]) % mod;
                CHECK(prod == ts.xi[(j * k) % p - 1]);
            }
        }
    }
}

TEST_CASE("s_sequence matches the brute-force oracle") {
    // Frozen output of tests/oracles/derive_subset_sums.py.
    const std::map<unsigned long, std::vector<Integer>> oracle = {
        {3, ints({0, 1, 1, 1})},        {5, ints({0, 1, 1, 1})},         {7, ints({0, 1, 1, 1})},
        {11, ints({0, 1, 3, 3, 3})},    {13, ints({0, 1, 3, 3, 3})},     {17, ints({0, 1, 8, 16, 16})},
        {19, ints({0, 1, 10, 12, 12})},
    };
    for (const auto& [p, want] : oracle) {
        const unsigned n_max = static_cast<unsigned>(want.size() - 1);
        CHECK(s_sequence(p, n_max, {SumStrategy::Direct}).s == want);
        CHECK(s_sequence(p, n_max, {SumStrategy::Mitm}).s == want);
    }
}

TEST_CASE("stationarity data") {
    const auto t11 = s_sequence(11, 4);
    CHECK(t11.n_bound == 2);
    REQUIRE(t11.n0.has_value());
    CHECK(*t11.n0 == 2);
    const auto t3 = s_sequence(3, 3);
    CHECK(t3.n_bound == 1);
    CHECK(*t3.n0 == 1);
    const auto t17 = s_sequence(17, 1);
    CHECK_FALSE(t17.n0.has_value());
    for (unsigned long p : {5UL, 7UL, 11UL, 13UL, 17UL, 19UL, 23UL}) {
        const auto t = s_sequence(p, 2);
        CHECK(t.n_bound <= static_cast<unsigned>(n_upper_bound(p)));
    }
}

TEST_CASE("direct and mitm agree and do not depend on worker count") {
    for (unsigned long p : {11UL, 13UL, 17UL, 19UL, 23UL}) {
        const auto d1 = s_sequence(p, 6, {SumStrategy::Direct, 1});
        const auto d4 = s_sequence(p, 6, {SumStrategy::Direct, 4});
        const auto m1 = s_sequence(p, 6, {SumStrategy::Mitm, 1});
        const auto m4 = s_sequence(p, 6, {SumStrategy::Mitm, 4});
        CHECK(d1.s == d4.s);
        CHECK(d1.s == m1.s);
        CHECK(m1.s == m4.s);
        CHECK(d1.n_bound == m1.n_bound);
        CHECK(d1.n0 == m1.n0);
    }
}

TEST_CASE("strategy caps") {
    CHECK_THROWS_AS(s_sequence(29, 2, {SumStrategy::Direct}), CapExceeded);
    CHECK_THROWS_AS(s_sequence(47, 2, {SumStrategy::Mitm}), CapExceeded);
    CHECK_THROWS_AS(s_sequence(9, 2), ParameterError);
}

TEST_CASE("n_upper_bound examples") {
    CHECK(n_upper_bound(5) == 1);
    CHECK(n_upper_bound(11) == 3);
    CHECK(n_upper_bound(23) == 7);
    CHECK(n_upper_bound(41) == 12);
    CHECK(n_upper_bound(107) == 40);
    // φ(210)(1 - log π/log 211) + 1 = 38.73…
    CHECK(n_upper_bound(211) == 38);
    CHECK_THROWS_AS(n_upper_bound(3), ParameterError);
}

TEST_CASE("traces via s") {
    CHECK(trace_via_s(3, 2).trace == 6);
    CHECK(trace_via_s(11, 2).trace == 352);
    CHECK(trace_via_s(5, 2).trace == 20);
    CHECK(trace_via_s(7, 2).trace == 42);
}

TEST_CASE("max subset-sum modulus") {
    for (unsigned long p : {5UL, 7UL, 13UL}) CHECK(max_sum_modulus_check(p).passed);
    CHECK(max_sum_modulus_check(7).max_modulus == doctest::Approx(2.0));
}
