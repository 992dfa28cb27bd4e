#include "doctest.h"

#include <sstream>

#include "eisen/carlitz/carlitz.hpp"
#include "eisen/arith/resultant.hpp"
#include "eisen/carlitz/verifiers.hpp"
#include "eisen/errors.hpp"
#include "generators.hpp"

using namespace eisen;

namespace {

/// Parses "-Y^9 -Y^3 -Y +1"-style sums of signed monomials over F_r.
PolyFr ypoly(const GaloisField& F, const std::string& text) {
    PolyFr acc = PolyFr::zero(F);
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        const FrElem sign = tok[0] == '-' ? F.neg(1) : FrElem{1};
        const std::string body = tok.substr(1);
        std::size_t k = 0;
        if (body == "Y")
            k = 1;
        else if (body.rfind("Y^", 0) == 0)
            k = std::stoul(body.substr(2));
        acc += PolyFr::monomial(F, sign, k);
    }
    return acc;
}

PolyFr random_poly_fr(const GaloisField& F, long max_degree) {
    const long deg = testgen::small_int(0, max_degree);
    std::vector<FrElem> c;
    for (long k = 0; k <= deg; ++k) c.push_back(static_cast<FrElem>(testgen::small_int(0, F.size() - 1)));
    return PolyFr(F, std::move(c));
}

CarlitzParams params_of(unsigned long p, unsigned rho, const std::string& f) { return make_carlitz_params(p, rho, f); }

DensePoly<PolyFr> xpoly(std::vector<PolyFr> c) { return DensePoly<PolyFr>(std::move(c)); }

}  // namespace

TEST_CASE("F_r tables satisfy the field axioms") {
    for (auto [p, rho] : std::vector<std::pair<unsigned long, unsigned>>{{3, 1}, {5, 1}, {3, 2}, {5, 2}, {3, 3}}) {
        const GaloisField& F = GaloisField::get(p, rho);
        CHECK(&F == &GaloisField::get(p, rho));
        for (FrElem a = 1; a < F.size(); ++a) CHECK(F.mul(a, F.inv(a)) == 1);
        for (int trial = 0; trial < 200; ++trial) {
            const auto a = static_cast<FrElem>(testgen::small_int(0, F.size() - 1));
            const auto b = static_cast<FrElem>(testgen::small_int(0, F.size() - 1));
            const auto c = static_cast<FrElem>(testgen::small_int(0, F.size() - 1));
            CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
            CHECK(F.add(F.sub(a, b), b) == a);
        }
    }
    CHECK(GaloisField::get(3, 2).modulus() == std::vector<unsigned>{1, 0, 1});
    CHECK_THROWS_AS(GaloisField::get(3, 2, {2, 0, 1}), ParameterError);  // t^2 - 1 is reducible
    CHECK_THROWS_AS(GaloisField::get(3, 1).inv(0), InexactDivision);
}

TEST_CASE("F_r[Y] division, gcd and irreducibility") {
    const GaloisField& F = GaloisField::get(3, 1);
    for (int trial = 0; trial < 100; ++trial) {
        const PolyFr a = random_poly_fr(F, 8);
        PolyFr b = random_poly_fr(F, 4);
        if (b.is_zero()) b = PolyFr::one(F);
        auto [q, r] = divrem(a, b);
        CHECK(q * b + r == a);
        CHECK(r.degree() < b.degree());
        const PolyFr g = gcd(a, b);
        CHECK((a % g).is_zero());
        CHECK((b % g).is_zero());
        CHECK(exact_div(a * b, b) == a);
    }
    CHECK(is_irreducible(ypoly(F, "+Y^2 +1")));
    CHECK_FALSE(is_irreducible(ypoly(F, "+Y^2 -1")));
    int count = 0;
    for (FrElem a = 0; a < 3; ++a)
        for (FrElem b = 0; b < 3; ++b) count += is_irreducible(PolyFr(F, {a, b, 1}));
    CHECK(count == 3);  // (3^2 - 3)/2 monic irreducible quadratics
    CHECK(valuation(pow(ypoly(F, "+Y^2 +1"), 3) * ypoly(F, "+Y"), ypoly(F, "+Y^2 +1")) == 3);
    CHECK(parse_poly_fr(F, "1,0,1") == ypoly(F, "+Y^2 +1"));
    CHECK_THROWS_AS(parse_poly_fr(F, "1,3"), ParameterError);
}

TEST_CASE("carlitz parameters are validated") {
    CHECK(params_of(3, 1, "1,0,1").q == 9);
    CHECK(params_of(3, 2, "0,1").q == 9);
    CHECK_THROWS_AS(params_of(3, 1, "2,0,1"), ParameterError);  // Y^2 - 1
    CHECK_THROWS_AS(params_of(3, 1, "0,2"), ParameterError);    // not monic
    CHECK_THROWS_AS(params_of(2, 1, "0,1"), ParameterError);
    CHECK_THROWS_AS(params_of(9, 1, "0,1"), ParameterError);
}

TEST_CASE("carlitz_poly examples") {
    const auto P = params_of(3, 1, "0,1");
    const GaloisField& F = *P.field;
    const PolyFr y = PolyFr::y(F);
    CHECK(carlitz_poly(P, PolyFr::one(F)).coeffs == std::vector<PolyFr>{PolyFr::one(F)});
    CHECK(carlitz_poly(P, y).coeffs == std::vector<PolyFr>{y, PolyFr::one(F)});
    CHECK(carlitz_poly(P, y * y).coeffs == std::vector<PolyFr>{ypoly(F, "+Y^2"), ypoly(F, "+Y +Y^3"), PolyFr::one(F)});
    CHECK(carlitz_poly(P, y * y) == compose(carlitz_poly(P, y), carlitz_poly(P, y), 3));
    CHECK(carlitz_poly(P, PolyFr::zero(F)).coeffs.empty());
    CHECK(to_string(carlitz_poly(P, y), 3) == "X^3 + Y*X");
}

TEST_CASE("carlitz_poly satisfies the module law") {
    for (auto [p, rho] : std::vector<std::pair<unsigned long, unsigned>>{{3, 1}, {5, 1}, {3, 2}}) {
        const auto P = make_carlitz_params(GaloisField::get(p, rho), PolyFr::y(GaloisField::get(p, rho)));
        const GaloisField& F = *P.field;
        for (int trial = 0; trial < 12; ++trial) {
            const PolyFr a = random_poly_fr(F, 3), b = random_poly_fr(F, 3);
            const auto Pa = carlitz_poly(P, a), Pb = carlitz_poly(P, b);
            CHECK(carlitz_poly(P, a * b) == compose(Pa, Pb, P.r()));
            CHECK(carlitz_poly(P, a + b) == Pa + Pb);
            if (!a.is_zero()) {
                CHECK(Pa.coeffs[0] == a);  // linear coefficient is e; no constant term by construction
                CHECK(Pa.to_dense(P.r()).coeff(0).is_zero());
            }
        }
    }
}

TEST_CASE("psi examples and shape") {
    const auto PY = params_of(3, 1, "0,1");
    const GaloisField& F = *PY.field;
    CHECK(psi_poly(PY, 1) == xpoly({PolyFr::y(F), PolyFr::zero(F), PolyFr::one(F)}));
    const auto psi2 = psi_poly(PY, 2);
    CHECK(psi2.degree() == 6);
    CHECK(psi2 * carlitz_poly(PY, PolyFr::y(F)).to_dense(3) == carlitz_poly(PY, ypoly(F, "+Y^2")).to_dense(3));
    const auto P2 = params_of(3, 1, "1,0,1");
    const auto psi = psi_poly(P2, 1);
    CHECK(psi == xpoly({P2.f, PolyFr::zero(*P2.field), ypoly(*P2.field, "+Y^3 +Y"), PolyFr::zero(*P2.field),
                        PolyFr::zero(*P2.field), PolyFr::zero(*P2.field), PolyFr::zero(*P2.field),
                        PolyFr::zero(*P2.field), PolyFr::one(*P2.field)}));
    for (const auto& P : {PY, P2, params_of(5, 1, "0,1"), params_of(3, 2, "0,1"), params_of(3, 1, "1,1")}) {
        for (unsigned n = 1; n <= 2; ++n) {
            const auto s = psi_poly(P, n);
            CHECK(s.degree() == static_cast<long>(P.level_dim(n)));
            CHECK(s.lc() == PolyFr::one(*P.field));
            CHECK(s.coeff(0) == P.f);
            for (std::size_t k = 0; k < P.level_dim(n); ++k) CHECK((s.coeff(k) % P.f).is_zero());
        }
    }
}

TEST_CASE("module_power examples") {
    for (const auto& P : {params_of(3, 1, "0,1"), params_of(3, 1, "1,0,1"), params_of(5, 1, "0,1")}) {
        for (unsigned n = 1; n <= 2; ++n) {
            const auto F = make_theta_field(P, n);
            const ThetaElt theta = ThetaElt::theta(F);
            CHECK(module_power(theta, PolyFr::one(*P.field)) == theta);
            CHECK(module_power(theta, pow(P.f, n)).is_zero());
            // θ_n^{f^{n-1}} is nonzero: θ_n generates the f^n-torsion.
            CHECK_FALSE(module_power(theta, pow(P.f, n - 1)).is_zero());
            // θ_{n+1}^f is a root of Ψ_{f^n}.
            const auto up = make_theta_field(P, n + 1);
            CHECK(evaluate(psi_poly(P, n), module_power(ThetaElt::theta(up), P.f)).is_zero());
        }
    }
}

TEST_CASE("module_power is additive and multiplicative in the exponent") {
    const auto P = params_of(3, 1, "1,0,1");
    const GaloisField& G = *P.field;
    const auto F = make_theta_field(P, 2);
    const ThetaElt theta = ThetaElt::theta(F);
    for (int trial = 0; trial < 6; ++trial) {
        const PolyFr a = random_poly_fr(G, 3), b = random_poly_fr(G, 3);
        CHECK(module_power(theta, a + b) == module_power(theta, a) + module_power(theta, b));
        CHECK(module_power(theta, a * b) == module_power(module_power(theta, b), a));
    }
}

TEST_CASE("compute_varpi examples") {
    for (const auto& P : {params_of(3, 1, "0,1"), params_of(3, 1, "1,0,1"), params_of(5, 1, "0,1")}) {
        const auto F1 = make_theta_field(P, 1);
        CHECK(compute_varpi(F1) == ThetaElt::scalar(F1, RatFunc(P.f)));
    }
    for (const auto& P : {params_of(3, 1, "0,1"), params_of(5, 1, "0,1"), params_of(3, 2, "0,1")}) {
        for (unsigned n = 2; n <= 3; ++n) {
            const auto F = make_theta_field(P, n);
            CHECK(compute_varpi(F) == -ThetaElt::theta(F).pow(P.q - 1));
        }
    }
}

TEST_CASE("compute_varpi reproduces the degree-72 reference coefficients") {
    const auto P = params_of(3, 1, "1,0,1");
    const GaloisField& G = *P.field;
    const ThetaElt w = compute_varpi(make_theta_field(P, 2));
    const std::vector<std::pair<std::size_t, std::string>> table = {
        {60, "+1"},
        {58, "-Y"},
        {56, "+Y^2"},
        {42, "-Y^9 -Y^3 -Y"},
        {40, "+Y^10 +Y^4 +Y^2 +1"},
        {38, "-Y^11 -Y^5 -Y^3 +Y"},
        {36, "-Y^6 -Y^4 -Y^2"},
        {34, "+Y^7 +Y^5 +Y^3 +Y"},
        {32, "-Y^8 -Y^6 +Y^4 -Y^2 -1"},
        {30, "-Y^5 +Y^3 -Y"},
        {24, "+Y^18 -Y^12 -Y^10 +Y^6 -Y^4 +Y^2"},
        {22, "-Y^19 +Y^13 +Y^11 +Y^9 -Y^7 +Y^5 +Y"},
        {20, "+Y^20 -Y^14 -Y^12 +Y^10 +Y^8 -Y^6 -Y^4 +Y^2 +1"},
        {18, "-Y^15 -Y^13 -Y^11 -Y^9 +Y^7 +Y^5 -Y^3"},
        {16, "+Y^16 +Y^14 +Y^12 -Y^10 -Y^8 -Y^2"},
        {14, "-Y^17 -Y^15 +Y^13 +Y^11 +Y^7 +Y^5 -Y^3 +Y"},
        {12, "-Y^14 -Y^12 +Y^10 -Y^8 -Y^6 -Y^4 +Y^2 +1"},
        {10, "-Y^13 +Y^11 -Y^7 +Y^3"},
        {8, "+Y^14 -Y^12 -Y^10 +Y^6 +Y^4"},
        {6, "-Y^11 -Y^7 +Y^5 +Y^3 +Y"},
        {4, "+Y^8 +Y^6 +Y^2 +1"},
    };
    CHECK(w.is_integral());
    std::vector<PolyFr> expected(72, PolyFr::zero(G));
    for (const auto& [k, text] : table) expected[k] = ypoly(G, text);
    for (std::size_t k = 0; k < 72; ++k) {
        INFO("theta^" << k);
        CHECK(w.numerators()[k] == expected[k]);
    }
}

TEST_CASE("f_valuation examples and resultant oracle") {
    for (const auto& P : {params_of(3, 1, "0,1"), params_of(3, 1, "1,0,1"), params_of(5, 1, "0,1")}) {
        for (unsigned n = 1; n <= 2; ++n) {
            if (P.level_dim(n) > 24) continue;
            const auto F = make_theta_field(P, n);
            const long dim = static_cast<long>(F->dim());
            CHECK(f_valuation(ThetaElt::theta(F)) == 1);
            CHECK(f_valuation(compute_varpi(F)) == static_cast<long>(P.q - 1));
            CHECK(f_valuation(ThetaElt::scalar(F, RatFunc(P.f))) == dim);
            CHECK_THROWS_AS(f_valuation(ThetaElt(F)), InfiniteValuation);
            const GaloisField& G = *P.field;
            for (int trial = 0; trial < 5; ++trial) {
                std::vector<PolyFr> num;
                for (long k = 0; k < dim; ++k) num.push_back(random_poly_fr(G, 2) * pow(P.f, testgen::small_int(0, 1)));
                const PolyFr den = pow(P.f, testgen::small_int(0, 1)) * ypoly(G, "+Y +1");
                const ThetaElt x(F, num, den);
                if (x.is_zero()) continue;
                CHECK(f_valuation(x) == f_valuation_via_resultant(x));
            }
        }
    }
}

TEST_CASE("minpoly_rel_ff matches the closed form for f = Y") {
    for (const auto& P : {params_of(3, 1, "0,1"), params_of(5, 1, "0,1"), params_of(3, 2, "0,1")}) {
        for (unsigned m = 1; m <= 2; ++m) {
            INFO(P.label() << " m=" << m);
            CHECK(verify_car11(P, m, 1000).passed());
        }
    }
    const auto P = params_of(3, 1, "0,1");
    const GaloisField& G = *P.field;
    const auto poly = minpoly_rel_ff(P, 1, 1);
    REQUIRE(poly.coeffs.size() == 4);
    CHECK(poly.coeffs[0][0] == RatFunc(ypoly(G, "-Y")));
    CHECK(poly.coeffs[1][0] == RatFunc(ypoly(G, "+Y^2")));
    CHECK(poly.coeffs[2][0] == RatFunc(ypoly(G, "+Y")));
    CHECK(poly.coeffs[3][0] == RatFunc(PolyFr::one(G)));
    const auto poly2 = minpoly_rel_ff(P, 2, 1);
    CHECK(poly2.coeffs[0] == std::vector<RatFunc>{RatFunc(PolyFr::zero(G)), RatFunc(ypoly(G, "-1")), RatFunc(PolyFr::zero(G))});
}

TEST_CASE("minpoly_rel_ff constant term and Eisenstein shape") {
    for (const auto& P : {params_of(3, 1, "0,1"), params_of(3, 1, "1,0,1"), params_of(5, 1, "0,1")}) {
        for (unsigned m = 1; m <= 2; ++m) {
            for (unsigned i = 1; i <= 2; ++i) {
                if (P.level_dim(m + i) > kDefaultDimensionCap) continue;
                INFO(P.label() << " m=" << m << " i=" << i);
                const auto poly = minpoly_rel_ff(P, m, i);
                const BaseValuatorFF v(P, m);
                CHECK(v(poly.coeffs[0]).equals(1));
                for (std::size_t j = 1; j < poly.degree(); ++j) CHECK(v(poly.coeffs[j]).is_at_least(1));
            }
        }
    }
    CHECK_THROWS_AS(minpoly_rel_ff(params_of(3, 1, "1,0,1"), 1, 2), CapExceeded);
}

TEST_CASE("the mod f^K route agrees with the exact relation") {
    for (auto [f, m, i] : std::vector<std::tuple<std::string, unsigned, unsigned>>{
             {"0,1", 1, 2}, {"0,1", 2, 2}, {"1,0,1", 1, 1}}) {
        const auto P = params_of(3, 1, f);
        const auto exact = minpoly_rel_ff(P, m, i);
        for (unsigned K : {2u, 4u}) {
            const auto adic = minpoly_rel_ff_adic(P, m, i, K);
            const PolyFr mod = pow(P.f, K);
            REQUIRE(adic.coeffs.size() == exact.coeffs.size());
            for (std::size_t j = 0; j < exact.coeffs.size(); ++j)
                for (std::size_t k = 0; k < exact.coeffs[j].size(); ++k) {
                    const RatFunc d = exact.coeffs[j][k] - adic.coeffs[j][k];
                    CHECK((d.is_zero() || valuation(d, P.f) >= static_cast<long>(K)));
                }
        }
    }
}

TEST_CASE("direct and field valuations of base elements agree") {
    for (auto [f, m, i] : std::vector<std::tuple<std::string, unsigned, unsigned>>{
             {"0,1", 2, 1}, {"0,1", 2, 2}, {"1,0,1", 1, 1}}) {
        const auto P = params_of(3, 1, f);
        const auto poly = minpoly_rel_ff(P, m, i);
        const BaseValuatorFF via_field(P, m);
        for (const auto& a : poly.coeffs) {
            const auto x = via_field(a), y = base_valuation_direct(P, m, a);
            CHECK(x.value == y.value);
        }
    }
}

TEST_CASE("th11a examples") {
    const auto P = params_of(3, 1, "0,1");
    const auto reports = verify_th11a(P, 1, 1);
    REQUIRE(reports.size() == 2);
    CHECK(reports[0].j == 1);
    CHECK(reports[0].v == 2);
    CHECK(reports[0].bound == 2);  // f·ϖ_1 = Y^2 since 1 < 3/2
    CHECK(reports[0].passed);
    CHECK(reports[1].v == 1);
    CHECK(reports[1].bound == 1);
    CHECK(reports[1].passed);
    CHECK(q_adic_order(P, 9) == 2);
    CHECK(q_adic_order(P, 6) == 1);
    CHECK(below_threshold_ff(P, 1, 1));
    CHECK_FALSE(below_threshold_ff(P, 1, 2));
}

TEST_CASE("function-field property suites on the criterion grid") {
    const auto PY = params_of(3, 1, "0,1");
    for (unsigned m = 1; m <= 2; ++m) {
        for (unsigned i = 1; i <= 2; ++i) {
            INFO("m=" << m << " i=" << i);
            for (const auto& r : verify_th11a(PY, m, i)) CHECK(r.passed);
            CHECK(verify_th11a_cong(PY, m, i, 1).passed());
            CHECK(verify_cor_diff2(PY, m, i).passed());
            CHECK(verify_cor_bu(PY, m, i).passed());
        }
    }
    const auto P2 = params_of(3, 1, "1,0,1");
    for (const auto& r : verify_th11a(P2, 1, 1)) CHECK(r.passed);
    const auto cong = verify_th11a_cong(P2, 1, 1, 1);
    CHECK(cong.passed());
    CHECK(cong.params.find("mod f^3") != std::string::npos);
    CHECK(verify_cor_diff2(P2, 1, 1).passed());
    CHECK(verify_lem10a(PY, 2).passed());
    CHECK(verify_lem10a(P2, 2).passed());
    CHECK(verify_lem10a(params_of(5, 1, "0,1"), 2).passed());
    CHECK_THROWS_AS(verify_cor_bu(P2, 1, 1), ParameterError);
}

TEST_CASE("th11a-cong gives the same verdicts on both routes") {
    const auto P = params_of(3, 1, "0,1");
    for (auto [m, i] : std::vector<std::pair<unsigned, unsigned>>{{1, 1}, {1, 2}, {2, 1}}) {
        const auto exact = verify_th11a_cong(P, m, i, 1);
        const auto adic = verify_th11a_cong(P, m, i, 1, P.level_dim(m + i));
        CHECK(exact.params.find("mod") == std::string::npos);
        CHECK(adic.params.find("mod f^") != std::string::npos);
        CHECK(exact.passed() == adic.passed());
        CHECK(exact.checks == adic.checks);
    }
}

TEST_CASE("cordiff2 examples") {
    const auto PY = params_of(3, 1, "0,1");
    const auto poly = minpoly_rel_ff(PY, 2, 2);
    const BaseValuatorFF v(PY, 2);
    CHECK(v(poly.coeffs[6]).equals(3));  // β = 1: j* = 9 - 3
    CHECK(v(poly.coeffs[5]).equals(6));  // β = 0: j* = 9 - 4
}

TEST_CASE("discriminant exponents") {
    const auto PY = params_of(3, 1, "0,1");
    const auto P2 = params_of(3, 1, "1,0,1");
    CHECK(discriminant_check(PY, 1).passed());
    CHECK(discriminant_check(PY, 2).passed());
    CHECK(discriminant_check(P2, 1).passed());
    const auto psi = psi_poly(P2, 1);
    CHECK(valuation(resultant_domain(psi, psi.derivative()), P2.f) == 7);
    const auto psi2 = psi_poly(PY, 2);
    CHECK(valuation(resultant_domain(psi2, psi2.derivative()), PY.f) == 9);
    CHECK_THROWS_AS(discriminant_check(P2, 3), CapExceeded);
}

TEST_CASE("conjecture scan examples") {
    const auto PY = params_of(3, 1, "0,1");
    const auto scan = conjecture_scan(PY, 1, 1);
    REQUIRE(scan.verdicts.size() == 3);
    CHECK(scan.verdicts[1].j == 2);
    CHECK(scan.verdicts[1].digits == std::vector<std::size_t>{1});
    CHECK(scan.verdicts[1].predicted_v == 1);
    CHECK(scan.verdicts[1].actual_v == 1);
    CHECK(scan.verdicts[0].predicted_v == 2);
    CHECK(scan.verdicts[0].actual_v == 2);
    CHECK(scan.verdicts[2].actual_v == 0);  // j = q^i: the leading 1
    for (unsigned m = 1; m <= 2; ++m)
        for (unsigned i = 1; i <= 2; ++i) CHECK(conjecture_scan(PY, m, i).all_match());
    CHECK_THROWS_AS(conjecture_scan(params_of(3, 1, "1,0,1"), 1, 1), ParameterError);
}
