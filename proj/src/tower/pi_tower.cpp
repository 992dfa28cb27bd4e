#include "eisen/tower/pi_tower.hpp"

#include <algorithm>

#include "eisen/arith/linear_system.hpp"
#include "eisen/errors.hpp"

namespace eisen {

namespace {

std::size_t upow(std::size_t b, unsigned e) {
    std::size_t r = 1;
    while (e--) r *= b;
    return r;
}

std::string tower_label(const TowerParams& t) {
    return "p=" + std::to_string(t.p) + " m=" + std::to_string(t.m) + " i=" + std::to_string(t.i);
}

void require_dim(std::size_t dim, std::size_t cap, const std::string& what) {
    if (dim > cap)
        throw CapExceeded(what + ": dimension " + std::to_string(dim) + " exceeds cap " + std::to_string(cap));
}

/// π_m and its powers in the level-m field, for repeated valuations of base elements.
class BaseValuator {
public:
    BaseValuator(unsigned long p, unsigned m) : p_(p), m_(m), field_(make_cyclotomic_field(p, m)) {
        const CycElt pim = compute_pi(field_);
        powers_.push_back(CycElt::from_rational(field_, Rational(1)));
        const std::size_t e = upow(p, m - 1);
        for (std::size_t k = 1; k < e; ++k) powers_.push_back(powers_.back() * pim);
    }

    std::optional<long> operator()(const BaseElt& a) const {
        if (std::all_of(a.begin(), a.end(), [](const Rational& c) { return is_zero(c); })) return std::nullopt;
        if (a.size() > powers_.size()) throw ParameterError("base element has too many coefficients");
        CycElt x(field_);
        for (std::size_t k = 0; k < a.size(); ++k)
            if (!is_zero(a[k])) x = x + powers_[k].scaled(a[k]);
        const long v = theta_valuation(x);
        if (v % static_cast<long>(p_ - 1) != 0)
            throw InternalError("v_theta not divisible by p-1 at level " + std::to_string(m_));
        return v / static_cast<long>(p_ - 1);
    }

private:
    unsigned long p_;
    unsigned m_;
    FieldRef field_;
    std::vector<CycElt> powers_;
};

BaseElt scaled(const BaseElt& a, const Rational& s) {
    BaseElt out(a);
    for (auto& c : out) c *= s;
    return out;
}

BaseElt difference(const BaseElt& a, const BaseElt& b) {
    BaseElt out(std::max(a.size(), b.size()));
    for (std::size_t k = 0; k < a.size(); ++k) out[k] += a[k];
    for (std::size_t k = 0; k < b.size(); ++k) out[k] -= b[k];
    return out;
}

std::string show(const std::optional<long>& v) { return v ? std::to_string(*v) : "inf"; }

}  // namespace

std::size_t TowerParams::degree() const { return upow(p, i); }
std::size_t TowerParams::base_index() const { return upow(p, m - 1); }
bool TowerParams::below_threshold(std::size_t j) const { return j * (p - 1) < degree() * (p - 2); }
std::size_t TowerParams::ambient_dim() const { return upow(p, m + i - 1) * (p - 1); }

void TowerParams::validate() const {
    if (!is_odd_prime(p)) throw ParameterError("p must be an odd prime, got " + std::to_string(p));
    if (m < 1) throw ParameterError("m must be >= 1");
    if (i < 1) throw ParameterError("i must be >= 1");
}

std::size_t teich_exponent(unsigned long p, unsigned n, std::size_t j) {
    const std::size_t modulus = upow(p, n);
    Integer r;
    const Integer base(static_cast<unsigned long>(j % modulus)), mod(static_cast<unsigned long>(modulus));
    mpz_powm_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(upow(p, n - 1)), mod.get_mpz_t());
    return r.get_ui();
}

CycElt pi_in_field(const FieldRef& field, unsigned m) {
    if (m < 1 || m > field->n()) throw ParameterError("pi_in_field: level out of range");
    const unsigned long p = field->p();
    const std::size_t stride = upow(p, field->n() - m);
    const CycElt one = CycElt::from_rational(field, Rational(1));
    CycElt acc = one;
    for (std::size_t j = 1; j < p; ++j)
        acc = acc * (CycElt::zeta_power(field, stride * teich_exponent(p, m, j)) - one);
    return acc;
}

CycElt compute_pi(const FieldRef& field) { return pi_in_field(field, field->n()); }

CycElt compute_pi(unsigned long p, unsigned n) {
    TowerParams{p, n, 1, 0}.validate();
    return compute_pi(make_cyclotomic_field(p, n));
}

BaseElt base_uniformizer(unsigned long p, unsigned m) {
    if (m == 1) return BaseElt{Rational(static_cast<unsigned long>(p))};
    BaseElt out(upow(p, m - 1));
    out[1] = 1;
    return out;
}

CycElt evaluate_base(const FieldRef& field, unsigned m, const BaseElt& a) {
    const CycElt pim = pi_in_field(field, m);
    CycElt acc(field);
    for (std::size_t k = a.size(); k-- > 0;) acc = acc * pim + CycElt::from_rational(field, a[k]);
    return acc;
}

std::optional<long> base_valuation(unsigned long p, unsigned m, const BaseElt& a) {
    return BaseValuator(p, m)(a);
}

RelMinPoly minpoly_rel(const TowerParams& params, std::size_t cap) {
    params.validate();
    require_dim(params.ambient_dim(), cap, "minpoly_rel(" + tower_label(params) + ")");
    const FieldRef field = make_cyclotomic_field(params.p, params.m + params.i);
    const std::size_t dim = field->dim();
    const std::size_t deg = params.degree();
    const std::size_t e = params.base_index();

    const CycElt pin = compute_pi(field);
    const CycElt pim = pi_in_field(field, params.m);
    std::vector<CycElt> pim_pow{CycElt::from_rational(field, Rational(1))};
    for (std::size_t k = 1; k < e; ++k) pim_pow.push_back(pim_pow.back() * pim);

    // Column j*e + k holds π_m^k π_n^j.
    std::vector<CycElt> columns;
    columns.reserve(deg * e);
    CycElt pin_j = CycElt::from_rational(field, Rational(1));
    for (std::size_t j = 0; j < deg; ++j) {
        for (std::size_t k = 0; k < e; ++k) columns.push_back(pim_pow[k] * pin_j);
        pin_j = pin_j * pin;
    }
    const CycElt top = pin_j;

    LinearSystem<Rational> sys(dim, deg * e);
    for (std::size_t c = 0; c < columns.size(); ++c) {
        const auto coords = columns[c].coords();
        for (std::size_t r = 0; r < dim; ++r) sys.at(r, c) = coords[r];
    }
    const auto rhs = (-top).coords();
    for (std::size_t r = 0; r < dim; ++r) sys.rhs[r] = rhs[r];

    std::vector<Rational> x;
    try {
        x = solve_unique(sys);
    } catch (const InconsistentSystem&) {
        throw InternalError("minpoly_rel: inconsistent system for " + tower_label(params));
    } catch (const UnderdeterminedSystem&) {
        throw InternalError("minpoly_rel: underdetermined system for " + tower_label(params));
    }

    RelMinPoly out;
    out.params = params;
    out.coeffs.assign(deg + 1, BaseElt(e));
    for (std::size_t j = 0; j < deg; ++j)
        for (std::size_t k = 0; k < e; ++k) out.coeffs[j][k] = x[j * e + k];
    out.coeffs[deg][0] = 1;

    CycElt check = top;
    for (std::size_t c = 0; c < columns.size(); ++c)
        if (!is_zero(x[c])) check = check + columns[c].scaled(x[c]);
    if (!check.is_zero()) throw InternalError("minpoly_rel: polynomial does not annihilate pi");
    if (out.coeffs[0] != scaled(base_uniformizer(params.p, params.m), Rational(-1)))
        throw InternalError("minpoly_rel: constant term is not -pi_m");
    return out;
}

std::vector<ValuationReport> verify_th11(const TowerParams& params, const RelMinPoly& poly) {
    const BaseValuator valuation_at(params.p, params.m);
    const long e = static_cast<long>(params.base_index());
    std::vector<ValuationReport> out;
    for (std::size_t j = 1; j < params.degree(); ++j) {
        ValuationReport r;
        r.j = j;
        r.v = valuation_at(scaled(poly.coeffs[j], Rational(static_cast<unsigned long>(j))));
        r.bound = static_cast<long>(params.i) * e + (params.below_threshold(j) ? 1 : 0);
        r.passed = !r.v || *r.v >= r.bound;
        r.exact = r.v && *r.v == r.bound;
        out.push_back(r);
    }
    return out;
}

std::vector<ValuationReport> verify_th11(const TowerParams& params, std::size_t cap) {
    return verify_th11(params, minpoly_rel(params, cap));
}

CheckReport verify_th11_cong(const TowerParams& params, std::size_t cap) {
    if (params.beta < 1) throw ParameterError("th11-cong needs beta >= 1");
    TowerParams upper = params;
    upper.i = params.i + params.beta;
    upper.validate();
    require_dim(upper.ambient_dim(), cap, "th11-cong(" + tower_label(upper) + ")");
    const RelMinPoly lower_poly = minpoly_rel(params, cap);
    const RelMinPoly upper_poly = minpoly_rel(upper, cap);
    const BaseValuator valuation_at(params.p, params.m);
    const long e = static_cast<long>(params.base_index());
    const std::size_t stride = upow(params.p, params.beta);
    CheckReport rep{"th11-cong", tower_label(params) + " beta=" + std::to_string(params.beta), 0, {}};
    for (std::size_t j = 1; j < params.degree(); ++j) {
        const BaseElt diff = difference(lower_poly.coeffs[j], upper_poly.coeffs[stride * j]);
        const auto v = valuation_at(diff);
        const long bound = static_cast<long>(params.i + 1) * e + (params.below_threshold(j) ? 1 : 0);
        rep.expect(!v || *v >= bound, [&] {
            return CheckFailure{"j=" + std::to_string(j), "v >= " + std::to_string(bound), "v = " + show(v)};
        });
    }
    return rep;
}

CheckReport verify_cor_diff(const TowerParams& params, std::size_t cap) {
    const RelMinPoly poly = minpoly_rel(params, cap);
    const BaseValuator valuation_at(params.p, params.m);
    const long e = static_cast<long>(params.base_index());
    const std::size_t pi = params.degree();
    CheckReport rep{"cordiff", tower_label(params), 0, {}};
    for (unsigned beta = 0; beta < params.i; ++beta) {
        const std::size_t j = pi - (pi - upow(params.p, beta)) / (params.p - 1);
        const auto v = valuation_at(poly.coeffs[j]);
        const long want = static_cast<long>(params.i - beta) * e;
        rep.expect(v && *v == want, [&] {
            return CheckFailure{"beta=" + std::to_string(beta) + " j=" + std::to_string(j), "v = " + std::to_string(want),
                                "v = " + show(v)};
        });
    }
    return rep;
}

CheckReport verify_lem10(unsigned long p, unsigned n, std::size_t cap) {
    TowerParams{p, n, 1, 0}.validate();
    if (n < 2) throw ParameterError("lem10 needs n >= 2");
    const std::size_t dim = upow(p, n - 1) * (p - 1);
    require_dim(dim, cap, "lem10");
    const FieldRef field = make_cyclotomic_field(p, n);
    const CycElt pin = compute_pi(field);
    const CycElt pin1 = pi_in_field(field, n - 1);
    const CycElt one = CycElt::from_rational(field, Rational(1));
    const CycElt theta_n = CycElt::zeta_power(field, 1) - one;
    const CycElt theta_n1 = CycElt::zeta_power(field, p) - one;
    const CycElt pin_p = pow(pin, p);

    CheckReport rep{"lem10", "p=" + std::to_string(p) + " n=" + std::to_string(n), 0, {}};
    const long lhs = theta_valuation(pin_p - pin1);
    const long rhs = theta_valuation(pow(pin, p - 1).scaled(Rational(static_cast<unsigned long>(p))));
    rep.expect(lhs >= rhs, [&] {
        return CheckFailure{"v(pi_n^p - pi_{n-1})", ">= " + std::to_string(rhs), std::to_string(lhs)};
    });
    const long left9 = theta_valuation(pin1 - pin_p) - theta_valuation(pin1);
    const long right9 = theta_valuation(theta_n1 - pow(theta_n, p)) - theta_valuation(theta_n1);
    rep.expect(left9 >= right9, [&] {
        return CheckFailure{"v(1 - pi_n^p/pi_{n-1})", ">= " + std::to_string(right9), std::to_string(left9)};
    });
    return rep;
}

CheckReport verify_eis13(unsigned long p, unsigned n, std::size_t cap) {
    if (n < 2) throw ParameterError("eis13 needs n >= 2");
    const TowerParams params{p, 1, n - 1, 0};
    const RelMinPoly poly = minpoly_rel(params, cap);
    const std::size_t deg = params.degree();
    const std::size_t mid = (p - 1) * upow(p, n - 2);
    const Integer p2(static_cast<unsigned long>(p * p));
    CheckReport rep{"eis13", "p=" + std::to_string(p) + " n=" + std::to_string(n), 0, {}};
    for (std::size_t j = 0; j <= deg; ++j) {
        const Rational& a = poly.coeffs[j][0];
        if (a.get_den() != 1) throw InternalError("eis13: non-integral coefficient " + to_string(a));
        Integer expected = 0;
        if (j == deg) expected = 1;
        if (j == mid) expected = static_cast<unsigned long>(p);
        if (j == 0) expected = -static_cast<long>(p);
        const Integer diff = a.get_num() - expected;
        rep.expect(mpz_divisible_p(diff.get_mpz_t(), p2.get_mpz_t()), [&] {
            return CheckFailure{"j=" + std::to_string(j), "≡ " + to_string(expected) + " mod " + to_string(p2),
                                to_string(a)};
        });
    }
    return rep;
}

ExactnessScan exactness_scan(unsigned long p, unsigned i, std::size_t cap) {
    ExactnessScan scan;
    scan.p = p;
    scan.i = i;
    scan.reports = verify_th11(TowerParams{p, 1, i, 0}, cap);
    scan.non_exact = static_cast<std::size_t>(
        std::count_if(scan.reports.begin(), scan.reports.end(), [](const ValuationReport& r) { return !r.exact; }));
    return scan;
}

Integer trace_from_minpoly(unsigned long p, unsigned n, std::size_t cap) {
    if (n < 2) throw ParameterError("trace_from_minpoly needs n >= 2");
    const RelMinPoly poly = minpoly_rel(TowerParams{p, 1, n - 1, 0}, cap);
    const Rational& a = poly.coeffs[poly.coeffs.size() - 2][0];
    if (a.get_den() != 1) throw InternalError("trace: non-integral coefficient");
    return -a.get_num();
}

std::string to_string(const ValuationReport& r) {
    return "j=" + std::to_string(r.j) + " v=" + show(r.v) + " bound=" + std::to_string(r.bound) +
           (r.exact ? " exact" : "") + (r.passed ? " pass" : " FAIL");
}

}  // namespace eisen
