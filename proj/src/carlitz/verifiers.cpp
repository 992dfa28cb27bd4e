#include "eisen/carlitz/verifiers.hpp"

#include <algorithm>

#include "eisen/arith/resultant.hpp"
#include "eisen/errors.hpp"

namespace eisen {

namespace {

std::string level_label(const CarlitzParams& params, unsigned m, unsigned i) {
    return params.label() + " m=" + std::to_string(m) + " i=" + std::to_string(i);
}

using BaseEltFF = std::vector<RatFunc>;

BaseEltFF difference(const BaseEltFF& a, const BaseEltFF& b) {
    BaseEltFF out(a);
    for (std::size_t k = 0; k < b.size(); ++k) out[k] = out[k] - b[k];
    return out;
}

BaseEltFF zero_base(const CarlitzParams& params, unsigned m) {
    return BaseEltFF(params.q_pow(m - 1), RatFunc(PolyFr::zero(*params.field)));
}

BaseEltFF scalar_base(const CarlitzParams& params, unsigned m, const PolyFr& c) {
    BaseEltFF out = zero_base(params, m);
    out[0] = RatFunc(c);
    return out;
}

BaseEltFF minus_varpi_base(const CarlitzParams& params, unsigned m) {
    if (m == 1) return scalar_base(params, m, -params.f);
    BaseEltFF out = zero_base(params, m);
    out[1] = RatFunc(-PolyFr::one(*params.field));
    return out;
}

void require_f_is_y(const CarlitzParams& params, const std::string& what) {
    if (!(params.f == PolyFr::y(*params.field))) throw ParameterError(what + " requires f = Y");
}

std::string show(const std::optional<long>& v) { return v ? std::to_string(*v) : "inf"; }

std::string show_base(const BaseEltFF& a) {
    std::string out;
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (a[k].is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += "(" + to_string(a[k]) + ")*w^" + std::to_string(k);
    }
    return out.empty() ? "0" : out;
}

/// v_{ϖ_m} for the coefficients of one relation: exact elements go through Ƒ_m,
/// truncated ones use the direct formula.
class CoefficientValuation {
public:
    CoefficientValuation(const CarlitzParams& params, unsigned m, std::optional<unsigned> precision)
        : params_(params), m_(m), precision_(precision) {
        if (!precision) exact_.emplace(params, m);
    }

    BaseValuationFF operator()(const BaseEltFF& a) const {
        if (exact_) return (*exact_)(a);
        return base_valuation_direct(params_, m_, a, precision_);
    }

private:
    CarlitzParams params_;
    unsigned m_;
    std::optional<unsigned> precision_;
    std::optional<BaseValuatorFF> exact_;
};

}  // namespace

bool below_threshold_ff(const CarlitzParams& params, unsigned i, std::size_t j) {
    return j * (params.q - 1) < params.q_pow(i) * (params.q - 2);
}

unsigned q_adic_order(const CarlitzParams& params, std::size_t j) {
    if (j == 0) throw ParameterError("q-adic order of 0");
    unsigned a = 0;
    while (j % params.q == 0) {
        j /= params.q;
        ++a;
    }
    return a;
}

std::vector<ValuationReport> verify_th11a(const RelMinPolyFF& poly) {
    const CarlitzParams& P = poly.params;
    const CoefficientValuation valuation_at(P, poly.m, poly.precision);
    const long e = static_cast<long>(P.q_pow(poly.m - 1));
    std::vector<ValuationReport> out;
    for (std::size_t j = 1; j < poly.degree(); ++j) {
        const auto v = valuation_at(poly.coeffs[j]);
        ValuationReport r;
        r.j = j;
        r.v = v.value;
        r.bound = static_cast<long>(poly.i - q_adic_order(P, j)) * e + (below_threshold_ff(P, poly.i, j) ? 1 : 0);
        r.passed = v.is_at_least(r.bound);
        r.exact = v.equals(r.bound);
        out.push_back(r);
    }
    return out;
}

std::vector<ValuationReport> verify_th11a(const CarlitzParams& params, unsigned m, unsigned i, std::size_t cap) {
    return verify_th11a(minpoly_rel_ff(params, m, i, cap));
}

CheckReport verify_th11a_cong(const CarlitzParams& params, unsigned m, unsigned i, unsigned beta, std::size_t cap) {
    if (beta < 1) throw ParameterError("th11a-cong needs beta >= 1");
    const unsigned upper_i = i + beta;
    const bool exact = params.level_dim(m + upper_i) <= cap;
    // Congruences modulo f^{i+1} ϖ_m are decided at precision f^{i+2}.
    const std::optional<unsigned> precision = exact ? std::nullopt : std::optional<unsigned>(i + 2);
    const RelMinPolyFF lower = exact ? minpoly_rel_ff(params, m, i, cap)
                                     : minpoly_rel_ff_adic(params, m, i, *precision);
    const RelMinPolyFF upper = exact ? minpoly_rel_ff(params, m, upper_i, cap)
                                     : minpoly_rel_ff_adic(params, m, upper_i, *precision);
    const CoefficientValuation valuation_at(params, m, precision);
    const long e = static_cast<long>(params.q_pow(m - 1));
    const std::size_t stride = params.q_pow(beta);
    CheckReport rep{"th11a-cong",
                    level_label(params, m, i) + " beta=" + std::to_string(beta) +
                        (exact ? "" : " (mod f^" + std::to_string(*precision) + ")"),
                    0,
                    {}};
    for (std::size_t j = 1; j < lower.degree(); ++j) {
        const auto v = valuation_at(difference(lower.coeffs[j], upper.coeffs[stride * j]));
        const long bound = static_cast<long>(i + 1) * e + (below_threshold_ff(params, i, j) ? 1 : 0);
        rep.expect(v.is_at_least(bound), [&] {
            return CheckFailure{"j=" + std::to_string(j), "v >= " + std::to_string(bound), "v = " + to_string(v)};
        });
    }
    return rep;
}

CheckReport verify_cor_diff2(const CarlitzParams& params, unsigned m, unsigned i, std::size_t cap) {
    const RelMinPolyFF poly = minpoly_rel_ff(params, m, i, cap);
    const BaseValuatorFF valuation_at(params, m);
    const long e = static_cast<long>(params.q_pow(m - 1));
    const std::size_t qi = params.q_pow(i);
    CheckReport rep{"cordiff2", level_label(params, m, i), 0, {}};
    for (unsigned beta = 0; beta < i; ++beta) {
        const std::size_t j = qi - (qi - params.q_pow(beta)) / (params.q - 1);
        const auto v = valuation_at(poly.coeffs[j]);
        const long want = static_cast<long>(i - beta) * e;
        rep.expect(v.equals(want), [&] {
            return CheckFailure{"beta=" + std::to_string(beta) + " j=" + std::to_string(j), "v = " + std::to_string(want),
                                "v = " + to_string(v)};
        });
    }
    return rep;
}

CheckReport verify_lem10a(const CarlitzParams& params, unsigned n, std::size_t cap) {
    if (n < 2) throw ParameterError("lem10a needs n >= 2");
    const std::size_t dim = params.level_dim(n);
    if (dim > cap)
        throw CapExceeded("lem10a: dimension " + std::to_string(dim) + " exceeds cap " + std::to_string(cap));
    const ThetaFieldRef F = make_theta_field(params, n);
    const ThetaElt wn = compute_varpi(F);
    const ThetaElt wn1 = varpi_in_field(F, n - 1);
    const ThetaElt f = ThetaElt::scalar(F, RatFunc(params.f));
    const ThetaElt theta = ThetaElt::theta(F);
    const ThetaElt theta_n1 = module_power(theta, params.f);
    const ThetaElt wn_q1 = wn.pow(params.q - 1);

    auto v_or_inf = [](const ThetaElt& x) { return x.is_zero() ? std::optional<long>() : std::optional<long>(f_valuation(x)); };
    CheckReport rep{"lem10a", params.label() + " n=" + std::to_string(n), 0, {}};
    const auto lhs = v_or_inf(wn_q1 * wn - wn1);
    const long rhs = f_valuation(wn_q1 * f);
    rep.expect(!lhs || *lhs >= rhs, [&] {
        return CheckFailure{"v(varpi_n^q - varpi_{n-1})", ">= " + std::to_string(rhs), show(lhs)};
    });
    const auto lhs_t = v_or_inf(theta.pow(params.q) - theta_n1);
    const long rhs_t = f_valuation(theta * f);
    rep.expect(!lhs_t || *lhs_t >= rhs_t, [&] {
        return CheckFailure{"v(theta_n^q - theta_{n-1})", ">= " + std::to_string(rhs_t), show(lhs_t)};
    });
    return rep;
}

CheckReport verify_cor_bu(const CarlitzParams& params, unsigned m, unsigned i, std::size_t cap) {
    require_f_is_y(params, "corbu");
    const RelMinPolyFF poly = minpoly_rel_ff(params, m, i, cap);
    const GaloisField& F = *params.field;
    const std::size_t qi = params.q_pow(i);
    const std::size_t mid = (params.q - 1) * params.q_pow(i - 1);
    CheckReport rep{"corbu", level_label(params, m, i), 0, {}};
    for (std::size_t j = 0; j <= qi; ++j) {
        BaseEltFF expected = zero_base(params, m);
        if (j == qi) expected = scalar_base(params, m, PolyFr::one(F));
        if (j == mid) expected = scalar_base(params, m, PolyFr::y(F));
        if (j == 0) expected = minus_varpi_base(params, m);
        const BaseEltFF diff = difference(poly.coeffs[j], expected);
        const bool ok = std::all_of(diff.begin(), diff.end(),
                                    [&](const RatFunc& c) { return c.is_zero() || valuation(c, params.f) >= 2; });
        rep.expect(ok, [&] {
            return CheckFailure{"j=" + std::to_string(j), show_base(expected) + " mod Y^2", show_base(poly.coeffs[j])};
        });
    }
    return rep;
}

CheckReport verify_car11(const CarlitzParams& params, unsigned m, std::size_t cap) {
    require_f_is_y(params, "car11");
    const RelMinPolyFF poly = minpoly_rel_ff(params, m, 1, cap);
    const GaloisField& F = *params.field;
    const std::size_t q = params.q;
    CheckReport rep{"car11", params.label() + " m=" + std::to_string(m), 0, {}};
    for (std::size_t j = 0; j <= q; ++j) {
        const BaseEltFF expected = j == 0 ? minus_varpi_base(params, m)
                                          : scalar_base(params, m, PolyFr::monomial(F, 1, q - j));
        rep.expect(poly.coeffs[j] == expected, [&] {
            return CheckFailure{"j=" + std::to_string(j), show_base(expected), show_base(poly.coeffs[j])};
        });
    }
    return rep;
}

CheckReport discriminant_check(const CarlitzParams& params, unsigned n, std::size_t cap) {
    const std::size_t dim = params.level_dim(n);
    if (dim > cap)
        throw CapExceeded("disc: dimension " + std::to_string(dim) + " exceeds cap " + std::to_string(cap));
    const auto psi = psi_poly(params, n);
    const PolyFr disc = resultant_domain(psi, psi.derivative());
    const long want = static_cast<long>(params.q_pow(n - 1) * (n * params.q - n - 1));
    CheckReport rep{"disc", params.label() + " n=" + std::to_string(n), 0, {}};
    const std::optional<long> v = disc.is_zero() ? std::nullopt : std::optional<long>(valuation(disc, params.f));
    rep.expect(v && *v == want, [&] {
        return CheckFailure{"v_f(disc)", std::to_string(want), show(v)};
    });
    if (v) {
        const PolyFr unit = exact_div(disc, pow(params.f, static_cast<unsigned long>(*v)));
        rep.expect(unit.degree() == 0, [&] {
            return CheckFailure{"disc / f^" + std::to_string(*v), "nonzero constant", to_string(unit)};
        });
    }
    return rep;
}

ConjectureScan conjecture_scan(const CarlitzParams& params, unsigned m, unsigned i, std::size_t cap) {
    require_f_is_y(params, "conj-car12");
    const RelMinPolyFF poly = minpoly_rel_ff(params, m, i, cap);
    const BaseValuatorFF valuation_at(params, m);
    const std::size_t q = params.q, qi = params.q_pow(i);
    const long e = static_cast<long>(params.q_pow(m - 1));
    const unsigned long p = params.p();
    // v_p with v_p(0) = ∞ encoded as a large sentinel.
    auto vp = [p](std::size_t d) {
        if (d == 0) return 1L << 30;
        long v = 0;
        while (d % p == 0) {
            d /= p;
            ++v;
        }
        return v;
    };
    ConjectureScan scan;
    scan.params = params.label();
    scan.m = m;
    scan.i = i;
    for (std::size_t j = 1; j <= qi; ++j) {
        ConjectureVerdict v;
        v.j = j;
        std::size_t rest = qi - j;
        long sum = 0;
        for (unsigned k = 0; k < i; ++k, rest /= q) {
            v.digits.push_back(rest % q);
            sum += static_cast<long>(rest % q);
        }
        for (unsigned k = 0; k + 1 < i; ++k) {
            v.cond_decreasing = v.cond_decreasing || v.digits[k + 1] < v.digits[k];
            v.cond_p_order = v.cond_p_order || vp(v.digits[k + 1]) > vp(v.digits[k]);
        }
        v.predicted_zero = v.cond_decreasing || v.cond_p_order;
        v.predicted_v = e * sum;
        v.actual_v = valuation_at(poly.coeffs[j]).value;
        v.match = v.predicted_zero ? !v.actual_v : (v.actual_v && *v.actual_v == v.predicted_v);
        if (!v.match) ++scan.mismatches;
        scan.verdicts.push_back(std::move(v));
    }
    return scan;
}

}  // namespace eisen
