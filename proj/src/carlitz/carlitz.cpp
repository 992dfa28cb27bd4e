#include "eisen/carlitz/carlitz.hpp"

#include <algorithm>

#include "eisen/arith/integer.hpp"
#include "eisen/arith/linear_system.hpp"
#include "eisen/arith/resultant.hpp"
#include "eisen/errors.hpp"
#include "rings.hpp"

namespace eisen {

namespace {

std::size_t checked_mul(std::size_t a, std::size_t b) {
    std::size_t out = 0;
    if (__builtin_mul_overflow(a, b, &out)) throw CapExceeded("size overflow");
    return out;
}

PolyFr y_poly(const CarlitzParams& params) { return PolyFr::y(*params.field); }

}  // namespace

std::size_t CarlitzParams::q_pow(unsigned k) const {
    std::size_t out = 1;
    for (unsigned t = 0; t < k; ++t) out = checked_mul(out, q);
    return out;
}

std::size_t CarlitzParams::level_dim(unsigned n) const {
    if (n < 1) throw ParameterError("level must be >= 1");
    return checked_mul(q - 1, q_pow(n - 1));
}

std::string CarlitzParams::label() const {
    std::string s = "r=" + std::to_string(r());
    if (rho() > 1) s += " (p=" + std::to_string(p()) + ")";
    return s + " f=" + to_string(f);
}

CarlitzParams make_carlitz_params(const GaloisField& field, const PolyFr& f) {
    if (field.p() == 2) throw ParameterError("p = 2 is not supported");
    if (f.field() != &field) throw ParameterError("f lives over a different field");
    if (f.degree() < 1) throw ParameterError("f must have positive degree");
    if (!f.is_monic()) throw ParameterError("f must be monic");
    if (!is_irreducible(f)) throw ParameterError("f is not irreducible over F_" + std::to_string(field.size()));
    CarlitzParams out;
    out.field = &field;
    out.f = f;
    out.q = 1;
    for (long k = 0; k < f.degree(); ++k) out.q = checked_mul(out.q, field.size());
    return out;
}

CarlitzParams make_carlitz_params(unsigned long p, unsigned rho, const std::string& f_codes,
                                  const std::vector<unsigned>& fr_modulus) {
    if (!is_odd_prime(p)) throw ParameterError("p must be an odd prime, got " + std::to_string(p));
    if (rho < 1) throw ParameterError("rho must be >= 1");
    const GaloisField& field = GaloisField::get(p, rho, fr_modulus);
    return make_carlitz_params(field, parse_poly_fr(field, f_codes));
}

// ---------------------------------------------------------------------------------------------
// Additive polynomials

DensePoly<PolyFr> AdditivePoly::to_dense(unsigned long r) const {
    if (coeffs.empty()) return {};
    std::size_t deg = 1;
    for (std::size_t k = 1; k < coeffs.size(); ++k) deg = checked_mul(deg, r);
    std::vector<PolyFr> v(deg + 1);
    std::size_t e = 1;
    for (std::size_t k = 0; k < coeffs.size(); ++k, e *= r) v[e] = coeffs[k];
    return DensePoly<PolyFr>(std::move(v));
}

namespace {

void trim(AdditivePoly& a) {
    while (!a.coeffs.empty() && a.coeffs.back().is_zero()) a.coeffs.pop_back();
}

}  // namespace

AdditivePoly operator+(const AdditivePoly& a, const AdditivePoly& b) {
    AdditivePoly out;
    out.coeffs.resize(std::max(a.coeffs.size(), b.coeffs.size()));
    for (std::size_t k = 0; k < out.coeffs.size(); ++k) {
        if (k < a.coeffs.size()) out.coeffs[k] += a.coeffs[k];
        if (k < b.coeffs.size()) out.coeffs[k] += b.coeffs[k];
    }
    trim(out);
    return out;
}

AdditivePoly compose(const AdditivePoly& a, const AdditivePoly& b, unsigned long r) {
    AdditivePoly out;
    if (a.coeffs.empty() || b.coeffs.empty()) return out;
    out.coeffs.resize(a.coeffs.size() + b.coeffs.size() - 1);
    for (std::size_t k = 0; k < a.coeffs.size(); ++k) {
        std::size_t rk = 1;
        for (std::size_t t = 0; t < k; ++t) rk = checked_mul(rk, r);
        for (std::size_t l = 0; l < b.coeffs.size(); ++l) out.coeffs[k + l] += a.coeffs[k] * b.coeffs[l].inflated(rk);
    }
    trim(out);
    return out;
}

AdditivePoly carlitz_poly(const CarlitzParams& params, const PolyFr& e) {
    AdditivePoly out;
    if (e.is_zero()) return out;
    const GaloisField& F = *params.field;
    const PolyFr y = y_poly(params);
    const unsigned long r = params.r();
    std::vector<PolyFr> cur{PolyFr::one(F)};  // P_{Y^k}
    out.coeffs.assign(e.coeffs().size(), PolyFr::zero(F));
    for (std::size_t k = 0; k < e.coeffs().size(); ++k) {
        if (k > 0) {
            std::vector<PolyFr> next(cur.size() + 1, PolyFr::zero(F));
            for (std::size_t t = 0; t < cur.size(); ++t) {
                next[t] += y * cur[t];
                next[t + 1] += cur[t].inflated(r);
            }
            cur = std::move(next);
        }
        const FrElem c = e.coeffs()[k];
        if (!c) continue;
        for (std::size_t t = 0; t < cur.size(); ++t) out.coeffs[t] += cur[t].scaled(c);
    }
    trim(out);
    return out;
}

std::string to_string(const AdditivePoly& a, unsigned long r) { return to_string(a.to_dense(r)); }

DensePoly<PolyFr> psi_poly(const CarlitzParams& params, unsigned n) {
    if (n < 1) throw ParameterError("psi needs n >= 1");
    const std::size_t dim = params.level_dim(n);
    const unsigned long r = params.r();
    const auto upper = carlitz_poly(params, pow(params.f, n)).to_dense(r);
    const auto lower = carlitz_poly(params, pow(params.f, n - 1)).to_dense(r);
    auto [psi, rem] = divrem_monic(upper, lower);
    if (!rem.is_zero()) throw InternalError("psi: inexact division");
    if (psi.degree() != static_cast<long>(dim)) throw InternalError("psi: wrong degree");
    if (!(psi.lc() == PolyFr::one(*params.field))) throw InternalError("psi: not monic");
    for (std::size_t k = 0; k < dim; ++k) {
        const PolyFr& c = psi.coeffs()[k];
        if (!(c % params.f).is_zero()) throw InternalError("psi: not Eisenstein at f");
    }
    if (!(psi.coeffs()[0] == params.f)) throw InternalError("psi: constant term is not f");
    return psi;
}

// ---------------------------------------------------------------------------------------------
// The θ_n-quotient ring

ThetaField::ThetaField(CarlitzParams params, unsigned n)
    : params_(std::move(params)), n_(n), dim_(params_.level_dim(n)), psi_(psi_poly(params_, n)),
      fn_(pow(params_.f, n)) {
    for (std::size_t k = 0; k < dim_; ++k)
        if (!psi_.coeffs()[k].is_zero()) support_.push_back(k);
}

ThetaFieldRef make_theta_field(const CarlitzParams& params, unsigned n) {
    return std::make_shared<const ThetaField>(params, n);
}

ThetaElt::ThetaElt(ThetaFieldRef field)
    : field_(std::move(field)),
      num_(field_->dim(), PolyFr::zero(*field_->params().field)),
      den_(PolyFr::one(*field_->params().field)) {}

ThetaElt::ThetaElt(ThetaFieldRef field, std::vector<PolyFr> num, PolyFr den)
    : field_(std::move(field)), num_(std::move(num)), den_(std::move(den)) {
    if (num_.size() != field_->dim()) throw ParameterError("ThetaElt: wrong number of coordinates");
    if (den_.is_zero()) throw InexactDivision("ThetaElt: zero denominator");
    normalize();
}

ThetaElt ThetaElt::one(const ThetaFieldRef& field) { return scalar(field, RatFunc(PolyFr::one(*field->params().field))); }

ThetaElt ThetaElt::theta(const ThetaFieldRef& field) {
    ThetaElt x(field);
    x.num_[1] = PolyFr::one(*field->params().field);
    return x;
}

ThetaElt ThetaElt::scalar(const ThetaFieldRef& field, const RatFunc& c) {
    ThetaElt x(field);
    if (c.is_zero()) return x;
    x.num_[0] = c.num();
    x.den_ = c.den();
    return x;
}

void ThetaElt::normalize() {
    const GaloisField& F = *field_->params().field;
    for (auto& c : num_)
        if (!c.field()) c = PolyFr::zero(F);
    if (den_.degree() > 0) {
        PolyFr g = den_;
        for (const auto& c : num_) {
            if (g.degree() == 0) break;
            if (!c.is_zero()) g = gcd(g, c);
        }
        if (g.degree() > 0) {
            den_ = exact_div(den_, g);
            for (auto& c : num_)
                if (!c.is_zero()) c = exact_div(c, g);
        }
    }
    const FrElem lc = den_.lc();
    if (lc != 1) {
        const FrElem inv = F.inv(lc);
        den_ = den_.scaled(inv);
        for (auto& c : num_) c = c.scaled(inv);
    }
}

RatFunc ThetaElt::coord(std::size_t k) const { return RatFunc(num_.at(k), den_); }

std::vector<RatFunc> ThetaElt::coords() const {
    std::vector<RatFunc> out;
    out.reserve(num_.size());
    for (std::size_t k = 0; k < num_.size(); ++k) out.push_back(coord(k));
    return out;
}

bool ThetaElt::is_zero() const {
    return std::all_of(num_.begin(), num_.end(), [](const PolyFr& c) { return c.is_zero(); });
}

bool operator==(const ThetaElt& a, const ThetaElt& b) {
    if (a.field_ != b.field_ && a.field_->dim() != b.field_->dim()) return false;
    return a.num_ == b.num_ && a.den_ == b.den_;
}

namespace {

/// Reduces coordinates of degree >= dim modulo the monic Ψ.
std::vector<PolyFr> reduce_mod_psi(const ThetaField& F, std::vector<PolyFr> v) {
    const std::size_t dim = F.dim();
    const auto psi = F.psi().coeffs();
    for (std::size_t k = v.size(); k-- > dim;) {
        const PolyFr t = v[k];
        if (t.is_zero()) continue;
        for (std::size_t i : F.psi_support()) v[k - dim + i] -= t * psi[i];
    }
    v.resize(dim, PolyFr::zero(*F.params().field));
    return v;
}

}  // namespace

ThetaElt operator+(const ThetaElt& a, const ThetaElt& b) {
    std::vector<PolyFr> v(a.num_.size());
    if (a.den_ == b.den_) {
        for (std::size_t k = 0; k < v.size(); ++k) v[k] = a.num_[k] + b.num_[k];
        return ThetaElt(a.field_, std::move(v), a.den_);
    }
    for (std::size_t k = 0; k < v.size(); ++k) v[k] = a.num_[k] * b.den_ + b.num_[k] * a.den_;
    return ThetaElt(a.field_, std::move(v), a.den_ * b.den_);
}

ThetaElt ThetaElt::operator-() const {
    ThetaElt x = *this;
    for (auto& c : x.num_) c = -c;
    return x;
}

ThetaElt operator-(const ThetaElt& a, const ThetaElt& b) { return a + (-b); }

ThetaElt operator*(const ThetaElt& a, const ThetaElt& b) {
    const ThetaField& F = *a.field_;
    const std::size_t dim = F.dim();
    std::vector<std::size_t> nb;
    for (std::size_t j = 0; j < dim; ++j)
        if (!b.num_[j].is_zero()) nb.push_back(j);
    std::vector<PolyFr> v(2 * dim - 1, PolyFr::zero(*F.params().field));
    for (std::size_t i = 0; i < dim; ++i) {
        if (a.num_[i].is_zero()) continue;
        for (std::size_t j : nb) v[i + j] += a.num_[i] * b.num_[j];
    }
    return ThetaElt(a.field_, reduce_mod_psi(F, std::move(v)), a.den_ * b.den_);
}

ThetaElt ThetaElt::scaled(const RatFunc& c) const {
    if (c.is_zero()) return ThetaElt(field_);
    std::vector<PolyFr> v(num_.size());
    for (std::size_t k = 0; k < v.size(); ++k) v[k] = num_[k] * c.num();
    return ThetaElt(field_, std::move(v), den_ * c.den());
}

ThetaElt ThetaElt::frobenius() const {
    const ThetaField& F = *field_;
    const std::size_t r = F.params().r();
    std::vector<PolyFr> v(r * (num_.size() - 1) + 1, PolyFr::zero(*F.params().field));
    for (std::size_t k = 0; k < num_.size(); ++k) v[r * k] = num_[k].inflated(r);
    return ThetaElt(field_, reduce_mod_psi(F, std::move(v)), den_.inflated(r));
}

ThetaElt ThetaElt::pow(unsigned long e) const {
    ThetaElt result = one(field_), b = *this;
    while (e) {
        if (e & 1) result = result * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return result;
}

ThetaElt evaluate(const DensePoly<PolyFr>& poly, const ThetaElt& x) {
    ThetaElt acc(x.field());
    for (std::size_t k = poly.size(); k-- > 0;) acc = acc * x + ThetaElt::scalar(x.field(), RatFunc(poly.coeffs()[k]));
    return acc;
}

ThetaElt module_power(const ThetaElt& x, const PolyFr& e) {
    const ThetaField& F = *x.field();
    const PolyFr red = e % F.exponent_modulus();
    if (red.is_zero()) return ThetaElt(x.field());
    const GaloisField& G = *F.params().field;
    const RatFunc y(PolyFr::y(G));
    // Horner in φ_Y: P_e(x) = φ_Y(P_{(e - c_0)/Y}(x)) + c_0 x.
    ThetaElt acc = x.scaled(RatFunc(PolyFr::constant(G, red.lc())));
    for (long k = red.degree() - 1; k >= 0; --k) {
        acc = acc.scaled(y) + acc.frobenius();
        const FrElem c = red.coeffs()[static_cast<std::size_t>(k)];
        if (c) acc = acc + x.scaled(RatFunc(PolyFr::constant(G, c)));
    }
    return acc;
}

namespace carlitz_detail {

std::vector<PolyFr> unit_representatives(const CarlitzParams& params) {
    const GaloisField& F = *params.field;
    const std::size_t r = F.size();
    const std::size_t d = static_cast<std::size_t>(params.f.degree());
    std::vector<PolyFr> out;
    for (std::size_t code = 1; code < params.q; ++code) {
        std::vector<FrElem> c(d);
        std::size_t x = code;
        for (std::size_t k = 0; k < d; ++k, x /= r) c[k] = static_cast<FrElem>(x % r);
        out.emplace_back(F, std::move(c));
    }
    return out;
}

}  // namespace carlitz_detail

ThetaElt varpi_in_field(const ThetaFieldRef& field, unsigned m) {
    const carlitz_detail::ExactRing R{field};
    return carlitz_detail::varpi_generic(R, carlitz_detail::theta_chain(R), m);
}

ThetaElt compute_varpi(const ThetaFieldRef& field) { return varpi_in_field(field, field->n()); }

long f_valuation(const ThetaElt& x) {
    if (x.is_zero()) throw InfiniteValuation();
    const ThetaField& F = *x.field();
    const PolyFr& f = F.params().f;
    const long dim = static_cast<long>(F.dim());
    long best = 0;
    bool first = true;
    for (std::size_t k = 0; k < x.numerators().size(); ++k) {
        const PolyFr& c = x.numerators()[k];
        if (c.is_zero()) continue;
        const long v = dim * valuation(c, f) + static_cast<long>(k);
        if (first || v < best) best = v;
        first = false;
    }
    return best - dim * valuation(x.denominator(), f);
}

long f_valuation_via_resultant(const ThetaElt& x) {
    if (x.is_zero()) throw InfiniteValuation();
    const ThetaField& F = *x.field();
    const DensePoly<PolyFr> num(x.numerators());
    const PolyFr res = resultant_domain(F.psi(), num);
    return valuation(res, F.params().f) - static_cast<long>(F.dim()) * valuation(x.denominator(), F.params().f);
}

// ---------------------------------------------------------------------------------------------
// Relative minimal polynomials

namespace {

void validate_levels(unsigned m, unsigned i) {
    if (m < 1) throw ParameterError("m must be >= 1");
    if (i < 1) throw ParameterError("i must be >= 1");
}

std::string level_label(const CarlitzParams& params, unsigned m, unsigned i) {
    return params.label() + " m=" + std::to_string(m) + " i=" + std::to_string(i);
}

/// -ϖ_m as a base element.
std::vector<RatFunc> minus_uniformizer(const CarlitzParams& params, unsigned m) {
    const GaloisField& F = *params.field;
    std::vector<RatFunc> out(params.q_pow(m - 1), RatFunc(PolyFr::zero(F)));
    if (m == 1)
        out[0] = RatFunc(-params.f);
    else
        out[1] = RatFunc(-PolyFr::one(F));
    return out;
}

/// Inverse of a modulo mod (gcd(a, mod) = 1), by the extended Euclidean algorithm.
PolyFr inverse_mod(const PolyFr& a, const PolyFr& mod) {
    const GaloisField& F = *mod.field();
    PolyFr r0 = mod, r1 = a % mod, s0 = PolyFr::zero(F), s1 = PolyFr::one(F);
    while (!r1.is_zero()) {
        auto [qt, rem] = divrem(r0, r1);
        PolyFr s2 = s0 - qt * s1;
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r0.degree() != 0) throw InternalError("inverse_mod: not a unit");
    return (s0.scaled(F.inv(r0.lc()))) % mod;
}

std::vector<std::vector<RatFunc>> assemble(const CarlitzParams& params, unsigned m, unsigned i,
                                           const std::vector<RatFunc>& x) {
    const GaloisField& F = *params.field;
    const std::size_t qi = params.q_pow(i), e = params.q_pow(m - 1);
    std::vector<std::vector<RatFunc>> coeffs(qi + 1, std::vector<RatFunc>(e, RatFunc(PolyFr::zero(F))));
    for (std::size_t j = 0; j < qi; ++j)
        for (std::size_t k = 0; k < e; ++k) coeffs[j][k] = x[j + k * qi];
    coeffs[qi][0] = RatFunc(PolyFr::one(F));
    return coeffs;
}

}  // namespace

RelMinPolyFF minpoly_rel_ff(const CarlitzParams& params, unsigned m, unsigned i, std::size_t cap) {
    validate_levels(m, i);
    const unsigned n = m + i;
    const std::size_t dim = params.level_dim(n);
    const std::string label = level_label(params, m, i);
    if (dim > cap)
        throw CapExceeded("minpoly_rel_ff(" + label + "): dimension " + std::to_string(dim) + " exceeds cap " +
                          std::to_string(cap));
    const carlitz_detail::ExactRing R{make_theta_field(params, n)};
    const auto cols = carlitz_detail::build_columns(R, m, i);
    const std::size_t N = cols.cols.size();
    const std::size_t step = params.q - 1;

    // Rows (q-1)t: column t has θ-valuation (q-1)t with a unit there, so this minor is
    // unimodular at f and determines the relation.
    LinearSystem<RatFunc> sys(N, N);
    for (std::size_t row = 0; row < N; ++row) {
        for (std::size_t t = 0; t < N; ++t) sys.at(row, t) = RatFunc(R.coord(cols.cols[t], step * row));
        sys.rhs[row] = RatFunc(-R.coord(cols.top, step * row));
    }
    std::vector<RatFunc> x;
    try {
        x = solve_unique(sys, PivotChoice::Smallest);
    } catch (const InconsistentSystem&) {
        throw InternalError("minpoly_rel_ff: inconsistent system for " + label);
    } catch (const UnderdeterminedSystem&) {
        throw InternalError("minpoly_rel_ff: underdetermined system for " + label);
    }
    // Full annihilation check over every θ-coordinate, cleared of denominators.
    PolyFr common = PolyFr::one(*params.field);
    for (const auto& c : x) {
        if (valuation(c.den(), params.f) != 0)
            throw InternalError("minpoly_rel_ff: coefficient not f-integral for " + label);
        common = exact_div(common * c.den(), gcd(common, c.den()));
    }
    std::vector<PolyFr> scaled_x;
    for (const auto& c : x) scaled_x.push_back(c.num() * exact_div(common, c.den()));
    for (std::size_t row = 0; row < dim; ++row) {
        PolyFr acc = common * R.coord(cols.top, row);
        for (std::size_t t = 0; t < N; ++t) {
            const PolyFr c = R.coord(cols.cols[t], row);
            if (!c.is_zero()) acc += scaled_x[t] * c;
        }
        if (!acc.is_zero()) throw InternalError("minpoly_rel_ff: relation does not annihilate varpi for " + label);
    }
    RelMinPolyFF out{params, m, i, assemble(params, m, i, x), std::nullopt};
    if (out.coeffs[0] != minus_uniformizer(params, m))
        throw InternalError("minpoly_rel_ff: constant term is not -varpi_m for " + label);
    return out;
}

RelMinPolyFF minpoly_rel_ff_adic(const CarlitzParams& params, unsigned m, unsigned i, unsigned precision,
                                 std::size_t cap) {
    validate_levels(m, i);
    if (precision < 2) throw ParameterError("adic precision must be >= 2");
    const unsigned n = m + i;
    const std::size_t dim = params.level_dim(n);
    const std::string label = level_label(params, m, i);
    if (dim > cap)
        throw CapExceeded("minpoly_rel_ff_adic(" + label + "): dimension " + std::to_string(dim) + " exceeds cap " +
                          std::to_string(cap));
    const carlitz_detail::AdicRing R(params, n, precision);
    const PolyFr& mod = R.modulus();
    const auto cols = carlitz_detail::build_columns(R, m, i);
    const std::size_t N = cols.cols.size();
    const std::size_t step = params.q - 1;

    std::vector<PolyFr> a(N * N);
    std::vector<PolyFr> b(N);
    for (std::size_t row = 0; row < N; ++row) {
        for (std::size_t t = 0; t < N; ++t) a[row * N + t] = R.coord(cols.cols[t], step * row);
        b[row] = (-R.coord(cols.top, step * row)) % mod;
    }
    // Gauss-Jordan over F_r[Y]/f^K with unit pivots; the minor is invertible modulo f.
    for (std::size_t c = 0; c < N; ++c) {
        std::size_t piv = N;
        for (std::size_t row = c; row < N && piv == N; ++row)
            if (!(a[row * N + c] % params.f).is_zero()) piv = row;
        if (piv == N) throw InternalError("minpoly_rel_ff_adic: minor singular modulo f for " + label);
        if (piv != c) {
            for (std::size_t t = 0; t < N; ++t) std::swap(a[piv * N + t], a[c * N + t]);
            std::swap(b[piv], b[c]);
        }
        const PolyFr inv = inverse_mod(a[c * N + c], mod);
        for (std::size_t t = c; t < N; ++t) a[c * N + t] = (a[c * N + t] * inv) % mod;
        b[c] = (b[c] * inv) % mod;
        for (std::size_t row = 0; row < N; ++row) {
            if (row == c) continue;
            const PolyFr factor = a[row * N + c];
            if (factor.is_zero()) continue;
            for (std::size_t t = c; t < N; ++t)
                if (!a[c * N + t].is_zero()) a[row * N + t] = (a[row * N + t] - factor * a[c * N + t]) % mod;
            b[row] = (b[row] - factor * b[c]) % mod;
        }
    }
    for (std::size_t row = 0; row < dim; ++row) {
        PolyFr acc = R.coord(cols.top, row);
        for (std::size_t t = 0; t < N; ++t) acc += b[t] * R.coord(cols.cols[t], row);
        if (!(acc % mod).is_zero())
            throw InternalError("minpoly_rel_ff_adic: relation does not annihilate varpi for " + label);
    }

    std::vector<RatFunc> x;
    x.reserve(N);
    for (std::size_t t = 0; t < N; ++t) x.emplace_back(b[t]);
    RelMinPolyFF out{params, m, i, assemble(params, m, i, x), precision};
    auto expected = minus_uniformizer(params, m);
    for (auto& c : expected) c = RatFunc(c.num() % mod);
    if (out.coeffs[0] != expected)
        throw InternalError("minpoly_rel_ff_adic: constant term is not -varpi_m for " + label);
    return out;
}

// ---------------------------------------------------------------------------------------------
// Valuations of base elements

BaseValuationFF base_valuation_direct(const CarlitzParams& params, unsigned m, const std::vector<RatFunc>& a,
                                      std::optional<unsigned> precision) {
    const long e = static_cast<long>(params.q_pow(m - 1));
    BaseValuationFF out;
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (a[k].is_zero()) continue;
        const long v = e * valuation(a[k], params.f) + static_cast<long>(k);
        if (!out.value || v < *out.value) out.value = v;
    }
    if (!out.value && precision) {
        out.value = e * static_cast<long>(*precision);
        out.at_least = true;
    }
    return out;
}

std::string to_string(const BaseValuationFF& v) {
    if (!v.value) return "inf";
    return (v.at_least ? ">=" : "") + std::to_string(*v.value);
}

BaseValuatorFF::BaseValuatorFF(const CarlitzParams& params, unsigned m)
    : params_(params), m_(m), field_(make_theta_field(params, m)) {
    const ThetaElt pm = compute_varpi(field_);
    powers_.push_back(ThetaElt::one(field_));
    const std::size_t e = params.q_pow(m - 1);
    for (std::size_t k = 1; k < e; ++k) powers_.push_back(powers_.back() * pm);
}

ThetaElt BaseValuatorFF::evaluate(const std::vector<RatFunc>& a) const {
    if (a.size() > powers_.size()) throw ParameterError("base element has too many coefficients");
    ThetaElt x(field_);
    for (std::size_t k = 0; k < a.size(); ++k)
        if (!a[k].is_zero()) x = x + powers_[k].scaled(a[k]);
    return x;
}

BaseValuationFF BaseValuatorFF::operator()(const std::vector<RatFunc>& a) const {
    const ThetaElt x = evaluate(a);
    if (x.is_zero()) return {};
    const long v = f_valuation(x);
    const long step = static_cast<long>(params_.q - 1);
    if (v % step != 0) throw InternalError("v_theta not divisible by q-1 at level " + std::to_string(m_));
    return {v / step, false};
}

}  // namespace eisen
