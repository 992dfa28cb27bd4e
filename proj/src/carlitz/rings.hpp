#pragma once

// Two concrete models of the θ_n-quotient ring sharing the tower algorithms below:
// ExactRing works over F_r(Y); AdicRing works over F_r[Y]/f^K with flat storage.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "eisen/carlitz/carlitz.hpp"
#include "eisen/errors.hpp"

namespace eisen::carlitz_detail {

struct ExactRing {
    using Elt = ThetaElt;
    ThetaFieldRef F;

    const CarlitzParams& params() const { return F->params(); }
    unsigned level() const { return F->n(); }
    std::size_t dim() const { return F->dim(); }
    Elt zero() const { return ThetaElt(F); }
    Elt one() const { return ThetaElt::one(F); }
    Elt theta() const { return ThetaElt::theta(F); }
    Elt add(const Elt& a, const Elt& b) const { return a + b; }
    Elt mul(const Elt& a, const Elt& b) const { return a * b; }
    Elt frob(const Elt& a) const { return a.frobenius(); }
    Elt scale(const Elt& a, const PolyFr& c) const { return a.scaled(RatFunc(c)); }
    /// Coordinate of an integral element.
    PolyFr coord(const Elt& a, std::size_t k) const {
        if (!a.is_integral()) throw InternalError("expected an integral element");
        return a.numerators()[k];
    }
};

/// (F_r[Y]/f^K)[X]/Ψ_{f^n}(X). Element storage is row-major: c[x * L + y] is the
/// coefficient of θ^x Y^y, L = K deg f.
class AdicRing {
public:
    struct Elt {
        std::vector<FrElem> c;
        friend bool operator==(const Elt& a, const Elt& b) { return a.c == b.c; }
    };

    AdicRing(const CarlitzParams& params, unsigned n, unsigned precision);

    const CarlitzParams& params() const { return params_; }
    unsigned level() const { return n_; }
    std::size_t dim() const { return dim_; }
    unsigned precision() const { return K_; }
    const PolyFr& modulus() const { return fK_; }

    Elt zero() const { return Elt{std::vector<FrElem>(dim_ * L_, 0)}; }
    Elt one() const;
    Elt theta() const;
    Elt add(const Elt& a, const Elt& b) const;
    Elt mul(const Elt& a, const Elt& b) const;
    Elt frob(const Elt& a) const;
    Elt scale(const Elt& a, const PolyFr& c) const;
    PolyFr coord(const Elt& a, std::size_t k) const;

private:
    template <class Ops>
    Elt mul_with(const Ops& ops, const Elt& a, const Elt& b) const;
    template <class Ops>
    Elt frob_with(const Ops& ops, const Elt& a) const;
    template <class Ops>
    Elt reduce_slots(const Ops& ops, std::vector<typename Ops::Acc>& acc, std::size_t slots) const;
    void reduce_y(std::vector<FrElem>& wide, FrElem* out) const;
    std::vector<std::size_t> nonzero_rows(const Elt& a) const;

    CarlitzParams params_;
    unsigned n_;
    unsigned K_;
    std::size_t dim_;
    std::size_t L_;
    std::size_t W_;
    PolyFr fK_;
    std::vector<FrElem> psi_;
    std::vector<std::size_t> psi_support_;
};

/// φ_Y^i(θ) for i < deg f^n; P_e(θ) is then a linear combination of these.
template <class Ring>
std::vector<typename Ring::Elt> theta_chain(const Ring& R) {
    const GaloisField& F = *R.params().field;
    const long top = static_cast<long>(R.level()) * R.params().f.degree();
    std::vector<typename Ring::Elt> chain{R.theta()};
    const PolyFr y = PolyFr::y(F);
    for (long k = 1; k < top; ++k) {
        const auto& prev = chain.back();
        chain.push_back(R.add(R.scale(prev, y), R.frob(prev)));
    }
    return chain;
}

/// θ^e with e already reduced modulo f^n.
template <class Ring>
typename Ring::Elt module_power_theta(const Ring& R, const std::vector<typename Ring::Elt>& chain, const PolyFr& e) {
    const GaloisField& F = *R.params().field;
    auto acc = R.zero();
    for (std::size_t k = 0; k < e.coeffs().size(); ++k) {
        const FrElem c = e.coeffs()[k];
        if (c) acc = R.add(acc, R.scale(chain.at(k), PolyFr::constant(F, c)));
    }
    return acc;
}

/// Nonzero residues mod f as polynomials of degree < deg f, in code order.
std::vector<PolyFr> unit_representatives(const CarlitzParams& params);

/// ϖ_m inside the level-n ring, m <= n.
template <class Ring>
typename Ring::Elt varpi_generic(const Ring& R, const std::vector<typename Ring::Elt>& chain, unsigned m) {
    const CarlitzParams& P = R.params();
    const unsigned n = R.level();
    if (m < 1 || m > n) throw ParameterError("varpi: level out of range");
    const PolyFr fm = pow(P.f, m);
    const PolyFr shift = pow(P.f, n - m);
    const unsigned long long qm1 = P.q_pow(m - 1);
    auto acc = R.one();
    for (const PolyFr& c : unit_representatives(P)) {
        const PolyFr e = powmod(c, qm1, fm) * shift;
        acc = R.mul(acc, module_power_theta(R, chain, e));
    }
    return acc;
}

/// Columns ϖ_m^k ϖ_n^j at index t = j + k q^i, and the target ϖ_n^{q^i}.
template <class Ring>
struct MinpolyColumns {
    std::vector<typename Ring::Elt> cols;
    typename Ring::Elt top;
};

template <class Ring>
MinpolyColumns<Ring> build_columns(const Ring& R, unsigned m, unsigned i) {
    const CarlitzParams& P = R.params();
    const std::size_t qi = P.q_pow(i);
    const std::size_t e = P.q_pow(m - 1);
    const auto chain = theta_chain(R);
    const auto pn = varpi_generic(R, chain, R.level());
    std::vector<typename Ring::Elt> pm_pow{R.one()};
    if (e > 1) {
        const auto pm = varpi_generic(R, chain, m);
        for (std::size_t k = 1; k < e; ++k) pm_pow.push_back(R.mul(pm_pow.back(), pm));
    }
    MinpolyColumns<Ring> out{std::vector<typename Ring::Elt>(qi * e, R.zero()), R.zero()};
    auto pn_j = R.one();
    for (std::size_t j = 0; j < qi; ++j) {
        out.cols[j] = pn_j;
        for (std::size_t k = 1; k < e; ++k) out.cols[j + k * qi] = R.mul(pm_pow[k], pn_j);
        pn_j = R.mul(pn_j, pn);
    }
    out.top = pn_j;
    return out;
}

}  // namespace eisen::carlitz_detail
