#include <cstdint>

#include "rings.hpp"

namespace eisen::carlitz_detail {

namespace {

// Accumulation policies: prime fields sum products in 64-bit integers and reduce once;
// extension fields go through the tables.
struct PrimeOps {
    using Acc = std::uint64_t;
    unsigned p;
    void mac(Acc& acc, FrElem x, FrElem y) const { acc += static_cast<Acc>(x) * y; }
    FrElem fin(Acc acc) const { return static_cast<FrElem>(acc % p); }
    FrElem neg(FrElem x) const { return x ? static_cast<FrElem>(p - x) : FrElem{0}; }
};

struct TableOps {
    using Acc = FrElem;
    const GaloisField* F;
    void mac(Acc& acc, FrElem x, FrElem y) const { acc = F->add(acc, F->mul(x, y)); }
    FrElem fin(Acc acc) const { return acc; }
    FrElem neg(FrElem x) const { return F->neg(x); }
};

std::vector<FrElem> padded(const PolyFr& c, std::size_t L) {
    std::vector<FrElem> v(c.coeffs().begin(), c.coeffs().end());
    v.resize(L, 0);
    return v;
}

}  // namespace

AdicRing::AdicRing(const CarlitzParams& params, unsigned n, unsigned precision)
    : params_(params), n_(n), K_(precision), dim_(params.level_dim(n)),
      L_(static_cast<std::size_t>(precision) * static_cast<std::size_t>(params.f.degree())), W_(2 * L_ - 1),
      fK_(pow(params.f, precision)) {
    const auto psi = psi_poly(params, n);
    psi_.assign(dim_ * L_, 0);
    for (std::size_t i = 0; i < dim_; ++i) {
        const auto row = padded(psi.coeffs()[i] % fK_, L_);
        bool nonzero = false;
        for (std::size_t y = 0; y < L_; ++y) {
            psi_[i * L_ + y] = row[y];
            nonzero = nonzero || row[y];
        }
        if (nonzero) psi_support_.push_back(i);
    }
}

AdicRing::Elt AdicRing::one() const {
    Elt x = zero();
    x.c[0] = 1;
    return x;
}

AdicRing::Elt AdicRing::theta() const {
    Elt x = zero();
    x.c[L_] = 1;
    return x;
}

AdicRing::Elt AdicRing::add(const Elt& a, const Elt& b) const {
    const GaloisField& F = *params_.field;
    Elt x = zero();
    for (std::size_t k = 0; k < x.c.size(); ++k) x.c[k] = F.add(a.c[k], b.c[k]);
    return x;
}

AdicRing::Elt AdicRing::scale(const Elt& a, const PolyFr& c) const {
    Elt x = zero();
    for (std::size_t i : nonzero_rows(a)) {
        const auto row = padded((coord(a, i) * c) % fK_, L_);
        std::copy(row.begin(), row.end(), x.c.begin() + static_cast<std::ptrdiff_t>(i * L_));
    }
    return x;
}

PolyFr AdicRing::coord(const Elt& a, std::size_t k) const {
    const auto first = a.c.begin() + static_cast<std::ptrdiff_t>(k * L_);
    return PolyFr(*params_.field, std::vector<FrElem>(first, first + static_cast<std::ptrdiff_t>(L_)));
}

std::vector<std::size_t> AdicRing::nonzero_rows(const Elt& a) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t y = 0; y < L_; ++y) {
            if (a.c[i * L_ + y]) {
                out.push_back(i);
                break;
            }
        }
    }
    return out;
}

void AdicRing::reduce_y(std::vector<FrElem>& wide, FrElem* out) const {
    const GaloisField& F = *params_.field;
    const auto& m = fK_.coeffs();
    for (std::size_t k = wide.size(); k-- > L_;) {
        const FrElem c = wide[k];
        if (!c) continue;
        for (std::size_t t = 0; t < L_; ++t)
            if (m[t]) wide[k - L_ + t] = F.sub(wide[k - L_ + t], F.mul(c, m[t]));
        wide[k] = 0;
    }
    std::copy(wide.begin(), wide.begin() + static_cast<std::ptrdiff_t>(L_), out);
}

template <class Ops>
AdicRing::Elt AdicRing::reduce_slots(const Ops& ops, std::vector<typename Ops::Acc>& acc, std::size_t slots) const {
    std::vector<FrElem> wide(W_), t(L_);
    auto settle = [&](std::size_t k, FrElem* out) {
        for (std::size_t y = 0; y < W_; ++y) wide[y] = ops.fin(acc[k * W_ + y]);
        reduce_y(wide, out);
    };
    for (std::size_t k = slots; k-- > dim_;) {
        settle(k, t.data());
        for (std::size_t s = 0; s < L_; ++s) {
            if (!t[s]) continue;
            const FrElem ns = ops.neg(t[s]);
            for (std::size_t i : psi_support_) {
                const FrElem* psi = &psi_[i * L_];
                auto* dst = &acc[(k - dim_ + i) * W_ + s];
                for (std::size_t u = 0; u < L_; ++u)
                    if (psi[u]) ops.mac(dst[u], ns, psi[u]);
            }
        }
    }
    Elt out = zero();
    for (std::size_t k = 0; k < dim_ && k < slots; ++k) settle(k, &out.c[k * L_]);
    return out;
}

template <class Ops>
AdicRing::Elt AdicRing::mul_with(const Ops& ops, const Elt& a, const Elt& b) const {
    const auto ra = nonzero_rows(a), rb = nonzero_rows(b);
    const std::size_t slots = 2 * dim_ - 1;
    std::vector<typename Ops::Acc> acc(slots * W_, 0);
    for (std::size_t i : ra) {
        const FrElem* x = &a.c[i * L_];
        for (std::size_t j : rb) {
            const FrElem* y = &b.c[j * L_];
            auto* dst = &acc[(i + j) * W_];
            for (std::size_t s = 0; s < L_; ++s) {
                if (!x[s]) continue;
                for (std::size_t u = 0; u < L_; ++u)
                    if (y[u]) ops.mac(dst[s + u], x[s], y[u]);
            }
        }
    }
    return reduce_slots(ops, acc, slots);
}

template <class Ops>
AdicRing::Elt AdicRing::frob_with(const Ops& ops, const Elt& a) const {
    const std::size_t r = params_.r();
    const std::size_t slots = r * (dim_ - 1) + 1;
    std::vector<typename Ops::Acc> acc(slots * W_, 0);
    for (std::size_t i : nonzero_rows(a)) {
        const auto row = padded(coord(a, i).inflated(r) % fK_, L_);
        for (std::size_t y = 0; y < L_; ++y) acc[r * i * W_ + y] = row[y];
    }
    return reduce_slots(ops, acc, slots);
}

AdicRing::Elt AdicRing::mul(const Elt& a, const Elt& b) const {
    if (params_.rho() == 1) return mul_with(PrimeOps{static_cast<unsigned>(params_.p())}, a, b);
    return mul_with(TableOps{params_.field}, a, b);
}

AdicRing::Elt AdicRing::frob(const Elt& a) const {
    if (params_.rho() == 1) return frob_with(PrimeOps{static_cast<unsigned>(params_.p())}, a);
    return frob_with(TableOps{params_.field}, a);
}

}  // namespace eisen::carlitz_detail
