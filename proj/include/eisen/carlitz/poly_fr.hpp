#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "eisen/carlitz/galois_field.hpp"

namespace eisen {

/// Dense polynomial over F_r in the variable Y, no trailing zeros. A default-constructed
/// value is a context-free zero; every other value carries its field.
class PolyFr {
public:
    PolyFr() = default;
    PolyFr(const GaloisField& field, std::vector<FrElem> coeffs);

    static PolyFr constant(const GaloisField& field, FrElem c);
    static PolyFr monomial(const GaloisField& field, FrElem c, std::size_t k);
    static PolyFr zero(const GaloisField& field) { return PolyFr(field, {}); }
    static PolyFr one(const GaloisField& field) { return constant(field, 1); }
    static PolyFr y(const GaloisField& field) { return monomial(field, 1, 1); }

    const GaloisField* field() const { return field_; }
    bool is_zero() const { return c_.empty(); }
    /// -1 for zero.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<FrElem>& coeffs() const { return c_; }
    FrElem coeff(std::size_t k) const { return k < c_.size() ? c_[k] : FrElem{0}; }
    FrElem lc() const { return c_.empty() ? FrElem{0} : c_.back(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    friend bool operator==(const PolyFr& a, const PolyFr& b) { return a.c_ == b.c_; }
    friend PolyFr operator+(const PolyFr& a, const PolyFr& b);
    friend PolyFr operator-(const PolyFr& a, const PolyFr& b);
    friend PolyFr operator*(const PolyFr& a, const PolyFr& b);
    PolyFr operator-() const;
    PolyFr& operator+=(const PolyFr& o) { return *this = *this + o; }
    PolyFr& operator-=(const PolyFr& o) { return *this = *this - o; }
    PolyFr& operator*=(const PolyFr& o) { return *this = *this * o; }

    PolyFr scaled(FrElem s) const;
    /// Multiplication by Y^k.
    PolyFr shifted(std::size_t k) const;
    /// c(Y^k); for k a power of r this is c^k.
    PolyFr inflated(std::size_t k) const;
    /// Scaled to leading coefficient 1 (zero stays zero).
    PolyFr monic() const;

private:
    void normalize();
    const GaloisField* field_ = nullptr;
    std::vector<FrElem> c_;
};

std::pair<PolyFr, PolyFr> divrem(const PolyFr& a, const PolyFr& b);
PolyFr operator%(const PolyFr& a, const PolyFr& b);
/// q with a = q*b; throws InexactDivision otherwise.
PolyFr exact_div(const PolyFr& a, const PolyFr& b);
/// Monic gcd (zero iff both are zero).
PolyFr gcd(const PolyFr& a, const PolyFr& b);
PolyFr pow(const PolyFr& a, unsigned long e);
/// a^e mod m for a big exponent given as a decimal-free unsigned 64-bit value.
PolyFr powmod(const PolyFr& a, unsigned long long e, const PolyFr& m);
/// Multiplicity of the irreducible f in a != 0; throws InfiniteValuation for a = 0.
long valuation(const PolyFr& a, const PolyFr& f);
/// Rabin's test over F_r.
bool is_irreducible(const PolyFr& f);

bool is_zero(const PolyFr& a);
PolyFr one_like(const PolyFr& a);
PolyFr times_int(const PolyFr& a, long k);
inline std::size_t pivot_score(const PolyFr& a) { return a.coeffs().size(); }
std::string to_string(const PolyFr& a, const std::string& var = "Y");

/// Parses comma-separated F_r codes, low-to-high ("1,0,1" = Y^2 + 1).
PolyFr parse_poly_fr(const GaloisField& field, const std::string& text);

/// Element of F_r(Y): num/den with den monic and gcd(num, den) = 1.
class RatFunc {
public:
    RatFunc() = default;
    explicit RatFunc(PolyFr num);
    RatFunc(PolyFr num, PolyFr den);

    const PolyFr& num() const { return num_; }
    const PolyFr& den() const { return den_; }
    const GaloisField* field() const { return num_.field() ? num_.field() : den_.field(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_zero() || den_.degree() == 0; }

    friend bool operator==(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc operator-() const;
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }

private:
    void normalize();
    PolyFr num_;
    PolyFr den_;
};

bool is_zero(const RatFunc& a);
RatFunc one_like(const RatFunc& a);
RatFunc times_int(const RatFunc& a, long k);
RatFunc inverse(const RatFunc& a);
RatFunc exact_div(const RatFunc& a, const RatFunc& b);
inline std::size_t pivot_score(const RatFunc& a) { return a.num().coeffs().size() + a.den().coeffs().size(); }
/// v_f(num) - v_f(den); throws InfiniteValuation for zero.
long valuation(const RatFunc& a, const PolyFr& f);
std::string to_string(const RatFunc& a);

}  // namespace eisen
