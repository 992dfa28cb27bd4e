#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace eisen {

/// Element of F_r encoded as 0 … r-1; the base-p digits are the coefficients of t^0, t^1, …
/// in F_p[t]/(modulus).
using FrElem = std::uint16_t;

/// The finite field F_r, r = p^ρ <= 256, with full addition/multiplication tables.
/// Instances are interned and never destroyed; compare by address.
class GaloisField {
public:
    /// Interned field for (p, ρ, modulus). An empty modulus selects the default: none for ρ = 1,
    /// t^2 + 1 for (3, 2), otherwise the lexicographically first monic irreducible of degree ρ.
    /// The modulus is given low-to-high and must be monic irreducible of degree ρ.
    static const GaloisField& get(unsigned long p, unsigned rho, const std::vector<unsigned>& modulus = {});

    unsigned long p() const { return p_; }
    unsigned rho() const { return rho_; }
    unsigned size() const { return r_; }
    const std::vector<unsigned>& modulus() const { return modulus_; }

    FrElem add(FrElem a, FrElem b) const { return add_[a * r_ + b]; }
    FrElem sub(FrElem a, FrElem b) const { return add_[a * r_ + neg_[b]]; }
    FrElem mul(FrElem a, FrElem b) const { return mul_[a * r_ + b]; }
    FrElem neg(FrElem a) const { return neg_[a]; }
    /// Throws InexactDivision for zero.
    FrElem inv(FrElem a) const;
    /// Image of the integer k under Z -> F_p ⊂ F_r.
    FrElem from_int(long k) const;

    std::string to_string(FrElem a) const;

private:
    GaloisField(unsigned long p, unsigned rho, std::vector<unsigned> modulus);

    unsigned long p_;
    unsigned rho_;
    unsigned r_;
    std::vector<unsigned> modulus_;
    std::vector<FrElem> add_, mul_, neg_, inv_;
};

/// Low-to-high coefficients of the default F_r modulus.
std::vector<unsigned> default_fr_modulus(unsigned long p, unsigned rho);

}  // namespace eisen
