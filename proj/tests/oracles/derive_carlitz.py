"""Independent oracles for Carlitz-module expected values (sympy over GF(3)).

Run: python3 derive_carlitz.py
Values printed here are frozen into the C++ unit tests.
"""
from sympy import symbols, Poly, resultant

X, Y, Z = symbols('X Y Z')
r = 3


def phi_Y(poly):
    """phi_Y(P) = Y P + P^r as an additive polynomial in X."""
    return Poly(Y * poly.as_expr() + poly.as_expr() ** r, X, Y, modulus=r)


P_Y = phi_Y(Poly(X, X, Y, modulus=r))
P_Y2 = phi_Y(P_Y)
print("P_Y    :", P_Y.as_expr())
print("P_Y^2  :", P_Y2.as_expr())

psi2, rem = P_Y2.div(P_Y)
assert rem.is_zero
print("Psi_Y^2:", psi2.as_expr())


def f_multiplicity(value, f):
    fp = Poly(f, Y, modulus=r)
    v = Poly(value, Y, modulus=r)
    k = 0
    while True:
        q, rr = v.div(fp)
        if not rr.is_zero:
            return k, v.as_expr()
        v, k = q, k + 1


# Discriminant exponents via Res_X(Psi, Psi').
for name, psi, f in [
    ("f=Y n=1", Poly(X**2 + Y, X, Y, modulus=r), Y),
    ("f=Y n=2", Poly(psi2.as_expr(), X, Y, modulus=r), Y),
]:
    res = resultant(psi.as_expr(), psi.diff(X).as_expr(), X)
    print("disc", name, "-> v_f, unit:", f_multiplicity(res, f))

# Psi_{f} for f = Y^2 + 1: P_f = P_{Y^2} + P_1.
P_f = Poly(P_Y2.as_expr() + X, X, Y, modulus=r)
psi_f = Poly(P_f.as_expr() / X, X, Y, modulus=r)  # P_f / P_1
print("Psi_{Y^2+1}:", psi_f.as_expr())
res = resultant(psi_f.as_expr(), psi_f.diff(X).as_expr(), X)
print("disc f=Y^2+1 n=1 -> v_f, unit:", f_multiplicity(res, Y**2 + 1))

# varpi_2 = -theta_2^2 for f = Y; its minimal polynomial over F_3(Y) is the
# square root of the characteristic polynomial Res_X(Psi_{Y^2}(X), Z + X^2) = mu^2,
# recovered as gcd(char, d char/dZ) = mu since d(mu^2)/dZ = 2 mu mu'.
char = Poly(resultant(psi2.as_expr(), Z + X**2, X), Z, Y, modulus=r)
mu = char.gcd(char.diff(Z))
assert mu.monic() ** 2 == char.monic()
print("minpoly of varpi_2 (f=Y):", mu.monic().as_expr())
