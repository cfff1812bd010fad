"""
Polynomials from the Rodrigues formula
======================================

The weight (1+x^2)^(beta-1) exp(-alpha arccot x) with kernel 1+x^2
generates a family of real polynomials.  Differentiating m times is done
as an exact recurrence on rational coefficients, so the polynomial
differential equation can be checked to be satisfied exactly, not merely
to rounding.
"""

from fractions import Fraction

from rosenmorse.rodrigues import hypergeometric_residual, level_params, rodrigues_poly

a, b = Fraction(1, 4), Fraction(1)

for n in range(1, 6):
    lv = level_params(n, a, b)
    p = rodrigues_poly(n, a, b)
    res = hypergeometric_residual(p, lv.weight, lv.m)
    terms = " + ".join(f"({c}) x^{k}" for k, c in enumerate(p.coeffs))
    print(f"n={n}: beta={lv.beta_n}, alpha={lv.alpha_n}")
    print(f"    K_n C_n(x) = {terms}")
    print(f"    residual of the polynomial ODE is zero: {res.is_zero()}")

# coefficients grow quickly but stay exact
p12 = rodrigues_poly(12, Fraction(3, 2), 3)
print("degree", p12.degree, "leading coefficient", p12.leading)
