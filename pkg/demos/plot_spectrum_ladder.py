"""
Energy ladder
=============

The levels are eps_n = (n+a)^2 - b^2/(n+a)^2.  They are computed exactly
in rational arithmetic, so the spacing pattern can be read off without
rounding: a quadratic (infinite-well) growth with a Coulomb-like
correction that fades as n grows.
"""

from fractions import Fraction

from rosenmorse.rodrigues import level_params

a, b = Fraction(1, 4), Fraction(1)

prev = None
for n in range(1, 11):
    lv = level_params(n, a, b)
    gap = "" if prev is None else f"  gap {float(lv.epsilon_n - prev):8.4f}"
    print(f"n={n:2d}  eps={str(lv.epsilon_n):>22s} = {float(lv.epsilon_n):9.4f}{gap}")
    prev = lv.epsilon_n

# at a = 0 the formula collapses to n^2 - b^2/n^2
print([str(level_params(n, 0, 1).epsilon_n) for n in range(1, 6)])
