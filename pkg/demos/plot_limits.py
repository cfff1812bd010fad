"""
Limiting cases
==============

With a and b both tiny the potential is an infinite square well and the
states become sin(nz).  With a = 0 and small z the ground state divided
by r behaves like the hydrogen ground state exp(-r).  At a = 0 the
normalization has a closed form which we compare with quadrature.
"""

import math
from fractions import Fraction

from rosenmorse.wavefunction import (
    build_state,
    normalization_closed_a0,
    radial_ground_state,
    square_well_limit_error,
)

for eps in (Fraction(1, 100), Fraction(1, 10**4), Fraction(1, 10**6)):
    errs = [square_well_limit_error(n, eps) for n in range(1, 6)]
    print(f"a=b={float(eps):.0e}: max distance to sin(nz) states {max(errs):.2e}")

k1 = normalization_closed_a0(1, 1.0)
for r in (1e-1, 1e-2, 1e-3):
    ratio = radial_ground_state(r, 0, 1) * k1 / math.exp(-r)
    print(f"r={r:g}: U_1 K_1 / exp(-r) = {ratio:.9f}")

for n in range(1, 7):
    s = build_state(n, 0, 1)
    print(f"n={n}: K closed {s.k_closed:.12f}  quadrature {s.k_numeric:.12f}")
