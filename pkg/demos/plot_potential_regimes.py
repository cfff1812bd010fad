"""
The trigonometric Rosen-Morse potential and its three regimes
==============================================================

Near the left wall the potential looks like a screened Coulomb term, in
the middle it is close to a linear-plus-harmonic confinement, and the
csc^2 walls make it an infinite well overall.  This script tabulates all
three curves and measures how far each approximation can be trusted.
"""

import numpy as np

from rosenmorse.spectrum import (
    PotentialParams,
    coulomb_approx,
    linear_ho_approx,
    potential,
    potential_table,
    taylor_validation,
)

p = PotentialParams(a=0.25, b=1.0)

# potential_table returns rows (z, v, coulomb, linear_ho) on an open grid
table = potential_table(p, 12)
print("     z        v(z)     coulomb   linear_ho")
for z, v, c, l in table:
    print(f"{z:8.4f} {v:10.4f} {c:10.4f} {l:10.4f}")

# relative error of the Coulomb surrogate close to the wall
for interval in [(0.01, 0.1), (0.01, 0.3)]:
    rep = taylor_validation(p, "coulomb", interval)
    print(f"coulomb on {interval}: max rel err {rep.max_rel_err:.4f} at z = {rep.argmax_z:.3f}")

# the linear+oscillator surrogate is the regular part left after the pole
# is removed, so it is meant to be added to the Coulomb term; the sum
# follows v much further out than the Coulomb term alone
z = np.linspace(0.1, 1.5, 8)
v = potential(p, z)
c = coulomb_approx(p, z)
both = c + linear_ho_approx(p, z)
for zi, vi, ci, bi in zip(z, v, c, both):
    print(f"z={zi:.2f}  v={vi:8.4f}  coulomb={ci:8.4f}  coulomb+linear_ho={bi:8.4f}")

# the full table, for plotting elsewhere
np.savetxt("potential.csv", potential_table(p, 500), delimiter=",", header="z,v,coulomb,linear_ho", comments="")
