"""
Relation to Jacobi polynomials of imaginary argument
====================================================

Formally the polynomial equation maps onto the Jacobi equation with the
complex-conjugate parameters gamma, delta = beta - 1 -+ i alpha/2 at the
argument y = i x.  The probe fits K_n C_n(x) to c * P_(n-1)(i sigma x)
for both signs sigma and reports which one works.  Numerically the
mirrored argument (sigma = -1) gives exact proportionality.
"""

from rosenmorse.jacobi_bridge import proportionality_probe

for n in range(1, 7):
    r = proportionality_probe(n, "1/4", 1)
    print(
        f"n={n}: sigma={r.sigma:+d}  c={r.best_constant:.4g}  "
        f"rel residual {r.relative_residual:.1e} (other sign {r.residual_other_sigma:.1e})  "
        f"transformed Jacobi eq residual {r.ode.max_abs_residual_jacobi_image:.1e}"
    )
