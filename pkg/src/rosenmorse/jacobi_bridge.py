"""Jacobi polynomials with complex parameters at imaginary argument.

The map ``gamma = beta - 1 - i alpha/2``, ``delta = beta - 1 + i alpha/2``
relates the kernel-``(1 + x^2)`` equation to the Jacobi equation at
``y = i x``.  This module evaluates ``P_m^(gamma, delta)`` in the standard
normalization (``P_1(y) = (gamma - delta)/2 + (gamma + delta + 2) y / 2``),
which satisfies

    (1 - y^2) P'' + (delta - gamma - (gamma + delta + 2) y) P'
        + m (m + gamma + delta + 1) P = 0,

and measures how ``Q(x) = P_m(i x)`` compares with the real polynomials.

Substituting ``y = i x`` turns the equation above into

    (1 + x^2) Q'' + (i (delta - gamma) + (gamma + delta + 2) x) Q'
        - m (m + gamma + delta + 1) Q = 0,

whose first-order coefficient is ``2 beta x - alpha`` under the map.  The
residual reports therefore carry three numbers: this transformed equation
(satisfied by construction), the real polynomial equation with ``+alpha``,
and the transformed equation with the opposite eigenvalue sign.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import DegenerateParameterError, DomainError
from .exactalg import RationalLike, as_rational, horner
from .rodrigues import WeightSpec, level_params, rodrigues_poly


@dataclass(frozen=True)
class ComplexJacobiParams:
    gamma: complex
    delta: complex

    @property
    def conjugate_pair(self) -> bool:
        return self.gamma == np.conj(self.delta)

    def shifted(self, k: int = 1) -> "ComplexJacobiParams":
        return ComplexJacobiParams(self.gamma + k, self.delta + k)

    def swapped(self) -> "ComplexJacobiParams":
        return ComplexJacobiParams(self.delta, self.gamma)


def cplx_params(w: WeightSpec) -> ComplexJacobiParams:
    beta, alpha = float(w.beta), float(w.alpha)
    return ComplexJacobiParams(complex(beta - 1, -alpha / 2), complex(beta - 1, alpha / 2))


def jacobi_eval(params: ComplexJacobiParams, m: int, y):
    """``P_m^(gamma, delta)(y)`` by the three-term recurrence.

    Raises
    ------
    DegenerateParameterError
        If ``2k (k + gamma + delta) (2k + gamma + delta - 2)`` vanishes for
        some ``2 <= k <= m``.
    """
    if m < 0:
        raise DomainError(f"degree must be >= 0, got {m}")
    g, d = complex(params.gamma), complex(params.delta)
    y = np.asarray(y, dtype=complex)
    p_prev = np.ones_like(y)
    if m == 0:
        return _out(p_prev)
    p = (g - d) / 2 + (g + d + 2) * y / 2
    for k in range(2, m + 1):
        s = 2 * k + g + d
        a1 = 2 * k * (k + g + d) * (s - 2)
        if a1 == 0:
            raise DegenerateParameterError(
                f"Jacobi recurrence breaks down at degree {k} for gamma={g}, delta={d}"
            )
        a2 = (s - 1) * (g * g - d * d)
        a3 = (s - 1) * s * (s - 2)
        a4 = 2 * (k + g - 1) * (k + d - 1) * s
        p_prev, p = p, ((a2 + a3 * y) * p - a4 * p_prev) / a1
    return _out(p)


def _out(v):
    return complex(v) if np.ndim(v) == 0 else v


def jacobi_derivatives(params: ComplexJacobiParams, m: int, y):
    """``(P, P', P'')`` using ``d/dy P_m^(g,d) = (m + g + d + 1)/2 P_(m-1)^(g+1,d+1)``."""
    g, d = complex(params.gamma), complex(params.delta)
    y = np.asarray(y, dtype=complex)
    p0 = np.asarray(jacobi_eval(params, m, y))
    if m == 0:
        return _out(p0), _out(np.zeros_like(y)), _out(np.zeros_like(y))
    p1 = (m + g + d + 1) / 2 * np.asarray(jacobi_eval(params.shifted(1), m - 1, y))
    if m == 1:
        p2 = np.zeros_like(y)
    else:
        p2 = (m + g + d + 1) * (m + g + d + 2) / 4 * np.asarray(jacobi_eval(params.shifted(2), m - 2, y))
    return _out(p0), _out(p1), _out(p2)


def complexified_derivatives(params: ComplexJacobiParams, m: int, x, sign: int = 1):
    """``Q(x) = P_m(i*sign*x)`` and its first two ``x`` derivatives."""
    x = np.asarray(x, dtype=float)
    ic = 1j * sign
    p0, p1, p2 = jacobi_derivatives(params, m, ic * x)
    return p0, ic * np.asarray(p1), ic * ic * np.asarray(p2)


@dataclass(frozen=True)
class OdeResidualReport:
    max_abs_residual_jacobi_image: float
    max_abs_residual_eq_newpol: float
    max_abs_residual_jacobi_flipped: float
    max_abs_residual_newpol_mirrored: float
    scale: float

    def to_json(self) -> dict:
        return {
            "jacobi_image_residual": self.max_abs_residual_jacobi_image,
            "newpol_residual": self.max_abs_residual_eq_newpol,
            "jacobi_flipped_residual": self.max_abs_residual_jacobi_flipped,
            "newpol_mirrored_residual": self.max_abs_residual_newpol_mirrored,
            "scale": self.scale,
        }


def complexified_ode_residual(
    params: ComplexJacobiParams, m: int, probe_points: Sequence[float]
) -> OdeResidualReport:
    """Residuals of ``Q(x) = P_m(i x)`` against the candidate equations.

    ``jacobi_image`` is the image of the Jacobi equation under ``y = i x`` with the
    eigenvalue term ``-m(m + gamma + delta + 1)``; ``jacobi_flipped`` flips
    that term to ``+``.  ``newpol`` is the real polynomial equation
    ``(1 + x^2) C'' + (2 beta x + alpha) C' - m(2 beta + m - 1) C`` with
    ``beta = (gamma + delta + 2)/2`` and ``alpha = i (gamma - delta)``;
    ``newpol_mirrored`` evaluates it on ``Q(-x)``.  ``scale`` is the largest
    ``|Q|`` seen, for judging the absolute residuals.
    """
    if m < 0:
        raise DomainError(f"degree must be >= 0, got {m}")
    g, d = complex(params.gamma), complex(params.delta)
    x = np.asarray(probe_points, dtype=float)
    beta = (g + d + 2) / 2
    alpha = 1j * (g - d)
    lam = m * (m + g + d + 1)
    s = 1 + x * x

    q0, q1, q2 = complexified_derivatives(params, m, x)
    jacobi_image = s * q2 + (1j * (d - g) + (g + d + 2) * x) * q1 - lam * q0
    flipped = s * q2 + 1j * (g - d - 1j * (g + d + 2) * x) * q1 + lam * q0

    def newpol(c0, c1, c2):
        return s * c2 + (2 * beta * x + alpha) * c1 - m * (2 * beta + m - 1) * c0

    r0, r1, r2 = complexified_derivatives(params, m, x, sign=-1)
    return OdeResidualReport(
        float(np.max(np.abs(jacobi_image))),
        float(np.max(np.abs(newpol(q0, q1, q2)))),
        float(np.max(np.abs(flipped))),
        float(np.max(np.abs(newpol(r0, r1, r2)))),
        float(np.max(np.abs(q0))),
    )


def fit_complex_constant(y, q) -> tuple[complex, float]:
    """Least-squares ``c`` minimizing ``||y - c q||`` and the relative residual."""
    y = np.asarray(y, dtype=complex)
    q = np.asarray(q, dtype=complex)
    qq = np.vdot(q, q).real
    c = np.vdot(q, y) / qq if qq > 0 else 0j
    ny = np.linalg.norm(y)
    rel = float(np.linalg.norm(y - c * q) / ny) if ny > 0 else 0.0
    return complex(c), rel


@dataclass(frozen=True)
class ProbeReport:
    n: int
    a: str
    b: str
    sigma: int
    best_constant: complex
    relative_residual: float
    residual_other_sigma: float
    ode: OdeResidualReport
    gamma_delta_sum_error: float
    gamma_delta_diff_error: float

    def to_json(self) -> dict:
        out = {
            "n": self.n,
            "a": self.a,
            "b": self.b,
            "sigma": self.sigma,
            "constant": {"re": self.best_constant.real, "im": self.best_constant.imag},
            "relative_residual": self.relative_residual,
            "relative_residual_other_sigma": self.residual_other_sigma,
            "identity_sum_error": self.gamma_delta_sum_error,
            "identity_diff_error": self.gamma_delta_diff_error,
        }
        out.update(self.ode.to_json())
        return out


def default_samples(count: int = 41) -> np.ndarray:
    return np.linspace(-3.0, 3.0, count)


def proportionality_probe(
    n: int, a: RationalLike, b: RationalLike, sample_xs: Sequence[float] | None = None
) -> ProbeReport:
    """Fit ``K_n C_n(x) ~ c P_(n-1)^(gamma, delta)(i sigma x)`` for ``sigma = +-1``.

    The sign with the smaller relative residual is reported (``+1`` on a
    tie).  Nothing is asserted about proportionality itself.
    """
    lv = level_params(n, a, b)
    xs = default_samples() if sample_xs is None else np.asarray(sample_xs, dtype=float)
    w = lv.weight
    params = cplx_params(w)
    y = horner(rodrigues_poly(n, lv.a, lv.b).float_coeffs(), xs)
    fits = {}
    for sigma in (1, -1):
        q = jacobi_eval(params, lv.m, 1j * sigma * xs)
        fits[sigma] = fit_complex_constant(y, q)
    sigma = 1 if fits[1][1] <= fits[-1][1] else -1
    c, rel = fits[sigma]
    g, d = params.gamma, params.delta
    return ProbeReport(
        n=lv.n,
        a=str(lv.a),
        b=str(lv.b),
        sigma=sigma,
        best_constant=c,
        relative_residual=rel,
        residual_other_sigma=fits[-sigma][1],
        ode=complexified_ode_residual(params, lv.m, xs),
        gamma_delta_sum_error=abs(g + d + 2 - 2 * float(w.beta)),
        gamma_delta_diff_error=abs(1j * (g - d) - float(w.alpha)),
    )
