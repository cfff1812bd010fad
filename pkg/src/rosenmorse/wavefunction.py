"""Normalized bound states ``R_n(z)`` of the trigonometric Rosen-Morse problem.

With ``x = cot z`` the state is

    R_n(z) = (1/K_n) exp(-alpha_n z / 2) sin(z)**(n + a) P(cot z),

where ``P = K_n C_n`` is the exact Rodrigues polynomial of degree ``n - 1``.
For evaluation the product ``sin(z)**(n-1) P(cot z)`` is expanded as the
homogeneous trigonometric form ``sum_k c_k cos(z)**k sin(z)**(n-1-k)``,
which stays bounded at the endpoints where ``cot z`` blows up.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import DomainError
from .exactalg import DensePolynomial, RationalLike, as_rational, horner
from .quadrature import integrate, integrate_real_line
from .rodrigues import LevelParams, level_params, rodrigues_poly, weight_eval

DEFAULT_TOL = 1e-10


@dataclass(frozen=True)
class BoundState:
    level: LevelParams
    poly: DensePolynomial
    norm: float
    sign: int = 1
    k_numeric: float | None = None
    k_closed: float | None = None
    coeffs: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not self.norm > 0:
            raise ValueError("norm must be positive")
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        c = self.poly.float_coeffs()
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)

    @property
    def n(self) -> int:
        return self.level.n

    @property
    def nu(self) -> float:
        """Exponent ``n + a`` of ``sin z``."""
        return float(self.level.n + self.level.a)

    @property
    def alpha(self) -> float:
        return float(self.level.alpha_n)

    def to_json(self) -> dict:
        out = self.level.to_json()
        out["poly"] = self.poly.to_json()
        out["norm"] = self.norm
        out["K_n"] = 1.0 / self.norm
        out["sign"] = self.sign
        if self.k_closed is not None:
            out["K_n_closed"] = self.k_closed
        if self.k_numeric is not None:
            out["K_n_numeric"] = self.k_numeric
        return out


def _interior(z):
    z = np.asarray(z, dtype=float)
    if np.any(~((z > 0) & (z < np.pi))):
        raise DomainError("z must lie in the open interval (0, pi)")
    return z


def _out(v):
    return float(v) if np.ndim(v) == 0 else v


def _shape(state: BoundState, z: np.ndarray) -> np.ndarray:
    """``exp(-alpha z/2) sin^(n+a) z P(cot z)`` without the normalization."""
    s, c = np.sin(z), np.cos(z)
    m = state.n - 1
    trig = np.zeros_like(z)
    for k, ck in enumerate(state.coeffs):
        trig += ck * c**k * s ** (m - k)
    a = float(state.level.a)
    return np.exp(-0.5 * state.alpha * z + (1.0 + a) * np.log(s)) * trig


def normalization_closed_a0(n: int, b: float) -> float:
    """Closed-form ``K_n`` for ``a = 0``."""
    if n < 1:
        raise DomainError(f"level index must be >= 1, got {n}")
    b = float(b)
    if not b > 0:
        raise DomainError(f"b must be positive, got {b}")
    num = math.factorial(n) ** 2 * n**3 * -math.expm1(-2 * math.pi * b / n)
    return math.sqrt(num / (4 * b * (b * b + n**4)))


def normalization_numeric(level: LevelParams, poly: DensePolynomial, tol: float = DEFAULT_TOL) -> float:
    """``K_n = sqrt(int_0^pi [exp(-alpha z/2) sin^(n+a) z P(cot z)]^2 dz)``."""
    raw = BoundState(level, poly, 1.0)
    res = integrate(lambda z: _shape(raw, z) ** 2, 0.0, math.pi, tol, rtol=tol)
    return math.sqrt(res.value)


def build_state(n: int, a: RationalLike, b: RationalLike, tol: float = DEFAULT_TOL) -> BoundState:
    """Assemble level parameters, the Rodrigues polynomial and ``1/K_n``.

    For ``a = 0`` the numeric ``K_n`` is compared with the closed form and
    the closed form is kept; the two must agree to ``sqrt(tol)`` relative.
    """
    lv = level_params(n, a, b)
    poly = rodrigues_poly(n, lv.a, lv.b)
    k_num = normalization_numeric(lv, poly, tol)
    k_closed = None
    k = k_num
    if lv.a == 0:
        k_closed = normalization_closed_a0(n, float(lv.b))
        if abs(k_closed - k_num) > math.sqrt(tol) * k_closed:
            raise ArithmeticError(
                f"closed-form K_{n}={k_closed!r} disagrees with quadrature {k_num!r}"
            )
        k = k_closed
    return BoundState(lv, poly, 1.0 / k, 1, k_num, k_closed)


def eval_R(state: BoundState, z, normalized: bool = True):
    """Wave function at ``z`` in ``(0, pi)`` (scalar or array)."""
    z = _interior(z)
    scale = state.sign * (state.norm if normalized else 1.0)
    return _out(scale * _shape(state, z))


def eval_R_derivatives(state: BoundState, z):
    """``(R, dR/dz, d2R/dz2)`` from the analytic chain rule.

    With ``u = -alpha z/2 + (n+a) ln sin z`` and ``f = P(cot z)``,
    ``R = N e^u f``, ``u' = -alpha/2 + (n+a) cot z``, ``u'' = -(n+a) csc^2 z``,
    ``f' = -csc^2 z P'``, ``f'' = 2 csc^2 z cot z P' + csc^4 z P''``.
    """
    z = _interior(z)
    x = 1.0 / np.tan(z)
    csc2 = 1.0 + x * x
    dp = state.poly.derivative()
    p0 = horner(state.coeffs, x)
    p1 = horner(dp.float_coeffs(), x)
    p2 = horner(dp.derivative().float_coeffs(), x)
    nu = state.nu
    u1 = -0.5 * state.alpha + nu * x
    u2 = -nu * csc2
    f1 = -csc2 * p1
    f2 = 2 * csc2 * x * p1 + csc2 * csc2 * p2
    eu = state.sign * state.norm * np.exp(-0.5 * state.alpha * z + nu * np.log(np.sin(z)))
    r = eu * p0
    dr = eu * (u1 * p0 + f1)
    d2r = eu * ((u1 * u1 + u2) * p0 + 2 * u1 * f1 + f2)
    return _out(r), _out(dr), _out(d2r)


def schrodinger_residual(state: BoundState, z, energy_shift: float = 0.0):
    """``R'' + (2b cot z - a(a+1) csc^2 z + eps_n) R`` at ``z``.

    ``energy_shift`` is added to ``eps_n``; with a nonzero shift the
    residual is ``shift * R`` for an exact state.
    """
    r, _, d2r = eval_R_derivatives(state, z)
    z = np.asarray(z, dtype=float)
    a, b = float(state.level.a), float(state.level.b)
    s = np.sin(z)
    v = 2 * b * np.cos(z) / s - a * (a + 1) / (s * s)
    eps = float(state.level.epsilon_n) + energy_shift
    return _out(d2r + (v + eps) * r)


def overlap(s1: BoundState, s2: BoundState, tol: float = DEFAULT_TOL) -> float:
    """``int_0^pi R_n R_n' dz``."""
    _same_potential(s1, s2)
    f = lambda z: eval_R(s1, z) * eval_R(s2, z)
    return integrate(f, 0.0, math.pi, tol).value


def overlap_xspace(s1: BoundState, s2: BoundState, tol: float = DEFAULT_TOL) -> float:
    """The same overlap written on the real line with measure ``dx / (1 + x^2)``."""
    _same_potential(s1, s2)

    def g(x):
        out = 1.0
        for s in (s1, s2):
            w = weight_eval(s.level.weight, x)
            out = out * s.sign * s.norm * np.sqrt(w) * horner(s.coeffs, x)
        return out

    return integrate_real_line(g, tol).value


def _same_potential(s1: BoundState, s2: BoundState) -> None:
    if (s1.level.a, s1.level.b) != (s2.level.a, s2.level.b):
        raise DomainError("states belong to different potentials")


def build_states(n_max: int, a: RationalLike, b: RationalLike, tol: float = DEFAULT_TOL) -> list[BoundState]:
    return [build_state(n, a, b, tol) for n in range(1, n_max + 1)]


def overlap_matrix(states: Sequence[BoundState], tol: float = DEFAULT_TOL) -> np.ndarray:
    k = len(states)
    g = np.empty((k, k))
    for i in range(k):
        for j in range(i, k):
            g[i, j] = g[j, i] = overlap(states[i], states[j], tol)
    return g


def square_well_state(n: int, z):
    """``(-1)^(n-1) sqrt(2/pi) sin(n z)``."""
    return (-1) ** (n - 1) * math.sqrt(2 / math.pi) * np.sin(n * np.asarray(z, dtype=float))


def square_well_limit_error(n: int, eps: RationalLike, grid_points: int = 2001, tol: float = DEFAULT_TOL) -> float:
    """Max-norm distance to the square-well state for ``a = b = eps``."""
    eps = as_rational(eps)
    state = build_state(n, eps, eps, tol)
    z = np.linspace(0, math.pi, grid_points + 2)[1:-1]
    return float(np.max(np.abs(eval_R(state, z) - square_well_state(n, z))))


def radial_ground_state(r, a: RationalLike, b: RationalLike, tol: float = DEFAULT_TOL):
    """``U_1(r) = R_1(r) / r`` for zero angular momentum."""
    state = build_state(1, a, b, tol)
    r = _interior(r)
    return _out(eval_R(state, r) / r)


def count_sign_changes(values) -> int:
    v = np.asarray(values, dtype=float)
    v = v[v != 0]
    return int(np.count_nonzero(np.signbit(v[1:]) != np.signbit(v[:-1])))


def count_nodes(state: BoundState, grid_points: int = 10_000) -> int:
    z = np.linspace(0, math.pi, grid_points + 2)[1:-1]
    return count_sign_changes(eval_R(state, z))


def wavefunction_table(states: Sequence[BoundState], grid_points: int, normalized: bool = True) -> np.ndarray:
    """Rows ``(z, R_1, ..., R_k)`` on an open grid of ``(0, pi)``."""
    z = math.pi * np.arange(1, grid_points + 1) / (grid_points + 1)
    cols = [z] + [eval_R(s, z, normalized) for s in states]
    return np.column_stack(cols)
