"""Rodrigues construction of the real orthogonal polynomials ``K_n C_n(x)``.

The kernel is ``s(x) = 1 + x**2`` and the weight is

    w(x) = (1 + x**2)**(beta - 1) * exp(-alpha * arccot(x)),

with ``arccot`` taking values in ``(0, pi)``.  Because the logarithmic
derivative of ``w`` is the rational function
``(2*(beta - 1)*x + alpha) / (1 + x**2)``, every derivative of
``w * s**k`` is ``w * s**(k - 1)`` times a polynomial, and the Rodrigues
derivative reduces to an exact polynomial recurrence.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Literal

import numpy as np

from .errors import DomainError
from .exactalg import ONE, X, DensePolynomial, RationalLike, as_rational

S_KERNEL = DensePolynomial((1, 0, 1))


@dataclass(frozen=True)
class WeightSpec:
    """Parameters ``(beta, alpha)`` of the weight ``w^(beta, alpha)``."""

    beta: Fraction
    alpha: Fraction

    def __post_init__(self):
        object.__setattr__(self, "beta", as_rational(self.beta))
        object.__setattr__(self, "alpha", as_rational(self.alpha))


@dataclass(frozen=True)
class LevelParams:
    """Exact per-level parameters of the bound state with index ``n``."""

    n: int
    a: Fraction
    b: Fraction
    beta_n: Fraction
    alpha_n: Fraction
    epsilon_n: Fraction

    @property
    def m(self) -> int:
        """Degree of the polynomial, i.e. the index of the polynomial equation."""
        return self.n - 1

    @property
    def weight(self) -> WeightSpec:
        return WeightSpec(self.beta_n, self.alpha_n)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "a": str(self.a),
            "b": str(self.b),
            "beta_n": str(self.beta_n),
            "alpha_n": str(self.alpha_n),
            "epsilon_n": str(self.epsilon_n),
        }


def _check_domain(n: int, a: Fraction, b: Fraction) -> None:
    if int(n) != n or n < 1:
        raise DomainError(f"level index must be an integer >= 1, got {n!r}")
    if a <= Fraction(-1, 2):
        raise DomainError(f"a must exceed -1/2, got {a}")
    if b <= 0:
        raise DomainError(f"b must be positive, got {b}")


def level_params(n: int, a: RationalLike, b: RationalLike) -> LevelParams:
    """Solve the three matching conditions for level ``n``.

    Returns ``beta_n = 1 - (n + a)``, ``alpha_n = 2b/(n + a)`` and
    ``epsilon_n = (n + a)**2 - b**2/(n + a)**2``; all three conditions are
    checked exactly before returning.
    """
    a, b = as_rational(a), as_rational(b)
    _check_domain(n, a, b)
    n = int(n)
    t = n + a
    beta = 1 - t
    alpha = 2 * b / t
    eps = t * t - b * b / (t * t)
    m = n - 1
    conditions = (
        -alpha * (1 - beta) + 2 * b,
        (alpha / 2) ** 2 - (1 - beta) ** 2 + eps,
        -beta * (1 - beta) - a * (a + 1) + m * (2 * beta + m - 1),
    )
    if any(conditions):
        raise AssertionError(f"matching conditions violated: {conditions}")
    return LevelParams(n, a, b, beta, alpha, eps)


def log_derivative_numerator(w: WeightSpec) -> DensePolynomial:
    """Numerator ``2(beta-1)x + alpha`` of ``w'/w`` over the kernel ``1 + x**2``."""
    return DensePolynomial((w.alpha, 2 * (w.beta - 1)))


def rodrigues_derivative(w: WeightSpec, m: int) -> DensePolynomial:
    """``(1/w) d^m/dx^m (w s^m)`` as an exact polynomial of degree ``<= m``.

    Writing ``d^j/dx^j (w s^m) = w s^(m-j) P_j`` gives
    ``P_(j+1) = (2(beta - 1 + k) x + alpha) P_j + s P_j'`` with ``k = m - j``.
    """
    if m < 0:
        raise DomainError(f"derivative order must be >= 0, got {m}")
    num = log_derivative_numerator(w)
    p = ONE
    for k in range(m, 0, -1):
        p = (num + 2 * k * X) * p + S_KERNEL * p.derivative()
    return p


@lru_cache(maxsize=256)
def _rodrigues_cached(n: int, a: Fraction, b: Fraction) -> DensePolynomial:
    lv = level_params(n, a, b)
    return rodrigues_derivative(lv.weight, lv.m)


def rodrigues_poly(n: int, a: RationalLike, b: RationalLike) -> DensePolynomial:
    """``K_n C_n^(beta_n, alpha_n)(x)``: the Rodrigues expression without ``1/K_n``."""
    a, b = as_rational(a), as_rational(b)
    _check_domain(n, a, b)
    return _rodrigues_cached(int(n), a, b)


def hypergeometric_residual(p: DensePolynomial, w: WeightSpec, m: int) -> DensePolynomial:
    """Exact left-hand side ``(1+x^2)p'' + 2(alpha/2 + beta x)p' - m(2 beta + m - 1)p``."""
    if m < 0:
        raise DomainError(f"m must be >= 0, got {m}")
    dp = p.derivative()
    first = DensePolynomial((w.alpha, 2 * w.beta))
    return S_KERNEL * dp.derivative() + first * dp - (m * (2 * w.beta + m - 1)) * p


@dataclass(frozen=True)
class LambdaCheck:
    k1_f1: DensePolynomial
    lambda_rodrigues: Fraction
    lambda_equation: Fraction


def lambda_consistency(w: WeightSpec, m: int) -> LambdaCheck:
    """Compare the Rodrigues eigenvalue with the one in the polynomial equation.

    ``K_1 F_1 = (1/w) d(s w)/dx = s' + s * (w'/w)`` is formed by exact
    polynomial algebra, then
    ``lambda_m = -m (K_1 F_1' + (m - 1)/2 * s'')``.
    """
    if m < 0:
        raise DomainError(f"m must be >= 0, got {m}")
    k1_f1 = S_KERNEL.derivative() + log_derivative_numerator(w)
    if k1_f1.degree > 1:
        raise AssertionError("K_1 F_1 must be of first order")
    slope = k1_f1.derivative()(0)
    lam = -m * (slope + Fraction(m - 1, 2) * S_KERNEL.derivative().derivative()(0))
    expected = -m * (2 * w.beta + m - 1)
    if lam != expected:
        raise AssertionError(f"lambda mismatch: {lam} != {expected}")
    return LambdaCheck(k1_f1, lam, expected)


def arccot(x):
    """Inverse cotangent with range ``(0, pi)``; continuous and decreasing."""
    return np.pi / 2 - np.arctan(x)


def weight_eval(w: WeightSpec, x):
    """Float value of ``(1+x^2)^(beta-1) exp(-alpha arccot x)``."""
    x = np.asarray(x, dtype=float)
    out = np.exp((float(w.beta) - 1) * np.log1p(x * x) - float(w.alpha) * arccot(x))
    return float(out) if out.ndim == 0 else out


Limit = Literal["zero", "finite", "divergent"]


@dataclass(frozen=True)
class BoundaryReport:
    limit_at_plus_inf: Limit
    limit_at_minus_inf: Limit
    # exp(-alpha*arccot x) tends to 1 at +inf and exp(-alpha*pi) at -inf
    exp_factor_plus: float
    exp_factor_minus: float


def boundary_product_report(w: WeightSpec) -> BoundaryReport:
    """Classify ``lim w(x)s(x) = lim (1+x^2)^beta exp(-alpha arccot x)`` at both ends."""
    if w.beta < 0:
        kind: Limit = "zero"
    elif w.beta == 0:
        kind = "finite"
    else:
        kind = "divergent"
    return BoundaryReport(kind, kind, 1.0, math.exp(-float(w.alpha) * math.pi))
