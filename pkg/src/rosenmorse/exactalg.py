"""Exact rational numbers and dense univariate polynomials over them.

Rationals are :class:`fractions.Fraction` (big-integer numerator and
denominator, always reduced, denominator positive).  A polynomial is a
tuple of coefficients, index ``i`` holding the coefficient of ``x**i``,
with trailing zeros trimmed so that the zero polynomial is ``()`` and has
degree ``-1``.
"""
from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Iterable, Sequence, Union

import numpy as np

Rational = Fraction

ZERO_DEGREE = -1

RationalLike = Union[int, Fraction, str, float, Decimal]


def as_rational(value: RationalLike) -> Fraction:
    """Convert ``value`` to an exact :class:`Fraction`.

    Strings may be ``"p/q"`` or terminating decimals (``"0.25"``).  Floats
    go through their shortest ``repr`` so that ``0.1`` becomes ``1/10``
    rather than the binary expansion.
    """
    if isinstance(value, bool):
        raise TypeError("bool is not a rational parameter")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, _RationalABC):
        return Fraction(value.numerator, value.denominator)
    if isinstance(value, float):
        if not np.isfinite(value):
            raise ValueError(f"non-finite value {value!r}")
        return Fraction(repr(value))
    if isinstance(value, (str, Decimal)):
        return Fraction(str(value).strip())
    raise TypeError(f"cannot convert {type(value).__name__} to a rational")


def _trim(coeffs: Iterable) -> tuple[Fraction, ...]:
    out = [as_rational(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class DensePolynomial:
    """Univariate polynomial with exact rational coefficients (low order first)."""

    coeffs: tuple[Fraction, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim(self.coeffs))

    @classmethod
    def constant(cls, c: RationalLike) -> "DensePolynomial":
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c: RationalLike = 1) -> "DensePolynomial":
        return cls((0,) * k + (c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1 if self.coeffs else ZERO_DEGREE

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other):
        if not isinstance(other, DensePolynomial):
            other = DensePolynomial.constant(other)
        return poly_add(self, other)

    __radd__ = __add__

    def __neg__(self):
        return DensePolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        if not isinstance(other, DensePolynomial):
            other = DensePolynomial.constant(other)
        return poly_add(self, -other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, DensePolynomial):
            return poly_mul(self, other)
        c = as_rational(other)
        return DensePolynomial(tuple(c * a for a in self.coeffs))

    __rmul__ = __mul__

    def __call__(self, x):
        """Exact Horner evaluation (rational in, rational out)."""
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "DensePolynomial":
        return poly_derivative(self)

    def float_coeffs(self) -> np.ndarray:
        return np.array([float(c) for c in self.coeffs], dtype=float)

    def to_json(self) -> dict:
        return {"coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: dict) -> "DensePolynomial":
        return cls(tuple(Fraction(s) for s in data["coeffs"]))

    def __repr__(self):
        return f"DensePolynomial({[str(c) for c in self.coeffs]})"


X = DensePolynomial((0, 1))
ONE = DensePolynomial((1,))


def poly_add(p: DensePolynomial, q: DensePolynomial) -> DensePolynomial:
    a, b = p.coeffs, q.coeffs
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return DensePolynomial(tuple(out))


def poly_mul(p: DensePolynomial, q: DensePolynomial) -> DensePolynomial:
    if p.is_zero() or q.is_zero():
        return DensePolynomial()
    out = [Fraction(0)] * (len(p.coeffs) + len(q.coeffs) - 1)
    for i, a in enumerate(p.coeffs):
        if a == 0:
            continue
        for j, b in enumerate(q.coeffs):
            out[i + j] += a * b
    return DensePolynomial(tuple(out))


def poly_derivative(p: DensePolynomial) -> DensePolynomial:
    return DensePolynomial(tuple(k * c for k, c in enumerate(p.coeffs) if k))


def poly_divmod(p: DensePolynomial, q: DensePolynomial) -> tuple[DensePolynomial, DensePolynomial]:
    """Exact long division ``p = quot*q + rem`` with ``deg rem < deg q``."""
    if q.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(p.coeffs)
    dq = q.degree
    quot = [Fraction(0)] * max(len(rem) - dq, 0)
    lead = q.leading
    for k in range(len(rem) - 1 - dq, -1, -1):
        c = rem[k + dq] / lead
        quot[k] = c
        if c:
            for j, b in enumerate(q.coeffs):
                rem[k + j] -= c * b
    return DensePolynomial(tuple(quot)), DensePolynomial(tuple(rem[:dq]))


def poly_eval_real(p: DensePolynomial, x):
    """Float Horner evaluation; ``x`` may be a scalar or an ndarray."""
    return horner(p.float_coeffs(), x)


def horner(coeffs: Sequence[float], x):
    x = np.asarray(x, dtype=float) if not np.isscalar(x) else float(x)
    acc = np.zeros_like(x) if isinstance(x, np.ndarray) else 0.0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc
