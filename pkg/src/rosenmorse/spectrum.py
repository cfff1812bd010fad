"""The trigonometric Rosen-Morse potential, its small- and mid-range
approximants, and the bound-state energies.

Everything here is in floating point and dimensionless: ``z = y/d`` and
energies are in units of ``hbar**2 / (2 m d**2)``.  The exact rational
energies live in :func:`rosenmorse.rodrigues.level_params`.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

import numpy as np

from .errors import DomainError

Regime = Literal["coulomb", "linear_ho"]

DEFAULT_INTERVALS = {"coulomb": (0.0, 0.3), "linear_ho": (0.8, 2.2)}


@dataclass(frozen=True)
class PotentialParams:
    a: float
    b: float

    def __post_init__(self):
        if not self.a > -0.5:
            raise DomainError(f"a must exceed -1/2, got {self.a}")
        if not self.b >= 0:
            # b = 0 is allowed here so the square-well limit can be plotted
            raise DomainError(f"b must be non-negative, got {self.b}")

    @property
    def centrifugal(self) -> float:
        return self.a * (self.a + 1)


@dataclass(frozen=True)
class UnitScale:
    hbar2_over_2md2: float
    d: float = 1.0

    def __post_init__(self):
        if not (self.hbar2_over_2md2 > 0 and self.d > 0):
            raise DomainError("unit scales must be strictly positive")


def _open_interval(z):
    z = np.asarray(z, dtype=float)
    if np.any(~((z > 0) & (z < np.pi))):
        raise DomainError("z must lie in the open interval (0, pi)")
    return z


def _out(v):
    return float(v) if np.ndim(v) == 0 else v


def potential(p: PotentialParams, z):
    """``v(z) = -2b cot z + a(a+1) csc^2 z`` on ``(0, pi)``."""
    z = _open_interval(z)
    s = np.sin(z)
    return _out(-2 * p.b * np.cos(z) / s + p.centrifugal / (s * s))


def coulomb_approx(p: PotentialParams, z):
    """Small-z surrogate ``-2b/z + a(a+1)/z^2``."""
    z = np.asarray(z, dtype=float)
    if np.any(z <= 0):
        raise DomainError("z must be positive")
    return _out(-2 * p.b / z + p.centrifugal / (z * z))


def linear_ho_approx(p: PotentialParams, z):
    """Intermediate-range surrogate ``(2b/3) z + a(a+1)/36 z^2``."""
    z = np.asarray(z, dtype=float)
    if np.any(z <= 0):
        raise DomainError("z must be positive")
    return _out(2 * p.b / 3 * z + p.centrifugal / 36 * z * z)


def energy(n: int, p: PotentialParams) -> float:
    if n < 1:
        raise DomainError(f"level index must be >= 1, got {n}")
    t = n + p.a
    return t * t - p.b * p.b / (t * t)


def dimensionful_energy(n: int, p: PotentialParams, u: UnitScale) -> float:
    return energy(n, p) * u.hbar2_over_2md2


@dataclass(frozen=True)
class TaylorReport:
    regime: str
    interval: tuple[float, float]
    max_rel_err: float
    argmax_z: float


def taylor_validation(
    p: PotentialParams,
    regime: Regime,
    interval: tuple[float, float] | None = None,
    points: int = 401,
) -> TaylorReport:
    """Largest relative deviation ``|v - approx| / |v|`` over a grid.

    The grid is open at a zero endpoint (the Coulomb default starts at 0).
    A one-point interval ``(z0, z0)`` evaluates at ``z0`` only.  Points
    where both ``v`` and the approximant vanish count as exact agreement.
    """
    lo, hi = DEFAULT_INTERVALS[regime] if interval is None else interval
    if lo == hi:
        z = np.array([lo], dtype=float)
    else:
        z = np.linspace(lo, hi, points)
        z = z[(z > 0) & (z < np.pi)]
    approx = coulomb_approx if regime == "coulomb" else linear_ho_approx
    v = np.atleast_1d(potential(p, z))
    s = np.atleast_1d(approx(p, z))
    diff = np.abs(v - s)
    with np.errstate(divide="ignore", invalid="ignore"):
        rel = np.where(diff == 0, 0.0, diff / np.abs(v))
    k = int(np.argmax(rel))
    return TaylorReport(regime, (float(lo), float(hi)), float(rel[k]), float(z[k]))


def potential_table(p: PotentialParams, grid_points: int):
    """Rows ``(z, v, coulomb, linear_ho)`` on an open grid over ``(0, pi)``."""
    z = open_grid(grid_points)
    return np.column_stack(
        [z, potential(p, z), coulomb_approx(p, z), linear_ho_approx(p, z)]
    )


def open_grid(points: int) -> np.ndarray:
    """``points`` equally spaced interior nodes of ``(0, pi)``."""
    return np.pi * np.arange(1, points + 1) / (points + 1)
