"""Exact solutions of the Schrödinger equation with the trigonometric
Rosen-Morse potential ``v(z) = -2b cot z + a(a+1) csc^2 z`` on ``(0, pi)``."""
from .errors import DegenerateParameterError, DomainError, QuadratureError
from .exactalg import DensePolynomial, Rational, as_rational
from .jacobi_bridge import ComplexJacobiParams, cplx_params, jacobi_eval, proportionality_probe
from .quadrature import QuadratureResult, integrate, integrate_real_line
from .rodrigues import (
    LevelParams,
    WeightSpec,
    hypergeometric_residual,
    level_params,
    rodrigues_poly,
    weight_eval,
)
from .spectrum import PotentialParams, UnitScale, energy, potential
from .wavefunction import BoundState, build_state, eval_R, overlap

__version__ = "0.1.0"
