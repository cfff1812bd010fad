import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from rosenmorse.errors import DomainError
from rosenmorse.spectrum import (
    PotentialParams,
    UnitScale,
    coulomb_approx,
    dimensionful_energy,
    energy,
    linear_ho_approx,
    potential,
    potential_table,
    taylor_validation,
)

FIG = PotentialParams(0.25, 1.0)


def test_potential_examples():
    assert potential(PotentialParams(0, 1), math.pi / 2) == pytest.approx(0, abs=1e-15)
    assert potential(FIG, math.pi / 2) == pytest.approx(5 / 16, rel=1e-14)
    assert potential(FIG, math.pi / 4) == pytest.approx(-11 / 8, rel=1e-14)


@pytest.mark.parametrize("z", [0.0, math.pi, -1.0, 4.0])
def test_potential_domain(z):
    with pytest.raises(DomainError):
        potential(FIG, z)


def test_params_domain():
    with pytest.raises(DomainError):
        PotentialParams(-0.5, 1)
    with pytest.raises(DomainError):
        UnitScale(0.0)


def test_coulomb_examples():
    assert coulomb_approx(PotentialParams(0, 1), 1.0) == -2
    assert coulomb_approx(FIG, 0.5) == pytest.approx(-11 / 4)
    assert coulomb_approx(PotentialParams(0, 0), 0.37) == 0
    with pytest.raises(DomainError):
        coulomb_approx(FIG, 0.0)


def test_linear_ho_examples():
    assert linear_ho_approx(PotentialParams(0, 1.5), 1.0) == pytest.approx(1)
    assert linear_ho_approx(FIG, 3.0) == pytest.approx(2 + 5 / 64)
    assert linear_ho_approx(PotentialParams(0, 0), 2.2) == 0


def test_energy_examples():
    assert energy(1, PotentialParams(0, 1)) == 0
    assert energy(2, PotentialParams(0, 1)) == 3.75
    assert energy(3, FIG) == pytest.approx(169 / 16 - 16 / 169, rel=1e-15)
    with pytest.raises(DomainError):
        energy(0, FIG)


def test_dimensionful_energy():
    p = PotentialParams(0, 1)
    assert dimensionful_energy(1, p, UnitScale(7.3)) == 0
    assert dimensionful_energy(2, p, UnitScale(2.0)) == 7.5
    assert dimensionful_energy(3, FIG, UnitScale(1.0)) == energy(3, FIG)


@given(st.integers(1, 200), st.floats(-0.499, 10), st.floats(1e-6, 10))
def test_monotone_ladder(n, a, b):
    p = PotentialParams(a, b)
    assert energy(n + 1, p) > energy(n, p)


def test_square_well_ladder():
    p = PotentialParams(1e-8, 1e-8)
    for n in range(1, 11):
        assert abs(energy(n, p) - n * n) < 1e-6


def test_endpoint_divergence():
    assert potential(FIG, 1e-6) > 1e6
    assert potential(FIG, math.pi - 1e-6) > 1e6


def test_coulomb_singular_parts_cancel():
    p = FIG
    vals = [z * z * abs(potential(p, z) - coulomb_approx(p, z)) for z in (1e-2, 1e-3, 1e-4)]
    assert vals[0] > vals[1] > vals[2]
    assert vals[2] < 1e-8


def test_taylor_validation_coulomb_near_origin():
    # Laurent series: v - coulomb = a(a+1)/3 + 2bz/3 + O(z^2); the relative
    # error is worst at the right end of (0.01, 0.1)
    rep = taylor_validation(FIG, "coulomb", (0.01, 0.1))
    z = 0.1
    series = (FIG.centrifugal / 3 + 2 * FIG.b * z / 3) / potential(FIG, z)
    assert rep.argmax_z == pytest.approx(z)
    assert rep.max_rel_err == pytest.approx(series, rel=0.02)
    assert 0.014 < rep.max_rel_err < 0.016
    assert taylor_validation(FIG, "coulomb", (0.001, 0.01)).max_rel_err < 1e-3


def test_taylor_validation_single_point():
    z0 = 1.3
    rep = taylor_validation(FIG, "linear_ho", (z0, z0))
    v = potential(FIG, z0)
    assert rep.max_rel_err == pytest.approx(abs(v - linear_ho_approx(FIG, z0)) / abs(v))


def test_taylor_validation_degenerate():
    p = PotentialParams(0, 0)
    for regime in ("coulomb", "linear_ho"):
        assert taylor_validation(p, regime).max_rel_err == 0


def test_taylor_default_intervals():
    assert taylor_validation(FIG, "coulomb").interval == (0.0, 0.3)
    assert taylor_validation(FIG, "linear_ho").interval == (0.8, 2.2)


def test_potential_table_shape():
    t = potential_table(FIG, 500)
    assert t.shape == (500, 4)
    assert np.all((t[:, 0] > 0) & (t[:, 0] < math.pi))
    assert np.all(np.diff(t[:, 0]) > 0)
