import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from oracles import golden_poly, sympy_rodrigues

from rosenmorse.errors import DomainError
from rosenmorse.exactalg import DensePolynomial
from rosenmorse.rodrigues import (
    S_KERNEL,
    WeightSpec,
    arccot,
    boundary_product_report,
    hypergeometric_residual,
    lambda_consistency,
    level_params,
    log_derivative_numerator,
    rodrigues_poly,
    weight_eval,
)

F = Fraction


@pytest.mark.parametrize(
    "n,a,b,beta,alpha,eps",
    [
        (1, 0, 1, 0, 2, 0),
        (2, 0, 1, -1, 1, F(15, 4)),
        (1, F(1, 4), 1, F(-1, 4), F(8, 5), F(369, 400)),
    ],
)
def test_level_params_examples(n, a, b, beta, alpha, eps):
    lv = level_params(n, a, b)
    assert (lv.beta_n, lv.alpha_n, lv.epsilon_n) == (beta, alpha, eps)


@pytest.mark.parametrize("n,a,b", [(0, 0, 1), (1, F(-1, 2), 1), (1, 0, 0), (2, 0, -1)])
def test_level_params_domain(n, a, b):
    with pytest.raises(DomainError):
        level_params(n, a, b)


rat_a = st.fractions(min_value=F(-19, 40), max_value=4, max_denominator=40)
rat_b = st.fractions(min_value=F(1, 40), max_value=4, max_denominator=40)


@given(st.integers(1, 30), rat_a, rat_b)
def test_level_identities(n, a, b):
    lv = level_params(n, a, b)
    assert lv.beta_n == -(n + a) + 1
    assert lv.alpha_n == 2 * b / (n + a)
    assert lv.epsilon_n == (n + a) ** 2 - b**2 / (n + a) ** 2
    assert -lv.alpha_n * (1 - lv.beta_n) + 2 * b == 0
    assert (lv.alpha_n / 2) ** 2 - (1 - lv.beta_n) ** 2 + lv.epsilon_n == 0


def test_rodrigues_low_orders():
    assert rodrigues_poly(1, F(7, 3), F(2, 5)).coeffs == (1,)
    assert rodrigues_poly(2, 0, 1).coeffs == (1, -2)
    assert rodrigues_poly(3, 0, 1).coeffs == (F(-14, 9), -4, 6)


@pytest.mark.parametrize("n", range(1, 6))
@pytest.mark.parametrize("a,b", [(F(1, 4), 1), (0, 1), (F(3, 2), F(1, 2)), (F(-1, 3), 3)])
def test_rodrigues_matches_handwritten_closed_forms(n, a, b):
    assert list(rodrigues_poly(n, a, b).coeffs) == golden_poly(n, a, b)


@pytest.mark.parametrize("n,a,b", [(3, F(1, 4), 1), (4, F(2, 3), F(5, 2)), (6, F(1, 4), 1), (7, 0, F(1, 2))])
def test_rodrigues_matches_symbolic_differentiation(n, a, b):
    assert list(rodrigues_poly(n, a, b).coeffs) == sympy_rodrigues(n, a, b)


@given(st.integers(1, 12), rat_a, rat_b)
@settings(max_examples=60, deadline=None)
def test_hypergeometric_residual_vanishes(n, a, b):
    lv = level_params(n, a, b)
    p = rodrigues_poly(n, a, b)
    assert hypergeometric_residual(p, lv.weight, n - 1).is_zero()
    assert p.degree == n - 1


@given(st.integers(1, 12), rat_a, rat_b)
@settings(max_examples=60, deadline=None)
def test_leading_coefficient(n, a, b):
    # a step on a degree-d polynomial multiplies the leading coefficient by
    # 2(beta - 1 + k) + d, with d = n - 1 - k
    expected = F(1)
    beta = 1 - n - a
    for k in range(n - 1, 0, -1):
        expected *= 2 * (beta - 1 + k) + (n - 1 - k)
    assert rodrigues_poly(n, a, b).leading == expected


def test_leading_coefficient_n5():
    for a in (F(1, 4), F(0), F(7, 2)):
        assert rodrigues_poly(5, a, 1).leading == 4 * (1 + a) * (2 * a + 3) * (2 + a) * (2 * a + 5)


def test_alternating_leading_sign():
    for n in range(1, 10):
        assert (rodrigues_poly(n, F(1, 4), 1).leading > 0) == (n % 2 == 1)


def test_residual_examples():
    assert hypergeometric_residual(rodrigues_poly(2, 0, 1), WeightSpec(-1, 1), 1).is_zero()
    assert hypergeometric_residual(DensePolynomial((1,)), WeightSpec(F(3, 7), -2), 0).is_zero()
    assert hypergeometric_residual(DensePolynomial((0, 1)), WeightSpec(0, 0), 2) == DensePolynomial((0, -2))


def test_log_derivative_identity():
    # d/dx w = w * num / s, checked numerically against a central difference
    w = WeightSpec(F(-3, 2), F(4, 5))
    num = log_derivative_numerator(w)
    for x in (-2.3, -0.4, 0.0, 0.7, 3.1):
        h = 1e-6
        fd = (weight_eval(w, x + h) - weight_eval(w, x - h)) / (2 * h)
        exact = weight_eval(w, x) * float(num(F(x))) / (1 + x * x)
        assert fd == pytest.approx(exact, rel=1e-7)


def test_lambda_examples():
    c = lambda_consistency(WeightSpec(-1, 1), 1)
    assert c.lambda_rodrigues == c.lambda_equation == 2
    assert c.k1_f1 == DensePolynomial((1, -2))
    assert lambda_consistency(WeightSpec(F(2, 3), 5), 0).lambda_rodrigues == 0
    assert lambda_consistency(WeightSpec(1, 0), 3).lambda_equation == -12


@given(st.fractions(min_value=-49, max_value=49, max_denominator=100),
       st.fractions(min_value=-49, max_value=49, max_denominator=100),
       st.integers(0, 40))
@settings(max_examples=100)
def test_lambda_consistency_random(beta, alpha, m):
    c = lambda_consistency(WeightSpec(beta, alpha), m)
    assert c.lambda_rodrigues == c.lambda_equation == -m * (2 * beta + m - 1)


def test_centrifugal_symmetry():
    # a -> -1-a leaves a(a+1) unchanged, so the constant term of the reduced
    # equation -beta(1-beta) - a(a+1) only changes through beta
    for a in (F(1, 4), F(3, 2), F(-1, 3), F(7)):
        a2 = -1 - a
        assert a * (a + 1) == a2 * (a2 + 1)
        for n in range(1, 6):
            beta = 1 - n - a
            assert -beta * (1 - beta) - a * (a + 1) == -beta * (1 - beta) - a2 * (a2 + 1)


def test_weight_examples():
    assert weight_eval(WeightSpec(F(5, 2), 3), 0.0) == pytest.approx(math.exp(-3 * math.pi / 2), rel=1e-15)
    assert weight_eval(WeightSpec(1, 0), 12.5) == 1.0
    assert weight_eval(WeightSpec(0, 2), 1.0) == pytest.approx(0.5 * math.exp(-math.pi / 2), rel=1e-15)
    assert weight_eval(WeightSpec(0, 2), 1.0) == pytest.approx(0.103940, abs=1e-6)


def test_arccot_branch_is_continuous():
    xs = np.array([-1e-9, 0.0, 1e-9])
    vals = arccot(xs)
    assert np.all(np.diff(vals) < 0)
    assert np.ptp(vals) < 1e-8
    z = np.linspace(0.01, np.pi - 0.01, 99)
    np.testing.assert_allclose(arccot(1 / np.tan(z)), z, rtol=1e-12)
    w = WeightSpec(F(-2), F(3, 2))
    left, right = weight_eval(w, -1e-12), weight_eval(w, 1e-12)
    assert left == pytest.approx(right, rel=1e-10)


@pytest.mark.parametrize(
    "w,kind",
    [(WeightSpec(-1, 1), "zero"), (WeightSpec(0, 1), "finite"), (WeightSpec(F(1, 2), 0), "divergent")],
)
def test_boundary_report(w, kind):
    rep = boundary_product_report(w)
    assert rep.limit_at_plus_inf == rep.limit_at_minus_inf == kind


def test_boundary_report_matches_numbers():
    for w in (WeightSpec(-1, 1), WeightSpec(0, 1), WeightSpec(F(1, 2), 0)):
        rep = boundary_product_report(w)
        big = [weight_eval(w, x) * (1 + x * x) for x in (1e3, 1e6)]
        if rep.limit_at_plus_inf == "zero":
            assert big[1] < big[0] < 1e-5
        elif rep.limit_at_plus_inf == "finite":
            assert big[1] == pytest.approx(rep.exp_factor_plus, rel=1e-5)
        else:
            assert big[1] > big[0] > 10


def test_ground_state_corner_reported():
    # n = 1 with a in (-1/2, 0] has beta_1 = -a >= 0
    assert boundary_product_report(level_params(1, F(-1, 4), 1).weight).limit_at_plus_inf == "divergent"
    assert boundary_product_report(level_params(1, 0, 1).weight).limit_at_plus_inf == "finite"
    assert boundary_product_report(level_params(2, 0, 1).weight).limit_at_plus_inf == "zero"


def test_kernel():
    assert S_KERNEL == DensePolynomial((1, 0, 1))
