import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polylandau.analytic import (
    BlaschkeTypeExtremal,
    ClassicalLandauExtremal,
    LogDistortionExtremal,
    PowerSeries,
    ScaledIdentity,
    automorphism_series,
    deriv,
    evaluate,
    taylor_coefficients,
)
from polylandau.errors import DomainError, ParameterError

# high-precision values computed with mpmath at 40 digits
LOG_DISTORTION_2_AT_HALF = 0.27390756528931443536


def disc_points(n, radius, seed):
    rng = np.random.default_rng(seed)
    return radius * np.sqrt(rng.random(n)) * np.exp(2j * np.pi * rng.random(n))


def test_identity_eval():
    assert evaluate(ScaledIdentity(1), 0.3 + 0.4j) == 0.3 + 0.4j


def test_blaschke_vanishes_at_origin():
    assert evaluate(BlaschkeTypeExtremal(2, 2), 0) == 0


def test_log_distortion_value():
    assert evaluate(LogDistortionExtremal(2), 0.5) == pytest.approx(LOG_DISTORTION_2_AT_HALF, abs=1e-15)
    # the same number by plain arithmetic
    assert evaluate(LogDistortionExtremal(2), 0.5).real == pytest.approx(2 + 6 * math.log(0.75), abs=1e-15)


def test_log_distortion_derivative():
    f = LogDistortionExtremal(2)
    assert deriv(f, 0) == 1
    assert abs(deriv(f, 0.5)) < 1e-15


def test_scaled_identity_derivative_constant():
    f = ScaledIdentity(2 - 3j)
    z = disc_points(10, 0.9, 1)
    assert np.all(deriv(f, z) == 2 - 3j)


@pytest.mark.parametrize("z", [1.0, 1j, 0.6 + 0.8j, 2.0])
def test_domain_error_outside_disc(z):
    with pytest.raises(DomainError):
        evaluate(ScaledIdentity(1), z)
    with pytest.raises(DomainError):
        deriv(ScaledIdentity(1), z)


@pytest.mark.parametrize(
    "make",
    [
        lambda: ClassicalLandauExtremal(0.5),
        lambda: BlaschkeTypeExtremal(1.0, 2),
        lambda: BlaschkeTypeExtremal(2.0, 1),
        lambda: LogDistortionExtremal(1.0),
        lambda: PowerSeries(()),
        lambda: PowerSeries((float("nan"),)),
        lambda: ScaledIdentity(float("inf")),
    ],
)
def test_parameter_errors(make):
    with pytest.raises(ParameterError):
        make()


def test_taylor_identity():
    a = taylor_coefficients(ScaledIdentity(1), 3, 0.5)
    assert np.allclose(a, [0, 1, 0, 0], atol=1e-12)


def test_taylor_blaschke_n2():
    a = taylor_coefficients(BlaschkeTypeExtremal(2, 2), 3, 0.5)
    assert abs(a[1] - 1) < 1e-8
    assert abs(a[2] + 1.5) < 1e-8
    assert abs(a[3] + 0.75) < 1e-8


@pytest.mark.parametrize("M", [1.5, 2.0, 4.0])
@pytest.mark.parametrize("n", [2, 3, 5])
def test_taylor_matches_expansion(M, n):
    # z - (M - 1/M) z^n - sum_{k>=3} (M^2-1)/M^(k-1) z^((n-1)(k-1)+1)
    N = 20
    expected = np.zeros(N + 1)
    expected[1] = 1
    expected[n] -= M - 1 / M
    k = 3
    while (n - 1) * (k - 1) + 1 <= N:
        expected[(n - 1) * (k - 1) + 1] -= (M * M - 1) / M ** (k - 1)
        k += 1
    a = taylor_coefficients(BlaschkeTypeExtremal(M, n), N, 0.5)
    assert np.allclose(a, expected, atol=1e-8)


@pytest.mark.parametrize(
    "f",
    [BlaschkeTypeExtremal(2, 3), LogDistortionExtremal(3), ClassicalLandauExtremal(1.5),
     automorphism_series(0.3 - 0.2j, 30)],
)
def test_taylor_contour_invariance(f):
    ref = np.array(taylor_coefficients(f, 10, 0.5))
    for rho in (0.3, 0.7):
        assert np.allclose(taylor_coefficients(f, 10, rho), ref, atol=1e-8)


def test_taylor_rejects_bad_contour():
    with pytest.raises(DomainError):
        taylor_coefficients(ScaledIdentity(1), 3, 1.0)
    with pytest.raises(ParameterError):
        taylor_coefficients(ScaledIdentity(1), 3, 0.5, samples=8)


def test_power_series_truncation_order():
    assert PowerSeries((0, 1, 2)).truncation_order == 2
    assert ScaledIdentity(1).truncation_order is None


def test_classical_landau_equals_blaschke_n2():
    z = disc_points(50, 0.95, 3)
    assert np.allclose(evaluate(ClassicalLandauExtremal(3), z), evaluate(BlaschkeTypeExtremal(3, 2), z))
    assert np.allclose(evaluate(ClassicalLandauExtremal(1), z), z)


@pytest.mark.parametrize(
    "f",
    [
        BlaschkeTypeExtremal(2, 2),
        BlaschkeTypeExtremal(1.5, 5),
        ClassicalLandauExtremal(3),
        LogDistortionExtremal(2),
        LogDistortionExtremal(10),
        PowerSeries((0, 1, -0.5j, 0.25, 0.1 + 0.1j)),
        automorphism_series(0.5, 40),
    ],
)
def test_derivative_matches_finite_differences(f):
    z = disc_points(100, 0.8, 7)
    h = 1e-6
    fd = (evaluate(f, z + h) - evaluate(f, z - h)) / (2 * h)
    exact = deriv(f, z)
    assert np.all(np.abs(fd - exact) <= 1e-6 * np.maximum(np.abs(exact), 1))


@pytest.mark.parametrize("M, n", [(1.5, 2), (2, 3), (4, 5)])
def test_blaschke_bounded_and_sharp(M, n):
    f = BlaschkeTypeExtremal(M, n)
    z = disc_points(2000, 0.999, 11)
    assert np.all(np.abs(evaluate(f, z)) <= M)
    a = taylor_coefficients(f, n)
    assert abs(abs(a[1]) - 1) < 1e-8
    assert abs(abs(a[n]) - (M - 1 / M)) < 1e-8


@settings(max_examples=50, deadline=None)
@given(st.floats(min_value=1.01, max_value=50), st.integers(min_value=0, max_value=10**6))
def test_log_distortion_derivative_below_lambda(lam, seed):
    f = LogDistortionExtremal(lam)
    z = disc_points(500, 0.9999, seed)
    assert np.all(np.abs(deriv(f, z)) < lam)


def test_automorphism_series_close_to_closed_form():
    f = automorphism_series(0.5, 80)
    z = disc_points(200, 0.95, 5)
    assert np.allclose(evaluate(f, z), (z + 0.5) / (1 + 0.5 * z), atol=1e-12)
