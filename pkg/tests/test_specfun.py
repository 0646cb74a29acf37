import math

import mpmath as mp
import numpy as np
import pytest

from liouwave import (
    DomainError,
    EULER_GAMMA,
    EvalAccuracy,
    I0_ACCURACY,
    J0_ACCURACY,
    Y0_ACCURACY,
    asinh,
    bessel_i0,
    bessel_j0,
    bessel_y0,
)
from oracles import bisect_root, i0_series, j0_series, y0_series

mp.mp.dps = 40


def test_j0_at_zero_is_exactly_one():
    assert bessel_j0(0.0) == 1.0


def test_j0_against_series_oracle():
    assert bessel_j0(1.0) == pytest.approx(0.7651976865579666, abs=1e-15)
    # the double-precision series oracle is itself only good to ~1e-13
    # past x ~ 8 (its largest term grows like (x^2/4)^m / (m!)^2)
    for x in (0.1, 0.5, 1.0, 2.0, 3.7, 5.0, 8.0):
        assert bessel_j0(x) == pytest.approx(j0_series(x), abs=1e-13)


def test_j0_first_zero_located_by_series_bisection():
    root = bisect_root(j0_series, 2.0, 3.0)
    assert root == pytest.approx(2.404825557695773, abs=1e-12)
    assert abs(bessel_j0(root)) < 1e-12


def test_j0_even_bitwise():
    for x in (0.3, 1.7, 9.4, 25.0, 47.5):
        assert bessel_j0(x) == bessel_j0(-x)


def test_j0_accuracy_contract_against_mpmath():
    xs = np.linspace(J0_ACCURACY.domain[0], J0_ACCURACY.domain[1], 501)
    worst = max(abs(bessel_j0(float(x)) - float(mp.besselj(0, mp.mpf(float(x))))) for x in xs)
    assert worst <= J0_ACCURACY.abs_tol


def test_y0_against_series_oracle():
    assert bessel_y0(1.0) == pytest.approx(0.08825696421567696, abs=1e-14)
    for x in (0.2, 0.7, 1.0, 2.5, 4.0, 9.0):
        assert bessel_y0(x) == pytest.approx(y0_series(x), abs=1e-12)


def test_y0_log_divergence_near_zero():
    assert bessel_y0(1e-9) < -12.0
    assert bessel_y0(1e-9) < bessel_y0(1e-6) < bessel_y0(1e-3)


def test_y0_domain_errors():
    with pytest.raises(DomainError):
        bessel_y0(0.0)
    with pytest.raises(DomainError):
        bessel_y0(-1.0)
    with pytest.raises(DomainError):
        bessel_y0(math.nan)


def test_y0_accuracy_contract_against_mpmath():
    lo, hi = Y0_ACCURACY.domain
    xs = np.concatenate([np.geomspace(lo, 0.5, 100), np.linspace(0.5, hi, 401)])
    worst = max(abs(bessel_y0(float(x)) - float(mp.bessely(0, mp.mpf(float(x))))) for x in xs)
    assert worst <= Y0_ACCURACY.abs_tol


def test_i0_against_series_oracle():
    for x in (0.0, 0.5, 1.0, 2.0, 4.5):
        assert bessel_i0(x) == pytest.approx(i0_series(x), rel=1e-14)
    assert bessel_i0(-2.0) == bessel_i0(2.0)


def test_i0_accuracy_contract_against_mpmath():
    xs = np.linspace(I0_ACCURACY.domain[0], I0_ACCURACY.domain[1], 301)
    worst = max(abs(bessel_i0(float(x)) - float(mp.besseli(0, mp.mpf(float(x))))) for x in xs)
    assert worst <= I0_ACCURACY.abs_tol


@pytest.mark.parametrize("x", [0.5, 1.0, 2.0, 5.0, 10.0, 20.0])
@pytest.mark.parametrize("fn", [bessel_j0, bessel_y0])
def test_cylinder_ode_residual(fn, x):
    # normalized residual f'' + f'/x + f with the near-optimal power-of-two step
    h = 2.0**-13
    d1 = (fn(x + h) - fn(x - h)) / (2 * h)
    d2 = (fn(x + h) - 2 * fn(x) + fn(x - h)) / h**2
    assert abs(d2 + d1 / x + fn(x)) <= 1e-6


def test_wronskian_identity():
    h = 1e-6
    for x in np.linspace(0.5, 30.0, 60):
        x = float(x)
        j0p = (bessel_j0(x + h) - bessel_j0(x - h)) / (2 * h)
        y0p = (bessel_y0(x + h) - bessel_y0(x - h)) / (2 * h)
        wron = bessel_j0(x) * y0p - j0p * bessel_y0(x)
        assert wron == pytest.approx(2.0 / (math.pi * x), abs=1e-8)


def test_asinh_values_and_symmetry():
    assert asinh(0.0) == 0.0
    assert asinh(1.0) == pytest.approx(0.881373587019543, abs=1e-15)
    assert asinh(-1.0) == -asinh(1.0)
    assert asinh(1e300) == pytest.approx(math.log(2.0) + 300.0 * math.log(10.0), rel=1e-15)


def test_asinh_inverts_sinh():
    for x in np.linspace(-10.0, 10.0, 41):
        assert asinh(math.sinh(float(x))) == pytest.approx(float(x), abs=1e-12)


def test_non_finite_inputs_rejected():
    for fn in (bessel_j0, bessel_i0, asinh):
        with pytest.raises(DomainError):
            fn(math.inf)
        with pytest.raises(DomainError):
            fn(math.nan)


def test_euler_gamma_constant():
    assert EULER_GAMMA == pytest.approx(float(mp.euler), abs=1e-16)


def test_accuracy_record_validation():
    with pytest.raises(ValueError):
        EvalAccuracy(abs_tol=-1e-13, rel_tol=1e-13, domain=(0.0, 1.0))
    with pytest.raises(ValueError):
        EvalAccuracy(abs_tol=1e-13, rel_tol=1e-13, domain=(2.0, 1.0))
