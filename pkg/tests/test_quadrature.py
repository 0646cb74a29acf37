import numpy as np
import pytest

from liouwave import ConfigError, gauss_legendre, integrate
from liouwave.quadrature import panel_points


@pytest.mark.parametrize("order", [2, 4, 8, 16, 32])
def test_weights_sum_to_reference_length(order):
    rule = gauss_legendre(order)
    assert abs(np.sum(rule.weights) - 2.0) <= 1e-14


@pytest.mark.parametrize("order", [4, 8, 16, 32])
def test_polynomial_exactness_up_to_degree_2n_minus_1(order):
    rule = gauss_legendre(order)
    for deg in range(2 * order):
        approx = float(np.dot(rule.weights, rule.nodes**deg))
        exact = 0.0 if deg % 2 else 2.0 / (deg + 1)
        assert abs(approx - exact) <= 1e-13


def test_nodes_strictly_interior_and_symmetric():
    rule = gauss_legendre(16)
    assert np.all(np.abs(rule.nodes) < 1.0)
    assert np.allclose(rule.nodes, -rule.nodes[::-1], atol=0)


def test_panel_points_partition_interval():
    rule = gauss_legendre(8)
    pts, wts = panel_points(rule, -2.0, 3.0, panels=5)
    assert len(pts) == 40
    assert np.all((pts > -2.0) & (pts < 3.0))
    assert abs(np.sum(wts) - 5.0) <= 1e-13


def test_integrate_smooth_function():
    val = integrate(np.cos, 0.0, np.pi / 2, gauss_legendre(16), panels=2)
    assert val == pytest.approx(1.0, abs=1e-14)


def test_integrate_empty_interval_is_zero():
    assert integrate(np.cos, 1.0, 1.0) == 0.0
    assert integrate(np.cos, 2.0, 1.0) == 0.0


def test_invalid_configs_rejected():
    with pytest.raises(ConfigError):
        gauss_legendre(0)
    rule = gauss_legendre(4)
    with pytest.raises(ConfigError):
        panel_points(rule, 0.0, 1.0, panels=0)
    with pytest.raises(ConfigError):
        panel_points(rule, 1.0, 1.0, panels=1)
