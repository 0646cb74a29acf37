import numpy as np
import pytest

from liouwave import (
    BumpProfile,
    ConfigError,
    DomainError,
    FunctionProfile,
    gauss_legendre,
    small_time_slope,
    solve_cauchy,
    solve_cauchy_regularized,
    solve_on_grid,
)
from oracles import dalembert_value


def test_zero_coupling_reproduces_dalembert(bump):
    for t, x in [(0.5, 0.0), (1.0, 0.3), (2.0, -0.4), (0.25, 0.9)]:
        assert solve_cauchy(0.0, bump, t, x) == pytest.approx(
            dalembert_value(bump, t, x), abs=1e-10
        )


def test_unit_factor_variant_fails_dalembert_by_factor_two(bump):
    t, x = 0.5, 0.0
    ref = dalembert_value(bump, t, x)
    literal = 2.0 * solve_cauchy(0.0, bump, t, x)
    assert abs(literal - ref) > 0.9 * abs(ref)
    assert literal / ref == pytest.approx(2.0, abs=1e-9)


def test_disjoint_supports_give_zero(bump):
    assert solve_cauchy(1.0, bump, 0.5, 3.0) == 0.0
    assert solve_cauchy(1.0, bump, 0.5, -9.0) == 0.0


def test_matches_shared_fd_reference(bump, liouville_fd_field):
    field = liouville_fd_field
    targets = np.linspace(-3.0, 3.0, 41)
    for it, t in enumerate(field.times):
        idx = np.array([field.position_index(x) for x in targets])
        xs = field.positions[idx]
        quad = np.array([solve_cauchy(1.0, bump, float(t), float(x)) for x in xs])
        fd = field.values[it, idx]
        rel = np.max(np.abs(fd - quad)) / np.max(np.abs(quad))
        assert rel <= 5e-3


def test_regularized_equals_raw(bump):
    rule = gauss_legendre(32)
    rng = np.random.default_rng(3)
    for _ in range(20):
        k = rng.uniform(0.2, 3.0)
        t = rng.uniform(0.2, 2.5)
        x = rng.uniform(-2.0, 2.0)
        raw = solve_cauchy(k, bump, t, x, rule, 8)
        reg = solve_cauchy_regularized(k, bump, t, x, rule, 8)
        assert abs(raw - reg) <= 1e-9


def test_regularized_zero_coupling_is_cone_average(bump):
    for t, x in [(0.5, 0.1), (1.5, -0.2)]:
        assert solve_cauchy_regularized(0.0, bump, t, x) == pytest.approx(
            dalembert_value(bump, t, x), abs=1e-10
        )


def test_regularized_value_linear_in_small_time(bump):
    vals = [solve_cauchy_regularized(1.0, bump, t, 0.2) for t in (1e-3, 2e-3, 4e-3)]
    assert vals[1] / vals[0] == pytest.approx(2.0, rel=1e-4)
    assert vals[2] / vals[1] == pytest.approx(2.0, rel=1e-4)


def test_panel_doubling_contracts_raw_regularized_gap(bump):
    rule = gauss_legendre(16)
    gaps = []
    panels = 1
    while panels <= 64:
        gap = abs(
            solve_cauchy(2.0, bump, 2.0, 0.3, rule, panels)
            - solve_cauchy_regularized(2.0, bump, 2.0, 0.3, rule, panels)
        )
        gaps.append(gap)
        panels *= 2
    for prev, cur in zip(gaps, gaps[1:]):
        if prev <= 1e-10:
            break
        assert cur < prev
    assert min(gaps) <= 1e-10


def test_linearity(bump):
    # same support keeps the quadrature nodes of both solves aligned, so
    # linearity holds to rounding
    other = FunctionProfile(lambda x: np.sin(3.0 * x) * bump(x), -1.0, 1.0)
    a, b = 0.7, -2.3
    combo = FunctionProfile(lambda x: a * bump(x) + b * other(x), -1.0, 1.0)
    t, x, k = 1.2, 0.1, 1.0
    lhs = solve_cauchy(k, combo, t, x)
    rhs = a * solve_cauchy(k, bump, t, x) + b * solve_cauchy(k, other, t, x)
    assert lhs == pytest.approx(rhs, abs=1e-12)


def test_linearity_with_mismatched_supports(bump):
    # different supports shift panel edges; agreement is then only at the
    # quadrature-error level
    other = BumpProfile(-0.5, 1.0)
    a, b = 0.7, -2.3
    combo = FunctionProfile(lambda x: a * bump(x) + b * other(x), -1.0, 1.0)
    t, x, k = 1.2, 0.1, 1.0
    lhs = solve_cauchy(k, combo, t, x)
    rhs = a * solve_cauchy(k, bump, t, x) + b * solve_cauchy(k, other, t, x)
    assert lhs == pytest.approx(rhs, abs=1e-8)


def test_small_time_slope_recovers_profile(bump):
    for x in np.linspace(-0.75, 0.75, 11):
        slope = small_time_slope(1.0, bump, float(x), 1e-2)
        assert slope == pytest.approx(bump(float(x)), abs=1e-4)
    # outside the enlarged support the slope is exactly zero
    assert small_time_slope(1.0, bump, 1.5, 1e-2) == 0.0


def test_small_time_slope_zero_coupling(bump):
    x = 0.3
    assert small_time_slope(0.0, bump, x, 1e-2) == pytest.approx(
        dalembert_value(bump, 1e-2, x) / 1e-2, abs=1e-12
    )


def test_time_and_order_preconditions(bump):
    with pytest.raises(DomainError):
        solve_cauchy(1.0, bump, 0.0, 0.0)
    with pytest.raises(DomainError):
        solve_cauchy(1.0, bump, -1.0, 0.0)
    with pytest.raises(DomainError):
        solve_cauchy_regularized(1.0, bump, -0.5, 0.0)
    with pytest.raises(DomainError):
        small_time_slope(1.0, bump, 0.0, 0.5)
    with pytest.raises(ConfigError):
        solve_cauchy(1.0, bump, 1.0, 0.0, gauss_legendre(4))


def test_solve_on_grid_field_invariants(bump):
    times = [0.0, 0.5, 1.0]
    xs = np.linspace(-3.0, 3.0, 25)
    field = solve_on_grid(1.0, bump, times, xs)
    assert np.all(field.values[0] == 0.0)
    # finite propagation speed: support [-1,1] widened by t
    for it, t in enumerate(times):
        outside = (xs < -1.0 - t) | (xs > 1.0 + t)
        assert np.max(np.abs(field.values[it, outside])) <= 1e-12
    assert field.provenance == "quadrature"


def test_solve_on_grid_worker_count_does_not_change_values(bump):
    times = [0.5, 1.0]
    xs = np.linspace(-2.0, 2.0, 9)
    serial = solve_on_grid(1.0, bump, times, xs, workers=1)
    threaded = solve_on_grid(1.0, bump, times, xs, workers=4)
    assert np.array_equal(serial.values, threaded.values)
