"""Acceptance gate: one test per criterion, at its pinned tolerance.

Each test prints a single PASS/FAIL line (visible with pytest -s) and
asserts every underlying check.  The checks themselves live in
liouwave.verification so the command-line ``verify`` runs the identical
suites.
"""

import pytest

from liouwave.verification import SUITES
from oracles import bisect_root, j0_series


@pytest.fixture(scope="module")
def suite_results():
    cache = {}

    def run(name):
        if name not in cache:
            cache[name] = SUITES[name]()
        return cache[name]

    return run


def _report(number, label, results):
    passed = all(r.passed for r in results)
    worst = ", ".join(f"{r.max_err:.2e}/{r.tol:g}" for r in results)
    print(f"{'PASS' if passed else 'FAIL'} criterion {number}: {label} [{worst}]")
    for r in results:
        assert r.passed, f"criterion {number}: {r.name}: {r.max_err:.3e} > {r.tol:g} {r.note}"


def test_criterion_01_kernel_argument_partials(suite_results):
    _report(1, "closed-form kernel-argument partials match central differences",
            suite_results("lemma1"))


def test_criterion_02_kernel_solves_wave_equation(suite_results):
    _report(2, "kernel residual small with second-order Richardson contraction",
            suite_results("prop2"))


def test_criterion_03_normalization_adjudication(suite_results):
    results = [r for r in suite_results("dalembert")
               if r.name.startswith("zero-coupling")
               or r.name.startswith("doubled normalization")]
    assert len(results) == 3
    _report(3, "free-wave limit pins the half normalization", results)


def test_criterion_04_small_time_limit(suite_results):
    results = [r for r in suite_results("dalembert") if "small-time" in r.name]
    assert len(results) == 1
    _report(4, "value/t recovers the initial velocity at t=0.01", results)


def test_criterion_05_oracle_equivalence(suite_results):
    _report(5, "quadrature vs leapfrog with fourfold mesh contraction",
            suite_results("oracle"))


def test_criterion_06_regularized_form_equivalence(suite_results):
    results = [r for r in suite_results("dalembert")
               if r.name.startswith("raw and substituted")]
    assert len(results) == 1
    _report(6, "raw and substituted cone integrals agree to 1e-9", results)


def test_criterion_07_scaling_limit(suite_results):
    _report(7, "rescaled kernel tends monotonically to the flat kernel",
            suite_results("scaling"))


def test_criterion_08_telegraph(suite_results):
    _report(8, "line solution matches the damped-wave oracle; literal variant fails",
            suite_results("telegraph"))


def test_criterion_09_hyperbolic_disk_mass(suite_results):
    _report(9, "disk mass identity and small-time slope pin the disk constant",
            suite_results("hyperbolic-mass"))


def test_criterion_10_fourier_route(suite_results):
    _report(10, "frequency-domain route agrees with the disk propagator",
            suite_results("fourier"))


def test_criterion_11_special_functions(suite_results):
    results = list(suite_results("specfun"))
    root = bisect_root(j0_series, 2.0, 3.0)
    zero_err = abs(root - 2.404825557695773)
    from liouwave.verification import CheckResult
    results.append(CheckResult(
        "specfun", "first zero of the first-kind function via the series oracle",
        zero_err, 1e-12, zero_err <= 1e-12,
    ))
    _report(11, "cylinder-function identities and first-zero location", results)
