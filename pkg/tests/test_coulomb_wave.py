import math

import numpy as np
import pytest

from milnezeta.coulomb import (
    Branch,
    asymptotic_pair,
    asymptotic_samples,
    effective_potential,
    frobenius_start,
    indicial_exponent,
    integrate_schrodinger,
    phase_argument,
    phase_rate,
    wronskian,
    wronskian_profile,
)
from milnezeta.exceptions import DomainError, MismatchedAbscissaError, ToleranceError
from milnezeta.models import CoulombParams, WaveSample


def test_effective_potential_default_partial_wave(params):
    y = 2.0
    assert effective_potential(y, params) == pytest.approx(1.0 - 2.0 / y + 3.0 / (16.0 * y * y))


def test_phase_rate_is_derivative_of_phase(params):
    y = np.linspace(0.5, 20.0, 40)
    h = 1e-6
    numeric = (phase_argument(y + h, params) - phase_argument(y - h, params)) / (2 * h)
    np.testing.assert_allclose(phase_rate(y, params), numeric, atol=1e-7)


def test_phase_turns_where_rate_vanishes(params):
    assert phase_rate(params.eps / (2 * params.k), params) == pytest.approx(0.0, abs=1e-15)


@pytest.mark.parametrize('y, bound', [(50.0, 2e-3), (200.0, 5e-4)])
def test_asymptotic_pair_solves_equation_at_large_y(params, y, bound):
    h = 1e-3
    for branch in (0, 1):
        phi = [asymptotic_pair(x, params)[branch] for x in (y - h, y, y + h)]
        second = (phi[0] - 2 * phi[1] + phi[2]) / h ** 2
        assert abs(second + effective_potential(y, params) * phi[1]) < bound


def test_asymptotic_wronskian_is_minus_phase_rate(params):
    for y in (0.3, 1.0, 7.5):
        first, second = asymptotic_samples(y, params)
        assert wronskian(first, second) == pytest.approx(-phase_rate(y, params), abs=1e-14)


def test_indicial_exponents(params):
    assert indicial_exponent(params, Branch.REGULAR) == pytest.approx(0.75)
    assert indicial_exponent(params, Branch.SINGULAR) == pytest.approx(0.25)


@pytest.mark.parametrize('branch', list(Branch))
def test_frobenius_start_agrees_with_integration(params, branch):
    samples = integrate_schrodinger(params, 0.01, 0.5, branch, tolerance=1e-12, y_eval=[0.5])
    phi, dphi = frobenius_start(params, 0.5, branch, tolerance=1e-12)
    assert samples[-1].phi == pytest.approx(phi, rel=1e-8)
    assert samples[-1].dphi == pytest.approx(dphi, rel=1e-8)


def test_frobenius_leading_behaviour(params):
    y = 1e-6
    phi, dphi = frobenius_start(params, y, Branch.REGULAR)
    assert phi == pytest.approx(y ** 0.75, rel=1e-5)
    assert dphi == pytest.approx(0.75 * y ** -0.25, rel=1e-5)


def test_frobenius_integer_exponent_gap_raises():
    with pytest.raises(DomainError):
        frobenius_start(CoulombParams(eps=1.0, l_r=0.0), 0.1, Branch.SINGULAR)


def test_frobenius_cancellation_raises():
    with pytest.raises(ToleranceError):
        frobenius_start(CoulombParams(eps=0.0), 30.0, Branch.REGULAR, tolerance=1e-10)


def test_frobenius_needs_positive_y(params):
    with pytest.raises(DomainError):
        frobenius_start(params, 0.0)


@pytest.mark.parametrize('eps, k', [(0.1, 1.0), (2.0, 1.0), (3.0, 0.5), (1.0, 3.0)])
def test_wronskian_is_constant(eps, k):
    p = CoulombParams(eps=eps, k=k)
    grid = np.linspace(0.05, 10.0, 200)
    regular = integrate_schrodinger(p, 0.05, 10.0, Branch.REGULAR, tolerance=1e-12, y_eval=grid)
    singular = integrate_schrodinger(p, 0.05, 10.0, Branch.SINGULAR, tolerance=1e-12, y_eval=grid)
    profile = wronskian_profile(regular, singular)
    assert profile[0] == pytest.approx(-0.5, rel=1e-2)
    assert np.max(np.abs(profile - profile[0])) / abs(profile[0]) < 1e-7


def test_wronskian_is_constant_on_random_parameters():
    rng = np.random.default_rng(23)
    grid = np.linspace(0.1, 10.0, 200)
    for eps, k in zip(rng.uniform(0.1, 10.0, 20), rng.uniform(0.5, 2.0, 20)):
        p = CoulombParams(eps=eps, k=k)
        regular = integrate_schrodinger(p, 0.1, 10.0, Branch.REGULAR, tolerance=1e-12, y_eval=grid)
        singular = integrate_schrodinger(p, 0.1, 10.0, Branch.SINGULAR, tolerance=1e-12, y_eval=grid)
        profile = wronskian_profile(regular, singular)
        scale = max(abs(a.phi * b.dphi) + abs(a.dphi * b.phi) for a, b in zip(regular, singular))
        assert np.max(np.abs(profile - profile[0])) < 1e-6 * max(abs(profile[0]), scale)


@pytest.mark.parametrize('eps', [5.0, 8.0, 10.0])
def test_wronskian_drift_relative_to_products_under_barrier(eps):
    p = CoulombParams(eps=eps)
    grid = np.linspace(0.05, 10.0, 200)
    regular = integrate_schrodinger(p, 0.05, 10.0, Branch.REGULAR, tolerance=1e-12, y_eval=grid)
    singular = integrate_schrodinger(p, 0.05, 10.0, Branch.SINGULAR, tolerance=1e-12, y_eval=grid)
    profile = wronskian_profile(regular, singular)
    scale = max(abs(a.phi * b.dphi) + abs(a.dphi * b.phi) for a, b in zip(regular, singular))
    assert np.max(np.abs(profile - profile[0])) / scale < 1e-8


def test_integrate_schrodinger_returns_requested_grid(params):
    grid = [0.5, 1.0, 2.0]
    samples = integrate_schrodinger(params, 0.1, 2.0, y_eval=grid)
    assert [s.y for s in samples] == pytest.approx(grid)


def test_integrate_schrodinger_rejects_bad_interval(params):
    with pytest.raises(DomainError):
        integrate_schrodinger(params, 2.0, 1.0)
    with pytest.raises(DomainError):
        integrate_schrodinger(params, 0.0, 1.0)


def test_integrate_schrodinger_rejects_unreachable_tolerance(params):
    with pytest.raises(ToleranceError):
        integrate_schrodinger(params, 0.1, 1.0, tolerance=1e-15)


def test_wronskian_needs_common_abscissa():
    a = WaveSample(y=1.0, phi=1.0, dphi=0.0)
    b = WaveSample(y=1.5, phi=0.0, dphi=1.0)
    with pytest.raises(MismatchedAbscissaError):
        wronskian(a, b)
    with pytest.raises(MismatchedAbscissaError):
        wronskian_profile([a], [a, a])


def test_effective_potential_values():
    p = CoulombParams(eps=1.0)
    assert effective_potential(1.0, p) == pytest.approx(0.1875)
    assert effective_potential(0.25, p) == pytest.approx(0.0, abs=1e-14)
    assert effective_potential(0.75, p) == pytest.approx(0.0, abs=1e-14)
    assert effective_potential(1e9, p) == pytest.approx(1.0, abs=1e-8)
    with pytest.raises(DomainError):
        effective_potential(-1.0, p)


def test_phase_argument_values():
    free = CoulombParams(eps=0.0)
    assert phase_argument(1.0, free) == pytest.approx(1.3926991, abs=1e-7)
    phi1, phi2 = asymptotic_pair(1.0, free)
    assert phi1 == pytest.approx(0.98419, abs=1e-4)
    assert phi2 == pytest.approx(0.17716, abs=1e-4)
    from milnezeta.specfun import arg_gamma
    for eps in (0.5, 2.0, 7.0):
        p = CoulombParams(eps=eps)
        assert phase_argument(0.5, p) == pytest.approx(0.5 + np.pi / 8 + arg_gamma(0.75 + 0.5j * eps), abs=1e-12)


def test_wronskian_of_sample_with_itself_vanishes():
    a = WaveSample(y=2.0, phi=0.3, dphi=-1.7)
    assert wronskian(a, a) == 0.0


def test_asymptotic_wronskian_is_not_constant(params):
    values = [wronskian(*asymptotic_samples(y, params)) for y in (0.5, 2.0, 10.0)]
    assert values[0] != pytest.approx(values[2], abs=1e-3)


def test_residual_of_integrated_solution(params):
    h = 1e-3
    centres = np.array([1.0, 3.0, 7.0])
    grid = np.sort(np.concatenate([centres - h, centres, centres + h]))
    samples = integrate_schrodinger(params, 0.05, 8.0, tolerance=1e-11, y_eval=grid)
    for i in range(0, len(samples), 3):
        left, mid, right = samples[i:i + 3]
        second = (right.dphi - left.dphi) / (2 * h)
        assert abs(second + effective_potential(mid.y, params) * mid.phi) < 1e-4


def test_local_amplitude_settles_at_large_y():
    p = CoulombParams(eps=1.0)
    samples = integrate_schrodinger(p, 0.05, 100.0, tolerance=1e-11, y_eval=[50.0, 100.0])
    amplitude = [math.hypot(s.phi, s.dphi / phase_rate(s.y, p)) for s in samples]
    assert abs(amplitude[1] - amplitude[0]) / amplitude[0] < 1e-2
