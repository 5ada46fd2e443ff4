import math

import numpy as np
import pytest

import milnezeta.milne.milne_function as milne_function
from milnezeta.exceptions import AmplitudeCollapseError, DegenerateAlphaError, DomainError
from milnezeta.milne import (
    closed_form_gap,
    count_local_maxima,
    integrate_pinney,
    milne_amplitude,
    milne_density,
    milne_density_curve,
    milne_grid,
    oscillation_check,
    phase_increment,
    superposition_constants,
)
from milnezeta.coulomb import phase_argument
from milnezeta.models import CoulombParams, DensityKind, GridSpec, SuperpositionConstants


def test_superposition_constants_default(params):
    constants = superposition_constants(params)
    assert constants.alpha == pytest.approx(0.29077, abs=1e-4)
    assert constants.beta == pytest.approx(-0.95680, abs=1e-4)


def test_superposition_constants_override(params):
    constants = superposition_constants(params, alpha=2.0, beta=0.5)
    assert (constants.alpha, constants.beta) == (2.0, 0.5)


def test_degenerate_alpha_raises(params):
    with pytest.raises(DegenerateAlphaError) as info:
        superposition_constants(params, alpha=0.0)
    assert info.value.eps == params.eps
    with pytest.raises(DegenerateAlphaError):
        milne_density(1.0, params, SuperpositionConstants(alpha=1e-14, beta=1.0))


def test_milne_density_is_positive_on_grid():
    grid = milne_grid(GridSpec(y_count=60, eps_count=60))
    values = np.asarray(grid.values)
    assert values.shape == (60, 60)
    assert np.all(np.isfinite(values)) and np.all(values > 0)
    assert grid.degenerate_eps == []


def test_milne_grid_default_square():
    grid = milne_grid()
    assert len(grid.y_axis) == 100 and len(grid.eps_axis) == 100
    assert grid.y_axis[0] == pytest.approx(0.1) and grid.y_axis[-1] == pytest.approx(10.0)
    frame = grid.to_frame()
    assert list(frame.columns) == ['y', 'eps', 'n_M']
    assert len(frame) == 10000
    # eps-major: the first block shares the smallest eps
    assert frame['eps'].iloc[:100].nunique() == 1
    assert frame['n_M'].iloc[101] == pytest.approx(grid.values[1][1])


def test_milne_grid_skips_degenerate_rows(monkeypatch):
    original = milne_function.superposition_constants

    def degenerate_at_one(p, alpha=None, beta=None):
        if p.eps == 1.0:
            raise DegenerateAlphaError(p.eps, 0.0)
        return original(p, alpha, beta)

    monkeypatch.setattr(milne_function, 'superposition_constants', degenerate_at_one)
    grid = milne_grid(GridSpec(eps_min=0.5, eps_max=1.5, eps_count=3, y_count=5))
    assert grid.degenerate_eps == [1.0]
    assert all(math.isnan(v) for v in grid.values[1])
    assert all(v > 0 for v in grid.values[0] + grid.values[2])


def test_amplitude_matches_density(params):
    y = np.linspace(0.2, 10.0, 50)
    samples = milne_amplitude(y, params)
    np.testing.assert_allclose([s.n_m for s in samples], milne_density(y, params), rtol=1e-13)


def test_amplitude_derivative_matches_finite_difference(params):
    h = 1e-6
    for y in (0.4, 1.3, 6.0):
        left, mid, right = milne_amplitude([y - h, y, y + h], params)
        assert mid.drho == pytest.approx((right.rho - left.rho) / (2 * h), abs=1e-6)


def test_density_curve_at_fixed_y():
    curve = milne_density_curve(1.0, np.linspace(0.1, 10.0, 20))
    assert curve.kind is DensityKind.MILNE
    assert all(v > 0 for v in curve.values)


def test_pinney_constant_potential_keeps_equilibrium(params):
    samples = integrate_pinney(params, q_const=1.0, potential=lambda y: 1.0, y0=1.0, rho0=1.0, drho0=0.0,
                               y_end=10.0, tolerance=1e-11, y_eval=np.linspace(1.0, 10.0, 30))
    np.testing.assert_allclose([s.rho for s in samples], 1.0, atol=1e-9)


def test_pinney_constant_potential_closed_form(params):
    omega, c = 2.0, 1.0
    grid = np.linspace(1.0, 6.0, 40)
    samples = integrate_pinney(params, q_const=c, potential=lambda y: omega ** 2, y0=1.0, rho0=1.0, drho0=0.0,
                               y_end=6.0, tolerance=1e-11, y_eval=grid)
    s = grid - 1.0
    expected = np.sqrt(np.cos(omega * s) ** 2 + c / omega ** 2 * np.sin(omega * s) ** 2)
    np.testing.assert_allclose([x.rho for x in samples], expected, rtol=1e-8)


def test_pinney_collapse_raises(params):
    with pytest.raises(AmplitudeCollapseError) as info:
        integrate_pinney(params, q_const=0.0, potential=lambda y: 1.0, y0=1.0, rho0=1.0, drho0=0.0, y_end=10.0)
    assert info.value.y == pytest.approx(1.0 + np.pi / 2, abs=1e-3)


def test_pinney_rejects_bad_start(params):
    with pytest.raises(DomainError):
        integrate_pinney(params, rho0=0.0)
    with pytest.raises(DomainError):
        integrate_pinney(params, y0=5.0, y_end=2.0)


def test_closed_form_gap_shrinks_with_start(params):
    gaps = [closed_form_gap(params, y0) for y0 in (2.0, 4.0, 8.0)]
    assert gaps[0] > gaps[1] > gaps[2]


def test_closed_form_gap_keeps_shrinking_far_out(params):
    gaps = [closed_form_gap(params, y0, y_end=2.0 * y0) for y0 in (8.0, 16.0, 32.0)]
    assert gaps[0] > gaps[1] > gaps[2]
    assert gaps[2] < 0.1


def test_phase_increment_without_turning_point(params):
    expected = abs(float(phase_argument(9.0, params) - phase_argument(2.0, params)))
    assert phase_increment(2.0, 9.0, params) == pytest.approx(expected)


def test_phase_increment_counts_both_sides_of_turn(params):
    theta = phase_argument(np.array([0.1, 1.0, 10.0]), params)
    expected = abs(theta[1] - theta[0]) + abs(theta[2] - theta[1])
    assert phase_increment(0.1, 10.0, params) == pytest.approx(expected)
    assert phase_increment(0.1, 10.0, params) / np.pi == pytest.approx(2.578, abs=1e-2)


def test_phase_increment_rejects_empty_range(params):
    with pytest.raises(DomainError):
        phase_increment(3.0, 3.0, params)


def test_count_local_maxima():
    assert count_local_maxima([0, 1, 0, 2, 2, 0]) == 2
    assert count_local_maxima([1, 2, 3]) == 0


@pytest.mark.parametrize('eps, predicted', [(2.0, 3), (5.0, 3), (8.0, 4)])
def test_oscillations_follow_phase(eps, predicted):
    observed, expected = oscillation_check(CoulombParams(eps=eps))
    assert expected == predicted
    assert abs(observed - expected) <= 1


def test_superposition_constants_values():
    free = superposition_constants(CoulombParams(eps=0.0))
    assert free.alpha == pytest.approx(0.77878, abs=1e-4)
    assert free.beta == pytest.approx(0.62730, abs=1e-4)
    assert superposition_constants(CoulombParams(eps=1.0)).beta == pytest.approx(0.0, abs=1e-15)
    half = superposition_constants(CoulombParams(eps=0.5))
    assert half.alpha ** 2 + (half.beta / 0.5) ** 2 == pytest.approx(1.0)


def test_milne_density_at_reference_point():
    p = CoulombParams(eps=0.0)
    assert milne_density(0.5, p) == pytest.approx(superposition_constants(p).alpha ** 2, rel=1e-12)
    assert milne_density(0.5, p) == pytest.approx(0.60650, abs=1e-4)


def test_milne_grid_cell_matches_pointwise():
    grid = milne_grid(GridSpec(y_min=0.5, y_max=1.5, eps_min=0.1, eps_max=2.0, y_count=3, eps_count=4))
    assert grid.values[0][0] == pytest.approx(milne_density(0.5, CoulombParams(eps=0.1)), rel=1e-14)


def test_milne_density_has_no_secular_growth():
    p = CoulombParams(eps=0.1)
    early = milne_density(np.linspace(10.0, 50.0, 20001), p)
    late = milne_density(np.linspace(50.0, 100.0, 20001), p)
    assert late.max() == pytest.approx(early.max(), rel=1e-3)
    assert late.min() == pytest.approx(early.min(), rel=1e-3)


def test_milne_grid_is_deterministic():
    spec = GridSpec(y_count=13, eps_count=11)
    assert milne_grid(spec).values == milne_grid(spec).values


def test_pinney_samples_carry_density(params):
    for sample in integrate_pinney(params, y0=2.0, rho0=1.3, drho0=0.1, y_end=6.0):
        assert sample.n_m * sample.rho ** 2 == pytest.approx(1.0, abs=1e-12)
