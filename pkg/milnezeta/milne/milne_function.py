"""Milne density n_M = 1/rho**2 built from the asymptotic Coulomb pair.

rho**2 = (alpha phi1 + beta phi2)**2 + phi2**2 / alpha**2, with alpha = phi1 and
beta = phi1' at y0 = 1/(2k), where the logarithm in theta vanishes.
"""
import logging
import math
from typing import List, Optional

import numpy as np

from ..coulomb import asymptotic_pair, phase_argument, phase_rate
from ..exceptions import DegenerateAlphaError, DomainError
from ..models.schemas import (
    CoulombParams,
    DensityCurve,
    DensityKind,
    GridSpec,
    MilneGrid,
    MilneSample,
    SuperpositionConstants,
)
from ..solvers import SystemFactory

logger = logging.getLogger(__name__)

ALPHA_FLOOR = 1e-12


def superposition_constants(p: CoulombParams, alpha=None, beta=None) -> SuperpositionConstants:
    """alpha = phi1(1/2k), beta = phi1'(1/2k) = k (1 - eps) cos(theta0).

    Either constant may be overridden; the Milne density is not unique and the
    pair is a free choice as long as alpha does not vanish.
    """
    y0 = 0.5 / p.k
    theta0 = float(phase_argument(y0, p))
    if alpha is None:
        alpha = math.sin(theta0)
    if beta is None:
        beta = float(phase_rate(y0, p)) * math.cos(theta0)
    if abs(alpha) < ALPHA_FLOOR:
        raise DegenerateAlphaError(p.eps, alpha)
    return SuperpositionConstants(alpha=alpha, beta=beta)


def _amplitude_squared(y, p, constants):
    phi1, phi2 = asymptotic_pair(y, p)
    u = constants.alpha * np.asarray(phi1) + constants.beta * np.asarray(phi2)
    return u * u + np.asarray(phi2) ** 2 / constants.alpha ** 2


def milne_density(y, p: CoulombParams, constants: Optional[SuperpositionConstants] = None):
    """n_M(y, eps) from the closed form; strictly positive."""
    if constants is None:
        constants = superposition_constants(p)
    elif abs(constants.alpha) < ALPHA_FLOOR:
        raise DegenerateAlphaError(p.eps, constants.alpha)
    value = np.asarray(1.0 / _amplitude_squared(y, p, constants))
    return value[()] if value.ndim == 0 else value


def milne_amplitude(y, p: CoulombParams,
                    constants: Optional[SuperpositionConstants] = None) -> List[MilneSample]:
    """Closed-form rho and its analytic derivative at each y."""
    if constants is None:
        constants = superposition_constants(p)
    y = np.atleast_1d(np.asarray(y, dtype=float))
    theta = np.asarray(phase_argument(y, p))
    rate = np.asarray(phase_rate(y, p))
    sin, cos = np.sin(theta), np.cos(theta)
    a, b = constants.alpha, constants.beta
    u = a * sin + b * cos
    du = (a * cos - b * sin) * rate
    v = cos
    dv = -sin * rate
    rho = np.sqrt(u * u + v * v / a ** 2)
    drho = (u * du + v * dv / a ** 2) / rho
    return [MilneSample.from_amplitude(yi, ri, di) for yi, ri, di in zip(y, rho, drho)]


def milne_density_curve(y: float, epsilons, k: float = 1.0) -> DensityCurve:
    """n_M at fixed y as a function of eps, comparable with n_Z and n_C."""
    epsilons = np.asarray(epsilons, dtype=float)
    values = [float(milne_density(y, CoulombParams(eps=eps, k=k))) for eps in epsilons]
    return DensityCurve(epsilons=epsilons.tolist(), values=values, kind=DensityKind.MILNE)


def milne_grid(spec: Optional[GridSpec] = None, k: float = 1.0) -> MilneGrid:
    """n_M over a Cartesian (y, eps) grid, one row per eps.

    A row whose alpha degenerates is filled with NaN and its eps recorded;
    the remaining rows are still evaluated.
    """
    spec = spec or GridSpec()
    y_axis = np.linspace(spec.y_min, spec.y_max, spec.y_count)
    eps_axis = np.linspace(spec.eps_min, spec.eps_max, spec.eps_count)
    rows, degenerate = [], []
    for eps in eps_axis:
        try:
            rows.append(np.asarray(milne_density(y_axis, CoulombParams(eps=eps, k=k))).tolist())
        except DegenerateAlphaError as exc:
            logger.warning("skipping grid row: %s", exc)
            degenerate.append(float(eps))
            rows.append([math.nan] * len(y_axis))
    logger.info("Milne grid %dx%d over y [%g, %g], eps [%g, %g]", spec.eps_count, spec.y_count,
                spec.y_min, spec.y_max, spec.eps_min, spec.eps_max)
    return MilneGrid(y_axis=y_axis.tolist(), eps_axis=eps_axis.tolist(), values=rows, degenerate_eps=degenerate)


def integrate_pinney(p: CoulombParams, q_const=None, y0=1.0, rho0=1.0, drho0=0.0, y_end=10.0,
                     tolerance=1e-10, y_eval=None, potential=None) -> List[MilneSample]:
    """Integrate rho'' + Q(y) rho = q_const / rho**3 from (y0, rho0, drho0).

    q_const defaults to k**2.  potential replaces Q(y) when given (a callable of y).
    """
    if not rho0 > 0:
        raise DomainError(f"rho0 must be positive, got {rho0}")
    if not 0 < y0 < y_end:
        raise DomainError(f"need 0 < y0 < y_end, got [{y0}, {y_end}]")
    system = SystemFactory.get_system('pinney', p, q_const=q_const, potential=potential)
    ys, states = system.solve(y0, [rho0, drho0], y_end, tolerance, y_eval)
    return [MilneSample.from_amplitude(y, rho, drho) for y, (rho, drho) in zip(ys, states)]


def closed_form_gap(p: CoulombParams, y0: float, y_end: float = 10.0, q_const=None,
                    tolerance=1e-10, samples: int = 400) -> float:
    """Largest relative distance between the Pinney trajectory seeded from the
    closed form at y0 and the closed form itself over [y0, y_end]."""
    grid = np.linspace(y0, y_end, samples)
    closed = milne_amplitude(grid, p)
    seed = closed[0]
    numeric = integrate_pinney(p, q_const, y0, seed.rho, seed.drho, y_end, tolerance, y_eval=grid)
    rho_closed = np.array([s.rho for s in closed])
    rho_numeric = np.array([s.rho for s in numeric])
    return float(np.max(np.abs(rho_numeric - rho_closed) / rho_closed))


def phase_increment(y_min: float, y_max: float, p: CoulombParams) -> float:
    """Accumulated |d theta| over [y_min, y_max]; theta turns at y* = eps / (2k)."""
    if not 0 < y_min < y_max:
        raise DomainError(f"need 0 < y_min < y_max, got [{y_min}, {y_max}]")
    points = [y_min, y_max]
    turning = 0.5 * p.eps / p.k
    if y_min < turning < y_max:
        points.insert(1, turning)
    theta = np.asarray(phase_argument(np.array(points), p))
    return float(np.sum(np.abs(np.diff(theta))))


def count_local_maxima(values) -> int:
    values = np.asarray(values, dtype=float)
    inner = values[1:-1]
    return int(np.count_nonzero((inner > values[:-2]) & (inner >= values[2:])))


def oscillation_check(p: CoulombParams, y_min=0.1, y_max=10.0, samples=20001):
    """(observed local maxima of n_M, round(phase increment / pi))."""
    y = np.linspace(y_min, y_max, samples)
    observed = count_local_maxima(milne_density(y, p))
    predicted = int(round(phase_increment(y_min, y_max, p) / np.pi))
    return observed, predicted
