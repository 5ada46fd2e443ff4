"""The repulsive Coulomb equation phi'' + Q(y) phi = 0 in the coordinate y = x**2.

Q(y) = k**2 - k eps / y - l_r (l_r + 1) / y**2, which for l_r = -1/4 is the
familiar k**2 - k eps / y + 3 / (16 y**2).
"""
import logging
import math
from enum import Enum
from typing import List, Tuple

import numpy as np

from ..exceptions import DomainError, MismatchedAbscissaError, ToleranceError
from ..models.schemas import CoulombParams, WaveSample
from ..solvers import SystemFactory
from ..specfun import arg_gamma

logger = logging.getLogger(__name__)

FROBENIUS_MAX_TERMS = 400
# digits the Frobenius sum may lose to cancellation
FROBENIUS_MAX_CANCELLATION = 1e8


class Branch(str, Enum):
    REGULAR = 'regular'      # y**(l_r + 1), y**(3/4) by default
    SINGULAR = 'singular'    # y**(-l_r), y**(1/4) by default


def _unwrap(value):
    return value[()] if isinstance(value, np.ndarray) and value.ndim == 0 else value


def _positive_y(y):
    y = np.asarray(y, dtype=float)
    if np.any(~(y > 0)):
        raise DomainError("y must be positive")
    return y


def effective_potential(y, p: CoulombParams):
    y = _positive_y(y)
    return _unwrap(p.k ** 2 - p.k * p.eps / y - p.l_r * (p.l_r + 1.0) / (y * y))


def phase_rate(y, p: CoulombParams):
    """Analytic d(theta)/dy = k - eps / (2y)."""
    y = _positive_y(y)
    return _unwrap(p.k - 0.5 * p.eps / y)


def coulomb_phase(p: CoulombParams):
    """-l_r pi / 2 + arg Gamma(l_r + 1 + i eps / 2), the y-independent part of theta."""
    return -0.5 * p.l_r * np.pi + float(arg_gamma(complex(p.l_r + 1.0, 0.5 * p.eps)))


def phase_argument(y, p: CoulombParams):
    """theta(y) = k y - (eps/2) ln(2 k y) - l_r pi/2 + arg Gamma(l_r + 1 + i eps/2)."""
    y = _positive_y(y)
    return _unwrap(p.k * y - 0.5 * p.eps * np.log(2.0 * p.k * y) + coulomb_phase(p))


def asymptotic_pair(y, p: CoulombParams):
    """(phi1, phi2) = (sin theta, cos theta)."""
    theta = np.asarray(phase_argument(y, p))
    return _unwrap(np.sin(theta)), _unwrap(np.cos(theta))


def asymptotic_samples(y: float, p: CoulombParams) -> Tuple[WaveSample, WaveSample]:
    theta = float(phase_argument(y, p))
    rate = float(phase_rate(y, p))
    first = WaveSample(y=y, phi=math.sin(theta), dphi=rate * math.cos(theta))
    second = WaveSample(y=y, phi=math.cos(theta), dphi=-rate * math.sin(theta))
    return first, second


def indicial_exponent(p: CoulombParams, branch: Branch) -> float:
    return p.l_r + 1.0 if Branch(branch) is Branch.REGULAR else -p.l_r


def frobenius_start(p: CoulombParams, y: float, branch=Branch.REGULAR, tolerance=1e-10):
    """phi and phi' of the Frobenius solution y**s (1 + c1 y + c2 y**2 + ...) at y.

    c_n P(n) = k eps c_{n-1} - k**2 c_{n-2} with P(n) = (n+s)(n+s-1) - l_r(l_r+1).
    """
    if not y > 0:
        raise DomainError("Frobenius start needs y > 0")
    s = indicial_exponent(p, branch)
    centrifugal = p.l_r * (p.l_r + 1.0)
    c_prev2, c_prev = 0.0, 1.0
    phi = y ** s
    dphi = s * y ** (s - 1.0)
    largest = abs(phi)
    quiet = 0
    for n in range(1, FROBENIUS_MAX_TERMS + 1):
        indicial = (n + s) * (n + s - 1.0) - centrifugal
        if indicial == 0.0:
            raise DomainError(f"exponents differ by an integer for l_r={p.l_r}; the {branch} series has log terms")
        c_n = (p.k * p.eps * c_prev - p.k ** 2 * c_prev2) / indicial
        term = c_n * y ** (n + s)
        dterm = c_n * (n + s) * y ** (n + s - 1.0)
        phi += term
        dphi += dterm
        largest = max(largest, abs(term))
        c_prev2, c_prev = c_prev, c_n
        small = abs(term) <= 1e-17 * abs(phi) and abs(dterm) <= 1e-17 * abs(dphi)
        quiet = quiet + 1 if small else 0
        if quiet >= 2:
            break
    else:
        raise ToleranceError(f"Frobenius series at y={y:g} did not settle in {FROBENIUS_MAX_TERMS} terms")
    if largest > FROBENIUS_MAX_CANCELLATION * abs(phi) or largest * 1e-16 > tolerance * abs(phi):
        raise ToleranceError(f"Frobenius series at y={y:g} cancels beyond tolerance {tolerance:g}")
    return phi, dphi


def integrate_schrodinger(p: CoulombParams, y_start: float, y_end: float, branch=Branch.REGULAR,
                          tolerance=1e-10, y_eval=None) -> List[WaveSample]:
    """Solution of the Coulomb equation started from its Frobenius expansion at y_start.

    Samples come back on y_eval when given (dense output), otherwise at the
    integrator's own steps.
    """
    if not 0 < y_start < y_end:
        raise DomainError(f"need 0 < y_start < y_end, got [{y_start}, {y_end}]")
    phi0, dphi0 = frobenius_start(p, y_start, branch, tolerance)
    system = SystemFactory.get_system('linear', p)
    ys, states = system.solve(y_start, [phi0, dphi0], y_end, tolerance, y_eval)
    logger.debug("%s branch eps=%g k=%g: %d samples", Branch(branch).value, p.eps, p.k, len(ys))
    return [WaveSample(y=y, phi=phi, dphi=dphi) for y, (phi, dphi) in zip(ys, states)]


def wronskian(a: WaveSample, b: WaveSample) -> float:
    if not math.isclose(a.y, b.y, rel_tol=1e-12):
        raise MismatchedAbscissaError(f"samples at y={a.y} and y={b.y}")
    return a.phi * b.dphi - a.dphi * b.phi


def wronskian_profile(first: List[WaveSample], second: List[WaveSample]) -> np.ndarray:
    if len(first) != len(second):
        raise MismatchedAbscissaError(f"{len(first)} samples against {len(second)}")
    return np.array([wronskian(a, b) for a, b in zip(first, second)])
