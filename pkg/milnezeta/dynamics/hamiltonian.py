"""Canonical form of the Coulomb equation with y as the Hamiltonian time.

q' = p, p' = -Q(y) q is non-autonomous, so 1/2 p**2 + 1/2 Q q**2 is not
conserved.  Paired with a Pinney amplitude rho it conserves the Ermakov-Lewis
invariant I = 1/2 [c (q/rho)**2 + (rho p - rho' q)**2].
"""
import logging
import math
from typing import List, Tuple

import numpy as np

from ..coulomb import effective_potential
from ..exceptions import DomainError, MismatchedAbscissaError
from ..models.schemas import CoulombParams, MilneSample, PhaseState
from ..solvers import SystemFactory

logger = logging.getLogger(__name__)


def hamiltonian_flow(initial: PhaseState, p: CoulombParams, y_end: float, tolerance=1e-10,
                     y_eval=None) -> List[PhaseState]:
    """Trajectory of (q, p) from initial.y to y_end; y_end < initial.y runs time backwards."""
    system = SystemFactory.get_system('linear', p)
    ys, states = system.solve(initial.y, [initial.q, initial.p], y_end, tolerance, y_eval)
    return [PhaseState(y=y, q=q, p=mom) for y, (q, mom) in zip(ys, states)]


def ermakov_lewis_invariant(state: PhaseState, amp: MilneSample, q_const: float) -> float:
    if not math.isclose(state.y, amp.y, rel_tol=1e-12):
        raise MismatchedAbscissaError(f"state at y={state.y}, amplitude at y={amp.y}")
    ratio = state.q / amp.rho
    canonical = amp.rho * state.p - amp.drho * state.q
    return 0.5 * (q_const * ratio ** 2 + canonical ** 2)


def integrate_ermakov_pair(initial: PhaseState, rho0: float, drho0: float, p: CoulombParams,
                           y_end: float, q_const=None, tolerance=1e-10,
                           y_eval=None, potential=None) -> List[Tuple[PhaseState, MilneSample]]:
    """Flow and Pinney amplitude integrated as one system, sharing every step.

    potential replaces Q(y) in both equations when given.
    """
    if not rho0 > 0:
        raise DomainError(f"rho0 must be positive, got {rho0}")
    system = SystemFactory.get_system('ermakov', p, q_const=q_const, potential=potential)
    ys, states = system.solve(initial.y, [initial.q, initial.p, rho0, drho0], y_end, tolerance, y_eval)
    return [
        (PhaseState(y=y, q=q, p=mom), MilneSample.from_amplitude(y, rho, drho))
        for y, (q, mom, rho, drho) in zip(ys, states)
    ]


def invariant_series(pairs, q_const: float) -> np.ndarray:
    return np.array([ermakov_lewis_invariant(state, amp, q_const) for state, amp in pairs])


def invariant_drift(pairs, q_const: float) -> float:
    """max |I(y) - I(y0)| / |I(y0)| along a joint trajectory."""
    values = invariant_series(pairs, q_const)
    if values[0] == 0:
        return float(np.max(np.abs(values)))
    return float(np.max(np.abs(values - values[0])) / abs(values[0]))


def instantaneous_energy(state: PhaseState, p: CoulombParams) -> float:
    """1/2 p**2 + 1/2 Q(y) q**2, which drifts because Q depends on y."""
    return 0.5 * state.p ** 2 + 0.5 * float(effective_potential(state.y, p)) * state.q ** 2
