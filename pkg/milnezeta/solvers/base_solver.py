import logging
from abc import ABC, abstractmethod
from functools import wraps

import numpy as np

from ..exceptions import DomainError, ToleranceError
from ..models.schemas import CoulombParams

logger = logging.getLogger(__name__)

MIN_TOLERANCE = 1e-13
MAX_TOLERANCE = 1e-2
ATOL_SCALE = 1e-3


class ODESystem(ABC):
    """First-order system in the transformed coordinate y, integrated with DOP853."""

    method = 'DOP853'

    def __init__(self, params: CoulombParams, potential=None):
        self.params = params
        self.potential = potential

    def q(self, y):
        """Q(y) of the Coulomb equation, or the override potential."""
        if self.potential is not None:
            return self.potential(y)
        p = self.params
        return p.k ** 2 - p.k * p.eps / y - p.l_r * (p.l_r + 1.0) / (y * y)

    @abstractmethod
    def rhs(self, y, state):
        pass

    def events(self):
        return []

    def on_event(self, solution):
        """Called when a terminal event stopped the integration."""
        raise ToleranceError(f"{type(self).__name__} stopped at y={solution.t[-1]:.6g}")

    def with_tolerance(func):
        @wraps(func)
        def wrapper(self, y0, state0, y_end, tolerance=1e-10, y_eval=None):
            if not MIN_TOLERANCE <= tolerance <= MAX_TOLERANCE:
                raise ToleranceError(
                    f"tolerance {tolerance:g} outside achievable range [{MIN_TOLERANCE:g}, {MAX_TOLERANCE:g}]"
                )
            if not (y0 > 0 and y_end > 0):
                raise DomainError(f"integration interval [{y0}, {y_end}] must stay in y > 0")
            if y0 == y_end:
                raise DomainError("integration interval is empty")
            if y_eval is not None:
                y_eval = np.asarray(y_eval, dtype=float)
                lo, hi = min(y0, y_end), max(y0, y_end)
                if y_eval.size == 0 or y_eval.min() < lo or y_eval.max() > hi:
                    raise DomainError(f"evaluation grid must lie inside [{lo}, {hi}]")
            return func(self, y0, state0, y_end, tolerance, y_eval)
        return wrapper

    @with_tolerance
    def solve(self, y0, state0, y_end, tolerance=1e-10, y_eval=None):
        """Integrate from y0 to y_end; returns (ys, states) with states shaped (n, dim)."""
        from scipy.integrate import solve_ivp

        events = self.events()
        solution = solve_ivp(
            self.rhs,
            (y0, y_end),
            np.asarray(state0, dtype=float),
            method=self.method,
            t_eval=y_eval,
            rtol=tolerance,
            atol=tolerance * ATOL_SCALE,
            events=events or None,
        )
        if solution.status == 1:
            self.on_event(solution)
        if not solution.success:
            raise ToleranceError(f"{type(self).__name__}: {solution.message}")
        logger.debug("%s: %d rhs evaluations over [%g, %g]", type(self).__name__, solution.nfev, y0, y_end)
        return solution.t, solution.y.T
