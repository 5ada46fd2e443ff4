import numpy as np

from ..exceptions import AmplitudeCollapseError
from .base_solver import ODESystem

RHO_FLOOR = 1e-8


class PinneySystem(ODESystem):
    """rho'' + Q(y) rho = q_const / rho**3, state (rho, rho')."""

    rho_index = 0

    def __init__(self, params, q_const=None, potential=None):
        super().__init__(params, potential=potential)
        self.q_const = params.k ** 2 if q_const is None else q_const

    def rhs(self, y, state):
        rho, drho = state
        return np.array([drho, -self.q(y) * rho + self.q_const / rho ** 3])

    def events(self):
        index = self.rho_index

        def collapse(y, state):
            return state[index] - RHO_FLOOR
        collapse.terminal = True
        collapse.direction = -1
        return [collapse]

    def on_event(self, solution):
        raise AmplitudeCollapseError(solution.t[-1], solution.y[self.rho_index, -1])


class ErmakovPairSystem(PinneySystem):
    """The canonical pair (q, p) integrated together with its Pinney amplitude (rho, rho')."""

    rho_index = 2

    def rhs(self, y, state):
        q, p, rho, drho = state
        big_q = self.q(y)
        return np.array([p, -big_q * q, drho, -big_q * rho + self.q_const / rho ** 3])
