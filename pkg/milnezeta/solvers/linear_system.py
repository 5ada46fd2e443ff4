import numpy as np

from .base_solver import ODESystem


class LinearCoulombSystem(ODESystem):
    """phi'' + Q(y) phi = 0 as the canonical pair q' = p, p' = -Q(y) q."""

    def rhs(self, y, state):
        q, p = state
        return np.array([p, -self.q(y) * q])
