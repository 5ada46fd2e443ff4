from .base_solver import ODESystem
from .linear_system import LinearCoulombSystem
from .pinney_system import ErmakovPairSystem, PinneySystem


class SystemFactory:
    @staticmethod
    def get_system(kind, params, **options):
        systems = {
            'linear': LinearCoulombSystem,
            'pinney': PinneySystem,
            'ermakov': ErmakovPairSystem,
        }
        if kind not in systems:
            raise ValueError(f"Unsupported system {kind!r}. Supported systems are: {sorted(systems)}")
        return systems[kind](params, **options)
