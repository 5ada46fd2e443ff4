from .zero_density import (
    LOG_PI_OVER_2PI,
    coulomb_density,
    coulomb_phase_derivative,
    coulomb_phase_function,
    density_curve,
    density_gap,
    density_table,
    riemann_zero_density,
    smooth_zero_count,
)
