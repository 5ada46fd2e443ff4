from .milne_function import (
    ALPHA_FLOOR,
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
