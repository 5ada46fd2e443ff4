from .coulomb_wave import (
    Branch,
    asymptotic_pair,
    asymptotic_samples,
    coulomb_phase,
    effective_potential,
    frobenius_start,
    indicial_exponent,
    integrate_schrodinger,
    phase_argument,
    phase_rate,
    wronskian,
    wronskian_profile,
)
