from .zeros_oracle import (
    count_comparison,
    dump_zero_table,
    empirical_density,
    eta_terms,
    load_zero_table,
    riemann_siegel_z,
    scan_zeros,
    zero_count,
    zeta_critical,
)
