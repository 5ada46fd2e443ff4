from .hamiltonian import (
    ermakov_lewis_invariant,
    hamiltonian_flow,
    instantaneous_energy,
    integrate_ermakov_pair,
    invariant_drift,
    invariant_series,
)
