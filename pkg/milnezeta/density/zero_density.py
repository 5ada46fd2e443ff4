import numpy as np

from ..exceptions import DomainError
from ..models.schemas import DensityCurve, DensityKind
from ..specfun import digamma, riemann_siegel_theta

LOG_PI_OVER_2PI = np.log(np.pi) / (2.0 * np.pi)


def _unwrap(value):
    return value[()] if isinstance(value, np.ndarray) and value.ndim == 0 else value


def _finite(eps):
    eps = np.asarray(eps, dtype=float)
    if not np.all(np.isfinite(eps)):
        raise DomainError("eps must be finite")
    return eps


def _positive(eps):
    eps = _finite(eps)
    if np.any(eps <= 0):
        raise DomainError("eps must be positive")
    return eps


def _sech(x):
    # 2 e^-x / (1 + e^-2x) stays finite where cosh overflows
    e = np.exp(-np.abs(x))
    return 2.0 * e / (1.0 + e * e)


def _half_digamma_term(eps):
    return np.real(digamma(0.25 + 0.5j * eps)) / (2.0 * np.pi)


def riemann_zero_density(eps):
    """Smooth density of zeta zeros on the critical line.

    n_Z(eps) = -ln(pi)/(2 pi) + Re Psi(1/4 + i eps/2) / (2 pi).  Negative for
    small eps; no sign constraint is imposed.
    """
    eps = _finite(eps)
    return _unwrap(-LOG_PI_OVER_2PI + _half_digamma_term(eps))


def coulomb_phase_function(eps):
    """F(eps) = pi/2 - arctan(cosech(pi eps)), evaluated as the Gudermannian of pi eps."""
    eps = _positive(eps)
    return _unwrap(2.0 * np.arctan(np.tanh(0.5 * np.pi * eps)))


def coulomb_phase_derivative(eps):
    """F'(eps) = pi sech(pi eps)."""
    eps = _positive(eps)
    return _unwrap(np.pi * _sech(np.pi * eps))


def coulomb_density(eps):
    """n_C(eps) = -F'(eps)/(2 pi) + Re Psi(1/4 + i eps/2) / (2 pi)."""
    eps = _positive(eps)
    return _unwrap(-coulomb_phase_derivative(eps) / (2.0 * np.pi) + _half_digamma_term(eps))


def density_gap(eps):
    """n_C - n_Z; tends to ln(pi)/(2 pi) with an exponentially small correction."""
    eps = _positive(eps)
    return _unwrap(np.asarray(coulomb_density(eps)) - np.asarray(riemann_zero_density(eps)))


def smooth_zero_count(T):
    """Antiderivative of n_Z normalised like the smooth part of N(T): theta(T)/pi + 1."""
    T = np.asarray(T, dtype=float)
    if np.any(~(T > 0)):
        raise DomainError("T must be positive")
    return _unwrap(riemann_siegel_theta(T) / np.pi + 1.0)


_EVALUATORS = {
    DensityKind.ZETA: riemann_zero_density,
    DensityKind.COULOMB: coulomb_density,
}


def density_curve(epsilons, kind=DensityKind.ZETA) -> DensityCurve:
    kind = DensityKind(kind)
    if kind not in _EVALUATORS:
        raise DomainError(f"density_curve evaluates {[k.value for k in _EVALUATORS]}, not {kind.value}")
    epsilons = np.asarray(epsilons, dtype=float)
    values = np.atleast_1d(_EVALUATORS[kind](epsilons))
    return DensityCurve(epsilons=epsilons.tolist(), values=values.tolist(), kind=kind)


def density_table(epsilons):
    """Side-by-side n_Z, n_C and their gap as a DataFrame with columns eps,n_Z,n_C,gap."""
    import pandas as pd
    eps = np.atleast_1d(_positive(epsilons))
    n_z = np.atleast_1d(riemann_zero_density(eps))
    n_c = np.atleast_1d(coulomb_density(eps))
    return pd.DataFrame({'eps': eps, 'n_Z': n_z, 'n_C': n_c, 'gap': n_c - n_z})
