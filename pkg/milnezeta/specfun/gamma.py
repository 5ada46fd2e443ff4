"""Gamma-family functions of a complex argument.

log Gamma and digamma are evaluated by pushing Re z above SHIFT_THRESHOLD with
the upward recurrence and then summing the Stirling series.  Every logarithm in
the recurrence has a positive real part when Re z > 0, so the imaginary part of
log Gamma is the analytically continued phase rather than a principal value.
"""
import numpy as np

from ..exceptions import DomainError, GammaOverflowError, PoleError

SHIFT_THRESHOLD = 10.0
MAX_IMAG = 1e4

# B_2, B_4, ..., B_20
_BERNOULLI = np.array([
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
])
_ORDERS = 2.0 * np.arange(1, len(_BERNOULLI) + 1)
# log Gamma series: B_2m / (2m (2m - 1) w^(2m-1))
_LOG_GAMMA_COEFFS = _BERNOULLI / (_ORDERS * (_ORDERS - 1.0))
# digamma series: B_2m / (2m w^(2m))
_DIGAMMA_COEFFS = _BERNOULLI / _ORDERS
_HALF_LOG_2PI = 0.5 * np.log(2.0 * np.pi)


def _checked(z):
    z = np.asarray(z, dtype=np.complex128)
    if not np.all(np.isfinite(z)):
        raise DomainError("gamma-family argument must be finite")
    if np.any(np.abs(z.imag) > MAX_IMAG):
        raise GammaOverflowError(f"|Im z| exceeds the supported range {MAX_IMAG:g}")
    on_pole = (z.imag == 0) & (z.real <= 0) & (z.real == np.round(z.real))
    if np.any(on_pole):
        raise PoleError(f"gamma has a pole at {z[on_pole].ravel()[0].real:g}")
    return z


def _shift_counts(z):
    return np.maximum(0, np.ceil(SHIFT_THRESHOLD - z.real)).astype(np.int64)


def _series(coeffs, winv, winv2):
    acc = np.zeros_like(winv)
    for c in coeffs[::-1]:
        acc = acc * winv2 + c
    return acc * winv


def _unwrap(value):
    return value[()] if isinstance(value, np.ndarray) and value.ndim == 0 else value


def log_gamma(z):
    """log Gamma(z), continuous along vertical lines in the right half plane."""
    z = _checked(z)
    shifts = _shift_counts(z)
    correction = np.zeros_like(z)
    for j in range(int(shifts.max(initial=0))):
        correction += np.where(j < shifts, np.log(z + j), 0.0)
    w = z + shifts
    winv = 1.0 / w
    stirling = (w - 0.5) * np.log(w) - w + _HALF_LOG_2PI
    stirling += _series(_LOG_GAMMA_COEFFS, winv, winv * winv)
    return _unwrap(stirling - correction)


def digamma(z):
    """Psi(z) = Gamma'(z)/Gamma(z)."""
    z = _checked(z)
    shifts = _shift_counts(z)
    correction = np.zeros_like(z)
    for j in range(int(shifts.max(initial=0))):
        correction += np.where(j < shifts, 1.0 / (z + j), 0.0)
    w = z + shifts
    winv = 1.0 / w
    winv2 = winv * winv
    value = np.log(w) - 0.5 * winv - _series(_DIGAMMA_COEFFS, winv2, winv2)
    return _unwrap(value - correction)


def arg_gamma(z):
    """Continuous phase of Gamma(z) for Re z > 0."""
    z = np.asarray(z, dtype=np.complex128)
    if np.any(z.real <= 0):
        raise DomainError("arg_gamma needs Re z > 0")
    return _unwrap(np.asarray(log_gamma(z)).imag)


def riemann_siegel_theta(t):
    """theta(t) = arg Gamma(1/4 + it/2) - (t/2) ln(pi)."""
    t = np.asarray(t, dtype=float)
    return _unwrap(arg_gamma(0.25 + 0.5j * t) - 0.5 * t * np.log(np.pi))
