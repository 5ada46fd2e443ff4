"""Ordinates of zeta zeros on the critical line, as empirical ground truth.

zeta(1/2 + it) comes from the alternating eta series with Borwein's
convergence acceleration; sign changes of the Riemann-Siegel Z function on a
fine t grid are refined by bisection.
"""
import io
import logging
import math
from functools import lru_cache

import numpy as np

from ..density import smooth_zero_count
from ..exceptions import (
    DomainError,
    EmptyTableError,
    MonotonicityError,
    ScanRangeError,
    ZeroTableError,
    ZeroTableParseError,
)
from ..models.schemas import DensityCurve, DensityKind, ZeroTable
from ..specfun import riemann_siegel_theta

logger = logging.getLogger(__name__)

SCAN_START = 1.0
MIN_SCAN_T = 10.0
MAX_SCAN_T = 200.0
MAX_GRID_STEP = 0.05
REFINE_XTOL = 1e-8
CHUNK = 1024
# Borwein's error bound shrinks like (3 + sqrt 8)**-n against growth exp(pi |t|)
_LOG_RATE = math.log(3.0 + math.sqrt(8.0))
_EXTRA_DIGITS = 40.0


def eta_terms(t_max: float) -> int:
    return int(math.ceil((math.pi * abs(t_max) + _EXTRA_DIGITS) / _LOG_RATE))


@lru_cache(maxsize=32)
def _eta_weights(n: int) -> np.ndarray:
    """(-1)**k (1 - d_k / d_n), k < n, with d_k = n sum_{i<=k} (n+i-1)! 4**i / ((n-i)! (2i)!)."""
    i = np.arange(n + 1)
    log_terms = np.array([
        math.lgamma(n + j) - math.lgamma(n - j + 1) - math.lgamma(2 * j + 1) + j * math.log(4.0)
        for j in i
    ])
    terms = np.exp(log_terms - log_terms.max())
    # tail[k] = sum_{i > k} terms[i], so 1 - d_k/d_n = tail[k] / total without cancellation
    tail = np.cumsum(terms[::-1])[::-1]
    weights = np.append(tail[1:], 0.0)[:n] / tail[0]
    signs = np.where(np.arange(n) % 2 == 0, 1.0, -1.0)
    return signs * weights


def zeta_critical(t):
    """zeta(1/2 + it) for real t."""
    t = np.asarray(t, dtype=float)
    flat = t.ravel()
    out = np.empty(flat.shape, dtype=np.complex128)
    for start in range(0, flat.size, CHUNK):
        chunk = flat[start:start + CHUNK]
        n = eta_terms(np.max(np.abs(chunk)))
        logs = np.log(np.arange(1, n + 1, dtype=float))
        s = 0.5 + 1j * chunk
        eta = np.exp(-np.outer(s, logs)) @ _eta_weights(n)
        out[start:start + CHUNK] = eta / (1.0 - np.exp((1.0 - s) * math.log(2.0)))
    out = out.reshape(t.shape)
    return out[()] if out.ndim == 0 else out


def riemann_siegel_z(t):
    """Z(t) = exp(i theta(t)) zeta(1/2 + it), real for real t."""
    t = np.asarray(t, dtype=float)
    value = np.asarray(np.real(np.exp(1j * np.asarray(riemann_siegel_theta(t))) * zeta_critical(t)))
    return value[()] if value.ndim == 0 else value


def _check_scan(T_max, grid_step):
    if not MIN_SCAN_T <= T_max <= MAX_SCAN_T:
        raise ScanRangeError(f"T_max={T_max} outside the supported window [{MIN_SCAN_T:g}, {MAX_SCAN_T:g}]")
    if not 0 < grid_step <= MAX_GRID_STEP:
        raise ScanRangeError(f"grid_step={grid_step} must lie in (0, {MAX_GRID_STEP:g}]")


def scan_zeros(T_max: float, grid_step: float = 0.01, cache=None) -> ZeroTable:
    """Zeros 1/2 + it with SCAN_START < t <= T_max located by sign changes of Z(t)."""
    from scipy.optimize import bisect

    _check_scan(T_max, grid_step)
    if cache is not None:
        cached = cache.get_cached_table(T_max, grid_step)
        if cached is not None:
            logger.info("Using cached zero table for T_max=%g, step=%g", T_max, grid_step)
            return cached
    points = int(math.ceil((T_max - SCAN_START) / grid_step)) + 1
    ts = np.linspace(SCAN_START, T_max, points)
    values = riemann_siegel_z(ts)
    brackets = np.nonzero(np.sign(values[:-1]) * np.sign(values[1:]) < 0)[0]
    ordinates = [
        bisect(lambda x: float(riemann_siegel_z(x)), ts[i], ts[i + 1], xtol=REFINE_XTOL)
        for i in brackets
    ]
    logger.info("Found %d zeros up to T=%g", len(ordinates), T_max)
    table = ZeroTable(ordinates=ordinates)
    if cache is not None:
        cache.cache_table(T_max, grid_step, table)
    return table


def load_zero_table(source) -> ZeroTable:
    """Parse one decimal ordinate per line; '#' lines and blank lines are skipped."""
    ordinates = []
    for line_number, raw in enumerate(source, start=1):
        try:
            line = raw.decode('utf-8') if isinstance(raw, bytes) else raw
        except UnicodeDecodeError:
            raise ZeroTableParseError(line_number, raw) from None
        line = line.strip()
        if not line or line.startswith('#'):
            continue
        try:
            value = float(line)
        except ValueError:
            raise ZeroTableParseError(line_number, line) from None
        if not math.isfinite(value):
            raise ZeroTableParseError(line_number, line)
        if value <= 1:
            raise ZeroTableError(f"line {line_number}: ordinate {value!r} must exceed 1")
        if ordinates and value <= ordinates[-1]:
            raise MonotonicityError(line_number, ordinates[-1], value)
        ordinates.append(value)
    return ZeroTable(ordinates=ordinates)


def dump_zero_table(table: ZeroTable, sink) -> int:
    """Write the table in the load_zero_table format; returns bytes written."""
    text = io.StringIO()
    text.write("# ordinates t of zeta zeros 1/2 + it\n")
    for t in table.ordinates:
        text.write(f"{t:.12g}\n")
    payload = text.getvalue().encode('utf-8')
    sink.write(payload)
    return len(payload)


def empirical_density(table: ZeroTable, window: float) -> DensityCurve:
    """Zeros inside a window of the given length centred on each ordinate, per unit t."""
    if not window > 0:
        raise DomainError(f"window must be positive, got {window}")
    if not table.ordinates:
        raise EmptyTableError("empirical density needs at least one zero")
    t = np.asarray(table.ordinates)
    left = np.searchsorted(t, t - 0.5 * window, side='left')
    right = np.searchsorted(t, t + 0.5 * window, side='right')
    return DensityCurve(epsilons=t.tolist(), values=((right - left) / window).tolist(),
                        kind=DensityKind.ZETA_EMPIRICAL)


def zero_count(table: ZeroTable, T: float) -> int:
    return int(np.searchsorted(np.asarray(table.ordinates), T, side='right'))


def count_comparison(table: ZeroTable, probes=(20.0, 50.0, 100.0)):
    """Smooth count against the tabulated count at each probe height."""
    import pandas as pd
    probes = np.asarray(probes, dtype=float)
    smooth = np.atleast_1d(smooth_zero_count(probes))
    counted = np.array([zero_count(table, T) for T in probes])
    return pd.DataFrame({
        'T': probes,
        'smooth_count': smooth,
        'empirical_count': counted,
        'difference': counted - smooth,
    })
