"""Zeros of P_n next to the jump.

Zeros are indexed as ``... < x_{-1} < 0 <= x_0 < x_1 < ...``.  In the
scaled variable ``n x / pi`` they approach the points zeta_k solving

    frak_g(2 pi zeta_k) / (2 pi) = {theta_n / (2 pi)} + k,

with frak_g taken at ``a = log(c) / pi``.  For c != 1 the spacings next to
the origin differ from 1, so the usual clock behavior fails there.
"""

from dataclasses import dataclass
import math

import numpy as np

from .asymptotics import theta
from .errors import DomainError
from .orthopoly import build_recurrence, zeros
from .specfun import SERIES_CAP, arg_f1, invert_frak_g

QUASI_CLOCK_MARGIN = 1e-6


@dataclass(frozen=True)
class SpacingReport:
    """Normalized spacings around the jump for one degree.

    ``actual[i]`` is ``n/pi (x_k - x_{k-1})`` and ``predicted[i]`` is
    ``zeta_k - zeta_{k-1}`` for ``k = ks[i]``; ``reconstructed`` is the same
    gap rebuilt from the phase y, and ``deviations`` is actual minus predicted.
    Entries whose zeta lies beyond the series cap are NaN.
    """

    n: int
    ks: np.ndarray
    actual: np.ndarray
    predicted: np.ndarray
    reconstructed: np.ndarray
    deviations: np.ndarray


@dataclass(frozen=True)
class DensityReport:
    n_list: np.ndarray
    values: np.ndarray
    t: float
    contained: bool

    @property
    def coverage(self):
        """Fraction of [0, t] spanned by the observed values."""
        return float((self.values.max() - self.values.min()) / self.t)


def _a_of(spec):
    return math.log(spec.c) / math.pi


def enumerate_local_zeros(table, n, k_min, k_max):
    """Zeros x_k of P_n for k_min <= k <= k_max, with x_{-1} < 0 <= x_0.

    Returns
    -------
    ks : ndarray of int
    xs : ndarray of float
    """
    xs = zeros(table, n).zeros
    i0 = int(np.searchsorted(xs, 0.0, side="left"))
    ks = np.arange(int(k_min), int(k_max) + 1)
    idx = i0 + ks
    if idx.size and (idx.min() < 0 or idx.max() >= xs.size):
        raise DomainError(f"k range [{k_min}, {k_max}] exceeds the zeros of P_{n}")
    return ks, xs[idx]


def _zeta(a, frac, k):
    target = 2 * math.pi * (frac + k)
    return invert_frak_g(a, target) / (2 * math.pi)


def predicted_zeros(spec, n, k_min, k_max):
    """The points zeta_k^{(n)}, k_min <= k <= k_max."""
    th = theta(spec, n)
    frac = (th / (2 * math.pi)) % 1.0
    a = _a_of(spec)
    ks = range(int(k_min), int(k_max) + 1)
    if a == 0.0:
        return np.array([frac + k for k in ks])
    return np.array([_zeta(a, frac, k) for k in ks])


def density_endpoint(spec):
    """t with frak_g(2 pi t) = 2 pi, the right end of the x_0 accumulation set."""
    return invert_frak_g(_a_of(spec), 2 * math.pi) / (2 * math.pi)


def spacing_report(spec, table, n, k_range):
    """Actual and predicted normalized spacings for k in ``k_range`` (inclusive pair)."""
    k_lo, k_hi = int(k_range[0]), int(k_range[1])
    ks, xs = enumerate_local_zeros(table, n, k_lo - 1, k_hi)
    scaled = n / math.pi * xs
    actual = np.diff(scaled)
    a = _a_of(spec)
    frac = (theta(spec, n) / (2 * math.pi)) % 1.0
    zeta = np.full(ks.size, np.nan)
    for i, k in enumerate(ks):
        # stay inside the series cap for 2 pi zeta
        if 2 * math.pi * (abs(k) + 2) + 2 * math.pi * abs(a) + 1 <= SERIES_CAP:
            zeta[i] = frac + k if a == 0.0 else _zeta(a, frac, k)
    predicted = np.diff(zeta)
    ok = np.isfinite(zeta)
    y = np.full(ks.size, np.nan)
    if ok.any():
        y[ok] = arg_f1(a, 2 * math.pi * zeta[ok])
    reconstructed = 1 + np.diff(y) / math.pi
    return SpacingReport(
        n=int(n),
        ks=ks[1:],
        actual=actual,
        predicted=predicted,
        reconstructed=reconstructed,
        deviations=actual - predicted,
    )


def x0_density_experiment(spec, n_list, table=None):
    """The values n x_0^{(n)} / pi together with the endpoint t."""
    if spec.c == 1.0:
        raise DomainError("the density experiment needs c != 1")
    n_arr = np.asarray(sorted(set(int(n) for n in n_list)))
    if table is None:
        table = build_recurrence(spec, int(n_arr.max()))
    vals = np.empty(n_arr.size)
    for i, n in enumerate(n_arr):
        _, xs = enumerate_local_zeros(table, n, 0, 0)
        vals[i] = n * xs[0] / math.pi
    t = density_endpoint(spec)
    return DensityReport(n_list=n_arr, values=vals, t=t, contained=bool(np.all(vals <= t + 0.01)))


def quasi_clock_gaps(spec, n, k_min, k_max):
    """Consecutive predicted gaps and whether neighbors differ by the margin.

    Returns
    -------
    gaps : ndarray
        zeta_k - zeta_{k-1} for k_min < k <= k_max.
    unequal : ndarray of bool
        ``|gap_{k+1} - gap_k| > QUASI_CLOCK_MARGIN``.
    """
    z = predicted_zeros(spec, n, k_min, k_max)
    gaps = np.diff(z)
    return gaps, np.abs(np.diff(gaps)) > QUASI_CLOCK_MARGIN
