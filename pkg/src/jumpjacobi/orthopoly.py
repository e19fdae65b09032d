"""Orthogonal polynomials for w_c built from quadrature.

The recurrence coefficients come from a discretized Stieltjes procedure on
the composite jump-split rule; everything else (evaluation, zeros, the
Christoffel-Darboux kernel) is driven by the resulting table.  Monic
polynomials satisfy

    P_{n+1}(z) = (z - b_n) P_n(z) - a_n^2 P_{n-1}(z),

and the orthonormal ones are p_n = k_n P_n with
k_n = 1 / (sqrt(mu0) a_1 ... a_n).
"""

from dataclasses import dataclass, field
from functools import lru_cache
import math

import numpy as np
from numpy.polynomial import chebyshev
from scipy.linalg import eigvalsh_tridiagonal

from . import kernels
from .errors import ConvergenceError, DomainError, OrthogonalityError
from .quadrature import DEFAULT_NPTS, MAX_NPTS, WeightSpec, composite_rule

DEFECT_TARGET = 1e-8
DEFECT_LIMIT = 1e-6
COEF_TOL = 1e-13


@dataclass(frozen=True)
class RecurrenceTable:
    """Recurrence data of w_c with quadrature provenance.

    Attributes
    ----------
    mu0 : float
        Total mass of the weight.
    a_sq : ndarray
        ``a_sq[n-1] = a_n^2`` for n = 1..n_max.
    b : ndarray
        ``b[n] = b_n`` for n = 0..n_max-1.
    n_max : int
    quad_npts : int
        Nodes per half of the composite rule that produced the table.
    defect : float
        Orthonormality defect measured on a finer rule.
    """

    mu0: float
    a_sq: np.ndarray
    b: np.ndarray
    n_max: int
    quad_npts: int
    spec: WeightSpec = field(default_factory=WeightSpec)
    defect: float = 0.0

    @property
    def a(self):
        return np.sqrt(self.a_sq)

    def check_degree(self, n):
        n = int(n)
        if n < 0 or n > self.n_max:
            raise IndexError(f"degree {n} outside table range 0..{self.n_max}")
        return n

    def log_kn(self, n):
        """log k_n."""
        n = self.check_degree(n)
        return -0.5 * math.log(self.mu0) - 0.5 * float(np.sum(np.log(self.a_sq[:n])))

    def kn(self, n):
        """Leading coefficient of the orthonormal polynomial p_n."""
        return math.exp(self.log_kn(n))


@dataclass(frozen=True)
class ZeroSet:
    n: int
    zeros: np.ndarray


def _freeze(*arrays):
    for arr in arrays:
        arr.setflags(write=False)


def orthonormal_values(table, n, x):
    """Rows p_0(x), ..., p_n(x) as an array of shape ``(n + 1,) + x.shape``."""
    n = table.check_degree(n)
    x = np.asarray(x, dtype=float)
    a = table.a
    out = np.empty((n + 1,) + x.shape)
    out[0] = 1.0 / math.sqrt(table.mu0)
    prev = np.zeros_like(x)
    for k in range(n):
        a_k = a[k - 1] if k > 0 else 0.0
        nxt = ((x - table.b[k]) * out[k] - a_k * prev) / a[k]
        prev = out[k]
        out[k + 1] = nxt
    return out


def orthonormality_defect(table, npts=None):
    """max |<p_i, p_j> - delta_ij| over i, j <= n_max on an independent rule."""
    m = npts or 2 * table.quad_npts
    x, w = composite_rule(table.spec, m)
    vals = orthonormal_values(table, table.n_max, x)
    gram = (vals * w) @ vals.T
    return float(np.max(np.abs(gram - np.eye(table.n_max + 1))))


def _stieltjes_on_rule(spec, n_max, m):
    x, w = composite_rule(spec, m)
    b, a_sq = kernels.stieltjes(x, w, n_max)
    return float(np.sum(w)), np.asarray(b), np.asarray(a_sq)


@lru_cache(maxsize=32)
def _build_cached(spec, n_max, npts):
    m = max(int(npts), n_max + 16)
    if 2 * m > MAX_NPTS:
        raise ConvergenceError(f"degree {n_max} needs more than {MAX_NPTS} nodes per half")
    mu0, b, a_sq = _stieltjes_on_rule(spec, n_max, m)
    while True:
        if 2 * m > MAX_NPTS:
            raise ConvergenceError(
                f"recurrence coefficients did not settle below {MAX_NPTS} nodes per half"
            )
        mu0_2, b2, a_sq2 = _stieltjes_on_rule(spec, n_max, 2 * m)
        change = max(np.max(np.abs(b2 - b)), np.max(np.abs(a_sq2 - a_sq)))
        m *= 2
        mu0, b, a_sq = mu0_2, b2, a_sq2
        if change <= COEF_TOL:
            break
    if np.any(a_sq <= 0) or not np.all(np.isfinite(a_sq)):
        raise OrthogonalityError("non-positive a_n^2 from the Stieltjes procedure")
    _freeze(b, a_sq)
    table = RecurrenceTable(mu0=mu0, a_sq=a_sq, b=b, n_max=n_max, quad_npts=m, spec=spec)
    defect = orthonormality_defect(table)
    if defect > DEFECT_LIMIT:
        raise OrthogonalityError(f"orthonormality defect {defect:.2e} exceeds {DEFECT_LIMIT}")
    object.__setattr__(table, "defect", defect)
    return table


def build_recurrence(spec, n_max, npts=DEFAULT_NPTS):
    """Recurrence coefficients of w_c up to degree ``n_max``.

    The Stieltjes procedure is run on composite rules of doubling size until
    two successive tables agree to ``COEF_TOL``.

    Raises
    ------
    ConvergenceError
        If the coefficients do not settle within ``MAX_NPTS`` nodes per half.
    OrthogonalityError
        If the orthonormality defect exceeds ``DEFECT_LIMIT``.
    """
    n_max = int(n_max)
    if n_max < 1:
        raise DomainError("n_max must be at least 1")
    return _build_cached(spec, n_max, int(npts))


def _scalar_or_array(val, like):
    return val.item() if np.ndim(like) == 0 else val


def eval_monic(table, n, z):
    """Monic P_n(z) by forward recurrence."""
    n = table.check_degree(n)
    p, _, _ = kernels.recurrence_eval(table.b, table.a_sq, n, z)
    return _scalar_or_array(p, z)


def eval_monic_with_derivative(table, n, z):
    n = table.check_degree(n)
    p, _, dp = kernels.recurrence_eval(table.b, table.a_sq, n, z)
    return _scalar_or_array(p, z), _scalar_or_array(dp, z)


def eval_orthonormal(table, n, x):
    """Orthonormal p_n(x) = k_n P_n(x)."""
    n = table.check_degree(n)
    vals = orthonormal_values(table, n, np.atleast_1d(np.asarray(x, dtype=float)))[n]
    return _scalar_or_array(vals, x)


def zeros(table, n):
    """Zeros of P_n as eigenvalues of the Jacobi matrix, polished by one Newton step."""
    n = table.check_degree(n)
    if n < 1:
        raise DomainError("P_0 has no zeros")
    try:
        x = eigvalsh_tridiagonal(table.b[:n], np.sqrt(table.a_sq[: n - 1]))
    except np.linalg.LinAlgError as exc:  # pragma: no cover
        raise ConvergenceError("Jacobi matrix eigenvalues did not converge") from exc
    p, _, dp = kernels.recurrence_eval(table.b, table.a_sq, n, x)
    x = np.sort(x - p / dp)
    _freeze(x)
    return ZeroSet(n, x)


def cd_kernel(table, n, x, y):
    """Christoffel-Darboux kernel K_n(x, y) = sum_{k<n} p_k(x) p_k(y)."""
    n = table.check_degree(n)
    x, y = np.broadcast_arrays(np.asarray(x, dtype=float), np.asarray(y, dtype=float))
    scalar = x.ndim == 0
    x = np.atleast_1d(x)
    y = np.atleast_1d(y)
    px = orthonormal_values(table, n, x)
    py = orthonormal_values(table, n, y)
    direct = np.sum(px[:n] * py[:n], axis=0)
    d = x - y
    far = np.abs(d) > 1e-6
    out = direct
    if np.any(far) and n >= 1:
        a_n = math.sqrt(table.a_sq[n - 1])
        num = px[n] * py[n - 1] - py[n] * px[n - 1]
        out = np.where(far, a_n * num / np.where(far, d, 1.0), direct)
    return float(out[0]) if scalar else out


def _chebyshev_moments(spec, count, npts=DEFAULT_NPTS):
    # moments of the monic Chebyshev polynomials 2^{1-k} T_k against w_c
    scale = np.array([1.0] + [2.0 ** (1 - k) for k in range(1, count)])
    m = npts
    x, w = composite_rule(spec, m)
    prev = scale * (w @ chebyshev.chebvander(x, count - 1))
    while 2 * m <= MAX_NPTS:
        m *= 2
        x, w = composite_rule(spec, m)
        cur = scale * (w @ chebyshev.chebvander(x, count - 1))
        if np.max(np.abs(cur - prev)) <= 1e-14 * abs(cur[0]):
            return cur
        prev = cur
    raise ConvergenceError("modified moments did not converge")


def modified_chebyshev(spec, n):
    """Recurrence data ``(b, a_sq, mu0)`` from modified Chebyshev moments.

    Independent of the Stieltjes path: the only shared ingredient is the
    composite rule used for the moments.
    """
    mom = _chebyshev_moments(spec, 2 * n)
    aux_b = np.array([0.0, 0.5] + [0.25] * (2 * n))
    alpha = np.zeros(n)
    beta = np.zeros(n)
    sig_prev = np.zeros(2 * n)
    sig = mom.copy()
    alpha[0] = mom[1] / mom[0]
    beta[0] = mom[0]
    for k in range(1, n):
        new = np.zeros(2 * n)
        for ell in range(k, 2 * n - k):
            new[ell] = (
                sig[ell + 1]
                - alpha[k - 1] * sig[ell]
                - beta[k - 1] * sig_prev[ell]
                + aux_b[ell] * sig[ell - 1]
            )
        alpha[k] = new[k + 1] / new[k] - sig[k] / sig[k - 1]
        beta[k] = new[k] / sig[k - 1]
        sig_prev, sig = sig, new
    return alpha, beta[1:], beta[0]


def oracle_cross_check(spec, n_small):
    """max over n of |delta a_n| + |delta b_n| between the two constructions."""
    n_small = int(n_small)
    if not 1 <= n_small <= 30:
        raise DomainError("n_small must lie in 1..30")
    table = build_recurrence(spec, n_small)
    b_mc, a_sq_mc, _ = modified_chebyshev(spec, n_small)
    db = np.abs(b_mc - table.b[:n_small])
    da = np.zeros(n_small)
    da[1:] = np.abs(np.sqrt(a_sq_mc) - np.sqrt(table.a_sq[: n_small - 1]))
    return float(np.max(da + db))
