"""Gauss-Jacobi rules and the jump-split composite rule for w_c.

The weight is

    w_c(x) = (1 - x)^alpha (1 + x)^beta h(x) Xi_c(x),   Xi_c = 1 on [-1, 0), c^2 on [0, 1],

with ``log h(cos t) = sum_k logh_cheb[k] cos(k t)``.
"""

from dataclasses import dataclass, field
from functools import lru_cache
import json
import math

import numpy as np
from numpy.polynomial import chebyshev
from scipy.linalg import eigh_tridiagonal
from scipy.special import gammaln

from .errors import ConvergenceError, DomainError

DEFAULT_NPTS = 256
MAX_NPTS = 4096


@dataclass(frozen=True)
class WeightSpec:
    """Parameters of the jump-modified Jacobi weight."""

    alpha: float = 0.0
    beta: float = 0.0
    c: float = 1.0
    logh_cheb: tuple = field(default=(0.0,))

    def __post_init__(self):
        object.__setattr__(self, "alpha", float(self.alpha))
        object.__setattr__(self, "beta", float(self.beta))
        object.__setattr__(self, "c", float(self.c))
        coefs = tuple(float(v) for v in np.atleast_1d(self.logh_cheb)) or (0.0,)
        object.__setattr__(self, "logh_cheb", coefs)
        if not self.alpha > -1 or not self.beta > -1:
            raise DomainError("alpha and beta must exceed -1")
        if not self.c > 0 or not math.isfinite(self.c):
            raise DomainError("c must be positive and finite")
        if not all(math.isfinite(v) for v in coefs):
            raise DomainError("logh_cheb must be finite")

    # -- the analytic factor h ------------------------------------------
    def log_h(self, x):
        return chebyshev.chebval(np.asarray(x, dtype=float), self.logh_cheb)

    def h(self, x):
        return np.exp(self.log_h(x))

    @property
    def h_is_trivial(self):
        return all(v == 0.0 for v in self.logh_cheb)

    @property
    def is_symmetric(self):
        """True when w_1 is even: alpha == beta and h has only even Chebyshev modes."""
        return self.alpha == self.beta and all(v == 0.0 for v in self.logh_cheb[1::2])

    def w1(self, x):
        """The weight without the jump, (1-x)^alpha (1+x)^beta h(x)."""
        x = np.asarray(x, dtype=float)
        return (1 - x) ** self.alpha * (1 + x) ** self.beta * self.h(x)

    def wc(self, x):
        x = np.asarray(x, dtype=float)
        return self.w1(x) * np.where(x >= 0, self.c**2, 1.0)

    def with_c(self, c):
        return WeightSpec(self.alpha, self.beta, c, self.logh_cheb)

    # -- JSON ------------------------------------------------------------
    def to_dict(self):
        return {
            "alpha": self.alpha,
            "beta": self.beta,
            "c": self.c,
            "logh_cheb": list(self.logh_cheb),
        }

    @classmethod
    def from_dict(cls, data):
        unknown = set(data) - {"alpha", "beta", "c", "logh_cheb"}
        if unknown:
            raise DomainError(f"unknown WeightSpec fields: {sorted(unknown)}")
        return cls(
            alpha=data.get("alpha", 0.0),
            beta=data.get("beta", 0.0),
            c=data.get("c", 1.0),
            logh_cheb=tuple(data.get("logh_cheb", (0.0,))),
        )

    def to_json(self):
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text):
        return cls.from_dict(json.loads(text))


@dataclass(frozen=True)
class QuadratureRule:
    nodes: np.ndarray
    weights: np.ndarray
    exactness_degree: int

    def __call__(self, f):
        return np.dot(self.weights, f(self.nodes))


def jacobi_recurrence(n, alpha, beta):
    """Monic recurrence data of the Jacobi weight (1-x)^alpha (1+x)^beta.

    Returns ``(b, a_sq, mu0)`` with ``b[k]`` for k = 0..n-1 and ``a_sq[k-1]``
    the coefficient a_k^2 for k = 1..n-1.
    """
    k = np.arange(n, dtype=float)
    s = alpha + beta
    b = np.empty(n)
    b[0] = (beta - alpha) / (s + 2.0)
    kk = k[1:]
    b[1:] = (beta**2 - alpha**2) / ((2 * kk + s) * (2 * kk + s + 2))
    a_sq = np.empty(max(n - 1, 0))
    if n > 1:
        a_sq[0] = 4 * (1 + alpha) * (1 + beta) / ((2 + s) ** 2 * (3 + s))
        kk = k[2:]
        num = 4 * kk * (kk + alpha) * (kk + beta) * (kk + s)
        den = (2 * kk + s) ** 2 * (2 * kk + s + 1) * (2 * kk + s - 1)
        a_sq[1:] = num / den
    mu0 = math.exp((s + 1) * math.log(2.0) + gammaln(alpha + 1) + gammaln(beta + 1) - gammaln(s + 2))
    return b, a_sq, mu0


_FULL_EIG_MAX = 4096
_EIG_BLOCK = 1024


@lru_cache(maxsize=64)
def _gauss_jacobi_cached(n, alpha, beta):
    b, a_sq, mu0 = jacobi_recurrence(n, alpha, beta)
    off = np.sqrt(a_sq)
    try:
        if n <= _FULL_EIG_MAX:
            nodes, vecs = eigh_tridiagonal(b, off, lapack_driver="stemr")
            weights = mu0 * vecs[0] ** 2
        else:
            # blocks of eigenvectors keep memory at O(n * block)
            nodes = np.empty(n)
            weights = np.empty(n)
            for lo in range(0, n, _EIG_BLOCK):
                hi = min(lo + _EIG_BLOCK, n) - 1
                vals, vecs = eigh_tridiagonal(b, off, select="i", select_range=(lo, hi))
                nodes[lo : hi + 1] = vals
                weights[lo : hi + 1] = mu0 * vecs[0] ** 2
    except np.linalg.LinAlgError as exc:  # pragma: no cover - LAPACK failure
        raise ConvergenceError("tridiagonal eigen-iteration did not converge") from exc
    if alpha == beta:
        # enforce the reflection symmetry the eigensolver only keeps to rounding
        nodes = 0.5 * (nodes - nodes[::-1])
        weights = 0.5 * (weights + weights[::-1])
    nodes.setflags(write=False)
    weights.setflags(write=False)
    return nodes, weights


def gauss_jacobi(n, alpha, beta):
    """n-point Gauss rule for (1-x)^alpha (1+x)^beta on [-1, 1] (Golub-Welsch)."""
    n = int(n)
    if n < 1:
        raise DomainError("n must be at least 1")
    if not alpha > -1 or not beta > -1:
        raise DomainError("alpha and beta must exceed -1")
    nodes, weights = _gauss_jacobi_cached(n, float(alpha), float(beta))
    return QuadratureRule(nodes, weights, 2 * n - 1)


@lru_cache(maxsize=32)
def _composite_cached(spec, npts):
    left = gauss_jacobi(npts, 0.0, spec.beta)
    right = gauss_jacobi(npts, spec.alpha, 0.0)
    # [-1, 0]: x = (t - 1)/2, 1 + x = (1 + t)/2
    xl = (left.nodes - 1.0) / 2.0
    wl = left.weights * 2.0 ** (-spec.beta - 1.0) * (1.0 - xl) ** spec.alpha * spec.h(xl)
    # [0, 1]: x = (t + 1)/2, 1 - x = (1 - t)/2
    xr = (right.nodes + 1.0) / 2.0
    wr = right.weights * 2.0 ** (-spec.alpha - 1.0) * (1.0 + xr) ** spec.beta * spec.h(xr)
    wr = wr * spec.c**2
    nodes = np.concatenate([xl, xr])
    weights = np.concatenate([wl, wr])
    nodes.setflags(write=False)
    weights.setflags(write=False)
    return nodes, weights


def composite_rule(spec, npts=DEFAULT_NPTS):
    """Discrete measure (nodes, weights) reproducing integrals against w_c.

    Each half of [-1, 1] gets an ``npts``-point Gauss-Jacobi rule carrying the
    endpoint exponent of its outer end; the smooth remaining factors of the
    weight are folded into the weights.
    """
    return _composite_cached(spec, int(npts))


def integrate_wc(spec, f, npts=DEFAULT_NPTS, rtol=1e-13, atol=1e-300):
    """Integral of ``f`` against w_c, refined by doubling ``npts``.

    Raises
    ------
    ConvergenceError
        If successive doublings still disagree at ``MAX_NPTS``.
    """
    m = int(npts)
    x, w = composite_rule(spec, m)
    prev = np.dot(w, f(x))
    while m < MAX_NPTS:
        m *= 2
        x, w = composite_rule(spec, m)
        cur = np.dot(w, f(x))
        if abs(cur - prev) <= rtol * abs(cur) + atol:
            return cur
        prev = cur
    raise ConvergenceError(f"integral did not converge with {MAX_NPTS} nodes per half")
