"""Special functions behind the local asymptotics at the jump.

Complex log-gamma, the Kummer function 1F1(a; b; z) for b in {1, 2}, the
entire function G(a; z) = 1F1(a; 1; z) exp(-z/2), the continuous phase
y(x) = arg 1F1(ia; 1; ix) and the strictly increasing phase
frak_g(x) = x - 2 y(x).

Error model for ``kummer_m``: the Taylor series is summed in double-double
arithmetic, so the relative error is roughly ``S * k * 2**-104 / |M|`` where
``S`` is the sum of the term moduli (about ``exp(|z|)`` for imaginary ``z``)
and ``k`` the number of terms.  For ``|z| <= 50`` and ``|a| <= 1`` this stays
below 1e-11; at the cap ``|z| = 60`` it degrades to about 1e-8 for ``|a| ~ 3``.
"""

import cmath
import math

import numpy as np
from scipy.optimize import brentq

from . import kernels
from .errors import DomainError, ConvergenceError

SERIES_CAP = 60.0

_LANCZOS_G = 7.0
_LANCZOS_COEF = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
_HALF_LOG_2PI = 0.5 * math.log(2.0 * math.pi)


def log_gamma(z):
    """Logarithm of the gamma function for complex ``z``.

    Lanczos approximation (g = 7, nine terms) for ``Re z >= 1/2`` and the
    reflection formula otherwise.  The imaginary part is the continuous
    branch for ``Re z >= 1/2``; ``exp(log_gamma(z))`` equals ``Gamma(z)``
    everywhere off the poles.
    """
    z = complex(z)
    if z.imag == 0.0 and z.real <= 0.0 and z.real == math.floor(z.real):
        raise DomainError(f"log_gamma has a pole at z = {z.real:g}")
    if z.real < 0.5:
        # Gamma(z) Gamma(1 - z) = pi / sin(pi z)
        return math.log(math.pi) - cmath.log(cmath.sin(math.pi * z)) - log_gamma(1.0 - z)
    z -= 1.0
    acc = _LANCZOS_COEF[0]
    for k in range(1, len(_LANCZOS_COEF)):
        acc += _LANCZOS_COEF[k] / (z + k)
    t = z + _LANCZOS_G + 0.5
    return _HALF_LOG_2PI + (z + 0.5) * cmath.log(t) - t + cmath.log(acc)


def gamma(z):
    """Complex gamma function, ``exp(log_gamma(z))``."""
    return cmath.exp(log_gamma(z))


def arg_gamma(z):
    """Principal argument of Gamma(z), in (-pi, pi]."""
    return cmath.phase(gamma(z))


def jump_lambda(c):
    """The purely imaginary exponent ``i log(c) / pi``."""
    if c <= 0:
        raise DomainError("c must be positive")
    return 1j * math.log(c) / math.pi


def tau_lambda(c):
    """Unimodular ratio Gamma(-lambda) / Gamma(lambda); -1 at c = 1."""
    if c <= 0:
        raise DomainError("c must be positive")
    if c == 1.0:
        return -1.0 + 0.0j
    lam = jump_lambda(c)
    return cmath.exp(log_gamma(-lam) - log_gamma(lam))


def _as_array(z):
    arr = np.asarray(z, dtype=complex)
    return arr, arr.ndim == 0


def kummer_m(a, z, b=1):
    """Kummer's function 1F1(a; b; z) for ``b`` in {1, 2}.

    Parameters
    ----------
    a : complex
    z : complex or array_like
        Must satisfy ``|z| <= SERIES_CAP``.
    b : {1, 2}

    Raises
    ------
    DomainError
        If any ``|z|`` exceeds the series cap.
    """
    if b not in (1, 2):
        raise DomainError("only b = 1 and b = 2 are supported")
    zz, scalar = _as_array(z)
    if zz.size and np.max(np.abs(zz)) > SERIES_CAP:
        raise DomainError(
            f"|z| = {np.max(np.abs(zz)):.3g} exceeds the series cap {SERIES_CAP}; "
            "rescale the argument or reduce n*delta"
        )
    if not np.all(np.isfinite(zz)):
        raise DomainError("non-finite argument")
    vals, _ = kernels.hyp1f1_series(complex(a), int(b), zz.ravel())
    vals = vals.reshape(zz.shape)
    return complex(vals) if scalar else vals


def g_func(a, zeta):
    """G(a; zeta) = 1F1(a; 1; zeta) exp(-zeta / 2)."""
    zz, scalar = _as_array(zeta)
    out = kummer_m(a, zz) * np.exp(-zz / 2)
    return complex(out) if scalar else out


def g_prime(a, zeta):
    """Derivative of G(a; zeta) with respect to zeta."""
    a = complex(a)
    zz, scalar = _as_array(zeta)
    m = kummer_m(a, zz)
    dm = a * kummer_m(a + 1.0, zz, b=2)
    out = (dm - 0.5 * m) * np.exp(-zz / 2)
    return complex(out) if scalar else out


def _phase_on_ray(a, xs):
    # xs sorted by |x| on one side of the origin, xs[0] == 0
    return np.unwrap(np.angle(kummer_m(1j * a, 1j * xs)))


def arg_f1(a, x, step=None):
    """Continuous branch of y(x) = arg 1F1(ia; 1; ix) with y(0) = 0.

    The phase is tracked by marching from the origin on a grid fine enough
    that consecutive arguments differ by less than pi/2; the grid is refined
    until this holds.
    """
    a = float(a)
    xarr = np.asarray(x, dtype=float)
    scalar = xarr.ndim == 0
    xflat = xarr.ravel()
    if not np.all(np.isfinite(xflat)):
        raise DomainError("non-finite x")
    if xflat.size and np.max(np.abs(xflat)) > SERIES_CAP:
        raise DomainError(f"|x| exceeds the series cap {SERIES_CAP}")
    out = np.zeros_like(xflat)
    if a == 0.0:
        return float(out[0]) if scalar else out.reshape(xarr.shape)
    h = step if step is not None else 0.05 / max(1.0, abs(a))
    for sign in (1.0, -1.0):
        mask = sign * xflat > 0
        if not mask.any():
            continue
        targets = sign * xflat[mask]
        top = targets.max()
        while True:
            grid = np.union1d(np.arange(0.0, top, h), targets)
            if grid[0] != 0.0:
                grid = np.concatenate(([0.0], grid))
            phase = _phase_on_ray(a, sign * grid)
            if grid.size < 2 or np.max(np.abs(np.diff(phase))) < np.pi / 2:
                break
            h /= 2.0
            if h < 1e-7:
                raise ConvergenceError("phase unwrapping failed to resolve arg 1F1")
        idx = np.searchsorted(grid, targets)
        out[mask] = phase[idx]
    return float(out[0]) if scalar else out.reshape(xarr.shape)


def frak_g(a, x):
    """Strictly increasing phase x - 2 arg 1F1(ia; 1; ix), zero at x = 0."""
    xarr = np.asarray(x, dtype=float)
    out = xarr - 2.0 * arg_f1(a, xarr)
    return float(out) if xarr.ndim == 0 else out


def invert_frak_g(a, target, tol=1e-10):
    """Solve frak_g(a, x) = target for x.

    The initial bracket ``target -/+ (2 pi |a| + 1)`` is widened geometrically
    when it does not enclose the root.
    """
    a = float(a)
    target = float(target)
    if not math.isfinite(target):
        raise DomainError("target must be finite")
    if target == 0.0:
        return 0.0
    if a == 0.0:
        return target
    width = 2.0 * math.pi * abs(a) + 1.0
    lo, hi = target - width, target + width
    f = lambda t: frak_g(a, t) - target
    for _ in range(40):
        lo = max(lo, -SERIES_CAP)
        hi = min(hi, SERIES_CAP)
        flo, fhi = f(lo), f(hi)
        if flo <= 0.0 <= fhi:
            break
        if lo <= -SERIES_CAP and hi >= SERIES_CAP:
            raise DomainError("bracket for frak_g inversion exceeds the series cap")
        width *= 2.0
        lo, hi = target - width, target + width
    else:
        raise DomainError("could not bracket the frak_g inversion")
    root = brentq(f, lo, hi, xtol=1e-14, rtol=4 * np.finfo(float).eps, maxiter=200)
    if abs(f(root)) > tol:
        raise ConvergenceError(f"frak_g inversion residual {abs(f(root)):.2e} above {tol}")
    return root


def upsilon(c):
    """sgn(log c) sqrt(2 c log c / (c^2 - 1)), with value 1 at c = 1."""
    if c <= 0:
        raise DomainError("c must be positive")
    if c == 1.0:
        return 1.0
    lc = math.log(c)
    # 2c log c / (c^2 - 1) == log c / sinh(log c), stable near c = 1
    return math.copysign(math.sqrt(lc / math.sinh(lc)), lc)


def log_c_over_c2m1(c):
    """log(c) / (c^2 - 1), continued by 1/2 at c = 1."""
    if c == 1.0:
        return 0.5
    lc = math.log(c)
    return lc / math.sinh(lc) / (2.0 * c)
