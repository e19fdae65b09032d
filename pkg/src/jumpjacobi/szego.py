"""Szego functions of w_c and their boundary phases.

Branches follow one rule throughout: every fractional power and logarithm
is principal, so ``sqrt(z^2 - 1) = (z - 1)^{1/2} (z + 1)^{1/2}`` is positive
on (1, inf) and ``phi(z) = z + sqrt(z^2 - 1)`` maps the cut plane onto the
exterior of the unit disk.

Because ``log h(cos t) = sum_k c_k cos(k t)``, the conjugate function is the
sine series ``hbar(x) = 1/2 sum_{k>=1} c_k sin(k arccos x)`` and the Szego
function of h is ``exp(c_0/2 + sum_{k>=1} (c_k/2) phi^{-k})``.
"""

from dataclasses import dataclass
import math

import numpy as np

from .errors import DomainError
from .specfun import jump_lambda
from .quadrature import WeightSpec

BOUNDARY_EPS = 1e-9


def _interior(x):
    x = np.asarray(x, dtype=float)
    if np.any(~(np.abs(x) < 1)):
        raise DomainError("x must lie in (-1, 1)")
    return x


def _off_cut(z):
    z = np.asarray(z, dtype=complex)
    if np.any((z.imag == 0) & (np.abs(z.real) <= 1)):
        raise DomainError("z lies on the cut [-1, 1]")
    if not np.all(np.isfinite(z)):
        raise DomainError("non-finite z")
    return z


def _out(val, like):
    return val.item() if np.ndim(like) == 0 else val


def sqrt_z2m1(z):
    """sqrt(z^2 - 1) with the cut [-1, 1], positive on (1, inf)."""
    z = np.asarray(z, dtype=complex)
    return np.sqrt(z - 1) * np.sqrt(z + 1)


def phi(z):
    """Conformal map z + sqrt(z^2 - 1) of the cut plane onto |w| > 1."""
    z = np.asarray(z, dtype=complex)
    return z + sqrt_z2m1(z)


def hbar(spec, x):
    """Conjugate function of log h on (-1, 1).

    ``hbar(x) = 1/2 sum_{k>=1} c_k sin(k arccos x)``, the closed form of the
    principal-value integral for a finite cosine series.
    """
    xa = _interior(x)
    t = np.arccos(xa)
    out = np.zeros_like(t)
    for k, ck in enumerate(spec.logh_cheb[1:], start=1):
        if ck:
            out = out + 0.5 * ck * np.sin(k * t)
    return _out(out, x)


def szego_h(spec, z):
    """D(z, h) = exp(c_0/2 + sum_{k>=1} (c_k/2) phi(z)^{-k})."""
    zz = _off_cut(z)
    inv = 1.0 / phi(zz)
    acc = np.zeros_like(zz)
    power = np.ones_like(zz)
    for ck in spec.logh_cheb[1:]:
        power = power * inv
        if ck:
            acc = acc + 0.5 * ck * power
    return _out(np.exp(0.5 * spec.logh_cheb[0] + acc), z)


def szego_jump(c, z):
    """D(z, Xi_c) = c exp(-lambda log((1 - i sqrt(z^2 - 1)) / z))."""
    zz = _off_cut(z)
    if c == 1.0:
        return _out(np.ones_like(zz), z)
    lam = jump_lambda(c)
    arg = (1 - 1j * sqrt_z2m1(zz)) / zz
    return _out(c * np.exp(-lam * np.log(arg)), z)


def jacobi_factor(alpha, beta, z):
    """(z - 1)^{alpha/2} (z + 1)^{beta/2} / phi(z)^{(alpha + beta)/2}."""
    zz = np.asarray(z, dtype=complex)
    return (zz - 1) ** (alpha / 2) * (zz + 1) ** (beta / 2) / phi(zz) ** ((alpha + beta) / 2)


def szego_full(spec, z):
    """Szego function D(z, w_c) of the whole weight."""
    zz = _off_cut(z)
    val = szego_h(spec, zz) * jacobi_factor(spec.alpha, spec.beta, zz) * szego_jump(spec.c, zz)
    return _out(val, z)


def d_infinity(spec):
    """D(inf, w_c) = sqrt(c) exp(c_0/2) 2^{-(alpha+beta)/2}."""
    return math.sqrt(spec.c) * math.exp(0.5 * spec.logh_cheb[0]) * 2.0 ** (-(spec.alpha + spec.beta) / 2)


def d_infinity_limit(spec, radius=1e4):
    """D_inf from szego_full along the real axis, Richardson-extrapolated in 1/z."""
    vals = np.array([szego_full(spec, radius * 2.0**j) for j in range(4)])
    # eliminate the 1/z, 1/z^2, 1/z^3 terms
    for level in range(1, 4):
        f = 2.0**level
        vals = (f * vals[1:] - vals[:-1]) / (f - 1)
    return float(vals[0].real)


def phi_cap(spec, x):
    """Boundary phase of D(x + i0, w): pi alpha/2 - (alpha+beta)/2 arccos x - hbar(x)."""
    xa = _interior(x)
    val = math.pi * spec.alpha / 2 - 0.5 * (spec.alpha + spec.beta) * np.arccos(xa) - hbar(spec, xa)
    return _out(val, x)


def rho(spec, x):
    """The real phase rho(x) of the local asymptotics, continuous with rho(0) = 0."""
    xa = _interior(x)
    small = xa == 0
    safe = np.where(small, 1.0, xa)
    ratio = np.where(small, 1.0, np.arcsin(safe) / safe)
    lc = math.log(spec.c)
    val = (
        lc / math.pi * np.log(np.abs(0.5 * ratio * (1 + np.sqrt(1 - xa**2))))
        - 0.5 * (spec.alpha + spec.beta) * np.arcsin(xa)
        + hbar(spec, xa)
        - hbar(spec, 0.0)
    )
    val = np.where(small, 0.0, val)
    return _out(val, x)


def boundary_values(spec, x):
    """Closed-form D_+(x) and D_-(x) of D(., w_c) for x in (-1, 0) u (0, 1)."""
    xa = _interior(x)
    if np.any(xa == 0):
        raise DomainError("boundary values are singular at the jump x = 0")
    lc = math.log(spec.c)
    jump_phase = lc / math.pi * np.log(np.abs((1 + np.sqrt(1 - xa**2)) / xa))
    phase = phi_cap(spec, xa) - jump_phase
    amp = np.sqrt(spec.wc(xa))
    return _out(amp * np.exp(1j * phase), x), _out(amp * np.exp(-1j * phase), x)


def boundary_limit(func, x, eps=BOUNDARY_EPS, side=1):
    """Limit of ``func(x + i side eps)`` with one Richardson step in eps."""
    x = np.asarray(x, dtype=float)
    f1 = func(x + 1j * side * eps)
    f2 = func(x + 2j * side * eps)
    return 2 * np.asarray(f1) - np.asarray(f2)


@dataclass(frozen=True)
class SzegoData:
    spec: WeightSpec
    d_infinity: float
    hbar0: float


def szego_data(spec):
    return SzegoData(spec=spec, d_infinity=d_infinity(spec), hbar0=hbar(spec, 0.0))
