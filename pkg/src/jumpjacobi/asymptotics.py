"""Large-n predictions for the orthogonal polynomials of w_c.

Every formula is driven by the phase

    theta_n = 2 (eta_n - arg Gamma(lambda)),   lambda = i log(c) / pi,
    eta_n   = (log c / pi) log(4n) + n pi / 2 + (beta - alpha) pi / 4 + hbar(0),

with ``arg Gamma`` the principal value in (-pi, pi].  Together with the
sign of ``upsilon(c)`` this choice makes the local formulas continuous
across c = 1, where theta_n = 2 eta_n + pi.

``order`` selects the leading term (0) or the leading term with its first
1/n correction (1).
"""

from dataclasses import dataclass
import cmath
import math

import numpy as np

from .errors import DomainError
from .specfun import arg_gamma, g_func, g_prime, jump_lambda, log_c_over_c2m1, upsilon
from .szego import d_infinity, hbar, phi, rho, sqrt_z2m1, szego_full

OUTER_MIN_DIST = 0.1
DIAGONAL_SWITCH = 1e-6


@dataclass(frozen=True)
class PhaseParams:
    lam: complex
    eta_n: float
    theta_n: float
    n: int


@dataclass(frozen=True)
class AsymptoticPrediction:
    value: complex
    order: int
    n: int


def _check_order(order):
    if order not in (0, 1):
        raise DomainError("order must be 0 or 1")
    return order


def _check_n(n):
    n = int(n)
    if n < 1:
        raise DomainError("n must be at least 1")
    return n


def eta(spec, n):
    lc = math.log(spec.c)
    return (
        lc / math.pi * math.log(4 * n)
        + n * math.pi / 2
        + (spec.beta - spec.alpha) * math.pi / 4
        + hbar(spec, 0.0)
    )


def theta(spec, n):
    """The phase theta_n."""
    n = _check_n(n)
    e = eta(spec, n)
    if spec.c == 1.0:
        return 2 * (e + math.pi / 2)
    return 2 * (e - arg_gamma(jump_lambda(spec.c)))


def phases(spec, n):
    n = _check_n(n)
    lam = jump_lambda(spec.c)
    return PhaseParams(lam=lam, eta_n=eta(spec, n), theta_n=theta(spec, n), n=n)


# -- away from the interval ---------------------------------------------------


def _check_outer_z(z):
    z = complex(z)
    x = min(max(z.real, -1.0), 1.0)
    if abs(z - x) < OUTER_MIN_DIST:
        raise DomainError(f"z must stay at distance >= {OUTER_MIN_DIST} from [-1, 1]")
    return z


def h_correction(spec, n, z):
    """The 1/n coefficient H_n(z) of the outer asymptotics."""
    z = complex(z)
    f = complex(phi(z))
    lc = math.log(spec.c)
    th = theta(spec, n)
    a2 = 4 * spec.alpha**2 - 1
    b2 = 4 * spec.beta**2 - 1
    out = -a2 / (8 * (f - 1)) + b2 / (8 * (f + 1))
    if lc:
        out -= lc / (2 * math.pi * z * f) * (math.cos(th) * f + math.sin(th) - lc / math.pi)
    return out


def outer_prediction(spec, n, z, order=1):
    """Prediction of 2^n P_n(z) / phi(z)^n off the interval."""
    n = _check_n(n)
    order = _check_order(order)
    z = _check_outer_z(z)
    f = complex(phi(z))
    # phi^{1/2} / (sqrt(2) (z^2-1)^{1/4}) with phi / sqrt(z^2-1) = 1 + z / sqrt(z^2-1)
    amp = cmath.sqrt(f / (2 * complex(sqrt_z2m1(z))))
    val = d_infinity(spec) / complex(szego_full(spec, z)) * amp
    if order:
        val *= 1 + h_correction(spec, n, z) / n
    return val


# -- recurrence data ----------------------------------------------------------


def recurrence_prediction(spec, n):
    """Predicted (a_n, b_n)."""
    n = _check_n(n)
    lc = math.log(spec.c)
    if lc == 0.0:
        return 0.5, 0.0
    th = theta(spec, n)
    return 0.5 - lc / (2 * math.pi * n) * math.sin(th), -lc / (math.pi * n) * math.cos(th)


def magnus_prediction(alpha, beta, gamma, x0, A, B, n):
    """Conjectured (a_n, b_n) for a weight with a jump B -> A and |x0 - x|^gamma at x0.

    Parameters
    ----------
    alpha, beta, gamma : float
        Exponents at 1, -1 and x0, all > -1.
    x0 : float
        Location of the singularity, in (-1, 1).
    A, B : float
        Weight factors on [x0, 1] and [-1, x0).
    n : int
    """
    if not (A > 0 and B > 0):
        raise DomainError("A and B must be positive")
    if min(alpha, beta, gamma) <= -1:
        raise DomainError("alpha, beta and gamma must exceed -1")
    if not -1 < x0 < 1:
        raise DomainError("x0 must lie in (-1, 1)")
    n = _check_n(n)
    t0 = math.acos(x0)
    mu = math.log(B / A) / (2 * math.pi)
    big_m = 0.5 * math.hypot(gamma / 2, mu) * math.sin(t0)
    if big_m == 0.0:
        return 0.5, 0.0
    w = complex(gamma / 2, mu)
    phase_tilde = (
        (alpha + gamma / 2) * math.pi
        - (alpha + beta + gamma) * t0
        - 2 * arg_gamma(w)
        - cmath.phase(w)
    )
    drift = 2 * mu * math.log(4 * n * math.sin(t0))
    a_n = 0.5 - big_m / n * math.cos(2 * n * t0 - drift - phase_tilde)
    b_n = -2 * big_m / n * math.cos((2 * n + 1) * t0 - drift - phase_tilde)
    return a_n, b_n


def leading_coeff_prediction(spec, n, order=1):
    """Predicted leading coefficient k_n of the orthonormal polynomial."""
    n = _check_n(n)
    order = _check_order(order)
    val = 2.0**n / (math.sqrt(math.pi) * d_infinity(spec))
    if order:
        lc = math.log(spec.c)
        corr = (2 * spec.alpha**2 + 2 * spec.beta**2 - 1) / 8
        if lc:
            corr += lc / (2 * math.pi) * (lc / math.pi + math.sin(theta(spec, n + 1)))
        val *= 1 - corr / n
    return val


# -- near the jump --------------------------------------------------------------


def r_correction(spec, n, x):
    """The 1/n coefficient R_n(x) of the local asymptotics, x != 0."""
    th = theta(spec, n)
    lc = math.log(spec.c)
    e = cmath.exp(1j * math.acos(x))
    out = -(4 * spec.alpha**2 - 1) / (8 * (e - 1)) + (4 * spec.beta**2 - 1) / (8 * (e + 1))
    if lc:
        out -= lc / (2 * math.pi * x * e) * (math.cos(th) * e + math.sin(th) - lc / math.pi)
        rh = rho(spec, x)
        out += (
            1j * lc / (2 * math.pi * math.asin(x))
            * (lc / math.pi + cmath.exp(-1j * (2 * rh + th + math.acos(x))))
        )
    return out


def _r_near_zero(spec, n, x, cut=1e-4):
    # the 1/x and 1/arcsin(x) terms cancel at 0; interpolate across the removable point
    if abs(x) >= cut:
        return r_correction(spec, n, x)
    lo = r_correction(spec, n, -cut)
    hi = r_correction(spec, n, cut)
    return lo + (x + cut) / (2 * cut) * (hi - lo)


def _local_amplitude(spec, n, x):
    w1 = float(spec.w1(x))
    return (
        d_infinity(spec)
        / (2.0 ** (n - 0.5) * math.sqrt(spec.c * w1))
        * upsilon(spec.c)
        / (1 - x * x) ** 0.25
    )


def local_prediction(spec, n, x, order=1):
    """Prediction of P_n(x) for x near the jump."""
    n = _check_n(n)
    order = _check_order(order)
    x = float(x)
    if abs(x) > 0.5:
        raise DomainError("local asymptotics are evaluated for |x| <= 0.5")
    lam = jump_lambda(spec.c)
    th = theta(spec, n)
    asx = math.asin(x)
    inner = cmath.exp(1j * (float(rho(spec, x)) + (th - math.pi - asx) / 2))
    inner *= g_func(lam, 2j * n * asx)
    if order:
        inner *= 1 + _r_near_zero(spec, n, x) / n
    return _local_amplitude(spec, n, x) * inner.real


def local_envelope(spec, n, x):
    """Modulus of the bracket in the local formula times its prefactor.

    Used to measure relative errors where P_n itself may vanish.
    """
    n = _check_n(n)
    x = float(x)
    lam = jump_lambda(spec.c)
    return abs(_local_amplitude(spec, n, x)) * abs(g_func(lam, 2j * n * math.asin(x)))


def scaled_local_prediction(spec, n, x):
    """Prediction of P_n(pi x / n) from the scaled limit."""
    n = _check_n(n)
    x = float(x)
    if abs(x) > 4:
        raise DomainError("scaled local asymptotics are evaluated for |x| <= 4")
    th = theta(spec, n)
    lam = jump_lambda(spec.c)
    pref = d_infinity(spec) * upsilon(spec.c) / (2.0 ** (n - 0.5) * math.sqrt(spec.c * float(spec.h(0.0))))
    return pref * (cmath.exp(0.5j * th) * g_func(lam, 2j * math.pi * x)).imag


def scaled_local_envelope(spec, n, x):
    th_free = d_infinity(spec) * abs(upsilon(spec.c)) / (2.0 ** (n - 0.5) * math.sqrt(spec.c * float(spec.h(0.0))))
    return th_free * abs(g_func(jump_lambda(spec.c), 2j * math.pi * float(x)))


# -- limiting kernel ----------------------------------------------------------


def k_infty(spec, x, y):
    """Scaling limit of (pi/n) K_n(pi x/n, pi y/n) at the jump."""
    x = float(x)
    y = float(y)
    if max(abs(x), abs(y)) > 4:
        raise DomainError("k_infty is evaluated for |x|, |y| <= 4")
    h0 = float(spec.h(0.0))
    d = x - y
    if spec.c == 1.0:
        if abs(d) < DIAGONAL_SWITCH:
            return 1.0 / h0
        return math.sin(math.pi * d) / (math.pi * d) / h0
    lam = jump_lambda(spec.c)
    q = log_c_over_c2m1(spec.c)
    if abs(d) < DIAGONAL_SWITCH:
        m = 0.5 * (x + y)
        zeta = 2j * math.pi * m
        bracket = g_prime(1 + lam, zeta) * g_func(lam, zeta) - g_func(1 + lam, zeta) * g_prime(lam, zeta)
        return 2 / h0 * q * bracket.real
    prod = g_func(1 + lam, 2j * math.pi * x) * g_func(lam, 2j * math.pi * y)
    return 2 / (math.pi * d * h0) * q * prod.imag


def de_branges_E(spec, z):
    """E(z) = (2 log c / (h(0) (c^2 - 1)))^{1/2} G(lambda; 2 pi i z)."""
    if spec.c == 1.0:
        raise DomainError("de_branges_E is defined for c != 1")
    h0 = float(spec.h(0.0))
    scale = math.sqrt(2 / h0 * log_c_over_c2m1(spec.c))
    return scale * g_func(jump_lambda(spec.c), 2j * math.pi * complex(z))


def de_branges_kernel(spec, x, y):
    """Reproducing kernel (i/2pi)(E(x) E(y)^* - E(x^*)^* E(y^*)) / (x - y^*)."""
    x = complex(x)
    y = complex(y)
    ex = de_branges_E(spec, x)
    ey = de_branges_E(spec, y)
    exc = de_branges_E(spec, x.conjugate())
    eyc = de_branges_E(spec, y.conjugate())
    num = ex * ey.conjugate() - exc.conjugate() * eyc
    return 1j / (2 * math.pi) * num / (x - y.conjugate())


def reproducing_check(spec, x, y):
    """|K(x, conj y) - k_infty(x, y)| for real x != y."""
    val = de_branges_kernel(spec, x, complex(y).conjugate())
    return abs(val - k_infty(spec, x, y))
