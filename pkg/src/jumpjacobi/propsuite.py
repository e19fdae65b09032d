"""Executable checks of the structural properties of 1F1(ia; 1; ix).

Each check returns a :class:`CheckResult` so the CLI and the tests can share
the same numbers.
"""

from dataclasses import dataclass
import math

import numpy as np

from .specfun import arg_f1, frak_g, kummer_m

SEED = 20240611


@dataclass(frozen=True)
class CheckResult:
    name: str
    a: float
    value: float
    threshold: float
    passed: bool


def no_real_zeros(a, half_width=50.0, npts=10_000, floor=1e-10):
    """min |1F1(ia; 1; ix)| over a uniform grid must stay above ``floor``."""
    x = np.linspace(-half_width, half_width, npts)
    val = float(np.min(np.abs(kummer_m(1j * a, 1j * x))))
    return CheckResult("no_real_zeros", a, val, floor, val > floor)


def hermite_biehler(a, npts=200, seed=SEED):
    """max |1F1(1+ia; 1; iz)| / |1F1(ia; 1; iz)| over random z with Im z > 0.

    The ratio must be strictly below 1.
    """
    rng = np.random.default_rng(seed)
    z = rng.uniform(-10, 10, npts) + 1j * rng.uniform(0.05, 5, npts)
    ratio = np.abs(kummer_m(1 + 1j * a, 1j * z)) / np.abs(kummer_m(1j * a, 1j * z))
    val = float(np.max(ratio))
    return CheckResult("hermite_biehler", a, val, 1.0, val < 1.0)


def phase_monotone(a, half_width=40.0, step=1e-3):
    """min increment of frak_g on a uniform grid; must be positive."""
    n = int(round(2 * half_width / step)) + 1
    x = np.linspace(-half_width, half_width, n)
    val = float(np.min(np.diff(frak_g(a, x))))
    return CheckResult("phase_monotone", a, val, 0.0, val > 0.0)


def ode_residual(a, npts=100, h=1e-5, tol=1e-6):
    """max |x y' - a (cos(x - 2y) - 1)| with y' from central differences."""
    x = np.linspace(-10, 10, npts + 1)
    x = x[x != 0][:npts]
    y = arg_f1(a, x)
    dy = (arg_f1(a, x + h) - arg_f1(a, x - h)) / (2 * h)
    val = float(np.max(np.abs(x * dy - a * (np.cos(x - 2 * y) - 1))))
    return CheckResult("ode_residual", a, val, tol, val < tol)


def y_sign_structure(a, half_width=20.0, npts=401):
    """sgn(a) y must be non-positive, increasing for x < 0 and decreasing for x > 0.

    The reported value is the worst violation, which must not exceed 0.
    """
    x = np.linspace(-half_width, half_width, npts)
    y = math.copysign(1.0, a) * arg_f1(a, x)
    neg = x <= 0
    pos = x >= 0
    viol = max(
        float(np.max(y)),
        float(-np.min(np.diff(y[neg]))),
        float(np.max(np.diff(y[pos]))),
    )
    return CheckResult("y_sign_structure", a, viol, 0.0, viol <= 1e-14)


def run_suite(a_values):
    """All checks for every ``a`` in ``a_values`` (each nonzero)."""
    out = []
    for a in a_values:
        a = float(a)
        out.extend(
            [
                no_real_zeros(a),
                hermite_biehler(a),
                phase_monotone(a),
                ode_residual(a),
                y_sign_structure(a),
            ]
        )
    return out
