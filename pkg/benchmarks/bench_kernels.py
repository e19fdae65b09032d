"""Time the compiled kernels against their numpy twin.

Usage::

    python benchmarks/bench_kernels.py [--repeat 5]

Each kernel is run on the same inputs under both backends; the table lists
the best wall time of ``repeat`` runs and the speedup of the compiled path.
"""

import argparse
import sys
import timeit

import numpy as np

from jumpjacobi import kernels
from jumpjacobi.quadrature import WeightSpec, composite_rule


def _cases():
    z_line = 1j * np.linspace(-50.0, 50.0, 2001)
    x_grid = np.linspace(-0.99, 0.99, 4001)
    rng = np.random.default_rng(0)
    b = rng.uniform(-0.05, 0.05, 520)
    a_sq = rng.uniform(0.24, 0.26, 520)
    nodes, weights = composite_rule(WeightSpec(0.3, -0.2, 2.0, (0.1, 0.4)), 1024)
    return {
        "hyp1f1_series (2001 pts on iR)": lambda m: m.hyp1f1_series(0.22j, 1, z_line),
        "recurrence_eval (n=512, 4001 pts)": lambda m: m.recurrence_eval(b, a_sq, 512, x_grid),
        "stieltjes (2048 nodes, 400 terms)": lambda m: m.stieltjes(nodes, weights, 400),
    }


def run(repeat=5):
    """Return rows ``(name, t_python, t_compiled)``; ``t_compiled`` is None without the extension."""
    python = kernels.get_backend("python")
    try:
        compiled = kernels.get_backend("compiled")
    except ImportError:
        compiled = None
    rows = []
    for name, call in _cases().items():
        t_py = min(timeit.repeat(lambda: call(python), number=1, repeat=repeat))
        t_c = None
        if compiled is not None:
            t_c = min(timeit.repeat(lambda: call(compiled), number=1, repeat=repeat))
        rows.append((name, t_py, t_c))
    return rows


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args(argv)
    rows = run(args.repeat)
    print(f"active backend: {kernels.BACKEND}")
    print(f"{'kernel':<36}{'python [ms]':>14}{'compiled [ms]':>16}{'speedup':>10}")
    for name, t_py, t_c in rows:
        if t_c is None:
            print(f"{name:<36}{1e3 * t_py:>14.2f}{'n/a':>16}{'':>10}")
        else:
            print(f"{name:<36}{1e3 * t_py:>14.2f}{1e3 * t_c:>16.2f}{t_py / t_c:>9.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
