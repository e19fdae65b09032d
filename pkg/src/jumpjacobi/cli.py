"""Command-line front end.

Every subcommand prints one table (CSV or JSON) preceded by a provenance
record.  Exit status: 0 success, 2 a failed check in ``props``, 64 bad
configuration, 70 numerical failure.
"""

import argparse
from dataclasses import dataclass, field
import json
import math
import sys

import numpy as np

from . import __version__
from .asymptotics import (
    k_infty,
    leading_coeff_prediction,
    local_envelope,
    local_prediction,
    outer_prediction,
    recurrence_prediction,
    scaled_local_envelope,
    scaled_local_prediction,
)
from .errors import ConvergenceError, DomainError
from .kernels import BACKEND
from .orthopoly import build_recurrence, cd_kernel, eval_monic
from .propsuite import run_suite
from .quadrature import DEFAULT_NPTS, WeightSpec
from .szego import boundary_values, hbar, phi, phi_cap, rho
from .zerolab import enumerate_local_zeros, predicted_zeros, spacing_report

EXIT_OK = 0
EXIT_FAILED_CHECK = 2
EXIT_CONFIG = 64
EXIT_NUMERIC = 70

COMMANDS = ("recur", "outer", "local", "kernel", "zeros", "szego", "props")
DEFAULT_N = (32, 45, 64, 91, 128, 181, 256)


class ConfigError(Exception):
    pass


@dataclass
class RunConfig:
    spec: WeightSpec
    command: str
    n_list: list = field(default_factory=lambda: list(DEFAULT_N))
    x: list = field(default_factory=list)
    y: list = field(default_factory=list)
    z: list = field(default_factory=list)
    out_path: str = "-"
    format: str = "csv"
    tol: float = 1e-12
    npts: int = DEFAULT_NPTS
    k_min: int = -5
    k_max: int = 5
    scaled: bool = False

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise ConfigError(f"unknown command {self.command!r}")
        if self.format not in ("csv", "json"):
            raise ConfigError("format must be csv or json")
        if not self.tol > 0:
            raise ConfigError("tol must be positive")
        if self.command not in ("szego", "props") and not self.n_list:
            raise ConfigError("empty n list")
        if any(n < 1 for n in self.n_list):
            raise ConfigError("every n must be at least 1")


@dataclass
class Table:
    columns: list
    rows: list
    meta: dict


# -- parsing -----------------------------------------------------------------


def parse_n_list(text):
    """``"32,64,128"`` or ``"a:b:step"`` (b inclusive)."""
    text = text.strip()
    try:
        if ":" in text:
            parts = [int(p) for p in text.split(":")]
            if len(parts) == 2:
                parts.append(1)
            if len(parts) != 3 or parts[2] <= 0:
                raise ValueError
            lo, hi, step = parts
            return list(range(lo, hi + 1, step))
        return [int(p) for p in text.split(",") if p.strip()]
    except ValueError:
        raise ConfigError(f"cannot parse n list {text!r}") from None


def parse_reals(text):
    try:
        return [float(p) for p in text.split(",") if p.strip()]
    except ValueError:
        raise ConfigError(f"cannot parse real list {text!r}") from None


def parse_complexes(text):
    try:
        return [complex(p.strip().replace("i", "j")) for p in text.split(",") if p.strip()]
    except ValueError:
        raise ConfigError(f"cannot parse complex list {text!r}") from None


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ConfigError(message)


def build_parser():
    parser = _Parser(prog="jumpjacobi", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"jumpjacobi {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--alpha", type=float, default=0.0)
        p.add_argument("--beta", type=float, default=0.0)
        p.add_argument("--c", type=float, default=1.0)
        p.add_argument("--logh", default="0", help="comma-separated Chebyshev coefficients of log h")
        p.add_argument("--config", help="WeightSpec JSON file; overrides the weight flags")
        p.add_argument("--n", default=None, help="comma list or a:b:step")
        p.add_argument("--x", default=None)
        p.add_argument("--y", default=None)
        p.add_argument("--z", default=None)
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        p.add_argument("--out", default="-")
        p.add_argument("--tol", type=float, default=1e-12)
        p.add_argument("--npts", type=int, default=DEFAULT_NPTS, help="initial nodes per half")
        if name == "zeros":
            p.add_argument("--k-min", type=int, default=-5)
            p.add_argument("--k-max", type=int, default=5)
        if name == "local":
            p.add_argument("--scaled", action="store_true", help="x is the scaled variable n x / pi")
    return parser


def _spec_from_args(args):
    try:
        if args.config:
            with open(args.config) as fh:
                return WeightSpec.from_dict(json.load(fh))
        return WeightSpec(args.alpha, args.beta, args.c, tuple(parse_reals(args.logh)))
    except (OSError, json.JSONDecodeError, DomainError, TypeError, AttributeError) as exc:
        raise ConfigError(f"invalid weight specification: {exc}") from None


def config_from_argv(argv):
    args = build_parser().parse_args(argv)
    spec = _spec_from_args(args)
    return RunConfig(
        spec=spec,
        command=args.command,
        n_list=parse_n_list(args.n) if args.n else list(DEFAULT_N),
        x=parse_reals(args.x) if args.x else [],
        y=parse_reals(args.y) if args.y else [],
        z=parse_complexes(args.z) if args.z else [],
        out_path=args.out,
        format=args.format,
        tol=args.tol,
        npts=args.npts,
        k_min=getattr(args, "k_min", -5),
        k_max=getattr(args, "k_max", 5),
        scaled=getattr(args, "scaled", False),
    )


# -- commands ----------------------------------------------------------------


def _table(cfg, n_top):
    return build_recurrence(cfg.spec, max(n_top, 1), npts=cfg.npts)


def _cmd_recur(cfg):
    table = _table(cfg, max(cfg.n_list) + 1)
    rows = []
    for n in cfg.n_list:
        a = math.sqrt(table.a_sq[n - 1])
        b = float(table.b[n])
        pa, pb = recurrence_prediction(cfg.spec, n)
        kn = table.kn(n)
        pk = leading_coeff_prediction(cfg.spec, n)
        rows.append([n, a, b, pa, pb, (a - pa) * n * n, (b - pb) * n * n, kn, pk, (kn / pk - 1) * n * n])
    cols = ["n", "a_n", "b_n", "pred_a", "pred_b", "err_a_n2", "err_b_n2", "k_n", "pred_k", "relerr_k_n2"]
    return cols, rows, table


def _cmd_outer(cfg):
    table = _table(cfg, max(cfg.n_list))
    zs = cfg.z or [2.0 + 0j]
    rows = []
    for z in zs:
        fz = complex(phi(z))
        for n in cfg.n_list:
            num = 2.0**n * complex(eval_monic(table, n, complex(z))) / fz**n
            p0 = outer_prediction(cfg.spec, n, z, order=0)
            p1 = outer_prediction(cfg.spec, n, z, order=1)
            rows.append(
                [n, z.real, z.imag, num.real, num.imag, p0.real, p0.imag, p1.real, p1.imag, abs(num - p0), abs(num - p1)]
            )
    cols = ["n", "z_re", "z_im", "numeric_re", "numeric_im", "pred0_re", "pred0_im", "pred1_re", "pred1_im", "abs_err0", "abs_err1"]
    return cols, rows, table


def _cmd_local(cfg):
    table = _table(cfg, max(cfg.n_list))
    xs = cfg.x or ([0.6] if cfg.scaled else [0.1])
    rows = []
    if cfg.scaled:
        for x in xs:
            for n in cfg.n_list:
                num = float(eval_monic(table, n, math.pi * x / n))
                p0 = scaled_local_prediction(cfg.spec, n, x)
                rows.append([n, x, num, p0, abs(num - p0), scaled_local_envelope(cfg.spec, n, x)])
        return ["n", "x", "numeric", "predicted_order0", "abs_err0", "envelope"], rows, table
    for x in xs:
        for n in cfg.n_list:
            num = float(eval_monic(table, n, x))
            p0 = local_prediction(cfg.spec, n, x, order=0)
            p1 = local_prediction(cfg.spec, n, x, order=1)
            rows.append([n, x, num, p0, p1, abs(num - p0), abs(num - p1), local_envelope(cfg.spec, n, x)])
    cols = ["n", "x", "numeric", "predicted_order0", "predicted_order1", "abs_err0", "abs_err1", "envelope"]
    return cols, rows, table


def _pairs(xs, ys, dx, dy):
    xs = xs or [dx]
    ys = ys or [dy]
    if len(xs) == 1:
        xs = xs * len(ys)
    if len(ys) == 1:
        ys = ys * len(xs)
    if len(xs) != len(ys):
        raise ConfigError("--x and --y must have equal lengths or length 1")
    return list(zip(xs, ys))


def _cmd_kernel(cfg):
    table = _table(cfg, max(cfg.n_list))
    rows = []
    for x, y in _pairs(cfg.x, cfg.y, 0.3, -0.2):
        pred = k_infty(cfg.spec, x, y)
        for n in cfg.n_list:
            num = math.pi / n * cd_kernel(table, n, math.pi * x / n, math.pi * y / n)
            rows.append([n, x, y, num, pred, abs(num - pred)])
    return ["n", "x", "y", "numeric", "predicted", "abs_err"], rows, table


def _cmd_zeros(cfg):
    table = _table(cfg, max(cfg.n_list))
    rows = []
    for n in cfg.n_list:
        rep = spacing_report(cfg.spec, table, n, (cfg.k_min, cfg.k_max))
        ks, xs = enumerate_local_zeros(table, n, cfg.k_min, cfg.k_max)
        try:
            zeta = predicted_zeros(cfg.spec, n, cfg.k_min, cfg.k_max)
        except DomainError:
            zeta = np.full(ks.size, np.nan)
        for i, k in enumerate(ks):
            j = i - 1  # spacing index: rep.ks starts at k_min + 1
            spacing = rep.actual[j] if j >= 0 else math.nan
            pred = rep.predicted[j] if j >= 0 else math.nan
            dev = rep.deviations[j] if j >= 0 else math.nan
            rows.append([n, int(k), float(xs[i]), spacing, float(zeta[i]), pred, dev])
    cols = ["n", "k", "x_k", "n_over_pi_spacing", "zeta_k", "predicted_spacing", "deviation"]
    return cols, rows, table


def _cmd_szego(cfg):
    xs = cfg.x or [-0.5, 0.5]
    rows = []
    for x in xs:
        dp, _ = boundary_values(cfg.spec, x)
        rows.append([x, dp.real, dp.imag, hbar(cfg.spec, x), phi_cap(cfg.spec, x), rho(cfg.spec, x)])
    return ["x", "re_dplus", "im_dplus", "hbar", "phi", "rho"], rows, None


def _cmd_props(cfg):
    if cfg.spec.c == 1.0:
        raise ConfigError("props needs c != 1 (a = log c / pi must be nonzero)")
    a = math.log(cfg.spec.c) / math.pi
    results = run_suite([a])
    rows = [[r.name, r.a, r.value, r.threshold, int(r.passed)] for r in results]
    return ["check", "a", "value", "threshold", "passed"], rows, None


_DISPATCH = {
    "recur": _cmd_recur,
    "outer": _cmd_outer,
    "local": _cmd_local,
    "kernel": _cmd_kernel,
    "zeros": _cmd_zeros,
    "szego": _cmd_szego,
    "props": _cmd_props,
}


def run_table(cfg):
    cols, rows, table = _DISPATCH[cfg.command](cfg)
    meta = {
        "tool": f"jumpjacobi {__version__}",
        "command": cfg.command,
        "spec": cfg.spec.to_dict(),
        "backend": BACKEND,
        "quad_npts": table.quad_npts if table is not None else None,
        "n_max": table.n_max if table is not None else None,
    }
    return Table(cols, rows, meta)


# -- output ------------------------------------------------------------------


def _fmt(v):
    if isinstance(v, (bool, np.bool_)):
        return str(int(v))
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, str):
        return v
    v = float(v)
    if math.isnan(v):
        return "nan"
    return f"{v:.16e}"


def _json_value(v):
    if isinstance(v, (int, np.integer, str)):
        return v if isinstance(v, str) else int(v)
    v = float(v)
    return None if not math.isfinite(v) else v


def render(tab, fmt):
    if fmt == "json":
        doc = {
            "provenance": tab.meta,
            "columns": tab.columns,
            "rows": [[_json_value(v) for v in row] for row in tab.rows],
        }
        return json.dumps(doc, indent=1, sort_keys=True) + "\n"
    lines = ["# " + json.dumps(tab.meta, sort_keys=True), ",".join(tab.columns)]
    lines += [",".join(_fmt(v) for v in row) for row in tab.rows]
    return "\n".join(lines) + "\n"


def run(cfg):
    """Execute ``cfg`` and write its table; returns the exit status."""
    tab = run_table(cfg)
    text = render(tab, cfg.format)
    if cfg.out_path in ("-", None):
        sys.stdout.write(text)
    else:
        with open(cfg.out_path, "w") as fh:
            fh.write(text)
    if cfg.command == "props" and not all(row[-1] for row in tab.rows):
        return EXIT_FAILED_CHECK
    return EXIT_OK


def main(argv=None):
    try:
        cfg = config_from_argv(sys.argv[1:] if argv is None else argv)
        return run(cfg)
    except ConfigError as exc:
        print(f"jumpjacobi: configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (ConvergenceError, DomainError, ArithmeticError, IndexError) as exc:
        print(f"jumpjacobi: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except OSError as exc:
        print(f"jumpjacobi: cannot write output: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
