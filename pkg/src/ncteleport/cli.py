"""Command-line front end: ``point``, ``sweep`` and ``selfcheck``.

Sweeps write CSV with one row per ``(p, r, alpha2)`` grid point in
row-major order. Flags override values read from ``--config FILE`` (plain
``key = value`` lines, keys spelled like the long flags, e.g. ``p_grid``).
"""

import argparse
import csv
import io
import math
import re
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from . import kernels
from .measures import discord, mutual_information, negativity
from .rindler import R_MAX, alice_rob_matrix, alice_rob_state, check_r
from .states import check_p, qubit_from_population, werner
from .teleport import fidelity_closed_form, noninertial_report

CSV_HEADER = (
    "p", "r", "alpha2", "F_i0", "F_i1", "min_F", "avg_F",
    "discord_B", "discord_A", "negativity", "mutual_info",
)
FIGURE_POINTS = 65
OUTPUT_FLAGS = ("fidelities", "min_fidelity", "discord_A", "discord_B", "negativity", "mutual_information")


class UsageError(Exception):
    """Bad command-line input; message names the offending flag."""


@dataclass
class SweepSpec:
    p_grid: list
    r_grid: list
    alpha2_grid: list
    outputs: frozenset = field(default_factory=lambda: frozenset(OUTPUT_FLAGS))

    def __post_init__(self):
        for flag, grid, lo, hi in (
            ("--p-grid", self.p_grid, 0.0, 1.0),
            ("--r-grid", self.r_grid, 0.0, R_MAX),
            ("--alpha2-grid", self.alpha2_grid, 0.0, 1.0),
        ):
            if len(grid) == 0:
                raise UsageError(f"{flag}: grid is empty")
            for x in grid:
                _check_range(flag, x, lo, hi)

    def points(self):
        for p in self.p_grid:
            for r in self.r_grid:
                for a2 in self.alpha2_grid:
                    yield p, r, a2


_PI_TERM = re.compile(r"^\s*([0-9.eE+-]*)\s*\*?\s*pi\s*(?:/\s*([0-9.eE+-]+))?\s*$")


def parse_number(text):
    """Float, optionally written as a multiple/fraction of pi (``pi/4``, ``3*pi/16``)."""
    m = _PI_TERM.match(text)
    if m:
        coef = float(m.group(1)) if m.group(1) not in ("", "+") else 1.0
        if m.group(1) == "-":
            coef = -1.0
        den = float(m.group(2)) if m.group(2) else 1.0
        return coef * math.pi / den
    return float(text)


def parse_grid(text, flag):
    """``a:b:n`` (inclusive linspace) or a single value."""
    parts = text.split(":")
    try:
        if len(parts) == 1:
            return [parse_number(parts[0])]
        if len(parts) == 3:
            n = int(parts[2])
            if n < 0:
                raise ValueError
            return list(np.linspace(parse_number(parts[0]), parse_number(parts[1]), n))
    except ValueError:
        pass
    raise UsageError(f"{flag}: expected 'start:stop:count' or a number, got {text!r}")


def _check_range(flag, value, lo, hi, slack=1e-12):
    if not (lo - slack <= value <= hi + slack) or math.isnan(value):
        raise UsageError(f"{flag}: {value!r} outside [{lo:.12g}, {hi:.12g}]")


def figure_spec(number, n=FIGURE_POINTS):
    r_axis = list(np.linspace(0.0, R_MAX, n))
    if number == 1:
        return SweepSpec([1.0], r_axis, list(np.linspace(0.0, 1.0, n)))
    if number == 2:
        return SweepSpec([1.0], r_axis, [0.5])
    if number == 3:
        return SweepSpec(list(np.linspace(0.0, 1.0, n)), [0.0, R_MAX], [0.5])
    if number == 4:
        return SweepSpec([1.0 / 3.0], r_axis, [0.5])
    raise UsageError(f"--figure: expected 1-4, got {number}")


@lru_cache(maxsize=4096)
def _state_measures(p, r, sides):
    rho = alice_rob_state(p, r)
    out = {"negativity": negativity(rho), "mutual_info": mutual_information(rho)}
    for side in sides:
        out[f"discord_{side}"] = discord(rho, side).discord
    return out


def _fmt(x):
    if x is None:
        return ""
    return f"{x:.12g}"


def sweep_rows(spec, sides=("B", "A"), threads=1, phase=0.0):
    """Compute sweep rows in grid order; ``threads`` workers evaluate points concurrently."""
    sides = tuple(sides)

    def row(point):
        p, r, a2 = point
        rep = noninertial_report(qubit_from_population(a2, phase), p, r)
        meas = _state_measures(p, r, sides)
        return (
            p, r, a2, rep.fidelity_i0, rep.fidelity_i1, rep.min_fidelity, rep.avg_fidelity,
            meas.get("discord_B"), meas.get("discord_A"), meas["negativity"], meas["mutual_info"],
        )

    points = list(spec.points())
    if threads <= 1:
        return [row(pt) for pt in points]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(row, points))


def write_csv(rows, stream):
    w = csv.writer(stream, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in rows:
        w.writerow([_fmt(x) for x in r])


def _sides(measure_side):
    return {"A": ("A",), "B": ("B",), "both": ("B", "A")}[measure_side]


def cmd_point(args, out=None):
    out = sys.stdout if out is None else out
    _check_range("--p", args.p, 0.0, 1.0)
    _check_range("--r", args.r, 0.0, R_MAX)
    _check_range("--alpha2", args.alpha2, 0.0, 1.0)
    p, r = check_p(args.p), check_r(args.r)
    psi = qubit_from_population(min(max(args.alpha2, 0.0), 1.0), args.phase)
    rep = noninertial_report(psi, p, r)
    rho = alice_rob_state(p, r)

    lines = [("p", p), ("r", r), ("alpha2", psi.alpha2), ("phase", args.phase)]
    for o in rep.outcomes:
        lines.append((f"probability_{o.i}{o.j}", o.probability))
        lines.append((f"fidelity_{o.i}{o.j}", o.fidelity))
    lines += [
        ("F_i0", rep.fidelity_i0),
        ("F_i1", rep.fidelity_i1),
        ("min_fidelity", rep.min_fidelity),
        ("avg_fidelity", rep.avg_fidelity),
    ]
    lines.append(("mutual_information", mutual_information(rho)))
    for side in _sides(args.measure_side):
        c = discord(rho, side)
        lines += [
            (f"classical_correlation_{side}", c.classical_correlation),
            (f"discord_{side}", c.discord),
            (f"optimizer_evals_{side}", c.optimizer_evals),
            (f"optimizer_theta_{side}", c.optimizer_argmax.theta),
            (f"optimizer_phi_{side}", c.optimizer_argmax.phi),
        ]
    lines.append(("negativity", negativity(rho)))
    for key, val in lines:
        print(f"{key}: {val:.12g}" if isinstance(val, float) else f"{key}: {val}", file=out)
    return 0


def build_spec(args):
    spec = figure_spec(args.figure) if args.figure is not None else None
    p_grid = parse_grid(args.p_grid, "--p-grid") if args.p_grid else None
    r_grid = parse_grid(args.r_grid, "--r-grid") if args.r_grid else None
    a_grid = parse_grid(args.alpha2_grid, "--alpha2-grid") if args.alpha2_grid else None
    if spec is None:
        spec = SweepSpec([args.p], [args.r], [args.alpha2])
    return SweepSpec(
        p_grid if p_grid is not None else spec.p_grid,
        r_grid if r_grid is not None else spec.r_grid,
        a_grid if a_grid is not None else spec.alpha2_grid,
    )


def cmd_sweep(args, out=None):
    out = sys.stdout if out is None else out
    spec = build_spec(args)
    if args.threads < 1:
        raise UsageError(f"--threads: must be >= 1, got {args.threads}")
    rows = sweep_rows(spec, _sides(args.measure_side), args.threads, args.phase)
    if args.out in (None, "-"):
        write_csv(rows, out)
        return 0
    buf = io.StringIO()
    write_csv(rows, buf)
    try:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(buf.getvalue())
    except OSError as exc:
        raise UsageError(f"--out: cannot write {args.out!r}: {exc.strerror}") from None
    print(f"wrote {len(rows)} rows to {args.out}", file=sys.stderr)
    return 0


def _selfchecks():
    """Yield ``(name, deviation, tolerance)`` for each cross-validation."""
    dev = 0.0
    for p in np.linspace(0, 1, 11):
        for r in np.linspace(0, R_MAX, 11):
            dev = max(dev, np.abs(alice_rob_state(p, r).matrix - alice_rob_matrix(p, r)).max())
    yield "two-qubit accelerated channel vs closed form (11x11 grid)", dev, 1e-12

    dev_f = dev_p = dev_d = 0.0
    grid = np.linspace(0, 1, 5)
    for a2 in grid:
        for p in grid:
            for r in np.linspace(0, R_MAX, 5):
                psi = qubit_from_population(a2, 0.7)
                rep = noninertial_report(psi, p, r)
                f0, f1 = fidelity_closed_form(psi, p, r)
                dev_f = max(dev_f, abs(rep.fidelity_i0 - f0), abs(rep.fidelity_i1 - f1))
                dev_d = max(dev_d, abs((f1 - f0) - (psi.alpha2 - psi.beta2) * math.sin(r) ** 2))
                dev_p = max(dev_p, max(abs(o.probability - 0.25) for o in rep.outcomes))
    yield "simulated vs closed-form fidelities (125 points)", dev_f, 1e-10
    yield "F_i1 - F_i0 = (|a|^2 - |b|^2) sin^2 r", dev_d, 1e-12
    yield "branch probabilities equal 1/4", dev_p, 1e-12

    from .linalg import eigvals_hermitian

    dev = 0.0
    for p in np.linspace(0, 1, 11):
        expect = np.sort([(1 - p) / 4] * 3 + [(1 + 3 * p) / 4])
        dev = max(dev, np.abs(eigvals_hermitian(werner(p).matrix) - expect).max())
    yield "Werner spectrum", dev, 1e-12


def cmd_selfcheck(args, out=None):
    out = sys.stdout if out is None else out
    failures = []
    for name, dev, tol in _selfchecks():
        ok = bool(dev < tol)
        print(f"{'PASS' if ok else 'FAIL'}  {name}: max deviation {dev:.3e} (tol {tol:.0e})", file=out)
        if not ok:
            failures.append(name)
    print(f"kernel backend: {kernels.BACKEND}", file=out)
    if failures:
        print("failed: " + "; ".join(failures), file=out)
        return 1
    print("all checks passed", file=out)
    return 0


def read_config(path):
    """Parse ``key = value`` lines; ``#`` starts a comment."""
    cfg = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise UsageError(f"--config: line {lineno}: expected 'key = value'")
            key, val = (s.strip() for s in line.split("=", 1))
            cfg[key.replace("-", "_")] = val
    return cfg


def _float_arg(flag):
    def conv(text):
        try:
            return parse_number(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"{flag}: not a number: {text!r}") from None
    return conv


def build_parser():
    parser = argparse.ArgumentParser(
        prog="ncteleport",
        description="Teleportation fidelity, discord and negativity for a Werner channel "
        "shared with a uniformly accelerated receiver.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", metavar="FILE", help="key = value defaults; flags take precedence")
    common.add_argument("--p", type=_float_arg("--p"), default=1.0, help="Werner weight in [0, 1]")
    common.add_argument("--r", type=_float_arg("--r"), default=0.0, help="acceleration parameter in [0, pi/4]")
    common.add_argument("--alpha2", type=_float_arg("--alpha2"), default=0.5, help="|alpha|^2 of the input qubit")
    common.add_argument("--phase", type=_float_arg("--phase"), default=0.0, help="relative phase of beta")

    pt = sub.add_parser("point", parents=[common], help="evaluate one (p, r, alpha2) point")
    pt.add_argument("--measure-side", choices=("A", "B", "both"), default="B",
                    help="qubit measured in the discord optimization")
    pt.set_defaults(func=cmd_point)

    sw = sub.add_parser("sweep", parents=[common], help="write a CSV grid")
    sw.add_argument("--figure", type=int, choices=(1, 2, 3, 4), help="preset grid for figure N")
    sw.add_argument("--p-grid", help="start:stop:count")
    sw.add_argument("--r-grid", help="start:stop:count (pi allowed, e.g. 0:pi/4:65)")
    sw.add_argument("--alpha2-grid", help="start:stop:count")
    sw.add_argument("--out", help="CSV path ('-' or omitted: standard output)")
    sw.add_argument("--threads", type=int, default=1, help="worker threads")
    sw.add_argument("--measure-side", choices=("A", "B", "both"), default="both",
                    help="qubit measured in the discord optimization")
    sw.set_defaults(func=cmd_sweep)

    sc = sub.add_parser("selfcheck", help="run the closed-form cross-validations")
    sc.set_defaults(func=cmd_selfcheck)
    return parser, {"point": pt, "sweep": sw, "selfcheck": sc}


def _apply_config(subparser, cfg):
    known = {a.dest: a for a in subparser._actions}
    defaults = {}
    for key, val in cfg.items():
        action = known.get(key)
        if action is None or key in ("help", "config", "func"):
            raise UsageError(f"--config: unknown key {key!r}")
        defaults[key] = action.type(val) if action.type else val
    subparser.set_defaults(**defaults)


def main(argv=None):
    parser, subs = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        args = parser.parse_args(argv)
        if getattr(args, "config", None):
            _apply_config(subs[args.command], read_config(args.config))
            args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"ncteleport {argv[0] if argv else ''}: error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"ncteleport: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
