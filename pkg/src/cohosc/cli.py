"""Command-line front end: CSV/JSON tables and the oracle verification report.

Exit codes: 0 success, 2 usage or domain error, 3 verification failure.
All coordinates are dimensionless oscillator units (hbar = omega = c = 1).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from dataclasses import dataclass, replace
from pathlib import Path

import numpy as np

from . import covariant as cv
from . import density as de
from . import oracle as orc
from .special import DomainError
from .verification import SUITES, run_suite

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_VERIFY = 3
DENSITY_BOTH_LIMIT = 1e-6
CONFIG_ENV = "COHOSC_CONFIG"
MAX_SWEEP_POINTS = 1_000_000


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class SweepSpec:
    start: float
    stop: float
    step: float

    def values(self) -> np.ndarray:
        count = int(math.floor((self.stop - self.start) / self.step + 1e-9)) + 1
        return self.start + self.step * np.arange(count)


def parse_sweep(text: str) -> SweepSpec:
    """Parse ``start:stop:step`` (or a single value)."""
    parts = text.split(":")
    try:
        if len(parts) == 1:
            value = float(parts[0])
            return SweepSpec(value, value, 1.0)
        if len(parts) != 3:
            raise ValueError
        start, stop, step = (float(p) for p in parts)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected start:stop:step, got {text!r}") from None
    if not all(map(math.isfinite, (start, stop, step))):
        raise argparse.ArgumentTypeError("sweep bounds must be finite")
    if step <= 0:
        raise argparse.ArgumentTypeError("sweep step must be positive")
    if start > stop:
        raise argparse.ArgumentTypeError("sweep start must not exceed stop")
    if (stop - start) / step > MAX_SWEEP_POINTS:
        raise argparse.ArgumentTypeError("sweep has too many points")
    return SweepSpec(start, stop, step)


@dataclass(frozen=True)
class RunConfig:
    nodes: int = 128
    tol: float = 1e-16
    format: str = "csv"
    out: str | None = None

    def validated(self) -> "RunConfig":
        if not 2 <= self.nodes <= orc.MAX_NODES:
            raise UsageError(f"quadrature size must be in [2, {orc.MAX_NODES}]")
        if not 0 < self.tol <= 1e-6:
            raise UsageError("truncation tolerance must be in (0, 1e-6]")
        if self.format not in ("csv", "json"):
            raise UsageError("format must be csv or json")
        return self


def load_config(args: argparse.Namespace) -> RunConfig:
    config = RunConfig()
    path = args.config or os.environ.get(CONFIG_ENV)
    if path:
        try:
            data = json.loads(Path(path).read_text(encoding="utf-8"))
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot read config {path}: {exc}") from None
        unknown = set(data) - {"nodes", "tol", "format", "out"}
        if unknown:
            raise UsageError(f"unknown config keys: {sorted(unknown)}")
        config = replace(config, **data)
    flags = {k: getattr(args, k) for k in ("nodes", "tol", "format", "out") if getattr(args, k) is not None}
    return replace(config, **flags).validated()


def format_value(value) -> str:
    """17 significant digits, locale-independent; '' for missing values."""
    if value is None:
        return ""
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return format(float(value), ".17g")
    return str(value)


def _json_value(value) -> str:
    if value is None:
        return "null"
    if isinstance(value, (float, np.floating)) and not math.isfinite(value):
        return "null"
    if isinstance(value, str):
        return json.dumps(value)
    return format_value(value)


def render(columns: list[str], rows: list[list], fmt: str) -> str:
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(columns)
        for row in rows:
            writer.writerow([format_value(v) for v in row])
        return buf.getvalue()
    lines = []
    for row in rows:
        fields = ", ".join(f"{json.dumps(c)}: {_json_value(v)}" for c, v in zip(columns, row))
        lines.append("  {" + fields + "}")
    return "[\n" + ",\n".join(lines) + "\n]\n" if lines else "[]\n"


def emit(text: str, config: RunConfig) -> None:
    if config.out:
        Path(config.out).write_text(text, encoding="utf-8", newline="")
    else:
        sys.stdout.write(text)


def cmd_wavefunction(args, config: RunConfig) -> int:
    z = args.grid.values()
    t = (args.t_grid or args.grid).values()
    rows = []
    for zi in z:
        values = cv.psi(args.n, args.eta, zi, t)
        rows.extend([zi, ti, vi] for ti, vi in zip(t, np.atleast_1d(values)))
    emit(render(["z", "t", "psi"], rows, config.format), config)
    return EXIT_OK


def cmd_entropy(args, config: RunConfig) -> int:
    rows = []
    if args.beta is not None:
        args.velocity, args.grid = True, args.beta
    if args.velocity:
        bounds = (args.grid.start, args.grid.stop)
        if max(abs(b) for b in bounds) >= 1.0:
            raise DomainError("velocity sweep must lie strictly inside (-1, 1)")
        for beta in args.grid.values():
            eta = cv.beta_to_rapidity(beta)
            rows.append([
                beta,
                de.entropy_velocity(args.n, beta, tol=config.tol),
                de.purity(args.n, eta, tol=config.tol),
                de.effective_temperature(eta) if args.n == 0 else None,
            ])
        columns = ["beta", "entropy", "purity", "effective_temperature"]
    else:
        for eta in args.grid.values():
            rows.append([
                eta,
                de.entropy(args.n, eta, tol=config.tol),
                de.purity(args.n, eta, tol=config.tol),
                de.effective_temperature(eta) if args.n == 0 else None,
            ])
        columns = ["eta", "entropy", "purity", "effective_temperature"]
    emit(render(columns, rows, config.format), config)
    return EXIT_OK


def cmd_density(args, config: RunConfig) -> int:
    z = args.grid.values()
    analytic = numeric = None
    if args.mode in ("analytic", "both"):
        analytic = de.reduced_density(args.n, args.eta, z[:, None], z[None, :], tol=config.tol)
    if args.mode in ("numeric", "both"):
        t_rule = orc.gauss_hermite(min(orc.MAX_NODES, 4 * config.nodes))
        numeric = orc.partial_trace_values(args.n, args.eta, z, z, t_rule)
    rows = []
    worst = 0.0
    for i, zi in enumerate(z):
        for j, zj in enumerate(z):
            if args.mode == "analytic":
                rows.append([zi, zj, analytic[i, j]])
            elif args.mode == "numeric":
                rows.append([zi, zj, numeric[i, j]])
            else:
                err = abs(analytic[i, j] - numeric[i, j])
                worst = max(worst, err)
                rows.append([zi, zj, analytic[i, j], numeric[i, j], err])
    columns = ["z", "z_prime", "rho"]
    if args.mode == "both":
        columns += ["rho_numeric", "abs_err"]
    emit(render(columns, rows, config.format), config)
    if args.mode == "both" and worst > DENSITY_BOTH_LIMIT:
        print(f"partial-trace mismatch: max abs err {worst:.3e} > {DENSITY_BOTH_LIMIT:g}", file=sys.stderr)
        return EXIT_VERIFY
    return EXIT_OK


def cmd_ellipse(args, config: RunConfig) -> int:
    u, v, z, t, u_axis, v_axis = cv.squeeze_ellipse(args.eta)
    rows = [[i, ui, vi, zi, ti, u_axis, v_axis] for i, (ui, vi, zi, ti) in enumerate(zip(u, v, z, t))]
    emit(render(["index", "u", "v", "z", "t", "u_axis", "v_axis"], rows, config.format), config)
    return EXIT_OK


def _parse_override(text: str) -> tuple[str, float]:
    name, sep, value = text.partition("=")
    try:
        if not sep:
            raise ValueError
        return name, float(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected CHECK=TOL, got {text!r}") from None


def cmd_verify(args, config: RunConfig) -> int:
    suite = args.suite_name or args.suite or "all"
    checks = run_suite(suite, dict(args.override or []))
    report = [c.as_dict() for c in checks]
    body = ",\n".join(
        "  {" + ", ".join(f"{json.dumps(k)}: {_json_value(v)}" for k, v in row.items()) + "}"
        for row in report
    )
    emit("[\n" + body + "\n]\n", config)
    return EXIT_OK if all(c.passed for c in checks) else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("csv", "json"), default=None)
    common.add_argument("--out", default=None, help="output file (default stdout)")
    common.add_argument("--nodes", type=int, default=None, help="quadrature size, default 128")
    common.add_argument("--tol", type=float, default=None, help="series truncation tolerance, default 1e-16")
    common.add_argument("--config", default=None, help=f"JSON defaults (fallback: ${CONFIG_ENV})")

    parser = argparse.ArgumentParser(prog="cohosc", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("wavefunction", parents=[common], help="psi_eta^n over a (z, t) grid")
    p.add_argument("--n", type=int, default=0)
    p.add_argument("--eta", type=float, default=0.0)
    p.add_argument("--grid", type=parse_sweep, default=parse_sweep("-3:3:0.5"), help="z sweep start:stop:step")
    p.add_argument("--t-grid", type=parse_sweep, default=None, help="t sweep (default: same as --grid)")
    p.set_defaults(func=cmd_wavefunction)

    p = sub.add_parser("entropy", parents=[common], help="entropy, purity, temperature sweep")
    p.add_argument("--n", type=int, default=0)
    p.add_argument("--grid", type=parse_sweep, default=parse_sweep("0:3:0.1"), help="eta (or beta) sweep")
    p.add_argument("--velocity", action="store_true", help="sweep beta = v/c instead of eta")
    p.add_argument("--beta", type=parse_sweep, default=None, help="beta sweep; implies --velocity")
    p.set_defaults(func=cmd_entropy)

    p = sub.add_parser("density", parents=[common], help="reduced density matrix rho(z, z')")
    p.add_argument("--n", type=int, default=0)
    p.add_argument("--eta", type=float, default=0.0)
    p.add_argument("--grid", type=parse_sweep, default=parse_sweep("-3:3:0.5"), help="z sweep")
    p.add_argument("--mode", choices=("analytic", "numeric", "both"), default="analytic")
    p.set_defaults(func=cmd_density)

    p = sub.add_parser("ellipse", parents=[common], help="squeezed unit circle in the zt plane")
    p.add_argument("--eta", type=float, default=0.0)
    p.set_defaults(func=cmd_ellipse)

    p = sub.add_parser("verify", parents=[common], help="run oracle checks, JSON report")
    p.add_argument("suite_name", nargs="?", choices=("all",) + SUITES, help=argparse.SUPPRESS)
    p.add_argument("--suite", choices=("all",) + SUITES, default=None)
    p.add_argument("--override", type=_parse_override, action="append", metavar="CHECK=TOL")
    p.set_defaults(func=cmd_verify)
    return parser


_VALUE_FLAGS = {"--grid", "--t-grid", "--eta", "--beta", "--n"}


def _attach_negative_values(argv: list[str]) -> list[str]:
    """Rewrite ``--grid -1:1:0.5`` as ``--grid=-1:1:0.5`` so argparse keeps it."""
    out = []
    i = 0
    while i < len(argv):
        token = argv[i]
        if token in _VALUE_FLAGS and i + 1 < len(argv) and argv[i + 1].startswith("-") \
                and not argv[i + 1].startswith("--"):
            out.append(f"{token}={argv[i + 1]}")
            i += 2
            continue
        out.append(token)
        i += 1
    return out


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    args = parser.parse_args(_attach_negative_values(argv))
    try:
        config = load_config(args)
        return args.func(args, config)
    except (UsageError, DomainError) as exc:
        print(f"cohosc {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
