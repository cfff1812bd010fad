"""Command-line front end emitting CSV/JSON data for the Rosen-Morse problem.

Exit codes: 0 success, 1 validation error, 2 verification failure,
3 numerical non-convergence.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

import numpy as np

from . import jacobi_bridge as jb
from . import rodrigues as rd
from . import spectrum as sp
from . import wavefunction as wf
from .errors import DomainError, QuadratureError
from .exactalg import as_rational

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_VERIFY_FAILED = 2
EXIT_NONCONVERGENCE = 3


class ValidationError(ValueError):
    pass


@dataclass(frozen=True)
class RunConfig:
    a: Fraction
    b: Fraction
    n_max: int
    grid_points: int
    tol: float
    output_format: str = "csv"
    output_path: Path | None = None
    unnormalized: bool = False

    def __post_init__(self):
        if self.n_max < 1:
            raise ValidationError("--n-max must be >= 1")
        if self.grid_points < 2:
            raise ValidationError("--grid must be >= 2")
        if not self.tol > 0:
            raise ValidationError("--tol must be positive")
        if self.a <= Fraction(-1, 2):
            raise ValidationError("--a must exceed -1/2")
        if self.b <= 0:
            raise ValidationError("--b must be positive")


def _fmt(v) -> str:
    return repr(float(v))


def _csv(header, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([v if isinstance(v, (str, int)) else _fmt(v) for v in row])
    return buf.getvalue()


def _json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _table(cfg: RunConfig, header, rows) -> str:
    if cfg.output_format == "json":
        records = [
            {h: (v if isinstance(v, (str, int)) else float(v)) for h, v in zip(header, row)}
            for row in rows
        ]
        return _json(records)
    return _csv(header, rows)


def cmd_spectrum(cfg: RunConfig) -> str:
    header = ["n", "beta_n", "alpha_n", "epsilon_n", "epsilon_n_float"]
    rows = []
    for n in range(1, cfg.n_max + 1):
        lv = rd.level_params(n, cfg.a, cfg.b)
        rows.append([n, str(lv.beta_n), str(lv.alpha_n), str(lv.epsilon_n), float(lv.epsilon_n)])
    return _table(cfg, header, rows)


def cmd_potential(cfg: RunConfig) -> str:
    p = sp.PotentialParams(float(cfg.a), float(cfg.b))
    data = sp.potential_table(p, cfg.grid_points)
    return _table(cfg, ["z", "v", "coulomb", "linear_ho"], data.tolist())


def cmd_wavefunctions(cfg: RunConfig) -> str:
    states = wf.build_states(cfg.n_max, cfg.a, cfg.b, cfg.tol)
    data = wf.wavefunction_table(states, cfg.grid_points, normalized=not cfg.unnormalized)
    header = ["z"] + [f"R_{s.n}" for s in states]
    return _table(cfg, header, data.tolist())


def cmd_poly(cfg: RunConfig) -> str:
    table = []
    for n in range(1, cfg.n_max + 1):
        lv = rd.level_params(n, cfg.a, cfg.b)
        rec = lv.to_json()
        rec["poly"] = rd.rodrigues_poly(n, cfg.a, cfg.b).to_json()
        table.append(rec)
    return _json(table)


def cmd_jacobi_probe(cfg: RunConfig) -> str:
    reports = [jb.proportionality_probe(n, cfg.a, cfg.b).to_json() for n in range(1, cfg.n_max + 1)]
    return _json(reports)


def _check(name, passed, **measured):
    return {"name": name, "passed": bool(passed), **{k: _jsonable(v) for k, v in measured.items()}}


def _jsonable(v):
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, (np.floating, np.integer)):
        return v.item()
    return v


def verify_report(cfg: RunConfig) -> dict:
    """Run every verification suite for ``(a, b)`` and collect pass/fail records.

    Quadrature failures propagate as :class:`QuadratureError`.
    """
    a, b, n_max, tol = cfg.a, cfg.b, cfg.n_max, cfg.tol
    checks = []

    bad = []
    for n in range(1, n_max + 1):
        lv = rd.level_params(n, a, b)
        res = rd.hypergeometric_residual(rd.rodrigues_poly(n, a, b), lv.weight, lv.m)
        if not res.is_zero() or rd.rodrigues_poly(n, a, b).degree != n - 1:
            bad.append(n)
    checks.append(_check("polynomial_ode_exact", not bad, failing_levels=bad))

    eps = [rd.level_params(n, a, b).epsilon_n for n in range(1, max(n_max, 20) + 1)]
    formula_ok = all(e == (n + a) ** 2 - b**2 / (n + a) ** 2 for n, e in enumerate(eps, 1))
    monotone = all(e2 > e1 for e1, e2 in zip(eps, eps[1:]))
    checks.append(_check("spectrum_formula_monotone", formula_ok and monotone))

    states = wf.build_states(n_max, a, b, tol)
    g = wf.overlap_matrix(states, tol)
    dev = float(np.max(np.abs(g - np.eye(n_max))))
    checks.append(_check("orthonormality", dev < 1e-8, max_abs_deviation=dev, threshold=1e-8))

    agree = 0.0
    for i in range(n_max):
        for j in range(i, min(i + 2, n_max)):
            agree = max(agree, abs(g[i, j] - wf.overlap_xspace(states[i], states[j], tol)))
    checks.append(_check("xspace_overlap_agreement", agree < 1e-9, max_abs_difference=agree, threshold=1e-9))

    z = np.linspace(0, math.pi, 52)[1:-1]
    worst = 0.0
    for s in states:
        r = wf.eval_R(s, z)
        worst = max(worst, float(np.max(np.abs(wf.schrodinger_residual(s, z))) / np.max(np.abs(r))))
    checks.append(_check("schrodinger_residual", worst < 1e-8, max_relative_residual=worst, threshold=1e-8))

    nodes = {s.n: wf.count_nodes(s) for s in states}
    checks.append(_check("node_count", all(v == k - 1 for k, v in nodes.items()),
                         nodes={str(k): v for k, v in nodes.items()}))

    if a == 0:
        diffs = [abs(s.k_closed - s.k_numeric) for s in states[:6]]
        checks.append(_check("closed_form_normalization", max(diffs) < 1e-8,
                             max_abs_difference=max(diffs), threshold=1e-8))

    limit_eps = Fraction(1, 10**6)
    lim = [wf.square_well_limit_error(n, limit_eps, tol=tol) for n in range(1, min(5, n_max) + 1)]
    checks.append(_check("square_well_limit", max(lim) < 1e-4, max_error=max(lim), eps=limit_eps, threshold=1e-4))

    r = 1e-3
    s1 = wf.build_state(1, 0, b, tol)
    ratio = wf.radial_ground_state(r, 0, b, tol) / (s1.norm * math.exp(-float(s1.level.alpha_n) * r / 2))
    checks.append(_check("hydrogen_like_limit", abs(ratio - 1) < 1e-4, ratio=ratio, r=r, threshold=1e-4))

    probes = [jb.proportionality_probe(n, a, b) for n in range(1, min(5, n_max) + 1)]
    ident = max(max(p.gamma_delta_sum_error, p.gamma_delta_diff_error) for p in probes)
    jacobi_image = max(p.ode.max_abs_residual_jacobi_image for p in probes)
    checks.append(_check("jacobi_bridge", ident < 1e-12 and jacobi_image < 1e-10,
                         max_identity_error=ident, max_jacobi_image_residual=jacobi_image,
                         probes=[p.to_json() for p in probes]))

    return {
        "a": str(a),
        "b": str(b),
        "n_max": n_max,
        "tol": tol,
        "passed": all(c["passed"] for c in checks),
        "checks": checks,
    }


COMMANDS = {
    "spectrum": cmd_spectrum,
    "potential": cmd_potential,
    "wavefunctions": cmd_wavefunctions,
    "poly": cmd_poly,
    "jacobi-probe": cmd_jacobi_probe,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_VALIDATION, f"{self.prog}: error: {message}\n")


def _rational(text: str) -> Fraction:
    try:
        return as_rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not an exact rational: {text!r}") from exc


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--a", type=_rational, default=Fraction(1, 4), help="a as p/q or terminating decimal")
    common.add_argument("--b", type=_rational, default=Fraction(1), help="b as p/q or terminating decimal")
    common.add_argument("--n-max", type=int, default=None)
    common.add_argument("--grid", type=int, default=500, help="interior grid points")
    common.add_argument("--tol", type=float, default=wf.DEFAULT_TOL)
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--out", type=Path, default=None)
    common.add_argument("--unnormalized", action="store_true")

    parser = _Parser(prog="rosenmorse", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in [*COMMANDS, "verify"]:
        sub.add_parser(name, parents=[common])
    return parser


def _write(text: str, path: Path | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        path.write_text(text)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    n_max = args.n_max
    if n_max is None:
        n_max = {"wavefunctions": 4, "verify": 6}.get(args.command, 5)
    try:
        cfg = RunConfig(args.a, args.b, n_max, args.grid, args.tol, args.format, args.out, args.unnormalized)
    except ValidationError as exc:
        print(f"rosenmorse: error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION

    try:
        if args.command == "verify":
            report = verify_report(cfg)
            _write(_json(report), cfg.output_path)
            return EXIT_OK if report["passed"] else EXIT_VERIFY_FAILED
        _write(COMMANDS[args.command](cfg), cfg.output_path)
    except QuadratureError as exc:
        err = {
            "error": "quadrature_nonconvergence",
            "message": str(exc),
            "best_estimate": exc.value,
            "abs_error_estimate": exc.abs_error_estimate,
            "nodes_used": exc.nodes_used,
        }
        _write(_json(err), cfg.output_path)
        return EXIT_NONCONVERGENCE
    except DomainError as exc:
        print(f"rosenmorse: error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
