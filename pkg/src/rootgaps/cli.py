"""Command-line interface: root tables, verification sweeps, bound sweeps.

Subcommands:

* ``roots``   ordered roots with consecutive gaps per sweep point,
* ``verify``  spectral match against the closed-form spectra, trace
  identities, coordinate-form agreement, and the two-route
  diagonal-of-square consistency check,
* ``bounds``  the full bound-report table plus a sharpness summary.

Output is CSV (default) or JSON, deterministic byte for byte: fixed
column order, shortest round-trip float formatting, rows sorted by
(family, parameters, N, id, index) regardless of worker scheduling.

Exit codes: 0 all checks passed, 1 a mathematical check failed, 2 usage
error, 3 numerical failure.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import bounds as bounds_mod
from .covariance import (
    CoordinateForm,
    diag_of_square,
    hermite_S,
    jacobi_S,
    laguerre_S,
    predicted_spectrum,
    hermite_interaction_sums,
    jacobi_interaction_sums,
    laguerre_interaction_sums,
)
from .eigensolve import DenseSymmetric, dense_eigenvalues
from .errors import ParameterDomainError, RootgapsError
from .families import FamilyKind, PolynomialFamily, hermite, jacobi, laguerre
from .roots import compute_roots, gap_statistics

# Default sweep grid: the Laguerre weights span the small- and large-nu
# regimes, the Jacobi pairs include a near-singular weight and a large
# symmetric one.
DEFAULT_LAGUERRE_NUS = (0.1, 0.5, 1.0, 2.0, 10.0, 50.0)
DEFAULT_JACOBI_PARAMS = ((-0.5, -0.5), (0.0, 0.0), (1.0, -0.9), (2.0, 3.0), (10.0, 10.0))
DEFAULT_N_MAX = 40

_TINY = float(np.finfo(float).tiny)

ROOTS_COLUMNS = ("family", "params", "N", "i", "z_i", "gap_i")
VERIFY_COLUMNS = ("family", "params", "N", "check_id", "value", "tolerance", "passed")
BOUNDS_COLUMNS = (
    "family", "params", "N", "bound_id", "index",
    "bound_value", "observed_value", "slack", "holds", "sharpness",
)


@dataclass
class SweepConfig:
    """Resolved sweep request: grid points, tolerances, output shape."""

    command: str
    families: list[PolynomialFamily]
    n_min: int | None = None
    n_max: int | None = None
    n_step: int = 1
    fmt: str = "csv"
    out: str | None = None
    tol: float | None = None
    jobs: int = 1
    corrupt: bool = False


def default_families() -> list[PolynomialFamily]:
    fams: list[PolynomialFamily] = [hermite()]
    fams += [laguerre(nu) for nu in DEFAULT_LAGUERRE_NUS]
    fams += [jacobi(a, b) for a, b in DEFAULT_JACOBI_PARAMS]
    return fams


def _family_sort_key(fam: PolynomialFamily) -> tuple:
    return (
        fam.kind.value,
        fam.nu if fam.nu is not None else 0.0,
        fam.alpha if fam.alpha is not None else 0.0,
        fam.beta if fam.beta is not None else 0.0,
    )


def _params_text(fam: PolynomialFamily) -> str:
    if fam.kind is FamilyKind.HERMITE:
        return "-"
    if fam.kind is FamilyKind.LAGUERRE:
        return f"nu={float(fam.nu)!r}"
    return f"alpha={float(fam.alpha)!r} beta={float(fam.beta)!r}"


def sweep_points(config: SweepConfig) -> list[tuple[PolynomialFamily, int]]:
    points = []
    for fam in sorted(config.families, key=_family_sort_key):
        lo = config.n_min if config.n_min is not None else (2 if fam.kind is FamilyKind.HERMITE else 1)
        hi = config.n_max if config.n_max is not None else DEFAULT_N_MAX
        if config.command == "bounds" and fam.kind is FamilyKind.HERMITE:
            lo = max(lo, 2)  # the Hermite bound set starts at N = 2
        for n in range(lo, hi + 1, config.n_step):
            points.append((fam, n))
    if not points:
        raise ParameterDomainError("empty sweep: no (family, N) points selected")
    return points


def _spectral_tolerance(n: int, override: float | None) -> float:
    if override is not None:
        return override
    return 1e-8 if n <= 20 else 1e-6


def _roots_point(fam: PolynomialFamily, n: int) -> tuple[list[dict], dict]:
    rv = compute_roots(fam, n)
    stats = gap_statistics(rv)
    rows = []
    params = _params_text(fam)
    for i in range(n):
        if i < n - 1:
            gap = abs(float(rv.roots[i + 1]) - float(rv.roots[i]))
        else:
            gap = None
        rows.append(
            {
                "family": fam.kind.value,
                "params": params,
                "N": n,
                "i": i + 1,
                "z_i": float(rv.roots[i]),
                "gap_i": gap,
            }
        )
    summary = {
        "family": fam.kind.value,
        "params": params,
        "N": n,
        "min_gap": stats.min_gap,
        "boundary_low": stats.boundary_low,
        "boundary_high": stats.boundary_high,
    }
    return rows, summary


def _verify_point(fam: PolynomialFamily, n: int, tol: float | None, corrupt: bool) -> tuple[list[dict], dict]:
    rv = compute_roots(fam, n)
    if fam.kind is FamilyKind.HERMITE:
        cov = hermite_S(rv)
    elif fam.kind is FamilyKind.LAGUERRE:
        cov = laguerre_S(rv)
    else:
        cov = jacobi_S(rv)
    matrix = cov.matrix.entries
    if corrupt:
        matrix = matrix.copy()
        j = min(1, n - 1)
        matrix[0, j] += 0.5
        matrix[j, 0] = matrix[0, j]
    params = _params_text(fam)
    checks: list[tuple[str, float, float]] = []

    predicted = predicted_spectrum(fam, n)
    spectrum = dense_eigenvalues(DenseSymmetric(matrix))
    spectral_err = float(np.max(np.abs(spectrum.eigenvalues - predicted) / predicted))
    checks.append(("spectrum-match", spectral_err, _spectral_tolerance(n, tol)))

    ident_tol = 1e-10 if tol is None else tol
    roots = rv.roots
    if fam.kind is FamilyKind.HERMITE:
        inv2, inv4 = hermite_interaction_sums(roots)
        linear = float(inv2.sum())
        linear_target = n * (n - 1) / 2.0
        square = float((inv2 * inv2 + inv4).sum())
        square_target = n * (n - 1) * (2 * n - 1) / 6.0
        checks.append(
            ("trace-identity-linear", _rel_defect(linear, linear_target), ident_tol)
        )
        checks.append(
            ("trace-identity-square", _rel_defect(square, square_target), ident_tol)
        )
    elif fam.kind is FamilyKind.LAGUERRE:
        lin, cross = laguerre_interaction_sums(roots, float(fam.nu))
        # tr(S - I) is the sum of the odd numbers 1, 3, ..., 2N-1, i.e. N^2
        linear = float(lin.sum())
        checks.append(("trace-identity-linear", _rel_defect(linear, float(n * n)), ident_tol))
        square = float((lin * lin + cross).sum())
        square_target = n * (2 * n - 1) * (2 * n + 1) / 3.0
        checks.append(("trace-identity-square", _rel_defect(square, square_target), ident_tol))
        alt = laguerre_S(rv, CoordinateForm.SQRT_R)
        scale = np.maximum(np.abs(cov.matrix.entries), np.abs(alt.matrix.entries))
        diff = np.abs(cov.matrix.entries - alt.matrix.entries) / np.maximum(scale, _TINY)
        checks.append(("coordinate-forms-match", float(diff.max()), 1e-13 if tol is None else tol))
    else:
        checks.append(
            ("trace-identity-linear", _rel_defect(float(np.trace(matrix)), float(predicted.sum())), ident_tol)
        )

    if corrupt:
        shifted = matrix - np.eye(n) if fam.kind is not FamilyKind.JACOBI else matrix.copy()
        matrix_route = (shifted * shifted).sum(axis=1)
        closed_route = _closed_diag_square(fam, roots)
        scale = np.maximum(np.maximum(np.abs(matrix_route), np.abs(closed_route)), _TINY)
        diag_resid = float(np.max(np.abs(matrix_route - closed_route) / scale))
    else:
        diag_resid = diag_of_square(cov).residual
    checks.append(("diag-square-consistency", diag_resid, ident_tol))

    rows = [
        {
            "family": fam.kind.value,
            "params": params,
            "N": n,
            "check_id": check_id,
            "value": value,
            "tolerance": tolerance,
            "passed": value <= tolerance,
        }
        for check_id, value, tolerance in sorted(checks)
    ]
    summary = {
        "family": fam.kind.value,
        "params": params,
        "N": n,
        "failed": sum(1 for row in rows if not row["passed"]),
    }
    return rows, summary


def _closed_diag_square(fam: PolynomialFamily, roots: np.ndarray) -> np.ndarray:
    if fam.kind is FamilyKind.HERMITE:
        inv2, inv4 = hermite_interaction_sums(roots)
        return inv2 * inv2 + inv4
    if fam.kind is FamilyKind.LAGUERRE:
        lin, cross = laguerre_interaction_sums(roots, float(fam.nu))
        return lin * lin + cross
    lin, cross = jacobi_interaction_sums(roots, float(fam.alpha), float(fam.beta))
    return lin * lin + cross


def _rel_defect(value: float, target: float) -> float:
    return abs(value - target) / max(abs(target), 1.0)


def _bounds_point(fam: PolynomialFamily, n: int) -> tuple[list[dict], dict]:
    rv = compute_roots(fam, n)
    if fam.kind is FamilyKind.HERMITE:
        reports = bounds_mod.hermite_diag_bound(rv)
    elif fam.kind is FamilyKind.LAGUERRE:
        reports = bounds_mod.laguerre_bounds(rv) + bounds_mod.laguerre_comparators(rv)
    else:
        reports = bounds_mod.jacobi_bounds(rv) + [bounds_mod.jacobi_comparator(rv)]
    params = _params_text(fam)
    rows = [
        {
            "family": fam.kind.value,
            "params": params,
            "N": n,
            "bound_id": rep.bound_id,
            "index": rep.index,
            "bound_value": rep.bound_value,
            "observed_value": rep.observed_value,
            "slack": rep.slack,
            "holds": rep.holds,
            "sharpness": rep.sharpness,
            "comparator": rep.comparator,
            "note": rep.note,
        }
        for rep in reports
    ]
    rows.sort(key=lambda row: (row["bound_id"], row["index"] if row["index"] is not None else 0))
    agg = bounds_mod.sharpness_summary(reports)
    summary = {
        "family": fam.kind.value,
        "params": params,
        "N": n,
        "worst_sharpness": {k: agg.worst[k] for k in sorted(agg.worst)},
        "mean_sharpness": {k: agg.mean[k] for k in sorted(agg.mean)},
        "diag_square_identity_ratio": agg.diag_square_identity_ratio,
        "comparator_ratios": {k: agg.comparator_ratios[k] for k in sorted(agg.comparator_ratios)},
        "violations": sum(
            1 for rep in reports if not rep.comparator and not rep.note and not rep.holds
        ),
    }
    return rows, summary


def _evaluate_point(task: tuple) -> tuple[tuple, list[dict], dict]:
    command, fam, n, tol, corrupt = task
    if command == "roots":
        rows, summary = _roots_point(fam, n)
    elif command == "verify":
        rows, summary = _verify_point(fam, n, tol, corrupt)
    else:
        rows, summary = _bounds_point(fam, n)
    return (_family_sort_key(fam), n), rows, summary


def _run_sweep(config: SweepConfig) -> tuple[list[dict], list[dict]]:
    tasks = [
        (config.command, fam, n, config.tol, config.corrupt)
        for fam, n in sweep_points(config)
    ]
    if config.jobs > 1:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            outcomes = list(pool.map(_evaluate_point, tasks))
    else:
        outcomes = [_evaluate_point(task) for task in tasks]
    outcomes.sort(key=lambda item: item[0])
    rows: list[dict] = []
    summaries: list[dict] = []
    for _, point_rows, summary in outcomes:
        rows.extend(point_rows)
        summaries.append(summary)
    return rows, summaries


def _format_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _json_safe(value):
    if isinstance(value, float) and math.isnan(value):
        return None
    if isinstance(value, dict):
        return {key: _json_safe(item) for key, item in value.items()}
    if isinstance(value, list):
        return [_json_safe(item) for item in value]
    return value


def _emit(config: SweepConfig, columns: tuple[str, ...], rows: list[dict], summaries: list[dict]) -> None:
    if config.fmt == "csv":
        lines = [",".join(columns)]
        lines += [",".join(_format_cell(row[col]) for col in columns) for row in rows]
        text = "\n".join(lines) + "\n"
    else:
        document = {
            "config": {
                "command": config.command,
                "families": [fam.label() for fam in sorted(config.families, key=_family_sort_key)],
                "n_min": config.n_min,
                "n_max": config.n_max,
                "n_step": config.n_step,
                "tol": config.tol,
            },
            "results": [_json_safe(row) for row in rows],
            "summary": [_json_safe(item) for item in summaries],
        }
        text = json.dumps(document, indent=2, sort_keys=True, allow_nan=False) + "\n"
    if config.out:
        with open(config.out, "w", encoding="utf-8", newline="\n") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def cmd_roots(config: SweepConfig) -> int:
    rows, summaries = _run_sweep(config)
    _emit(config, ROOTS_COLUMNS, rows, summaries)
    return 0


def cmd_verify(config: SweepConfig) -> int:
    rows, summaries = _run_sweep(config)
    _emit(config, VERIFY_COLUMNS, rows, summaries)
    return 0 if all(row["passed"] for row in rows) else 1


def cmd_bounds(config: SweepConfig) -> int:
    rows, summaries = _run_sweep(config)
    _emit(config, BOUNDS_COLUMNS, rows, summaries)
    ok = all(
        row["holds"] for row in rows if not row["comparator"] and not row["note"]
    )
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rootgaps",
        description="Roots of classical orthogonal polynomials and their verified gap bounds.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_text in (
        ("roots", "emit ordered roots and consecutive gaps"),
        ("verify", "check spectra, trace identities, and consistency"),
        ("bounds", "evaluate every bound and comparator"),
    ):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--family", choices=[k.value for k in FamilyKind], default=None)
        p.add_argument("--nu", type=float, default=None, help="Laguerre weight exponent (> 0)")
        p.add_argument("--alpha", type=float, default=None, help="Jacobi exponent (> -1)")
        p.add_argument("--beta", type=float, default=None, help="Jacobi exponent (> -1)")
        p.add_argument("--n", type=int, default=None, help="single polynomial order")
        p.add_argument("--n-min", type=int, default=None)
        p.add_argument("--n-max", type=int, default=None)
        p.add_argument("--n-step", type=int, default=1)
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        p.add_argument("--out", default=None, help="output path (default: stdout)")
        p.add_argument("--tol", type=float, default=None, help="override check tolerances")
        p.add_argument("--jobs", type=int, default=1, help="parallel worker processes")
        if name == "verify":
            p.add_argument(
                "--corrupt", action="store_true",
                help="testing hook: perturb one matrix entry per sweep point",
            )
    return parser


def _resolve_families(parser: argparse.ArgumentParser, args: argparse.Namespace) -> list[PolynomialFamily]:
    try:
        if args.family is None:
            if any(v is not None for v in (args.nu, args.alpha, args.beta)):
                parser.error("--nu/--alpha/--beta require --family")
            return default_families()
        kind = FamilyKind(args.family)
        if kind is FamilyKind.HERMITE:
            if any(v is not None for v in (args.nu, args.alpha, args.beta)):
                parser.error("hermite takes no parameters")
            return [hermite()]
        if kind is FamilyKind.LAGUERRE:
            if args.alpha is not None or args.beta is not None:
                parser.error("laguerre takes --nu only")
            if args.nu is None:
                return [laguerre(nu) for nu in DEFAULT_LAGUERRE_NUS]
            return [laguerre(args.nu)]
        if args.nu is not None:
            parser.error("jacobi takes --alpha and --beta only")
        if (args.alpha is None) != (args.beta is None):
            parser.error("jacobi needs both --alpha and --beta")
        if args.alpha is None:
            return [jacobi(a, b) for a, b in DEFAULT_JACOBI_PARAMS]
        return [jacobi(args.alpha, args.beta)]
    except ParameterDomainError as exc:
        parser.error(str(exc))
    raise AssertionError("unreachable")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    families = _resolve_families(parser, args)
    if args.n is not None and (args.n_min is not None or args.n_max is not None):
        parser.error("--n conflicts with --n-min/--n-max")
    n_min, n_max = (args.n, args.n) if args.n is not None else (args.n_min, args.n_max)
    if args.n_step < 1:
        parser.error("--n-step must be >= 1")
    if n_min is not None and n_min < 1:
        parser.error("--n/--n-min must be >= 1")
    if n_min is not None and n_max is not None and n_max < n_min:
        parser.error("--n-max must be >= --n-min")
    if args.jobs < 1:
        parser.error("--jobs must be >= 1")
    config = SweepConfig(
        command=args.command,
        families=families,
        n_min=n_min,
        n_max=n_max,
        n_step=args.n_step,
        fmt=args.format,
        out=args.out,
        tol=args.tol,
        jobs=args.jobs,
        corrupt=getattr(args, "corrupt", False),
    )
    try:
        if args.command == "roots":
            return cmd_roots(config)
        if args.command == "verify":
            return cmd_verify(config)
        return cmd_bounds(config)
    except RootgapsError as exc:
        print(f"rootgaps: numerical failure: {exc}", file=sys.stderr)
        return 3


def run() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    run()
