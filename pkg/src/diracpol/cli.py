"""Command-line interface: single-value queries, reference-table emission,
oracle cross-checks, and limit verification.

Exit codes: 0 success, 2 argument errors, 3 supercritical charge,
4 series convergence failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .atom import ALPHA_INV_CODATA2014, ALPHA_INV_SIGMA_CODATA2014, AtomSpec, ChannelIndex, SupercriticalError
from .polarizability import (
    nonrel_limit,
    polarizability_planar,
    polarizability_spatial,
    polarizability_sturmian,
    quasirel_coefficient,
    r_channel_closed,
)
from .specfun import ConvergenceError
from .sturmian import SturmianIndex, first_order_integral, first_order_integral_quadrature, r_channel_series
from .tablegen import ConstantSet, generate_table, rows_to_csv, rows_to_json

ALPHA_INV_ENV = "DIRACPOL_ALPHA_INV"

_EXIT_OK = 0
_EXIT_USAGE = 2
_EXIT_SUPERCRITICAL = 3
_EXIT_CONVERGENCE = 4


def _fmt(x: float) -> str:
    return f"{x:.15g}"


def _default_alpha_inv() -> float:
    raw = os.environ.get(ALPHA_INV_ENV)
    if raw is None:
        return ALPHA_INV_CODATA2014
    try:
        return float(raw)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(
            f"environment variable {ALPHA_INV_ENV}={raw!r} is not a number"
        ) from exc


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="diracpol",
        description=(
            "Ground-state static dipole polarizabilities of relativistic "
            "hydrogen-like atoms (planar and spatial)."
        ),
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--alpha-inv",
        type=float,
        default=None,
        help=f"inverse fine-structure constant (default: ${ALPHA_INV_ENV} "
        f"or {ALPHA_INV_CODATA2014})",
    )
    common.add_argument("--tol", type=float, default=None, help="relative series tolerance")
    common.add_argument(
        "--format",
        choices=("text", "csv", "json"),
        default="text",
        help="output format (csv applies to the table command only)",
    )
    common.add_argument("--output", default=None, help="output file (default: stdout)")

    sub = parser.add_subparsers(dest="command", required=True)

    p_planar = sub.add_parser("planar", parents=[common], help="planar (2D) polarizability at one charge")
    p_planar.add_argument("--Z", type=float, required=True, help="nuclear charge")

    p_spatial = sub.add_parser("spatial", parents=[common], help="spatial (3D) polarizability at one charge")
    p_spatial.add_argument("--Z", type=float, required=True, help="nuclear charge")

    p_table = sub.add_parser("table", parents=[common], help="scaled-polarizability table over a charge range")
    p_table.add_argument("--z-min", type=int, default=1)
    p_table.add_argument("--z-max", type=int, default=68)
    p_table.add_argument(
        "--alpha-inv-sigma",
        type=float,
        default=ALPHA_INV_SIGMA_CODATA2014,
        help="one-standard-deviation uncertainty of alpha_inv",
    )

    p_cross = sub.add_parser(
        "crosscheck",
        parents=[common],
        help="closed form vs Sturmian series vs quadrature at one charge",
    )
    p_cross.add_argument("--Z", type=float, required=True, help="nuclear charge")

    sub.add_parser("limits", parents=[common], help="nonrelativistic and quasi-relativistic reference limits")
    return parser


def _emit(document: str, output: str | None) -> None:
    if output is None:
        sys.stdout.write(document)
    else:
        with open(output, "w", encoding="utf-8") as handle:
            handle.write(document)


def _reldev(a: float, b: float, floor: float) -> float:
    return abs(a - b) / max(abs(a), abs(b), floor)


def _run_single(args: argparse.Namespace, alpha_inv: float, tol: float) -> str:
    dimension = args.command
    spec = AtomSpec(args.Z, dimension, alpha_inv)
    compute = polarizability_planar if dimension == "planar" else polarizability_spatial
    result = compute(spec, tol)
    diag = result.diagnostics
    if args.format == "json":
        payload = {
            "command": dimension,
            "Z": args.Z,
            "alpha_inv": alpha_inv,
            "alpha_1_a0^3": result.value_a0_cubed,
            "Z^4*alpha_1_a0^3": result.scaled_Z4,
            "method": result.method,
            "terms_used": diag.terms_used,
            "tail_estimate": diag.tail_estimate,
            "converged": diag.converged,
        }
        return json.dumps(payload, indent=2) + "\n"
    lines = [
        f"Z = {_fmt(args.Z)}",
        f"alpha_inv = {_fmt(alpha_inv)}",
        f"alpha_1 = {_fmt(result.value_a0_cubed)} a0^3",
        f"Z^4*alpha_1 = {_fmt(result.scaled_Z4)} a0^3",
        f"series: terms = {diag.terms_used}, tail <= {diag.tail_estimate:.2e}, "
        f"converged = {diag.converged}",
    ]
    return "\n".join(lines) + "\n"


def _run_table(args: argparse.Namespace, alpha_inv: float, tol: float) -> str:
    consts = ConstantSet(alpha_inv, args.alpha_inv_sigma)
    rows = generate_table(args.z_min, args.z_max, consts, tol)
    if args.format == "csv":
        return rows_to_csv(rows)
    if args.format == "json":
        return rows_to_json(rows)
    lines = [f"{'Z':>3}  {'Z^4*alpha_1 (a0^3)':<22} uncertainty"]
    lines.extend(f"{row.Z:>3}  {row.display:<22} ({row.sigma_last_two})" for row in rows)
    return "\n".join(lines) + "\n"


def _run_crosscheck(args: argparse.Namespace, alpha_inv: float, tol: float) -> str:
    spec = AtomSpec(args.Z, "planar", alpha_inv)
    channels = (ChannelIndex(0.5), ChannelIndex(-1.5))
    report = {}
    for ch in channels:
        closed = r_channel_closed(ch, spec, tol)
        series, diag = r_channel_series(ch, spec, tol)
        pairs = [
            (
                first_order_integral(SturmianIndex(n_r, ch), spec),
                first_order_integral_quadrature(SturmianIndex(n_r, ch), spec),
            )
            for n_r in range(-3, 4)
        ]
        # Exactly-zero integrals are compared on the scale of the channel's
        # largest integral; quadrature returns rounding noise for them.
        scale = max(
            max(abs(exact.plain), abs(exact.mu_weighted)) for exact, _ in pairs
        )
        quad_dev = 0.0
        for exact, quad in pairs:
            quad_dev = max(
                quad_dev,
                _reldev(exact.plain, quad.plain, scale),
                _reldev(exact.mu_weighted, quad.mu_weighted, scale),
            )
        report[ch.kappa] = {
            "closed": closed,
            "series": series,
            "series_terms": diag.terms_used,
            "closed_vs_series": _reldev(closed, series, 1e-300),
            "quadrature_max_dev": quad_dev,
        }
    closed_alpha = polarizability_planar(spec, tol)
    series_alpha = polarizability_sturmian(spec, tol)
    alpha_dev = _reldev(closed_alpha.value_a0_cubed, series_alpha.value_a0_cubed, 1e-300)
    if args.format == "json":
        payload = {
            "Z": args.Z,
            "alpha_inv": alpha_inv,
            "tol": tol,
            "channels": {
                str(kappa): entry for kappa, entry in report.items()
            },
            "alpha_1_closed": closed_alpha.value_a0_cubed,
            "alpha_1_series": series_alpha.value_a0_cubed,
            "alpha_1_rel_dev": alpha_dev,
        }
        return json.dumps(payload, indent=2) + "\n"
    lines = [f"Z = {_fmt(args.Z)}, alpha_inv = {_fmt(alpha_inv)}, tol = {tol:g}"]
    for kappa, entry in report.items():
        lines.append(
            f"channel kappa = {kappa:+g}: closed = {_fmt(entry['closed'])}, "
            f"series = {_fmt(entry['series'])} ({entry['series_terms']} terms), "
            f"rel dev = {entry['closed_vs_series']:.3e}"
        )
        lines.append(
            f"  closed integrals vs quadrature (|n_r| <= 3): max rel dev = "
            f"{entry['quadrature_max_dev']:.3e}"
        )
    lines.append(
        f"alpha_1: closed = {_fmt(closed_alpha.value_a0_cubed)} a0^3, "
        f"series = {_fmt(series_alpha.value_a0_cubed)} a0^3, rel dev = {alpha_dev:.3e}"
    )
    return "\n".join(lines) + "\n"


def _run_limits(args: argparse.Namespace, alpha_inv: float, tol: float) -> str:
    planar_nr = nonrel_limit("planar")
    spatial_nr = nonrel_limit("spatial")
    planar_c = quasirel_coefficient("planar", alpha_inv=alpha_inv, tol=tol)
    spatial_c = quasirel_coefficient("spatial", alpha_inv=alpha_inv, tol=tol)
    if args.format == "json":
        payload = {
            "planar_nonrel_scaled": planar_nr,
            "planar_nonrel_target": "21/128",
            "spatial_nonrel_scaled": spatial_nr,
            "spatial_nonrel_target": "9/2",
            "planar_quasirel_coefficient": planar_c,
            "planar_quasirel_target": -3.5,
            "spatial_quasirel_coefficient": spatial_c,
            "spatial_quasirel_target": -28.0 / 27.0,
        }
        return json.dumps(payload, indent=2) + "\n"
    lines = [
        f"planar nonrelativistic Z^4*alpha_1 = {_fmt(planar_nr)} a0^3 (target 21/128 = 0.1640625)",
        f"spatial nonrelativistic Z^4*alpha_1 = {_fmt(spatial_nr)} a0^3 (target 9/2 = 4.5)",
        f"planar quasi-relativistic coefficient = {planar_c:.9f} (target -7/2 = -3.5)",
        f"spatial quasi-relativistic coefficient = {spatial_c:.9f} "
        f"(target -28/27 = {-28.0 / 27.0:.9f})",
    ]
    return "\n".join(lines) + "\n"


def run(argv: list[str] | None = None) -> int:
    """Parse arguments, execute one command, and return the exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    try:
        alpha_inv = args.alpha_inv if args.alpha_inv is not None else _default_alpha_inv()
        if args.format == "csv" and args.command != "table":
            parser.error("csv output is only defined for the table command")
        default_tol = 1e-10 if args.command == "crosscheck" else 1e-16
        tol = args.tol if args.tol is not None else default_tol

        if args.command in ("planar", "spatial"):
            document = _run_single(args, alpha_inv, tol)
        elif args.command == "table":
            document = _run_table(args, alpha_inv, tol)
        elif args.command == "crosscheck":
            document = _run_crosscheck(args, alpha_inv, tol)
        else:
            document = _run_limits(args, alpha_inv, tol)
    except SupercriticalError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _EXIT_SUPERCRITICAL
    except ConvergenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _EXIT_CONVERGENCE
    except SystemExit as exc:
        return int(exc.code or 0)
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _EXIT_USAGE

    _emit(document, args.output)
    return _EXIT_OK


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
