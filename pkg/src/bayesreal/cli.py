"""
Command-line front end.

    bayesreal spin-static --theta-a 90 --theta-b 0 --theta-c 45
    bayesreal spin-scan --case ++ --theta-ba 90 --omega-t-min -45 --omega-t-max 45
    bayesreal meson-static --scenario Bs
    bayesreal meson-scan --index 1 --scenario Bs --zmax 30 --points 30001
    bayesreal meson-table --scenario K --z-probe 2

Angles are in degrees; meson rate overrides are in MeV. Exit status is 0
on success (a detected violation is a result, not a failure), 2 on usage
errors and 3 when a computed value breaks an internal invariant.
"""

from __future__ import annotations

import argparse
import contextlib
import csv
import io
import json
import math
import sys
from typing import Iterable, Sequence

import numpy as np

from . import spin
from .errors import BayesRealError, InvariantViolation
from .mesons import (
    EVENT_TABLE,
    MesonParams,
    guaranteed_violation_time,
    load_scenarios,
    mixing_from_params,
    static_equality_residual,
    violation_scan,
)
from .mesons.inequality import f_function_z
from .mesons.params import C_MM_PER_S, mev_to_rate
from .mesons.scan import ScanResult, exceedance_intervals, uniform_grid

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_INTERNAL = 3


class UsageError(Exception):
    pass


def fmt(x: float) -> str:
    """17 significant digits: round-trips every double exactly."""
    return format(float(x), ".17g")


# -- output ------------------------------------------------------------------


def _write_csv(out, header: Sequence[str], rows: Iterable[Sequence]) -> None:
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([fmt(v) if isinstance(v, (float, np.floating)) else v for v in row])


def _write_json(out, obj) -> None:
    json.dump(obj, out, indent=2, allow_nan=False)
    out.write("\n")


@contextlib.contextmanager
def _opened(path: str | None):
    if path is None or path == "-":
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            yield fh


def _require_probability(value: float, what: str) -> float:
    if not (math.isfinite(value) and -1e-12 <= value <= 1 + 1e-12):
        raise InvariantViolation(f"{what} = {value!r} outside [0, 1]")
    return value


def _require_finite_nonnegative(values: np.ndarray, what: str) -> None:
    if not np.all(np.isfinite(values)) or np.any(values < 0):
        raise InvariantViolation(f"{what} contains negative or non-finite values")


def _emit_report(args, fields: list[tuple[str, object]]) -> None:
    with _opened(args.out) as out:
        if args.format == "json":
            _write_json(out, dict(fields))
        else:
            _write_csv(out, ["quantity", "value"], fields)


def _scan_json(scan: ScanResult, params: dict, extra: dict | None = None) -> dict:
    obj = {
        "label": scan.label,
        "axis": [float(x) for x in scan.axis],
        "values": [float(v) for v in scan.values],
        "violation_intervals": [[a, b] for a, b in scan.violation_intervals],
        "params": params,
    }
    if extra:
        obj.update(extra)
    return obj


# -- scenarios ---------------------------------------------------------------


def _resolve_params(args) -> MesonParams:
    scenarios = load_scenarios(args.params)
    if args.scenario not in scenarios:
        raise UsageError(f"unknown scenario {args.scenario!r}; available: {', '.join(scenarios)}")
    base = scenarios[args.scenario]
    return base.with_overrides(
        r=args.r,
        zeta=None if args.zeta is None else math.radians(args.zeta),
        delta_gamma=None if args.dgamma is None else mev_to_rate(args.dgamma),
        delta_m=None if args.dm is None else mev_to_rate(args.dm),
        gamma_mean=None if args.gamma is None else mev_to_rate(args.gamma),
    )


# -- commands ----------------------------------------------------------------


def run_spin_static(args) -> None:
    a, b, c = (spin.Direction.from_degrees(x) for x in (args.theta_a, args.theta_b, args.theta_c))
    report = spin.static_bayes_pipeline(a, b, c)
    for name in ("w_s1_s3", "w_s2_s3", "w_s2_given_s1s3", "w_s1_given_s2s3", "cross_term"):
        _require_probability(getattr(report, name), name)
    gap = spin.static_equality_gap(a.theta - b.theta, b.theta - c.theta)
    _emit_report(
        args,
        [
            ("theta_a_deg", float(args.theta_a)),
            ("theta_b_deg", float(args.theta_b)),
            ("theta_c_deg", float(args.theta_c)),
            ("w_s1_s3", report.w_s1_s3),
            ("w_s2_s3", report.w_s2_s3),
            ("w_s2_given_s1s3", report.w_s2_given_s1s3),
            ("w_s1_given_s2s3", report.w_s1_given_s2s3),
            ("cross_term", report.cross_term),
            ("lhs", report.bayes.lhs),
            ("rhs", report.bayes.rhs),
            ("residual", report.bayes.residual),
            ("equality_gap", gap),
        ],
    )


def run_spin_scan(args) -> None:
    case = spin.SpinCase.parse(args.case)
    theta_ba = math.radians(args.theta_ba)
    grid_deg = uniform_grid(args.omega_t_min, args.omega_t_max, args.points)

    def margin(deg: float):
        return spin.spin_inequality_margin(case, theta_ba, math.radians(deg))

    rows = []
    for deg in grid_deg:
        m = margin(float(deg))
        _require_probability(m.lhs, "lhs")
        _require_probability(m.rhs, "rhs")
        rows.append((float(deg), m.lhs, m.rhs, m.margin, int(m.violated)))
    margins = np.array([r[3] for r in rows])
    intervals = exceedance_intervals(lambda d: -margin(d).margin, grid_deg, -margins)
    scan = ScanResult(grid_deg, margins, intervals, label=f"margin{case.value}")

    with _opened(args.out) as out:
        if args.format == "json":
            extra = {"lhs": [r[1] for r in rows], "rhs": [r[2] for r in rows], "axis_unit": "omega_t_deg"}
            _write_json(out, _scan_json(scan, {"case": case.value, "theta_ba_deg": float(args.theta_ba)}, extra))
        else:
            _write_csv(out, ["omega_t_deg", "lhs", "rhs", "margin", "violated"], rows)
    _summarize(scan, "omega_t_deg")


def run_meson_static(args) -> None:
    params = _resolve_params(args)
    mix = mixing_from_params(params)
    plus = static_equality_residual("plus", mix)
    minus = static_equality_residual("minus", mix)
    _emit_report(
        args,
        [
            ("scenario", params.name),
            ("r", params.r),
            ("zeta_deg", math.degrees(params.zeta)),
            ("abs_1_plus_p_over_q_sq", plus + 2),
            ("residual_plus", plus),
            ("abs_1_minus_p_over_q_sq", minus + 2),
            ("residual_minus", minus),
        ],
    )


def run_meson_scan(args) -> None:
    params = _resolve_params(args)
    scan = violation_scan(args.index, params, args.zmax, args.points)
    _require_finite_nonnegative(scan.values, scan.label)
    ct_mm = scan.axis / params.gamma_mean * C_MM_PER_S
    onset = scan.persistent_onset()
    with _opened(args.out) as out:
        if args.format == "json":
            extra = {
                "ct_mm": [float(x) for x in ct_mm],
                "persistent_onset": onset,
                "guaranteed_violation_z": _guaranteed_z(params),
            }
            _write_json(out, _scan_json(scan, params.to_mev_dict(), extra))
        else:
            _write_csv(out, ["z", "ct_mm", scan.label], zip(scan.axis.tolist(), ct_mm.tolist(), scan.values.tolist()))
    _summarize(scan, "z")


def _guaranteed_z(params: MesonParams) -> float | None:
    if params.delta_gamma == 0:
        return None
    return guaranteed_violation_time(params) * params.gamma_mean


def run_meson_table(args) -> None:
    params = _resolve_params(args)
    rows = []
    for row in EVENT_TABLE:
        value = float(f_function_z(row.index, args.z_probe, params))
        if not (math.isfinite(value) and value >= 0):
            raise InvariantViolation(f"F{row.index} = {value!r}")
        rows.append((str(row.event), row.index, value, "violates" if value > 1 else "holds", row.expected))
    with _opened(args.out) as out:
        if args.format == "json":
            _write_json(
                out,
                {
                    "scenario": params.name,
                    "z_probe": float(args.z_probe),
                    "params": params.to_mev_dict(),
                    "rows": [dict(zip(("event", "index", "value", "verdict", "expected"), r)) for r in rows],
                },
            )
        else:
            _write_csv(out, ["event", "index", "value", "verdict", "expected"], rows)


def _summarize(scan: ScanResult, unit: str) -> None:
    n = len(scan.violation_intervals)
    print(f"# {scan.label}: {n} violation interval(s)", file=sys.stderr)
    if n:
        first = scan.violation_intervals[0]
        print(f"# first: {unit} in [{fmt(first[0])}, {fmt(first[1])}]", file=sys.stderr)
        onset = scan.persistent_onset()
        if onset is not None:
            print(f"# violated from {unit} = {fmt(onset)} to the end of the scan", file=sys.stderr)


# -- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bayesreal", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    output = argparse.ArgumentParser(add_help=False)
    output.add_argument("--format", choices=("csv", "json"), default="csv")
    output.add_argument("--out", metavar="PATH", help="output file (default: stdout)")

    meson = argparse.ArgumentParser(add_help=False)
    meson.add_argument("--params", metavar="FILE", help="scenario file (default: bundled)")
    meson.add_argument("--scenario", default="Bs")
    meson.add_argument("--r", type=float, help="|q/p|")
    meson.add_argument("--zeta", type=float, metavar="DEG", help="phase of q/p")
    meson.add_argument("--dgamma", type=float, metavar="MEV", help="Gamma_H - Gamma_L")
    meson.add_argument("--dm", type=float, metavar="MEV", help="M_H - M_L")
    meson.add_argument("--gamma", type=float, metavar="MEV", help="mean width")

    p = sub.add_parser("spin-static", parents=[output], help="static equality for the spin singlet")
    p.add_argument("--theta-a", type=float, default=90.0, metavar="DEG")
    p.add_argument("--theta-b", type=float, default=0.0, metavar="DEG")
    p.add_argument("--theta-c", type=float, default=45.0, metavar="DEG")
    p.set_defaults(func=run_spin_static)

    p = sub.add_parser("spin-scan", parents=[output], help="time-dependent inequality vs precession phase")
    p.add_argument("--case", default="++", choices=[c.value for c in spin.SpinCase])
    p.add_argument("--theta-ba", type=float, default=90.0, metavar="DEG")
    p.add_argument("--omega-t-min", type=float, default=-45.0, metavar="DEG")
    p.add_argument("--omega-t-max", type=float, default=45.0, metavar="DEG")
    p.add_argument("--points", type=int, default=181)
    p.set_defaults(func=run_spin_scan)

    p = sub.add_parser("meson-static", parents=[output, meson], help="static equality |1 +- p/q|^2 = 2")
    p.set_defaults(func=run_meson_static)

    p = sub.add_parser("meson-scan", parents=[output, meson], help="scan F_N over lifetimes")
    p.add_argument("--index", type=int, default=1, choices=range(1, 9), metavar="N")
    p.add_argument("--zmax", type=float, default=30.0)
    p.add_argument("--points", type=int, default=30001)
    p.set_defaults(func=run_meson_scan)

    p = sub.add_parser("meson-table", parents=[output, meson], help="all event sets at one time")
    p.add_argument("--z-probe", type=float, default=1.0)
    p.set_defaults(func=run_meson_table)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except InvariantViolation as exc:
        print(f"bayesreal: internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (UsageError, BayesRealError, OSError) as exc:
        print(f"bayesreal {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
