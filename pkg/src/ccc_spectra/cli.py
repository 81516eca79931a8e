"""Command-line front end: analyze, sweep, verify, figure."""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path

from .ccc import graph_to_json
from .errors import CccSpectraError
from .groups import parse_family_spec, parse_family_template
from .pipeline import analyze
from .reports import (
    FIGURES,
    figure_rows,
    rows_to_csv,
    rows_to_json,
    run_sweep,
    sweep_param_sets,
)
from .verify import run_verification

_RANGE_RE = re.compile(r"^(\d+)\.\.(\d+)$")


def _parse_range(text: str) -> tuple:
    m = _RANGE_RE.match(text.strip())
    if not m:
        raise CccSpectraError(f"range must look like a..b, got {text!r}")
    lo, hi = int(m.group(1)), int(m.group(2))
    if hi < lo:
        raise CccSpectraError(f"empty range {text!r}")
    return lo, hi


def _emit(text: str, out: str) -> None:
    if out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def _print_analysis(result) -> None:
    spec = result.spec
    group = result.group
    part = result.partition
    print(f"group     : {spec.name} ({spec}), order {group.order}")
    print(
        f"classes   : {part.class_count} total, {len(part.noncentral_classes)} "
        f"non-central, |Z| = {len(part.center)}"
    )
    print(f"quotient  : {result.quotient.describe()}")
    if result.abelian:
        print("graph     : none (group is abelian)")
        closed = result.closed
        print(f"closed    : {closed.source}")
        print(
            f"            E = {closed.e_cn}, LE = {closed.le_cn}, "
            f"LE+ = {closed.le_plus_cn} (degenerate member)"
        )
        return
    report = result.report
    cls = result.classification
    print(f"structure : {result.decomposition.describe()}  ({report.vertex_count} vertices)")
    print(f"cn spec   : {report.cn_spec.describe()}")
    print(f"cnl spec  : {report.cnl_spec.describe()}")
    print(f"cnsl spec : {report.cnsl_spec.describe()}")
    print(f"delta     : {report.delta}")
    print(
        f"energies  : E = {report.e_cn} ({float(report.e_cn):.6g}), "
        f"LE = {report.le_cn} ({float(report.le_cn):.6g}), "
        f"LE+ = {report.le_plus_cn} ({float(report.le_plus_cn):.6g})"
    )
    print(
        f"class     : CNL {cls.cnl_status}, CNSL {cls.cnsl_status}, "
        f"ordering {cls.ordering}, benchmark {cls.benchmark}, "
        f"integral {cls.cnl_integral}/{cls.cnsl_integral}"
    )
    print(f"closed    : {result.closed.source}")
    if result.mismatches:
        print("MISMATCHES:")
        for line in result.mismatches:
            print(f"  - {line}")
    else:
        print("            matches the brute-force pipeline exactly")


def _cmd_analyze(args) -> int:
    spec = parse_family_spec(args.spec)
    result = analyze(spec, numeric_check=args.oracle)
    if args.json:
        payload = {
            "spec": str(spec),
            "name": spec.name,
            "order": result.group.order,
            "center_size": len(result.partition.center),
            "quotient": result.quotient.describe(),
            "abelian": result.abelian,
            "closed_form": result.closed.to_json(),
        }
        if not result.abelian:
            payload["graph"] = graph_to_json(result.graph)
            payload["structure"] = result.decomposition.describe()
            payload["report"] = result.report.to_json()
            payload["classification"] = result.classification.to_json()
            payload["mismatches"] = result.mismatches
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        _print_analysis(result)
    return 1 if result.mismatches else 0


def _cmd_sweep(args) -> int:
    family, fixed = parse_family_template(args.family)
    lo, hi = _parse_range(args.range)
    values = list(range(lo, hi + 1, args.step))
    rows = run_sweep(family, sweep_param_sets(family, fixed, values), args.oracle)
    text = rows_to_csv(rows) if args.format == "csv" else rows_to_json(rows)
    _emit(text, args.out)
    mismatches = [m for row in rows for m in row.oracle_mismatches]
    errors = [row for row in rows if row.error is not None]
    if errors:
        print(f"note: {len(errors)} row(s) recorded an error", file=sys.stderr)
    if mismatches:
        print(f"oracle mismatches: {len(mismatches)}", file=sys.stderr)
        for m in mismatches:
            print(f"  - {m}", file=sys.stderr)
        return 1
    return 0


def _cmd_verify(args) -> int:
    outcomes = run_verification(args.preset)
    ok = True
    for outcome in outcomes:
        print(outcome.describe())
        if not outcome.ok:
            ok = False
            for line in outcome.details:
                print(f"  - {line}")
    return 0 if ok else 1


def _cmd_figure(args) -> int:
    if args.name not in FIGURES:
        raise CccSpectraError(
            f"unknown figure {args.name!r}; expected one of {sorted(FIGURES)}"
        )
    rows = figure_rows(args.name)
    text = rows_to_csv(rows) if args.format == "csv" else rows_to_json(rows)
    _emit(text, args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ccc-spectra",
        description=(
            "Exact common-neighborhood (signless) Laplacian spectra and energies "
            "of commuting conjugacy class graphs of finite group families."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_analyze = sub.add_parser("analyze", help="analyze one family member")
    p_analyze.add_argument("spec", help="family spec, e.g. dihedral:n=7 or unm:n=3,m=5")
    p_analyze.add_argument("--json", action="store_true", help="machine-readable output")
    p_analyze.add_argument(
        "--oracle", action="store_true", help="also run the numeric eigenvalue cross-check"
    )
    p_analyze.set_defaults(func=_cmd_analyze)

    p_sweep = sub.add_parser("sweep", help="sweep a family over a parameter range")
    p_sweep.add_argument("--family", required=True, help="family template, e.g. dihedral or unm:m=5")
    p_sweep.add_argument("--range", required=True, help="inclusive range a..b")
    p_sweep.add_argument("--step", type=int, default=1)
    p_sweep.add_argument("--out", default="-", help="output path (default stdout)")
    p_sweep.add_argument("--format", choices=("csv", "json"), default="csv")
    p_sweep.add_argument(
        "--oracle", action="store_true", help="cross-check every row against the closed forms"
    )
    p_sweep.set_defaults(func=_cmd_sweep)

    p_verify = sub.add_parser("verify", help="run the verification harness")
    p_verify.add_argument(
        "preset", nargs="?", default="quick", choices=("quick", "full")
    )
    p_verify.set_defaults(func=_cmd_verify)

    p_figure = sub.add_parser("figure", help="regenerate one figure's data series")
    p_figure.add_argument("name", help="fig1..fig8")
    p_figure.add_argument("--out", default="-", help="output path (default stdout)")
    p_figure.add_argument("--format", choices=("csv", "json"), default="csv")
    p_figure.set_defaults(func=_cmd_figure)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CccSpectraError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
