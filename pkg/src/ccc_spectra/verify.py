"""Verification harness: the checks behind ``ccc-spectra verify`` and the
acceptance test suite.

Each check returns a ``CheckOutcome`` whose details name the offending
instance and, where applicable, the closed-form branch tag, so a failure
is attributable to one table row.
"""

from __future__ import annotations

from dataclasses import dataclass

from .ccc import build_ccc_graph
from .classify import check_iff_lists
from .errors import CccSpectraError
from .groups import FamilySpec
from .pipeline import Analysis, analyze, numeric_agreement
from .reports import FIGURES, figure_check
from .spectra import clique_union_spectra, energies


@dataclass
class CheckOutcome:
    name: str
    ok: bool
    details: list

    def describe(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{status} {self.name}" + (
            "" if self.ok else f" ({len(self.details)} problem(s))"
        )


def _family_specs(family: str, values, **fixed) -> list:
    return [FamilySpec(family=family, **fixed, **{"n": v}) for v in values]


def quick_specs() -> list:
    """The acceptance-scale instance set."""
    specs = []
    specs += _family_specs("dihedral", range(3, 25))
    specs += _family_specs("dicyclic", range(2, 13))
    specs += _family_specs("semidihedral", range(2, 9))
    specs += _family_specs("v8n", range(2, 9))
    specs += _family_specs("u6n", range(2, 11))
    specs += [
        FamilySpec(family="unm", n=n, m=m) for n in range(2, 7) for m in range(2, 7)
    ]
    specs += [FamilySpec(family="heisenberg", p=p) for p in (3, 5)]
    specs += [
        FamilySpec(family="central_ext", base=base, m=m)
        for base in ("d8", "q8")
        for m in range(1, 5)
    ]
    return specs


def full_specs() -> list:
    """Extended ranges for ``verify full``."""
    specs = []
    specs += _family_specs("dihedral", range(3, 33))
    specs += _family_specs("dicyclic", range(2, 17))
    specs += _family_specs("semidihedral", range(2, 13))
    specs += _family_specs("v8n", range(2, 13))
    specs += _family_specs("u6n", range(2, 13))
    specs += [
        FamilySpec(family="unm", n=n, m=m) for n in range(2, 9) for m in range(2, 10)
    ]
    specs += [FamilySpec(family="heisenberg", p=p) for p in (3, 5, 7)]
    specs += [
        FamilySpec(family="central_ext", base=base, m=m)
        for base in ("d8", "q8")
        for m in range(1, 7)
    ]
    specs += [FamilySpec(family="central_ext", base="heisenberg", p=3, m=m) for m in (2, 3)]
    return specs


def specs_for(preset: str) -> list:
    if preset == "quick":
        return quick_specs()
    if preset == "full":
        return full_specs()
    raise CccSpectraError(f"unknown preset {preset!r}; expected quick or full")


def run_analyses(specs) -> dict:
    """Analyze every spec once; key is the spec itself."""
    return {spec: analyze(spec) for spec in specs}


def _degenerate_check(analysis: Analysis) -> list:
    """For abelian members, re-derive the closed form from its own structure."""
    closed = analysis.closed
    problems = []
    if closed.structure is None:
        return [f"{analysis.spec}: abelian member lacks a closed-form structure"]
    cn_s, cnl_s, cnsl_s = clique_union_spectra(closed.structure)
    trace = int(closed.trace_cnrs)
    report = energies(cn_s, cnl_s, cnsl_s, trace, int(closed.vertex_count))
    for name, got, expected in (
        ("e_cn", report.e_cn, closed.e_cn),
        ("le_cn", report.le_cn, closed.le_cn),
        ("le_plus_cn", report.le_plus_cn, closed.le_plus_cn),
    ):
        if got != expected:
            problems.append(
                f"{analysis.spec}: degenerate member {name} {got} != closed form "
                f"{expected} [{closed.source}]"
            )
    return problems


def check_oracle_equality(analyses: dict) -> CheckOutcome:
    """Criterion: brute-force energies/spectra equal the closed forms exactly."""
    details = []
    for spec, analysis in analyses.items():
        if analysis.abelian:
            details += _degenerate_check(analysis)
        else:
            details += [f"{spec}: {msg}" for msg in analysis.mismatches]
    return CheckOutcome("oracle equality (brute force vs closed forms)", not details, details)


NAMED_VALUES = (
    # (spec, field, exact value as a string)
    (FamilySpec(family="dicyclic", n=2), "e_cn", "0"),
    (FamilySpec(family="dicyclic", n=2), "le_cn", "0"),
    (FamilySpec(family="dicyclic", n=2), "le_plus_cn", "0"),
    (FamilySpec(family="semidihedral", n=2), "le_plus_cn", "28/5"),
    (FamilySpec(family="dihedral", n=11), "le_cn", "40"),
    (FamilySpec(family="dihedral", n=3), "e_cn", "0"),
    (FamilySpec(family="dihedral", n=3), "le_cn", "0"),
    (FamilySpec(family="dihedral", n=3), "le_plus_cn", "0"),
    (FamilySpec(family="v8n", n=3), "le_cn", "360/7"),
)

NAMED_STATUSES = (
    (FamilySpec(family="dihedral", n=11), "cnl_status", "border"),
    (FamilySpec(family="dihedral", n=3), "cnl_status", "border"),
    (FamilySpec(family="dihedral", n=3), "cnsl_status", "border"),
)


def check_named_values(analyses: dict) -> CheckOutcome:
    """Criterion: distinguished single-instance values reproduce exactly."""
    details = []
    for spec, field, expected in NAMED_VALUES:
        analysis = analyses.get(spec) or analyze(spec)
        value = getattr(analysis.report, field)
        if str(value) != expected:
            details.append(f"{spec}: {field} = {value}, expected {expected}")
        closed_value = getattr(analysis.closed, field)
        if str(closed_value) != expected:
            details.append(
                f"{spec}: closed-form {field} = {closed_value}, expected {expected}"
            )
    for spec, field, expected in NAMED_STATUSES:
        analysis = analyses.get(spec) or analyze(spec)
        value = getattr(analysis.classification, field)
        if value != expected:
            details.append(f"{spec}: {field} = {value}, expected {expected}")
    return CheckOutcome("named reference values", not details, details)


def check_integrality(analyses: dict) -> CheckOutcome:
    """Criterion: every realizable instance is CNL- and CNSL-integral."""
    details = []
    for spec, analysis in analyses.items():
        if analysis.abelian:
            continue
        cls = analysis.classification
        if not cls.cnl_integral:
            details.append(f"{spec}: CNL spectrum is not integral")
        if not cls.cnsl_integral:
            details.append(f"{spec}: CNSL spectrum is not integral")
    return CheckOutcome("CNL/CNSL integrality", not details, details)


def check_claim_tables(specs) -> CheckOutcome:
    """Criterion: the known classification tables diff empty on the swept range."""
    diffs = check_iff_lists(specs)
    return CheckOutcome(
        "classification claim tables", not diffs, [d.describe() for d in diffs]
    )


def check_numeric_oracle(analyses: dict) -> CheckOutcome:
    """Criterion: Jacobi eigenvalues match every exact spectrum (scaled 1e-8)."""
    details = []
    for spec, analysis in analyses.items():
        if analysis.abelian:
            continue
        report = analysis.report
        for name, matrix, spectrum in (
            ("cn", analysis.cn, report.cn_spec),
            ("cnl", analysis.cnl, report.cnl_spec),
            ("cnsl", analysis.cnsl, report.cnsl_spec),
        ):
            try:
                if not numeric_agreement(matrix, spectrum):
                    details.append(f"{spec}: numeric {name} eigenvalues disagree")
            except CccSpectraError as exc:
                details.append(f"{spec}: numeric {name} solve failed: {exc}")
    return CheckOutcome("numeric eigenvalue oracle", not details, details)


def check_figures() -> CheckOutcome:
    """Criterion: every figure preset reproduces its series formulas exactly."""
    details = []
    for name in sorted(FIGURES):
        details += figure_check(name)
    return CheckOutcome("figure series regeneration", not details, details)


def check_properties(analyses: dict) -> CheckOutcome:
    """Criterion: structural identities hold on every analyzed instance."""
    details = []
    for spec, analysis in analyses.items():
        group = analysis.group
        sizes = [len(c) for c in analysis.partition.classes]
        if sum(sizes) != group.order:
            details.append(f"{spec}: class sizes sum to {sum(sizes)}, order {group.order}")
        if any(group.order % s != 0 for s in sizes):
            details.append(f"{spec}: some class size does not divide the group order")
        if group.order % len(analysis.partition.center) != 0:
            details.append(f"{spec}: center size does not divide the group order")
        if analysis.abelian:
            continue
        report = analysis.report
        if report.cnl_spec.weighted_sum != report.trace_cnrs:
            details.append(f"{spec}: CNL trace identity fails")
        if report.cnsl_spec.weighted_sum != report.trace_cnrs:
            details.append(f"{spec}: CNSL trace identity fails")
        if report.cn_spec.weighted_sum != 0:
            details.append(f"{spec}: CN eigenvalues do not sum to zero")
        alt = build_ccc_graph(group, analysis.partition, representative="max")
        if alt.adjacency != analysis.graph.adjacency:
            details.append(f"{spec}: adjacency depends on representative choice")
        if analysis.quotient.is_zpzp and report.le_cn != report.le_plus_cn:
            details.append(f"{spec}: le_cn != le_plus_cn on a p x p quotient")
    return CheckOutcome("structural property suite", not details, details)


def run_verification(preset: str) -> list:
    """All checks for one preset, in acceptance order."""
    specs = specs_for(preset)
    analyses = run_analyses(specs)
    outcomes = [
        check_oracle_equality(analyses),
        check_named_values(analyses),
        check_integrality(analyses),
        check_claim_tables(specs),
        check_numeric_oracle(analyses),
        check_figures(),
        check_properties(analyses),
    ]
    return outcomes
