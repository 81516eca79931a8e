"""Acceptance criteria, one test per criterion, each printing a PASS/FAIL line.

All comparisons are exact rational equality unless a criterion states a
numeric tolerance (the Jacobi cross-check runs at 1e-8 scaled by the
largest matrix entry).
"""

from __future__ import annotations

import time
from fractions import Fraction

import pytest

from ccc_spectra.classify import BORDER, check_iff_lists
from ccc_spectra.groups import FamilySpec
from ccc_spectra.verify import (
    check_figures,
    check_integrality,
    check_named_values,
    check_numeric_oracle,
    check_oracle_equality,
    check_properties,
    quick_specs,
    run_analyses,
)

F = Fraction

ORACLE_TIME_BUDGET_S = 60.0


def spec(family, **kw):
    return FamilySpec(family=family, **kw)


@pytest.fixture(scope="module")
def quick():
    start = time.time()
    specs = quick_specs()
    analyses = run_analyses(specs)
    elapsed = time.time() - start
    return specs, analyses, elapsed


def _report(criterion: str, ok: bool, details=()):
    print(f"ACCEPTANCE {'PASS' if ok else 'FAIL'}: {criterion}")
    for line in details:
        print(f"    {line}")
    assert ok, f"{criterion}: " + "; ".join(list(details)[:5])


def test_criterion_1_oracle_equality(quick):
    specs, analyses, elapsed = quick
    outcome = check_oracle_equality(analyses)
    details = list(outcome.details)
    ok = outcome.ok and elapsed < ORACLE_TIME_BUDGET_S
    if elapsed >= ORACLE_TIME_BUDGET_S:
        details.append(f"runtime {elapsed:.1f}s exceeds {ORACLE_TIME_BUDGET_S}s")
    _report(
        f"criterion 1: brute force equals closed forms exactly on "
        f"{len(specs)} instances ({elapsed:.1f}s)",
        ok,
        details,
    )


def test_criterion_2_named_values(quick):
    _, analyses, _ = quick
    details = []

    def expect(s, field, value):
        report = analyses[s].report
        got = getattr(report, field)
        if got != value:
            details.append(f"{s}: {field} = {got}, expected {value}")
        closed = getattr(analyses[s].closed, field)
        if closed != value:
            details.append(f"{s}: closed-form {field} = {closed}, expected {value}")

    t8 = spec("dicyclic", n=2)
    for field in ("e_cn", "le_cn", "le_plus_cn"):
        expect(t8, field, F(0))
    expect(spec("semidihedral", n=2), "le_plus_cn", F(28, 5))
    expect(spec("dihedral", n=11), "le_cn", F(40))
    d6 = spec("dihedral", n=3)
    for field in ("e_cn", "le_cn", "le_plus_cn"):
        expect(d6, field, F(0))
    expect(spec("v8n", n=3), "le_cn", F(360, 7))

    d22_cls = analyses[spec("dihedral", n=11)].classification
    if d22_cls.cnl_status != BORDER:
        details.append(f"D_22 cnl_status = {d22_cls.cnl_status}, expected border")
    d6_cls = analyses[d6].classification
    if d6_cls.cnl_status != BORDER or d6_cls.cnsl_status != BORDER:
        details.append("D_6 must be borderline for both energy kinds")
    named = check_named_values(analyses)
    details += named.details
    _report("criterion 2: named reference values reproduced exactly", not details, details)


def test_criterion_3_integrality(quick):
    _, analyses, _ = quick
    outcome = check_integrality(analyses)
    _report(
        "criterion 3: every realizable instance is CNL- and CNSL-integral",
        outcome.ok,
        outcome.details,
    )


CLAIM_GROUPS = {
    "dihedral": [spec("dihedral", n=n) for n in range(3, 25)],
    "dicyclic": [spec("dicyclic", n=n) for n in range(2, 13)],
    "semidihedral": [spec("semidihedral", n=n) for n in range(2, 9)],
    "unm": [spec("unm", n=n, m=m) for n in range(2, 7) for m in range(2, 7)],
    "u6n": [spec("u6n", n=n) for n in range(2, 11)],
    "v8n": [spec("v8n", n=n) for n in range(2, 9)],
    "zpzp-families": [spec("heisenberg", p=p) for p in (3, 5)]
    + [spec("central_ext", base=b, m=m) for b in ("d8", "q8") for m in range(1, 5)],
}


@pytest.mark.parametrize("group", sorted(CLAIM_GROUPS))
def test_criterion_4_iff_lists(group):
    diffs = check_iff_lists(CLAIM_GROUPS[group])
    _report(
        f"criterion 4: classification claim table diffs empty ({group})",
        not diffs,
        [d.describe() for d in diffs],
    )


def test_criterion_5_numeric_oracle(quick):
    _, analyses, _ = quick
    outcome = check_numeric_oracle(analyses)
    _report(
        "criterion 5: Jacobi eigenvalues match exact spectra (1e-8 scaled)",
        outcome.ok,
        outcome.details,
    )


@pytest.mark.parametrize("figure", [f"fig{i}" for i in range(1, 9)])
def test_criterion_6_figures(figure):
    from ccc_spectra.reports import figure_check

    problems = figure_check(figure)
    _report(
        f"criterion 6: {figure} series equals its closed-form expressions",
        not problems,
        problems,
    )


def test_criterion_7_property_suite(quick):
    _, analyses, _ = quick
    outcome = check_properties(analyses)
    _report(
        "criterion 7: trace/class-equation/representative/ordering properties",
        outcome.ok,
        outcome.details,
    )
