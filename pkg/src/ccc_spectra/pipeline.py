"""End-to-end brute-force analysis of one group, with closed-form cross-checks.

The brute-force route builds the group, its conjugacy classes, the graph,
and the detected clique structure; exact spectra are then produced by the
clique-union rules and gated by an exact nullity verification against the
actual matrices.  The closed-form route is evaluated independently and the
two are compared field by field.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .ccc import (
    CccGraph,
    CliqueDecomposition,
    build_ccc_graph,
    decompose_cliques,
    predicted_structure_for,
)
from .classify import Classification, classify, classify_closed_form
from .closed_forms import ClosedFormReport, closed_form_for
from .errors import VerificationError
from .groups import (
    CentralQuotientType,
    ConjugacyPartition,
    FamilySpec,
    GroupTable,
    build_group,
    central_quotient_type,
    conjugacy_classes,
)
from .spectra import (
    EnergyReport,
    IntMatrix,
    cn_matrix,
    cnl_cnsl_matrices,
    clique_union_spectra,
    energies,
    exact_spectrum_verify,
    numeric_eigenvalues,
)

JACOBI_TOL = 1e-10
EIGENVALUE_MATCH_TOL = 1e-8


@dataclass
class Analysis:
    """Everything computed for one family member."""

    spec: FamilySpec
    group: GroupTable
    partition: ConjugacyPartition
    quotient: CentralQuotientType
    closed: ClosedFormReport
    closed_classification: Optional[Classification]
    abelian: bool
    graph: Optional[CccGraph] = None
    decomposition: Optional[CliqueDecomposition] = None
    cn: Optional[IntMatrix] = None
    cnl: Optional[IntMatrix] = None
    cnsl: Optional[IntMatrix] = None
    report: Optional[EnergyReport] = None
    classification: Optional[Classification] = None
    mismatches: Optional[list] = None


def compare_with_closed_form(report: EnergyReport, closed: ClosedFormReport) -> list:
    """Exact-equality comparison; returns human-readable mismatch strings."""
    problems = []
    pairs = [
        ("vertex_count", report.vertex_count, closed.vertex_count),
        ("trace_cnrs", report.trace_cnrs, closed.trace_cnrs),
        ("delta", report.delta, closed.delta),
        ("e_cn", report.e_cn, closed.e_cn),
        ("le_cn", report.le_cn, closed.le_cn),
        ("le_plus_cn", report.le_plus_cn, closed.le_plus_cn),
    ]
    for name, brute, predicted in pairs:
        if brute != predicted:
            problems.append(
                f"{name}: brute force {brute} != closed form {predicted} [{closed.source}]"
            )
    spectra = [
        ("cn_spectrum", report.cn_spec, closed.cn_spec),
        ("cnl_spectrum", report.cnl_spec, closed.cnl_spec),
        ("cnsl_spectrum", report.cnsl_spec, closed.cnsl_spec),
    ]
    for name, brute, predicted in spectra:
        if predicted is not None and brute.pairs != predicted.pairs:
            problems.append(
                f"{name}: brute force {brute.describe()} != closed form "
                f"{predicted.describe()} [{closed.source}]"
            )
    return problems


def numeric_agreement(matrix: IntMatrix, spectrum, tol: float = EIGENVALUE_MATCH_TOL) -> bool:
    """Jacobi eigenvalues vs the exact spectrum, tolerance scaled by max entry."""
    approx = numeric_eigenvalues(matrix, tol=JACOBI_TOL)
    exact = sorted(float(v) for v in spectrum.expand())
    if len(approx) != len(exact):
        return False
    scale = max(1.0, max((abs(x) for row in matrix.entries for x in row), default=0.0))
    return all(abs(a - b) <= tol * scale for a, b in zip(approx, exact))


def analyze(
    spec: FamilySpec, cap: Optional[int] = None, numeric_check: bool = False
) -> Analysis:
    """Run the full pipeline on one family member."""
    group = build_group(spec, cap)
    partition = conjugacy_classes(group)
    quotient = central_quotient_type(group, partition)
    closed = closed_form_for(spec)
    closed_cls = classify_closed_form(closed) if closed.realizable else None
    if not partition.noncentral_classes:
        return Analysis(
            spec=spec,
            group=group,
            partition=partition,
            quotient=quotient,
            closed=closed,
            closed_classification=closed_cls,
            abelian=True,
            mismatches=[],
        )
    graph = build_ccc_graph(group, partition)
    decomposition = decompose_cliques(graph)
    predicted = predicted_structure_for(spec, quotient)
    if decomposition != predicted:
        raise VerificationError(
            f"{spec}: detected structure {decomposition.describe()} differs from "
            f"predicted {predicted.describe()}"
        )
    cn = cn_matrix(graph)
    cnl, cnsl = cnl_cnsl_matrices(cn)
    cn_spec, cnl_spec, cnsl_spec = clique_union_spectra(decomposition)
    for name, matrix, spectrum in (
        ("cn", cn, cn_spec),
        ("cnl", cnl, cnl_spec),
        ("cnsl", cnsl, cnsl_spec),
    ):
        if not exact_spectrum_verify(matrix, spectrum):
            raise VerificationError(
                f"{spec}: exact {name} spectrum failed nullity verification"
            )
        if numeric_check and not numeric_agreement(matrix, spectrum):
            raise VerificationError(
                f"{spec}: numeric eigenvalues disagree with exact {name} spectrum"
            )
    trace = sum(cn.row_sums())
    report = energies(cn_spec, cnl_spec, cnsl_spec, trace, graph.vertex_count)
    classification = classify(report)
    mismatches = compare_with_closed_form(report, closed) if closed.realizable else []
    return Analysis(
        spec=spec,
        group=group,
        partition=partition,
        quotient=quotient,
        closed=closed,
        closed_classification=closed_cls,
        abelian=False,
        graph=graph,
        decomposition=decomposition,
        cn=cn,
        cnl=cnl,
        cnsl=cnsl,
        report=report,
        classification=classification,
        mismatches=mismatches,
    )
