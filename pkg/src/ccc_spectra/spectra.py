"""Common-neighborhood matrices, exact spectra, and the three CN-energies.

The exact route goes decomposition -> per-clique eigenvalues; the numeric
route is a cyclic Jacobi eigensolver used purely as a cross-check.  All
energies are carried as ``fractions.Fraction`` end to end because the
distinguished borderline values are non-integers and float comparison
would blur exact equality.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .ccc import CccGraph, CliqueDecomposition
from .errors import NoConvergence, TraceMismatch


@dataclass(frozen=True)
class SpectrumMultiset:
    """Eigenvalues with multiplicities, sorted ascending, duplicates merged."""

    pairs: tuple[tuple[Fraction, int], ...]

    @staticmethod
    def from_pairs(pairs: Iterable) -> "SpectrumMultiset":
        merged: dict = {}
        for value, mult in pairs:
            mult = int(mult)
            if mult < 0:
                raise ValueError(f"negative multiplicity {mult}")
            if mult == 0:
                continue
            value = Fraction(value)
            merged[value] = merged.get(value, 0) + mult
        return SpectrumMultiset(pairs=tuple(sorted(merged.items())))

    @property
    def dim(self) -> int:
        return sum(mult for _, mult in self.pairs)

    @property
    def weighted_sum(self) -> Fraction:
        return sum((value * mult for value, mult in self.pairs), Fraction(0))

    def abs_sum(self) -> Fraction:
        return sum((abs(value) * mult for value, mult in self.pairs), Fraction(0))

    def centered_abs_sum(self, delta: Fraction) -> Fraction:
        return sum((abs(value - delta) * mult for value, mult in self.pairs), Fraction(0))

    def is_integral(self) -> bool:
        return all(value.denominator == 1 for value, _ in self.pairs)

    def expand(self) -> list:
        out = []
        for value, mult in self.pairs:
            out.extend([value] * mult)
        return out

    def to_json(self) -> list:
        return [{"value": str(value), "mult": mult} for value, mult in self.pairs]

    def describe(self) -> str:
        return "{" + ", ".join(f"({value})^{mult}" for value, mult in self.pairs) + "}"


@dataclass(frozen=True)
class IntMatrix:
    """A dense integer matrix stored as nested tuples."""

    entries: tuple[tuple[int, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.entries)

    @staticmethod
    def from_rows(rows: Sequence[Sequence[int]]) -> "IntMatrix":
        return IntMatrix(entries=tuple(tuple(int(x) for x in row) for row in rows))

    def is_symmetric(self) -> bool:
        n = self.dim
        return all(
            self.entries[i][j] == self.entries[j][i]
            for i in range(n)
            for j in range(i + 1, n)
        )

    def trace(self) -> int:
        return sum(self.entries[i][i] for i in range(self.dim))

    def row_sums(self) -> tuple[int, ...]:
        return tuple(sum(row) for row in self.entries)


def cn_matrix(graph: CccGraph) -> IntMatrix:
    """Entry (i, j), i != j, counts the common neighbors of v_i and v_j."""
    n = graph.vertex_count
    adj = graph.adjacency
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            if i == j:
                row.append(0)
            else:
                row.append(sum(1 for k in range(n) if adj[i][k] and adj[j][k]))
        rows.append(row)
    return IntMatrix.from_rows(rows)


def cnl_cnsl_matrices(cn: IntMatrix) -> tuple[IntMatrix, IntMatrix]:
    """Row-sum diagonal minus/plus the CN matrix."""
    if not cn.is_symmetric():
        raise ValueError("CN matrix must be symmetric")
    if any(cn.entries[i][i] != 0 for i in range(cn.dim)):
        raise ValueError("CN matrix must have zero diagonal")
    sums = cn.row_sums()
    n = cn.dim
    cnl = [
        [(sums[i] if i == j else 0) - cn.entries[i][j] for j in range(n)]
        for i in range(n)
    ]
    cnsl = [
        [(sums[i] if i == j else 0) + cn.entries[i][j] for j in range(n)]
        for i in range(n)
    ]
    return IntMatrix.from_rows(cnl), IntMatrix.from_rows(cnsl)


def clique_union_spectra(
    dec: CliqueDecomposition,
) -> tuple[SpectrumMultiset, SpectrumMultiset, SpectrumMultiset]:
    """Exact CN / CNL / CNSL spectra of a disjoint union of cliques.

    Within K_m the CN matrix is (m-2)(J - I), so each part contributes
    CN   {((m-1)(m-2))^l, (-(m-2))^(l(m-1))},
    CNL  {0^l, (m(m-2))^(l(m-1))},
    CNSL {(2(m-1)(m-2))^l, ((m-2)^2)^(l(m-1))}.
    """
    cn_pairs, cnl_pairs, cnsl_pairs = [], [], []
    for m, l in dec.parts:
        cn_pairs.append(((m - 1) * (m - 2), l))
        cn_pairs.append((-(m - 2), l * (m - 1)))
        cnl_pairs.append((0, l))
        cnl_pairs.append((m * (m - 2), l * (m - 1)))
        cnsl_pairs.append((2 * (m - 1) * (m - 2), l))
        cnsl_pairs.append(((m - 2) ** 2, l * (m - 1)))
    return (
        SpectrumMultiset.from_pairs(cn_pairs),
        SpectrumMultiset.from_pairs(cnl_pairs),
        SpectrumMultiset.from_pairs(cnsl_pairs),
    )


def numeric_eigenvalues(
    matrix: IntMatrix, tol: float = 1e-10, max_sweeps: int = 100
) -> list:
    """Cyclic Jacobi eigensolver; independent of the exact route.

    Sweeps rotate every off-diagonal pair; convergence requires the
    off-diagonal Frobenius norm to drop below ``tol``.
    """
    if not matrix.is_symmetric():
        raise ValueError("Jacobi solver requires a symmetric matrix")
    n = matrix.dim
    if n > 2000:
        raise ValueError(f"matrix dimension {n} above the supported 2000")
    if n == 0:
        return []
    a = np.array(matrix.entries, dtype=float)
    if n == 1:
        return [float(a[0, 0])]

    def off_norm() -> float:
        off = a - np.diag(np.diag(a))
        return float(np.sqrt((off * off).sum()))

    for _ in range(max_sweeps):
        if off_norm() < tol:
            return sorted(float(x) for x in np.diag(a))
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = math.copysign(1.0, theta) / (
                    abs(theta) + math.sqrt(theta * theta + 1.0)
                )
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                a[p, q] = a[q, p] = 0.0
    if off_norm() < tol:
        return sorted(float(x) for x in np.diag(a))
    raise NoConvergence(f"Jacobi did not reach tol={tol} in {max_sweeps} sweeps")


def _rational_rank(rows: list) -> int:
    """Rank over the rationals by Gaussian elimination with exact pivots."""
    if not rows:
        return 0
    n_cols = len(rows[0])
    rank = 0
    row = 0
    for col in range(n_cols):
        pivot = next((r for r in range(row, len(rows)) if rows[r][col] != 0), None)
        if pivot is None:
            continue
        rows[row], rows[pivot] = rows[pivot], rows[row]
        pv = rows[row][col]
        for r in range(row + 1, len(rows)):
            factor = rows[r][col] / pv
            if factor:
                rows[r] = [x - factor * y for x, y in zip(rows[r], rows[row])]
        row += 1
        rank += 1
        if row == len(rows):
            break
    return rank


def exact_spectrum_verify(matrix: IntMatrix, spectrum: SpectrumMultiset) -> bool:
    """Confirm each claimed eigenvalue by an exact nullity computation.

    True iff the multiplicities sum to the dimension and, for every
    claimed (lambda, k), nullity(M - lambda*I) == k.
    """
    n = matrix.dim
    if spectrum.dim != n:
        return False
    for value, mult in spectrum.pairs:
        rows = [
            [
                Fraction(matrix.entries[i][j]) - (value if i == j else 0)
                for j in range(n)
            ]
            for i in range(n)
        ]
        nullity = n - _rational_rank(rows)
        if nullity != mult:
            return False
    return True


@dataclass(frozen=True)
class EnergyReport:
    """Exact energies of one graph, together with the spectra they came from."""

    vertex_count: int
    trace_cnrs: int
    delta: Fraction
    e_cn: Fraction
    le_cn: Fraction
    le_plus_cn: Fraction
    cn_spec: SpectrumMultiset
    cnl_spec: SpectrumMultiset
    cnsl_spec: SpectrumMultiset

    def to_json(self) -> dict:
        return {
            "vertex_count": self.vertex_count,
            "trace_cnrs": self.trace_cnrs,
            "delta": str(self.delta),
            "e_cn": str(self.e_cn),
            "le_cn": str(self.le_cn),
            "le_plus_cn": str(self.le_plus_cn),
            "e_cn_float": float(self.e_cn),
            "le_cn_float": float(self.le_cn),
            "le_plus_cn_float": float(self.le_plus_cn),
            "cn_spectrum": self.cn_spec.to_json(),
            "cnl_spectrum": self.cnl_spec.to_json(),
            "cnsl_spectrum": self.cnsl_spec.to_json(),
        }


def energies(
    cn_spec: SpectrumMultiset,
    cnl_spec: SpectrumMultiset,
    cnsl_spec: SpectrumMultiset,
    trace_cnrs: int,
    vertex_count: int,
) -> EnergyReport:
    """Assemble the three CN-energies from spectra and the CNRS trace."""
    if vertex_count < 1:
        raise ValueError("vertex_count must be positive")
    if cn_spec.weighted_sum != 0:
        raise TraceMismatch(
            f"CN spectrum sums to {cn_spec.weighted_sum}, expected 0"
        )
    for name, spec in (("CNL", cnl_spec), ("CNSL", cnsl_spec)):
        if spec.weighted_sum != trace_cnrs:
            raise TraceMismatch(
                f"{name} spectrum sums to {spec.weighted_sum}, trace is {trace_cnrs}"
            )
    delta = Fraction(trace_cnrs, vertex_count)
    return EnergyReport(
        vertex_count=vertex_count,
        trace_cnrs=trace_cnrs,
        delta=delta,
        e_cn=cn_spec.abs_sum(),
        le_cn=cnl_spec.centered_abs_sum(delta),
        le_plus_cn=cnsl_spec.centered_abs_sum(delta),
        cn_spec=cn_spec,
        cnl_spec=cnl_spec,
        cnsl_spec=cnsl_spec,
    )
