"""Exact spectra, the numeric eigensolver, and the energy assembly."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from ccc_spectra.ccc import CccGraph, CliqueDecomposition
from ccc_spectra.errors import NoConvergence, TraceMismatch
from ccc_spectra.spectra import (
    IntMatrix,
    SpectrumMultiset,
    clique_union_spectra,
    cn_matrix,
    cnl_cnsl_matrices,
    energies,
    exact_spectrum_verify,
    numeric_eigenvalues,
)

F = Fraction


def manual_graph(n, edges):
    adj = [[False] * n for _ in range(n)]
    for i, j in edges:
        adj[i][j] = adj[j][i] = True
    return CccGraph(
        vertex_count=n,
        vertex_labels=tuple((f"v{i}", 1) for i in range(n)),
        adjacency=tuple(tuple(row) for row in adj),
    )


def clique_union_graph(parts):
    """Disjoint union of cliques as an explicit graph."""
    edges, offset = [], 0
    for m, l in parts:
        for _ in range(l):
            edges += [
                (offset + i, offset + j) for i in range(m) for j in range(i + 1, m)
            ]
            offset += m
    return manual_graph(offset, edges)


def spectrum(pairs):
    return SpectrumMultiset.from_pairs(pairs)


def test_cn_matrix_trivials():
    k3 = cn_matrix(clique_union_graph([(3, 1)]))
    assert k3.entries == ((0, 1, 1), (1, 0, 1), (1, 1, 0))
    empty = cn_matrix(clique_union_graph([(1, 3)]))
    assert all(all(x == 0 for x in row) for row in empty.entries)
    k4 = cn_matrix(clique_union_graph([(4, 1)]))
    assert all(k4.entries[i][j] == (0 if i == j else 2) for i in range(4) for j in range(4))


def test_cnl_cnsl_trivials():
    cn3 = cn_matrix(clique_union_graph([(3, 1)]))
    cnl, cnsl = cnl_cnsl_matrices(cn3)
    assert cnl.entries == ((2, -1, -1), (-1, 2, -1), (-1, -1, 2))
    assert cnsl.entries == ((2, 1, 1), (1, 2, 1), (1, 1, 2))
    zero = cn_matrix(clique_union_graph([(1, 3)]))
    cnl0, cnsl0 = cnl_cnsl_matrices(zero)
    assert cnl0.entries == cnsl0.entries == zero.entries
    cn4 = cn_matrix(clique_union_graph([(4, 1)]))
    _, cnsl4 = cnl_cnsl_matrices(cn4)
    assert cnsl4.entries[0][0] == 6 and cnsl4.entries[0][1] == 2
    assert cnsl4.trace() == 24


def test_cnl_cnsl_rejects_bad_input():
    with pytest.raises(ValueError):
        cnl_cnsl_matrices(IntMatrix.from_rows([[1, 0], [0, 0]]))
    with pytest.raises(ValueError):
        cnl_cnsl_matrices(IntMatrix.from_rows([[0, 1], [2, 0]]))


def test_clique_union_spectra_k4():
    cn, cnl, cnsl = clique_union_spectra(CliqueDecomposition.from_pairs([(4, 1)]))
    assert cnl.pairs == ((F(0), 1), (F(8), 3))
    assert cnsl.pairs == ((F(4), 3), (F(12), 1))
    assert cn.pairs == ((F(-2), 3), (F(6), 1))


def test_clique_union_spectra_trivial_parts():
    cn, cnl, cnsl = clique_union_spectra(CliqueDecomposition.from_pairs([(1, 3)]))
    assert cn.pairs == cnl.pairs == cnsl.pairs == ((F(0), 3),)


def test_clique_union_spectra_sd16_shape():
    # K_3 u 2K_1, checked against the actual matrices by exact elimination
    # and by the numeric solver.
    dec = CliqueDecomposition.from_pairs([(3, 1), (1, 2)])
    cn_s, cnl_s, cnsl_s = clique_union_spectra(dec)
    assert cnl_s.pairs == ((F(0), 3), (F(3), 2))
    assert cnsl_s.pairs == ((F(0), 2), (F(1), 2), (F(4), 1))
    graph = clique_union_graph(dec.parts)
    cn = cn_matrix(graph)
    cnl, cnsl = cnl_cnsl_matrices(cn)
    for matrix, spec in ((cn, cn_s), (cnl, cnl_s), (cnsl, cnsl_s)):
        assert exact_spectrum_verify(matrix, spec)
        approx = numeric_eigenvalues(matrix)
        exact = sorted(float(v) for v in spec.expand())
        assert max(abs(a - b) for a, b in zip(approx, exact)) < 1e-8


def test_numeric_eigenvalues():
    zero = IntMatrix.from_rows([[0] * 3 for _ in range(3)])
    assert numeric_eigenvalues(zero) == [0.0, 0.0, 0.0]
    cn4 = cn_matrix(clique_union_graph([(4, 1)]))
    cnl4, _ = cnl_cnsl_matrices(cn4)
    approx = numeric_eigenvalues(cnl4)
    assert max(abs(a - b) for a, b in zip(approx, [0.0, 8.0, 8.0, 8.0])) < 1e-8
    cn31 = cn_matrix(clique_union_graph([(3, 1), (1, 1)]))
    approx = numeric_eigenvalues(cn31)
    assert max(abs(a - b) for a, b in zip(approx, [-1.0, -1.0, 0.0, 2.0])) < 1e-8


def test_numeric_eigenvalues_errors():
    asym = IntMatrix.from_rows([[0, 1], [2, 0]])
    with pytest.raises(ValueError):
        numeric_eigenvalues(asym)
    cn4 = cn_matrix(clique_union_graph([(4, 1)]))
    with pytest.raises(NoConvergence):
        numeric_eigenvalues(cn4, max_sweeps=0)


def test_exact_spectrum_verify():
    cn4 = cn_matrix(clique_union_graph([(4, 1)]))
    cnl4, _ = cnl_cnsl_matrices(cn4)
    assert exact_spectrum_verify(cnl4, spectrum([(0, 1), (8, 3)]))
    assert not exact_spectrum_verify(cnl4, spectrum([(0, 4)]))
    assert not exact_spectrum_verify(cnl4, spectrum([(0, 1), (8, 2)]))  # wrong total
    zero = IntMatrix.from_rows([[0] * 3 for _ in range(3)])
    assert exact_spectrum_verify(zero, spectrum([(0, 3)]))


def test_energies_k4():
    dec = CliqueDecomposition.from_pairs([(4, 1)])
    cn_s, cnl_s, cnsl_s = clique_union_spectra(dec)
    report = energies(cn_s, cnl_s, cnsl_s, trace_cnrs=24, vertex_count=4)
    assert report.delta == 6
    assert report.le_cn == 12  # equals 2(n-1)(n-2) at n=4
    assert report.le_plus_cn == 12
    assert report.e_cn == 12


def test_energies_trivial_and_mixed():
    cn_s, cnl_s, cnsl_s = clique_union_spectra(CliqueDecomposition.from_pairs([(1, 3)]))
    report = energies(cn_s, cnl_s, cnsl_s, trace_cnrs=0, vertex_count=3)
    assert report.e_cn == report.le_cn == report.le_plus_cn == 0
    # K_3 u K_1: delta = 6/4, LE = 6, LE+ = 5, E = 4.
    dec = CliqueDecomposition.from_pairs([(3, 1), (1, 1)])
    cn_s, cnl_s, cnsl_s = clique_union_spectra(dec)
    report = energies(cn_s, cnl_s, cnsl_s, trace_cnrs=6, vertex_count=4)
    assert report.delta == F(3, 2)
    assert report.e_cn == 4
    assert report.le_cn == 6
    assert report.le_plus_cn == 5


def test_energies_trace_mismatch():
    cn_s, cnl_s, cnsl_s = clique_union_spectra(CliqueDecomposition.from_pairs([(4, 1)]))
    with pytest.raises(TraceMismatch):
        energies(cn_s, cnl_s, cnsl_s, trace_cnrs=23, vertex_count=4)
    bad_cn = spectrum([(1, 4)])
    with pytest.raises(TraceMismatch):
        energies(bad_cn, cnl_s, cnsl_s, trace_cnrs=24, vertex_count=4)


def test_spectrum_multiset_normalization():
    s = spectrum([(F(1, 2), 1), (F(2, 4), 2), (3, 0)])
    assert s.pairs == ((F(1, 2), 3),)
    assert s.dim == 3
    assert not s.is_integral()
    assert spectrum([(2, 1)]).is_integral()
    assert s.to_json() == [{"value": "1/2", "mult": 3}]
    with pytest.raises(ValueError):
        spectrum([(1, -1)])


def test_adding_isolated_vertices_changes_only_delta():
    rng = random.Random(7)
    for _ in range(20):
        parts = [(rng.randrange(1, 7), rng.randrange(1, 3)) for _ in range(rng.randrange(1, 4))]
        dec = CliqueDecomposition.from_pairs(parts)
        cn_s, cnl_s, cnsl_s = clique_union_spectra(dec)
        trace = int(cnl_s.weighted_sum)
        base = energies(cn_s, cnl_s, cnsl_s, trace, dec.vertex_count)
        grown = CliqueDecomposition.from_pairs(list(dec.parts) + [(1, 1)])
        cn_g, cnl_g, cnsl_g = clique_union_spectra(grown)
        bigger = energies(cn_g, cnl_g, cnsl_g, trace, grown.vertex_count)
        assert bigger.e_cn == base.e_cn
        new_delta = F(trace, grown.vertex_count)
        assert bigger.delta == new_delta
        assert bigger.le_cn == cnl_g.centered_abs_sum(new_delta)
        assert bigger.le_plus_cn == cnsl_g.centered_abs_sum(new_delta)
