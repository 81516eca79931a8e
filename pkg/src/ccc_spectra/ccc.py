"""Commuting conjugacy class graphs and their clique-union structure."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import AbelianGroup, NotCliqueUnion, NotRealizable, UnknownQuotient
from .groups import CentralQuotientType, ConjugacyPartition, FamilySpec, GroupTable


@dataclass(frozen=True)
class CccGraph:
    """Graph on non-central conjugacy classes; adjacency is symmetric, loop-free."""

    vertex_count: int
    vertex_labels: tuple[tuple[str, int], ...]  # (representative label, class size)
    adjacency: tuple[tuple[bool, ...], ...]

    def neighbors(self, i: int) -> list:
        return [j for j in range(self.vertex_count) if self.adjacency[i][j]]

    def edge_count(self) -> int:
        return sum(
            1
            for i in range(self.vertex_count)
            for j in range(i + 1, self.vertex_count)
            if self.adjacency[i][j]
        )


def build_ccc_graph(
    g: GroupTable, part: ConjugacyPartition, representative: str = "min"
) -> CccGraph:
    """Vertices are non-central classes; two classes are adjacent when some
    member of one commutes with a fixed representative of the other.

    Fixing one representative is equivalent to the two-sided existential
    test: if g a g^-1 commutes with d, then a commutes with g^-1 d g, which
    lies in the same class as d.
    """
    vert_classes = [part.classes[i] for i in part.noncentral_classes]
    if not vert_classes:
        raise AbelianGroup(f"{g.spec} is abelian: no non-central classes")
    if representative == "min":
        reps = [c[0] for c in vert_classes]
    elif representative == "max":
        reps = [c[-1] for c in vert_classes]
    else:
        raise ValueError(f"representative must be 'min' or 'max', got {representative!r}")
    k = len(vert_classes)
    adj = [[False] * k for _ in range(k)]
    for i in range(k):
        a = reps[i]
        for j in range(i + 1, k):
            if any(g.commutes(a, d) for d in vert_classes[j]):
                adj[i][j] = adj[j][i] = True
    labels = tuple(
        (g.labels[cls[0]], len(cls)) for cls in vert_classes
    )
    return CccGraph(
        vertex_count=k,
        vertex_labels=labels,
        adjacency=tuple(tuple(row) for row in adj),
    )


@dataclass(frozen=True)
class CliqueDecomposition:
    """A disjoint union of cliques, as (clique size, count) pairs, sizes descending."""

    parts: tuple[tuple[int, int], ...]

    @property
    def vertex_count(self) -> int:
        return sum(m * l for m, l in self.parts)

    @staticmethod
    def from_pairs(pairs: Iterable) -> "CliqueDecomposition":
        sizes: dict = {}
        for m, l in pairs:
            if m < 1 or l < 1:
                raise ValueError(f"invalid clique part ({m}, {l})")
            sizes[m] = sizes.get(m, 0) + l
        parts = tuple(sorted(sizes.items(), key=lambda t: -t[0]))
        return CliqueDecomposition(parts=parts)

    @staticmethod
    def from_sizes(sizes: Iterable) -> "CliqueDecomposition":
        return CliqueDecomposition.from_pairs((m, 1) for m in sizes)

    def describe(self) -> str:
        return " u ".join(
            (f"{l}K_{m}" if l > 1 else f"K_{m}") for m, l in self.parts
        ) or "empty"


def decompose_cliques(graph: CccGraph) -> CliqueDecomposition:
    """Split into connected components and require each to be complete."""
    n = graph.vertex_count
    seen = [False] * n
    sizes = []
    for start in range(n):
        if seen[start]:
            continue
        stack, comp = [start], []
        seen[start] = True
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in graph.neighbors(v):
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        for i, v in enumerate(comp):
            for w in comp[i + 1 :]:
                if not graph.adjacency[v][w]:
                    raise NotCliqueUnion(
                        f"component containing vertices {v} and {w} is not complete"
                    )
        sizes.append(len(comp))
    return CliqueDecomposition.from_sizes(sizes)


def predicted_structure(q: CentralQuotientType) -> CliqueDecomposition:
    """Clique-union structure implied by the central quotient shape."""
    z = q.z
    if q.kind == "zpzp":
        p = q.parameter
        if z % p != 0:
            raise NotRealizable(f"elementary abelian quotient needs p | z; p={p}, z={z}")
        return CliqueDecomposition.from_pairs([(((p - 1) * z) // p, p + 1)])
    if q.kind == "dihedral":
        n = q.parameter
        if n % 2 == 0:
            if z % 2 != 0:
                raise NotRealizable(f"dihedral quotient with even n={n} needs 2 | z; z={z}")
            return CliqueDecomposition.from_pairs([((n - 1) * z // 2, 1), (z // 2, 2)])
        return CliqueDecomposition.from_pairs([((n - 1) * z // 2, 1), (z, 1)])
    raise UnknownQuotient(f"no structure prediction for quotient kind {q.kind!r}")


def predicted_structure_for(spec: FamilySpec, q: CentralQuotientType) -> CliqueDecomposition:
    """Family-aware prediction.

    The even members of the v8n family use their directly known structure
    K_{2n-2} u 2K_2 rather than the quotient route.
    """
    if spec.family == "v8n" and spec.n % 2 == 0:
        return CliqueDecomposition.from_pairs([(2 * spec.n - 2, 1), (2, 2)])
    return predicted_structure(q)


def graph_to_json(graph: CccGraph) -> dict:
    """Adjacency-list export: vertices with labels/sizes plus an edge list."""
    return {
        "vertices": [
            {"representative": lab, "class_size": size}
            for lab, size in graph.vertex_labels
        ],
        "edges": [
            [i, j]
            for i in range(graph.vertex_count)
            for j in range(i + 1, graph.vertex_count)
            if graph.adjacency[i][j]
        ],
    }


def graph_to_dot(graph: CccGraph, name: str = "ccc") -> str:
    lines = [f"graph {name} {{"]
    for i, (lab, size) in enumerate(graph.vertex_labels):
        lines.append(f'  v{i} [label="{lab} (#{size})"];')
    for i in range(graph.vertex_count):
        for j in range(i + 1, graph.vertex_count):
            if graph.adjacency[i][j]:
                lines.append(f"  v{i} -- v{j};")
    lines.append("}")
    return "\n".join(lines)
