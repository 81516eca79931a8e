"""Closed-form spectra and energies as exact rational functions.

Two quotient-level routes (elementary abelian p x p and dihedral central
quotients) plus direct per-family tables.  Branch selection is by exact
integer predicates, first matching row wins, and the chosen branches are
recorded in ``source`` so any mismatch is attributable to one row.

Every report is self-checked at construction time: spectral multiplicities
must sum to the vertex count and weighted sums must reproduce the trace.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .ccc import CliqueDecomposition
from .errors import InvalidParameters, UnsupportedFamily, VerificationError
from .groups import FamilySpec, is_prime
from .spectra import SpectrumMultiset

F = Fraction


@dataclass(frozen=True)
class ClosedFormReport:
    """Spectra/energies predicted by formula, not by building the group.

    ``realizable`` is False when a divisibility or parity constraint fails;
    the energy fields are still evaluated algebraically, but no spectrum
    multiset exists (multiplicities would be fractional).
    """

    source: str
    params: tuple[tuple[str, int], ...]
    realizable: bool
    vertex_count: Fraction
    trace_cnrs: Fraction
    delta: Fraction
    e_cn: Fraction
    le_cn: Fraction
    le_plus_cn: Fraction
    structure: Optional[CliqueDecomposition]
    cn_spec: Optional[SpectrumMultiset]
    cnl_spec: Optional[SpectrumMultiset]
    cnsl_spec: Optional[SpectrumMultiset]

    def params_string(self) -> str:
        return ",".join(f"{k}={v}" for k, v in self.params)

    def to_json(self) -> dict:
        return {
            "source": self.source,
            "params": dict(self.params),
            "realizable": self.realizable,
            "vertex_count": str(self.vertex_count),
            "trace_cnrs": str(self.trace_cnrs),
            "delta": str(self.delta),
            "e_cn": str(self.e_cn),
            "le_cn": str(self.le_cn),
            "le_plus_cn": str(self.le_plus_cn),
            "e_cn_float": float(self.e_cn),
            "le_cn_float": float(self.le_cn),
            "le_plus_cn_float": float(self.le_plus_cn),
            "cn_spectrum": self.cn_spec.to_json() if self.cn_spec else None,
            "cnl_spectrum": self.cnl_spec.to_json() if self.cnl_spec else None,
            "cnsl_spectrum": self.cnsl_spec.to_json() if self.cnsl_spec else None,
        }


def _cn_pairs(parts) -> list:
    """CN eigenvalue pairs of a clique union, allowing fractional algebra."""
    pairs = []
    for m, l in parts:
        m, l = F(m), F(l)
        pairs.append(((m - 1) * (m - 2), l))
        pairs.append((-(m - 2), l * (m - 1)))
    return pairs


def _weighted(pairs) -> Fraction:
    return sum((F(v) * F(mult) for v, mult in pairs), F(0))


def _abs_sum(pairs) -> Fraction:
    return sum((abs(F(v)) * F(mult) for v, mult in pairs), F(0))


def centered_abs_sum(pairs, delta: Fraction) -> Fraction:
    """Sum of mult * |value - delta| over (value, mult) pairs; mults may be fractional."""
    return sum((abs(F(v) - delta) * F(mult) for v, mult in pairs), F(0))


def _dim(pairs) -> Fraction:
    return sum((F(mult) for _, mult in pairs), F(0))


def _to_multiset(pairs, source: str) -> SpectrumMultiset:
    out = []
    for value, mult in pairs:
        mult = F(mult)
        if mult.denominator != 1 or mult < 0:
            raise VerificationError(f"{source}: non-integral multiplicity {mult}")
        out.append((F(value), int(mult)))
    return SpectrumMultiset.from_pairs(out)


def _make_report(
    source: str,
    params: dict,
    realizable: bool,
    parts,
    cnl_pairs,
    cnsl_pairs,
    le: Fraction,
    lep: Fraction,
) -> ClosedFormReport:
    vertex_count = sum((F(m) * F(l) for m, l in parts), F(0))
    trace = sum((F(l) * F(m) * (F(m) - 1) * (F(m) - 2) for m, l in parts), F(0))
    delta = trace / vertex_count
    cn_pairs = _cn_pairs(parts)
    # Transcription self-checks: dimensions and traces must line up.
    for name, pairs, expect in (
        ("cn", cn_pairs, F(0)),
        ("cnl", cnl_pairs, trace),
        ("cnsl", cnsl_pairs, trace),
    ):
        if _dim(pairs) != vertex_count:
            raise VerificationError(
                f"{source}: {name} multiplicities sum to {_dim(pairs)}, "
                f"vertex count is {vertex_count}"
            )
        if _weighted(pairs) != expect:
            raise VerificationError(
                f"{source}: {name} weighted sum {_weighted(pairs)} != {expect}"
            )
    structure = cn_spec = cnl_spec = cnsl_spec = None
    if realizable:
        structure = CliqueDecomposition.from_pairs(
            (int(F(m)), int(F(l))) for m, l in parts if F(l) > 0
        )
        cn_spec = _to_multiset(cn_pairs, source)
        cnl_spec = _to_multiset(cnl_pairs, source)
        cnsl_spec = _to_multiset(cnsl_pairs, source)
    return ClosedFormReport(
        source=source,
        params=tuple(sorted(params.items())),
        realizable=realizable,
        vertex_count=vertex_count,
        trace_cnrs=trace,
        delta=delta,
        e_cn=_abs_sum(cn_pairs),
        le_cn=F(le),
        le_plus_cn=F(lep),
        structure=structure,
        cn_spec=cn_spec,
        cnl_spec=cnl_spec,
        cnsl_spec=cnsl_spec,
    )


# ---------------------------------------------------------------------------
# Elementary abelian central quotient: G/Z = Z_p x Z_p, |Z| = z >= 2.
# Structure: (p+1) cliques of size (p-1)z/p; realizable iff p | z.
# ---------------------------------------------------------------------------


def zpzp_closed_form(p: int, z: int) -> ClosedFormReport:
    if not is_prime(p):
        raise InvalidParameters(f"p must be prime, got {p}")
    if z < 2:
        raise InvalidParameters(f"z must be >= 2, got {z}")
    realizable = z % p == 0
    m = F((p - 1) * z, p)
    parts = [(m, p + 1)]
    big_mult = F(p + 1, p) * (p * z - z - p)  # == (p+1)(m-1)
    cnl_pairs = [
        (F(0), p + 1),
        (F((p * z - z) * (p * z - z - 2 * p), p * p), big_mult),
    ]
    cnsl_pairs = [
        (F(2 * (p * z - z - p) * (p * z - z - 2 * p), p * p), p + 1),
        (F((p * z - z - 2 * p) ** 2, p * p), big_mult),
    ]
    if p == 2 and z == 3:
        le = F(3, 2)
        branch = "p=2&z=3"
    elif z == 2:
        le = F(4 * (p - 2) * (p + 1), p * p)
        branch = "z=2"
    else:
        le = F(2 * (p + 1) * (p * (z - 2) - z) * (p * (z - 1) - z), p * p)
        branch = "general"
    source = f"closed-form:zpzp-quotient[le={branch};le+={branch}]"
    return _make_report(
        source,
        {"p": p, "z": z},
        realizable,
        parts,
        cnl_pairs,
        cnsl_pairs,
        le,
        le,
    )


# ---------------------------------------------------------------------------
# Dihedral central quotient: G/Z = D_2n (n >= 3), |Z| = z.
# Structure: K_{(n-1)z/2} u 2K_{z/2} for even n, K_{(n-1)z/2} u K_z for odd n.
# ---------------------------------------------------------------------------


def d2n_quotient_closed_form(n: int, z: int) -> ClosedFormReport:
    if n < 3 or z < 1:
        raise InvalidParameters(f"need n >= 3 and z >= 1, got n={n}, z={z}")
    even = n % 2 == 0
    if even and z < 2:
        raise InvalidParameters(f"even n={n} needs z >= 2, got z={z}")
    big = F((n - 1) * z, 2)
    big_eig = F((n * z - z) * (n * z - z - 4), 4)
    big_mult = F(n * z - z - 2, 2)
    if even:
        realizable = z % 2 == 0
        parts = [(big, 1), (F(z, 2), 2)]
        cnl_pairs = [
            (F(0), 3),
            (big_eig, big_mult),
            (F(z * (z - 4), 4), z - 2),
        ]
        cnsl_pairs = [
            (F((n * z - z - 2) * (n * z - z - 4), 2), 1),
            (F((n * z - z - 4) ** 2, 4), big_mult),
            (F((z - 2) * (z - 4), 2), 2),
            (F((z - 4) ** 2, 4), z - 2),
        ]
        le = F(
            ((n - 1) * z - 2) * (n * (z + 1) * ((n - 2) * z - 4) + 11 * z - 4),
            2 * (n + 1),
        )
        le_branch = "general"
        if n == 4 and z == 2:
            lep, lep_branch = F(28, 5), "n=4&z=2"
        elif n == 4:
            lep, lep_branch = F(3, 5) * z * z * (4 * z - 6), "n=4&z>=3"
        else:
            lep = F((n - 2) * (n - 1) * z * z * (n * z - 6), 2 * (n + 1))
            lep_branch = "general"
        parity = "even"
    else:
        realizable = True
        parts = [(big, 1), (F(z), 1)]
        cnl_pairs = [
            (F(0), 2),
            (big_eig, big_mult),
            (F(z * (z - 2)), z - 1),
        ]
        cnsl_pairs = [
            (F((n * z - z - 2) * (n * z - z - 4), 2), 1),
            (F((n * z - z - 4) ** 2, 4), big_mult),
            (F(2 * (z - 1) * (z - 2)), 1),
            (F((z - 2) ** 2), z - 1),
        ]
        if n == 3 and z == 1:
            le, le_branch = F(0), "n=3&z=1"
        elif n == 3:
            le, le_branch = F(4 * (z - 1) * (z - 2)), "n=3&z>=2"
        else:
            le = F(
                ((n - 1) * z - 2)
                * ((n - 3) * (n + 1) * z * z + ((n - 6) * n + 17) * z - 4 * (n + 1)),
                2 * (n + 1),
            )
            le_branch = "general"
        if z == 1 and n in (3, 5):
            lep, lep_branch = F(0), "n in {3,5} & z=1"
        elif n == 3:
            lep, lep_branch = F(4 * (z - 1) * (z - 2)), "n=3&z>=2"
        elif z == 1 and n >= 7:
            lep, lep_branch = F((n - 5) * (n - 3) * (n + 3), 2 * (n + 1)), "n>=7&z=1"
        else:
            lep = F((n - 3) * (n - 1) * z * z * (n * z + z - 6), 2 * (n + 1))
            lep_branch = "general"
        parity = "odd"
    source = f"closed-form:dihedral-quotient-{parity}[le={le_branch};le+={lep_branch}]"
    return _make_report(
        source, {"n": n, "z": z}, realizable, parts, cnl_pairs, cnsl_pairs, le, lep
    )


# ---------------------------------------------------------------------------
# Direct per-family tables.
# ---------------------------------------------------------------------------


def _dihedral_rows(n: int):
    if n % 2 == 1:
        parts = [(F(n - 1, 2), 1), (1, 1)]
        cnl = [(F(0), 2), (F((n - 1) * (n - 5), 4), F(n - 3, 2))]
        cnsl = [
            (F(0), 1),
            (F((n - 3) * (n - 5), 2), 1),
            (F((n - 5) ** 2, 4), F(n - 3, 2)),
        ]
        le = F((n - 5) * (n - 3) * (n - 1), n + 1)
        lep = F((n - 5) * (n - 3) * (n + 3), 2 * (n + 1))
        return parts, cnl, cnsl, le, lep, "odd", "general", "general"
    # The two extra vertices form 2K_1 or K_2 depending on the parity of n/2;
    # both contribute zero spectra, so the rows below cover either case.
    small = [(1, 2)] if (n // 2) % 2 == 0 else [(2, 1)]
    parts = [(F(n - 2, 2), 1)] + small
    cnl = [(F(0), 3), (F((n - 2) * (n - 6), 4), F(n - 4, 2))]
    cnsl = [
        (F(0), 2),
        (F((n - 4) * (n - 6), 2), 1),
        (F((n - 6) ** 2, 4), F(n - 4, 2)),
    ]
    le = F(3 * (n - 6) * (n - 4) * (n - 2), 2 * (n + 2))
    if n == 8:
        lep, lep_branch = F(28, 5), "n=8"
    else:
        lep, lep_branch = F((n - 6) * (n - 4) * (n - 2), n + 2), "general"
    return parts, cnl, cnsl, le, lep, "even", "general", lep_branch


def _dicyclic_rows(n: int):
    parts = [(n - 1, 1)] + ([(1, 2)] if n % 2 == 0 else [(2, 1)])
    cnl = [(F(0), 3), (F((n - 1) * (n - 3)), n - 2)]
    cnsl = [
        (F(0), 2),
        (F(2 * (n - 2) * (n - 3)), 1),
        (F((n - 3) ** 2), n - 2),
    ]
    le = F(6 * (n - 3) * (n - 2) * (n - 1), n + 1)
    if n == 4:
        lep, lep_branch = F(28, 5), "n=4"
    else:
        lep, lep_branch = F(4 * (n - 3) * (n - 2) * (n - 1), n + 1), "general"
    return parts, cnl, cnsl, le, lep, "", "general", lep_branch


def _u6n_rows(n: int):
    parts = [(n, 2)]
    cnl = [(F(0), 2), (F(n * (n - 2)), 2 * (n - 1))]
    cnsl = [(F(2 * (n - 1) * (n - 2)), 2), (F((n - 2) ** 2), 2 * (n - 1))]
    le = F(4 * (n - 2) * (n - 1))
    return parts, cnl, cnsl, le, le, "", "general", "general"


def _unm_rows(n: int, m: int):
    if m == 2:
        # Degenerate member: one clique on all 2n vertices.
        parts = [(2 * n, 1)]
        cnl = [(F(0), 1), (F(2 * n * (2 * n - 2)), 2 * n - 1)]
        cnsl = [
            (F(2 * (2 * n - 1) * (2 * n - 2)), 1),
            (F((2 * n - 2) ** 2), 2 * n - 1),
        ]
        le = F(4 * (n - 1) * (2 * n - 1))
        return parts, cnl, cnsl, le, le, "m=2", "m=2", "m=2"
    if m % 2 == 1:
        big = F((m - 1) * n, 2)
        big_mult = F(n * m - n - 2, 2)
        parts = [(big, 1), (n, 1)]
        cnl = [
            (F(0), 2),
            (F(n * (n - 2)), n - 1),
            (F((n * m - n) * (n * m - n - 4), 4), big_mult),
        ]
        cnsl = [
            (F(2 * (n - 1) * (n - 2)), 1),
            (F((n - 2) ** 2), n - 1),
            (F((n * m - n - 2) * (n * m - n - 4), 2), 1),
            (F((n * m - n - 4) ** 2, 4), big_mult),
        ]
        if m == 3:
            le, le_branch = F(4 * (n - 1) * (n - 2)), "m=3"
        else:
            le = F(
                ((m - 1) * n - 2)
                * ((m - 3) * (m + 1) * n * n + ((m - 6) * m + 17) * n - 4 * (m + 1)),
                2 * (m + 1),
            )
            le_branch = "general"
        if m == 3:
            lep, lep_branch = F(4 * (n - 1) * (n - 2)), "m=3"
        else:
            lep = F((m - 3) * (m - 1) * n * n * (m * n + n - 6), 2 * (m + 1))
            lep_branch = "general"
        return parts, cnl, cnsl, le, lep, "m odd", le_branch, lep_branch
    big = F((m - 2) * n, 2)
    big_mult = F(n * m - 2 * n - 2, 2)
    big_cnl = (F((n * m - 2 * n) * (n * m - 2 * n - 4), 4), big_mult)
    big_cnsl = [
        (F((n * m - 2 * n - 2) * (n * m - 2 * n - 4), 2), 1),
        (F((n * m - 2 * n - 4) ** 2, 4), big_mult),
    ]
    if m % 4 == 0:
        # Half-quotient parameter m/2 is even: small side is 2K_n.
        parts = [(big, 1), (n, 2)]
        cnl = [(F(0), 3), (F(n * (n - 2)), 2 * (n - 1)), big_cnl]
        cnsl = [
            (F(2 * (n - 1) * (n - 2)), 2),
            (F((n - 2) ** 2), 2 * (n - 1)),
        ] + big_cnsl
        if m == 4:
            le, le_branch = F(6 * (n - 2) * (n - 1)), "m=4"
        else:
            le = F(
                ((m - 2) * n - 2)
                * (m * (2 * n + 1) * ((m - 4) * n - 4) + 44 * n - 8),
                2 * (m + 2),
            )
            le_branch = "general"
        if m == 4:
            lep, lep_branch = F(6 * (n - 2) * (n - 1)), "m=4"
        elif m == 8:
            lep, lep_branch = F(24, 5) * n * n * (4 * n - 3), "m=8"
        else:
            lep = F((m - 4) * (m - 2) * n * n * (m * n - 6), m + 2)
            lep_branch = "general"
        return parts, cnl, cnsl, le, lep, "m=0 mod 4", le_branch, lep_branch
    # m = 2 mod 4, m >= 6: half-quotient parameter m/2 is odd, small side K_2n.
    parts = [(big, 1), (2 * n, 1)]
    cnl = [
        (F(0), 2),
        (F(2 * n * (2 * n - 2)), 2 * n - 1),
        big_cnl,
    ]
    cnsl = [
        (F(2 * (2 * n - 1) * (2 * n - 2)), 1),
        (F((2 * n - 2) ** 2), 2 * n - 1),
    ] + big_cnsl
    if m == 6:
        le, le_branch = F(8 * (n - 1) * (2 * n - 1)), "m=6"
        lep, lep_branch = F(8 * n * (2 * n - 3) + 8), "m=6"
    else:
        h, z = m // 2, 2 * n
        le = F(
            ((h - 1) * z - 2)
            * ((h - 3) * (h + 1) * z * z + ((h - 6) * h + 17) * z - 4 * (h + 1)),
            2 * (h + 1),
        )
        le_branch = "general(m=2 mod 4)"
        lep = F((h - 3) * (h - 1) * z * z * (h * z + z - 6), 2 * (h + 1))
        lep_branch = "general(m=2 mod 4)"
    return parts, cnl, cnsl, le, lep, "m=2 mod 4", le_branch, lep_branch


def _semidihedral_rows(n: int):
    if n % 2 == 0:
        parts = [(2 * n - 1, 1), (1, 2)]
        cnl = [(F(0), 3), (F((2 * n - 1) * (2 * n - 3)), 2 * n - 2)]
        cnsl = [
            (F(0), 2),
            (F(2 * (2 * n - 2) * (2 * n - 3)), 1),
            (F((2 * n - 3) ** 2), 2 * n - 2),
        ]
        le = F(12 * (n - 1) * (4 * (n - 2) * n + 3), 2 * n + 1)
        if n == 2:
            lep, lep_branch = F(28, 5), "n=2"
        else:
            lep = F(8 * (n - 1) * (2 * n - 3) * (2 * n - 1), 2 * n + 1)
            lep_branch = "general"
        return parts, cnl, cnsl, le, lep, "even", "general", lep_branch
    parts = [(2 * n - 2, 1), (4, 1)]
    cnl = [
        (F(0), 2),
        (F(8), 3),
        (F((2 * n - 2) * (2 * n - 4)), 2 * n - 3),
    ]
    cnsl = [
        (F(2 * (2 * n - 3) * (2 * n - 4)), 1),
        (F((2 * n - 4) ** 2), 2 * n - 3),
        (F(12), 1),
        (F(4), 3),
    ]
    if n == 3:
        le, le_branch = F(24), "n=3"
        lep, lep_branch = F(24), "n=3"
    else:
        le = F(4 * (2 * n - 3) * (5 * (n - 3) * n + 4), n + 1)
        le_branch = "general"
        lep = F(16 * (n - 3) * (n - 1) * (2 * n - 1), n + 1)
        lep_branch = "general"
    return parts, cnl, cnsl, le, lep, "odd", le_branch, lep_branch


def _v8n_rows(n: int):
    if n % 2 == 0:
        parts = [(2 * n - 2, 1), (2, 2)]
        cnl = [(F(0), 5), (F((2 * n - 2) * (2 * n - 4)), 2 * n - 3)]
        cnsl = [
            (F(0), 4),
            (F(2 * (2 * n - 3) * (2 * n - 4)), 1),
            (F((2 * n - 4) ** 2), 2 * n - 3),
        ]
        le = F(20 * (n - 2) * (n - 1) * (2 * n - 3), n + 1)
        lep = F(16 * (n - 2) * (n - 1) * (2 * n - 3), n + 1)
        return parts, cnl, cnsl, le, lep, "even", "general", "general"
    parts = [(2 * n - 1, 1), (1, 2)]
    cnl = [(F(0), 3), (F((2 * n - 1) * (2 * n - 3)), 2 * n - 2)]
    cnsl = [
        (F(0), 2),
        (F(2 * (2 * n - 2) * (2 * n - 3)), 1),
        (F((2 * n - 3) ** 2), 2 * n - 2),
    ]
    le = F(12 * (n - 1) * (4 * (n - 2) * n + 3), 2 * n + 1)
    lep = F(8 * (n - 1) * (2 * n - 3) * (2 * n - 1), 2 * n + 1)
    return parts, cnl, cnsl, le, lep, "odd", "general", "general"


_FAMILY_ROWS = {
    "dihedral": lambda spec: _dihedral_rows(spec.n),
    "dicyclic": lambda spec: _dicyclic_rows(spec.n),
    "u6n": lambda spec: _u6n_rows(spec.n),
    "unm": lambda spec: _unm_rows(spec.n, spec.m),
    "semidihedral": lambda spec: _semidihedral_rows(spec.n),
    "v8n": lambda spec: _v8n_rows(spec.n),
}


def family_closed_form(spec: FamilySpec) -> ClosedFormReport:
    """Direct table for the six named families (always realizable)."""
    rows = _FAMILY_ROWS.get(spec.family)
    if rows is None:
        raise UnsupportedFamily(
            f"{spec.family} has no direct table; use the p x p quotient route"
        )
    parts, cnl, cnsl, le, lep, variant, le_branch, lep_branch = rows(spec)
    tag = f"-{variant}" if variant else ""
    source = f"closed-form:{spec.family}{tag}[le={le_branch};le+={lep_branch}]"
    params = {"n": spec.n}
    if spec.family == "unm":
        params["m"] = spec.m
    return _make_report(source, params, True, parts, cnl, cnsl, le, lep)


def quotient_route(spec: FamilySpec):
    """The (route, parameter, z) triple realizing each family's central quotient.

    Returns None for members whose graph does not exist (abelian groups).
    """
    fam = spec.family
    if fam == "dihedral":
        n = spec.n
        if n % 2 == 1:
            return ("d2n", n, 1)
        if n == 4:
            return ("zpzp", 2, 2)
        return ("d2n", n // 2, 2)
    if fam == "dicyclic":
        return ("zpzp", 2, 2) if spec.n == 2 else ("d2n", spec.n, 2)
    if fam == "semidihedral":
        return ("d2n", 2 * spec.n, 2) if spec.n % 2 == 0 else ("d2n", spec.n, 4)
    if fam == "u6n":
        return ("d2n", 3, spec.n)
    if fam == "unm":
        n, m = spec.n, spec.m
        if m == 2:
            return None
        if m % 2 == 1:
            return ("d2n", m, n)
        if m == 4:
            return ("zpzp", 2, 2 * n)
        return ("d2n", m // 2, 2 * n)
    if fam == "v8n":
        n = spec.n
        if n % 2 == 1:
            return ("d2n", 2 * n, 2)
        if n == 2:
            return ("zpzp", 2, 4)
        return ("d2n", n, 4)
    if fam == "heisenberg":
        return ("zpzp", spec.p, spec.p)
    if fam == "central_ext":
        if spec.base in ("d8", "q8"):
            return ("zpzp", 2, 2 * spec.m)
        return ("zpzp", spec.p, spec.p * spec.m)
    raise UnsupportedFamily(f"no quotient route for {fam}")


def quotient_closed_form(spec: FamilySpec) -> Optional[ClosedFormReport]:
    """Evaluate the quotient-level closed form at this family's parameters."""
    route = quotient_route(spec)
    if route is None:
        return None
    kind, parameter, z = route
    if kind == "zpzp":
        return zpzp_closed_form(parameter, z)
    return d2n_quotient_closed_form(parameter, z)


def closed_form_for(spec: FamilySpec) -> ClosedFormReport:
    """Preferred closed form: the family table, else the quotient route."""
    if spec.family in _FAMILY_ROWS:
        return family_closed_form(spec)
    report = quotient_closed_form(spec)
    if report is None:
        raise UnsupportedFamily(f"no closed form available for {spec}")
    return report
