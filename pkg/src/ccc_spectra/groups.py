"""Explicit constructions of the supported finite group families.

Each family is realized on normal forms ``x^i y^j`` (plus a central
generator for the unitriangular and direct-product families) with
hand-derived rewriting rules.  ``build_group`` expands the rules into a
full multiplication table over element indices ``0..order-1``, which the
rest of the package treats as the single source of truth.
"""

from __future__ import annotations

import math
import os
import re
from dataclasses import dataclass, field
from itertools import product
from typing import Optional

from .errors import InvalidParameters, OrderCapExceeded

DEFAULT_ORDER_CAP = 4096
ORDER_CAP_ENV = "CCC_ORDER_CAP"

FAMILIES = (
    "dihedral",
    "dicyclic",
    "semidihedral",
    "u6n",
    "unm",
    "v8n",
    "heisenberg",
    "central_ext",
)

CENTRAL_EXT_BASES = ("d8", "q8", "heisenberg")


def effective_order_cap(cap: Optional[int] = None) -> int:
    """Resolve the order cap: explicit argument, then env var, then default."""
    if cap is not None:
        return int(cap)
    env = os.environ.get(ORDER_CAP_ENV)
    if env:
        try:
            return int(env)
        except ValueError:
            raise InvalidParameters(
                f"{ORDER_CAP_ENV} must be an integer, got {env!r}"
            ) from None
    return DEFAULT_ORDER_CAP


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class FamilySpec:
    """Parameters selecting one member of a supported family.

    ``n``/``m`` are the family sizes, ``p`` the prime for the
    unitriangular family, ``base``/``m`` the factors of a central
    extension ``base x Z_m``.
    """

    family: str
    n: Optional[int] = None
    m: Optional[int] = None
    p: Optional[int] = None
    base: Optional[str] = None

    def __post_init__(self) -> None:
        fam = self.family
        if fam not in FAMILIES:
            raise InvalidParameters(f"unknown family {fam!r}; expected one of {FAMILIES}")
        if fam == "dihedral":
            self._require_n(3)
        elif fam in ("dicyclic", "semidihedral", "u6n", "v8n"):
            self._require_n(2)
        elif fam == "unm":
            self._require_n(2)
            if self.m is None or self.m < 2:
                raise InvalidParameters(f"unm requires m >= 2, got {self.m}")
        elif fam == "heisenberg":
            if self.p is None or self.p == 2 or not is_prime(self.p):
                raise InvalidParameters(
                    f"heisenberg requires an odd prime p, got {self.p}"
                )
        elif fam == "central_ext":
            if self.base not in CENTRAL_EXT_BASES:
                raise InvalidParameters(
                    f"central_ext base must be one of {CENTRAL_EXT_BASES}, got {self.base}"
                )
            if self.m is None or self.m < 1:
                raise InvalidParameters(f"central_ext requires m >= 1, got {self.m}")
            if self.base == "heisenberg" and (
                self.p is None or self.p == 2 or not is_prime(self.p)
            ):
                raise InvalidParameters(
                    f"central_ext over heisenberg requires an odd prime p, got {self.p}"
                )

    def _require_n(self, minimum: int) -> None:
        if self.n is None or self.n < minimum:
            raise InvalidParameters(
                f"{self.family} requires n >= {minimum}, got {self.n}"
            )

    @property
    def order(self) -> int:
        fam = self.family
        if fam == "dihedral":
            return 2 * self.n
        if fam == "dicyclic":
            return 4 * self.n
        if fam == "semidihedral":
            return 8 * self.n
        if fam == "u6n":
            return 6 * self.n
        if fam == "unm":
            return 2 * self.n * self.m
        if fam == "v8n":
            return 8 * self.n
        if fam == "heisenberg":
            return self.p**3
        base_order = {"d8": 8, "q8": 8}.get(self.base, (self.p or 0) ** 3)
        return base_order * self.m

    @property
    def name(self) -> str:
        fam = self.family
        if fam == "dihedral":
            return f"D_{2 * self.n}"
        if fam == "dicyclic":
            return f"T_{4 * self.n}"
        if fam == "semidihedral":
            return f"SD_{8 * self.n}"
        if fam == "u6n":
            return f"U_{6 * self.n}"
        if fam == "unm":
            return f"U({self.n},{self.m})"
        if fam == "v8n":
            return f"V_{8 * self.n}"
        if fam == "heisenberg":
            return f"Heis({self.p})"
        base = self.base.upper() if self.base != "heisenberg" else f"Heis({self.p})"
        return f"{base}xZ{self.m}"

    def param_string(self) -> str:
        parts = []
        if self.base is not None:
            parts.append(f"base={self.base}")
        for key in ("n", "m", "p"):
            value = getattr(self, key)
            if value is not None:
                parts.append(f"{key}={value}")
        return ",".join(parts)

    def __str__(self) -> str:
        return f"{self.family}:{self.param_string()}"


_SPEC_PART_RE = re.compile(r"^(n|m|p|base)=([a-z0-9]+)$")


def parse_family_spec(text: str) -> FamilySpec:
    """Parse CLI syntax like ``dihedral:n=7`` or ``central_ext:base=q8,m=3``."""
    family, params = parse_family_template(text)
    return FamilySpec(family=family, **params)


def parse_family_template(text: str) -> tuple[str, dict]:
    """Like ``parse_family_spec`` but allows missing parameters (for sweeps)."""
    text = text.strip()
    if ":" in text:
        family, _, rest = text.partition(":")
    else:
        family, rest = text, ""
    family = family.strip().lower()
    if family not in FAMILIES:
        raise InvalidParameters(f"unknown family {family!r}; expected one of {FAMILIES}")
    params: dict = {}
    if rest.strip():
        for chunk in rest.split(","):
            m = _SPEC_PART_RE.match(chunk.strip().lower())
            if not m:
                raise InvalidParameters(f"cannot parse spec fragment {chunk!r}")
            key, value = m.group(1), m.group(2)
            if key == "base":
                params[key] = value
            else:
                try:
                    params[key] = int(value)
                except ValueError:
                    raise InvalidParameters(
                        f"parameter {key} must be an integer, got {value!r}"
                    ) from None
    return family, params


def free_parameters(family: str, fixed: dict) -> tuple[str, ...]:
    """Names of the parameters a sweep may range over for this family."""
    needed = {
        "dihedral": ("n",),
        "dicyclic": ("n",),
        "semidihedral": ("n",),
        "u6n": ("n",),
        "unm": ("n", "m"),
        "v8n": ("n",),
        "heisenberg": ("p",),
        "central_ext": ("m",),
    }[family]
    return tuple(name for name in needed if name not in fixed)


# ---------------------------------------------------------------------------
# Normal forms and rewriting rules per family.
#
# Elements are exponent tuples; compose() implements the product of two
# normal forms directly.  Group axioms are exercised by the test suite.
# ---------------------------------------------------------------------------


def _dihedral_rules(n: int):
    elements = list(product(range(n), range(2)))

    def compose(u, v):
        a, b = u
        c, d = v
        i = (a + c) % n if b == 0 else (a - c) % n
        return (i, (b + d) % 2)

    return elements, compose, lambda e: f"x^{e[0]} y^{e[1]}"


def _dicyclic_rules(n: int):
    # x has order 2n, y^2 = x^n, y x y^-1 = x^-1.
    elements = list(product(range(2 * n), range(2)))

    def compose(u, v):
        a, b = u
        c, d = v
        if b == 0:
            return ((a + c) % (2 * n), d)
        i = (a - c + (n if d == 1 else 0)) % (2 * n)
        return (i, (1 + d) % 2)

    return elements, compose, lambda e: f"x^{e[0]} y^{e[1]}"


def _semidihedral_rules(n: int):
    # x has order 4n, y^2 = 1, y x y = x^(2n-1).
    twist = 2 * n - 1
    elements = list(product(range(4 * n), range(2)))

    def compose(u, v):
        a, b = u
        c, d = v
        i = (a + c) % (4 * n) if b == 0 else (a + twist * c) % (4 * n)
        return (i, (b + d) % 2)

    return elements, compose, lambda e: f"x^{e[0]} y^{e[1]}"


def _unm_rules(n: int, m: int):
    # x has order 2n, y order m, x^-1 y x = y^-1 (so y x = x y^-1).
    elements = list(product(range(2 * n), range(m)))

    def compose(u, v):
        a, b = u
        c, d = v
        bb = b if c % 2 == 0 else -b
        return ((a + c) % (2 * n), (bb + d) % m)

    return elements, compose, lambda e: f"x^{e[0]} y^{e[1]}"


def _v8n_rules(n: int):
    # x order 2n, y order 4, y x = x^-1 y^-1 and y^-1 x = x^-1 y; the odd
    # powers of y invert x and pick up a central y^2 when x's exponent is odd.
    elements = list(product(range(2 * n), range(4)))

    def compose(u, v):
        a, b = u
        c, d = v
        if b % 2 == 0:
            return ((a + c) % (2 * n), (b + d) % 4)
        j = (b + 2 * (c % 2) + d) % 4
        return ((a - c) % (2 * n), j)

    return elements, compose, lambda e: f"x^{e[0]} y^{e[1]}"


def _heisenberg_rules(p: int):
    # Unitriangular 3x3 matrices over Z_p: (a, b, c) ~ [[1,a,c],[0,1,b],[0,0,1]].
    elements = list(product(range(p), repeat=3))

    def compose(u, v):
        a1, b1, c1 = u
        a2, b2, c2 = v
        return ((a1 + a2) % p, (b1 + b2) % p, (c1 + c2 + a1 * b2) % p)

    return elements, compose, lambda e: f"x^{e[0]} y^{e[1]} z^{e[2]}"


def _central_ext_rules(spec: FamilySpec):
    if spec.base == "d8":
        base_elements, base_compose, base_label = _dihedral_rules(4)
    elif spec.base == "q8":
        base_elements, base_compose, base_label = _dicyclic_rules(2)
    else:
        base_elements, base_compose, base_label = _heisenberg_rules(spec.p)
    m = spec.m
    elements = [(g, k) for g in base_elements for k in range(m)]

    def compose(u, v):
        return (base_compose(u[0], v[0]), (u[1] + v[1]) % m)

    return elements, compose, lambda e: f"{base_label(e[0])} t^{e[1]}"


def _rules_for(spec: FamilySpec):
    fam = spec.family
    if fam == "dihedral":
        return _dihedral_rules(spec.n)
    if fam == "dicyclic":
        return _dicyclic_rules(spec.n)
    if fam == "semidihedral":
        return _semidihedral_rules(spec.n)
    if fam == "u6n":
        return _unm_rules(spec.n, 3)
    if fam == "unm":
        return _unm_rules(spec.n, spec.m)
    if fam == "v8n":
        return _v8n_rules(spec.n)
    if fam == "heisenberg":
        return _heisenberg_rules(spec.p)
    return _central_ext_rules(spec)


@dataclass(frozen=True)
class GroupTable:
    """A finite group as an explicit multiplication table.

    ``mult[a][b]`` is the index of the product; ``labels`` hold the
    normal-form strings, which round-trip through ``label_index``.
    """

    order: int
    mult: tuple[tuple[int, ...], ...]
    inv: tuple[int, ...]
    identity: int
    labels: tuple[str, ...]
    spec: FamilySpec
    label_to_index: dict = field(repr=False, compare=False, default_factory=dict)

    def mul(self, a: int, b: int) -> int:
        return self.mult[a][b]

    def inverse(self, a: int) -> int:
        return self.inv[a]

    def conjugate(self, t: int, a: int) -> int:
        """t * a * t^-1."""
        return self.mult[self.mult[t][a]][self.inv[t]]

    def commutes(self, a: int, b: int) -> bool:
        return self.mult[a][b] == self.mult[b][a]

    def label_index(self, label: str) -> int:
        return self.label_to_index[label]

    def is_abelian(self) -> bool:
        return all(
            self.mult[a][b] == self.mult[b][a]
            for a in range(self.order)
            for b in range(a + 1, self.order)
        )

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != self.identity:
            x = self.mult[x][a]
            k += 1
        return k


def build_group(spec: FamilySpec, cap: Optional[int] = None) -> GroupTable:
    """Expand a family spec into a full multiplication table."""
    limit = effective_order_cap(cap)
    if spec.order > limit:
        raise OrderCapExceeded(
            f"{spec} has order {spec.order}, above the cap {limit}"
        )
    elements, compose, label_fn = _rules_for(spec)
    index = {e: i for i, e in enumerate(elements)}
    order = len(elements)
    if order != spec.order:
        raise InvalidParameters(
            f"{spec}: expected order {spec.order}, built {order} normal forms"
        )
    mult = tuple(
        tuple(index[compose(a, b)] for b in elements) for a in elements
    )
    identity = index[elements[0]]
    # Identity must really behave as one under the rewriting rules.
    if any(mult[identity][i] != i or mult[i][identity] != i for i in range(order)):
        raise InvalidParameters(f"{spec}: normal form 0 is not an identity")
    inv = []
    for a in range(order):
        row = mult[a]
        b = next(x for x in range(order) if row[x] == identity)
        if mult[b][a] != identity:
            raise InvalidParameters(f"{spec}: one-sided inverse at element {a}")
        inv.append(b)
    labels = tuple(label_fn(e) for e in elements)
    if len(set(labels)) != order:
        raise InvalidParameters(f"{spec}: element labels are not distinct")
    return GroupTable(
        order=order,
        mult=mult,
        inv=tuple(inv),
        identity=identity,
        labels=labels,
        spec=spec,
        label_to_index={lab: i for i, lab in enumerate(labels)},
    )


@dataclass(frozen=True)
class ConjugacyPartition:
    """Conjugacy classes, the center, and the non-central class indices."""

    classes: tuple[tuple[int, ...], ...]
    center: frozenset
    representatives: tuple[int, ...]
    noncentral_classes: tuple[int, ...]

    @property
    def class_count(self) -> int:
        return len(self.classes)


def conjugacy_classes(g: GroupTable) -> ConjugacyPartition:
    """Compute conjugacy classes by orbits; representatives are class minima."""
    order = g.order
    center = frozenset(
        a for a in range(order) if all(g.commutes(a, b) for b in range(order))
    )
    seen = [False] * order
    classes = []
    for a in range(order):
        if seen[a]:
            continue
        orbit = {g.conjugate(t, a) for t in range(order)}
        for x in orbit:
            seen[x] = True
        classes.append(tuple(sorted(orbit)))
    classes.sort(key=lambda c: c[0])
    representatives = tuple(c[0] for c in classes)
    noncentral = tuple(
        i for i, c in enumerate(classes) if representatives[i] not in center
    )
    return ConjugacyPartition(
        classes=tuple(classes),
        center=center,
        representatives=representatives,
        noncentral_classes=noncentral,
    )


@dataclass(frozen=True)
class CentralQuotientType:
    """Shape of G/Z(G): elementary abelian p^2, dihedral of order 2n, or other."""

    kind: str  # "zpzp" | "dihedral" | "other"
    parameter: Optional[int]
    z: int

    @property
    def is_zpzp(self) -> bool:
        return self.kind == "zpzp"

    @property
    def is_dihedral(self) -> bool:
        return self.kind == "dihedral"

    def describe(self) -> str:
        if self.kind == "zpzp":
            return f"Z_{self.parameter} x Z_{self.parameter} (z={self.z})"
        if self.kind == "dihedral":
            return f"D_{2 * self.parameter} (z={self.z})"
        return f"other (z={self.z})"


def _quotient_table(g: GroupTable, center: frozenset):
    """Coset multiplication of G/Z with cosets keyed by their minimal element."""
    order = g.order
    coset_rep = [-1] * order
    for a in range(order):
        if coset_rep[a] >= 0:
            continue
        coset = [g.mult[a][c] for c in center]
        rep = min(coset)
        for x in coset:
            coset_rep[x] = rep
    reps = sorted(set(coset_rep))
    rep_id = {r: i for i, r in enumerate(reps)}
    q = len(reps)
    table = [[rep_id[coset_rep[g.mult[reps[i]][reps[j]]]] for j in range(q)] for i in range(q)]
    identity = rep_id[coset_rep[g.identity]]
    return table, identity


def _orders_in_table(table, identity) -> list:
    q = len(table)
    orders = []
    for a in range(q):
        k, x = 1, a
        while x != identity:
            x = table[x][a]
            k += 1
        orders.append(k)
    return orders


def central_quotient_type(g: GroupTable, part: ConjugacyPartition) -> CentralQuotientType:
    """Classify G/Z(G), testing the elementary-abelian shape before the dihedral one."""
    z = len(part.center)
    q_order = g.order // z
    table, identity = _quotient_table(g, part.center)
    orders = _orders_in_table(table, identity)

    root = math.isqrt(q_order)
    if root * root == q_order and is_prime(root):
        abelian = all(
            table[a][b] == table[b][a] for a in range(q_order) for b in range(a + 1, q_order)
        )
        exponent_p = all(o in (1, root) for o in orders)
        if abelian and exponent_p:
            return CentralQuotientType(kind="zpzp", parameter=root, z=z)

    if q_order % 2 == 0 and q_order >= 6:
        k = q_order // 2
        for c in range(q_order):
            if orders[c] != k:
                continue
            powers = set()
            x = identity
            for _ in range(k):
                powers.add(x)
                x = table[x][c]
            c_inv = next(x for x in range(q_order) if table[c][x] == identity)
            for t in range(q_order):
                if t in powers or orders[t] != 2:
                    continue
                t_inv = t  # involution
                if table[table[t][c]][t_inv] == c_inv:
                    return CentralQuotientType(kind="dihedral", parameter=k, z=z)
    return CentralQuotientType(kind="other", parameter=None, z=z)
