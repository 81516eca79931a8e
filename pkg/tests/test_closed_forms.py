"""Closed-form tables: branch values, internal consistency, route agreement."""

from __future__ import annotations

from fractions import Fraction

import pytest

from ccc_spectra.closed_forms import (
    closed_form_for,
    d2n_quotient_closed_form,
    family_closed_form,
    quotient_closed_form,
    quotient_route,
    zpzp_closed_form,
)
from ccc_spectra.errors import InvalidParameters, UnsupportedFamily
from ccc_spectra.groups import FamilySpec

F = Fraction


def spec(family, **kw):
    return FamilySpec(family=family, **kw)


def test_zpzp_examples():
    r = zpzp_closed_form(2, 2)
    assert r.realizable and r.le_cn == r.le_plus_cn == 0
    assert r.structure.parts == ((1, 3),)

    r = zpzp_closed_form(2, 3)
    assert not r.realizable
    assert r.le_cn == r.le_plus_cn == F(3, 2)
    assert r.cnl_spec is None and r.structure is None
    assert r.delta == F(-1, 4)

    r = zpzp_closed_form(3, 3)
    assert r.realizable and r.le_cn == 0
    assert r.structure.parts == ((2, 4),)

    r = zpzp_closed_form(3, 6)
    assert r.realizable
    assert r.structure.parts == ((4, 4),)
    # general branch: 2(p+1)(p(z-2)-z)(p(z-1)-z)/p^2 = 2*4*6*9/9 = 48
    assert r.le_cn == 48

    with pytest.raises(InvalidParameters):
        zpzp_closed_form(4, 4)
    with pytest.raises(InvalidParameters):
        zpzp_closed_form(3, 1)


def test_d2n_examples():
    r = d2n_quotient_closed_form(4, 2)
    assert r.le_plus_cn == F(28, 5)
    assert "n=4&z=2" in r.source

    r = d2n_quotient_closed_form(3, 1)
    assert r.le_cn == 0 and r.le_plus_cn == 0

    r = d2n_quotient_closed_form(7, 1)
    assert r.le_cn == 6 and r.le_plus_cn == 5
    assert r.structure.parts == ((3, 1), (1, 1))

    r = d2n_quotient_closed_form(5, 1)
    assert r.le_plus_cn == 0  # second zero row

    r = d2n_quotient_closed_form(4, 3)
    assert not r.realizable
    assert r.le_plus_cn == F(3, 5) * 9 * 6  # n=4 & z>=3 row

    with pytest.raises(InvalidParameters):
        d2n_quotient_closed_form(2, 2)
    with pytest.raises(InvalidParameters):
        d2n_quotient_closed_form(4, 1)


def test_family_examples():
    r = family_closed_form(spec("dicyclic", n=5))
    assert r.le_cn == 24
    assert r.cnl_spec.pairs == ((F(0), 3), (F(8), 3))

    r = family_closed_form(spec("semidihedral", n=2))
    assert r.le_plus_cn == F(28, 5)

    r = family_closed_form(spec("v8n", n=3))
    assert r.le_cn == F(360, 7)
    assert r.e_cn == 24 and r.le_plus_cn == F(240, 7)

    r = family_closed_form(spec("dihedral", n=11))
    assert r.le_cn == 40 and r.le_plus_cn == 28

    r = family_closed_form(spec("u6n", n=4))
    assert r.le_cn == r.le_plus_cn == 24
    assert r.structure.parts == ((4, 2),)

    with pytest.raises(UnsupportedFamily):
        family_closed_form(spec("heisenberg", p=3))


def test_unm_branches():
    # m=2 degenerates to a single clique on 2n vertices.
    r = family_closed_form(spec("unm", n=3, m=2))
    assert r.structure.parts == ((6, 1),)
    assert r.e_cn == r.le_cn == r.le_plus_cn == 40

    r = family_closed_form(spec("unm", n=4, m=3))
    assert r.structure.parts == ((4, 2),)
    assert r.le_cn == 4 * 3 * 2

    r = family_closed_form(spec("unm", n=3, m=4))
    assert r.structure.parts == ((3, 3),)
    assert r.le_cn == 6 * 1 * 2

    r = family_closed_form(spec("unm", n=4, m=5))
    assert r.structure.parts == ((8, 1), (4, 1))
    assert r.le_cn == 252 and r.le_plus_cn == 192

    r = family_closed_form(spec("unm", n=2, m=6))
    assert r.structure.parts == ((4, 2),)
    assert r.le_cn == 8 * 1 * 3 and r.le_plus_cn == 8 * 2 * 1 + 8

    r = family_closed_form(spec("unm", n=2, m=8))
    assert r.structure.parts == ((6, 1), (2, 2))
    assert r.le_plus_cn == F(24, 5) * 4 * 5

    r = family_closed_form(spec("unm", n=2, m=10))
    assert r.structure.parts == ((8, 1), (4, 1))
    assert r.le_cn == 252 and r.le_plus_cn == 192


def test_internal_consistency_energies_rederive_from_spectra():
    specs = (
        [spec("dihedral", n=n) for n in range(3, 25)]
        + [spec("dicyclic", n=n) for n in range(2, 13)]
        + [spec("semidihedral", n=n) for n in range(2, 11)]
        + [spec("v8n", n=n) for n in range(2, 11)]
        + [spec("u6n", n=n) for n in range(2, 11)]
        + [spec("unm", n=n, m=m) for n in range(2, 7) for m in range(2, 9)]
        + [spec("heisenberg", p=p) for p in (3, 5, 7)]
        + [spec("central_ext", base=b, m=m) for b in ("d8", "q8") for m in range(1, 6)]
    )
    for s in specs:
        r = closed_form_for(s)
        assert r.realizable, s
        assert r.cnl_spec.dim == r.vertex_count
        assert r.cnl_spec.weighted_sum == r.trace_cnrs
        assert r.cnsl_spec.weighted_sum == r.trace_cnrs
        assert r.cn_spec.weighted_sum == 0
        assert r.cnl_spec.centered_abs_sum(r.delta) == r.le_cn, (s, r.source)
        assert r.cnsl_spec.centered_abs_sum(r.delta) == r.le_plus_cn, (s, r.source)
        assert r.cn_spec.abs_sum() == r.e_cn, (s, r.source)


def test_quotient_route_map():
    assert quotient_route(spec("dihedral", n=9)) == ("d2n", 9, 1)
    assert quotient_route(spec("dihedral", n=10)) == ("d2n", 5, 2)
    assert quotient_route(spec("dihedral", n=4)) == ("zpzp", 2, 2)
    assert quotient_route(spec("dicyclic", n=2)) == ("zpzp", 2, 2)
    assert quotient_route(spec("semidihedral", n=4)) == ("d2n", 8, 2)
    assert quotient_route(spec("semidihedral", n=5)) == ("d2n", 5, 4)
    assert quotient_route(spec("u6n", n=7)) == ("d2n", 3, 7)
    assert quotient_route(spec("unm", n=3, m=2)) is None
    assert quotient_route(spec("unm", n=3, m=7)) == ("d2n", 7, 3)
    assert quotient_route(spec("unm", n=3, m=4)) == ("zpzp", 2, 6)
    assert quotient_route(spec("unm", n=3, m=6)) == ("d2n", 3, 6)
    assert quotient_route(spec("v8n", n=2)) == ("zpzp", 2, 4)
    assert quotient_route(spec("v8n", n=6)) == ("d2n", 6, 4)
    assert quotient_route(spec("v8n", n=7)) == ("d2n", 14, 2)
    assert quotient_route(spec("central_ext", base="heisenberg", p=3, m=2)) == ("zpzp", 3, 6)


def test_routes_agree():
    """Family tables equal the quotient-level formulas at the right parameters."""
    specs = (
        [spec("dihedral", n=n) for n in range(3, 25)]
        + [spec("dicyclic", n=n) for n in range(2, 15)]
        + [spec("semidihedral", n=n) for n in range(2, 11)]
        + [spec("v8n", n=n) for n in range(2, 11)]
        + [spec("u6n", n=n) for n in range(2, 11)]
        + [spec("unm", n=n, m=m) for n in range(2, 7) for m in range(3, 9)]
    )
    for s in specs:
        direct = family_closed_form(s)
        via_quotient = quotient_closed_form(s)
        assert via_quotient is not None and via_quotient.realizable, s
        assert direct.vertex_count == via_quotient.vertex_count, s
        assert direct.delta == via_quotient.delta, s
        assert direct.e_cn == via_quotient.e_cn, s
        assert direct.le_cn == via_quotient.le_cn, (s, direct.source, via_quotient.source)
        assert direct.le_plus_cn == via_quotient.le_plus_cn, (s, direct.source)
        assert direct.cnl_spec.pairs == via_quotient.cnl_spec.pairs, s
        assert direct.cnsl_spec.pairs == via_quotient.cnsl_spec.pairs, s


def test_cross_family_coincidence():
    # Even semidihedral members and odd v8n members share their formulas.
    for k in range(2, 9):
        sd = family_closed_form(spec("semidihedral", n=k))
        if k % 2 == 0:
            assert sd.le_cn == F(12 * (k - 1) * (4 * (k - 2) * k + 3), 2 * k + 1)
    for k in range(3, 9, 2):
        v = family_closed_form(spec("v8n", n=k))
        assert v.le_cn == F(12 * (k - 1) * (4 * (k - 2) * k + 3), 2 * k + 1)
        assert v.le_plus_cn == F(8 * (k - 1) * (2 * k - 3) * (2 * k - 1), 2 * k + 1)


def test_closed_form_json_schema():
    payload = family_closed_form(spec("dicyclic", n=5)).to_json()
    for key in (
        "source",
        "params",
        "realizable",
        "vertex_count",
        "delta",
        "e_cn",
        "le_cn",
        "le_plus_cn",
        "e_cn_float",
        "cn_spectrum",
        "cnl_spectrum",
        "cnsl_spectrum",
    ):
        assert key in payload
    assert payload["le_cn"] == "24"
    assert payload["realizable"] is True

    degenerate = zpzp_closed_form(2, 3).to_json()
    assert degenerate["cnl_spectrum"] is None
    assert degenerate["le_cn"] == "3/2"
