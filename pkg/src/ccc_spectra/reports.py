"""Parameter sweeps, figure presets, and deterministic CSV/JSON emission."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional

from .errors import CccSpectraError
from .groups import FamilySpec, free_parameters
from .pipeline import analyze

F = Fraction

CSV_COLUMNS = (
    "family",
    "params",
    "vertices",
    "e_cn",
    "le_cn",
    "le_plus_cn",
    "e_cn_f",
    "le_cn_f",
    "le_plus_cn_f",
    "cnl_status",
    "cnsl_status",
    "ordering",
)


def _fmt_float(value: Fraction) -> str:
    return format(float(value), ".10g")


@dataclass
class SweepRow:
    family: str
    params: str
    vertices: Optional[int] = None
    e_cn: Optional[Fraction] = None
    le_cn: Optional[Fraction] = None
    le_plus_cn: Optional[Fraction] = None
    cnl_status: str = ""
    cnsl_status: str = ""
    ordering: str = ""
    error: Optional[str] = None
    oracle_mismatches: list = field(default_factory=list)

    def csv_fields(self) -> list:
        if self.error is not None:
            return [
                self.family,
                self.params,
                "",
                "",
                "",
                "",
                "",
                "",
                "",
                "error",
                "error",
                self.error,
            ]
        return [
            self.family,
            self.params,
            str(self.vertices),
            str(self.e_cn),
            str(self.le_cn),
            str(self.le_plus_cn),
            _fmt_float(self.e_cn),
            _fmt_float(self.le_cn),
            _fmt_float(self.le_plus_cn),
            self.cnl_status,
            self.cnsl_status,
            self.ordering,
        ]

    def to_json(self) -> dict:
        if self.error is not None:
            return {"family": self.family, "params": self.params, "error": self.error}
        payload = {
            "family": self.family,
            "params": self.params,
            "vertices": self.vertices,
            "e_cn": str(self.e_cn),
            "le_cn": str(self.le_cn),
            "le_plus_cn": str(self.le_plus_cn),
            "e_cn_f": float(self.e_cn),
            "le_cn_f": float(self.le_cn),
            "le_plus_cn_f": float(self.le_plus_cn),
            "cnl_status": self.cnl_status,
            "cnsl_status": self.cnsl_status,
            "ordering": self.ordering,
        }
        if self.oracle_mismatches:
            payload["oracle_mismatches"] = list(self.oracle_mismatches)
        return payload


def _params_string(family: str, params: dict) -> str:
    parts = []
    if "base" in params:
        parts.append(f"base={params['base']}")
    for key in ("n", "m", "p"):
        if key in params:
            parts.append(f"{key}={params[key]}")
    return ",".join(parts)


def sweep_param_sets(family: str, fixed: dict, values) -> list:
    """Full parameter dicts for a sweep; ranges over every unbound parameter."""
    free = free_parameters(family, fixed)
    if not free:
        raise CccSpectraError(f"{family}: no free parameter left to sweep")
    sets = []
    if len(free) == 1:
        for v in values:
            sets.append({**fixed, free[0]: v})
    else:
        for v in values:
            for w in values:
                sets.append({**fixed, free[0]: v, free[1]: w})
    return sets


def row_for_params(family: str, params: dict, include_oracle: bool = False) -> SweepRow:
    label = _params_string(family, params)
    try:
        spec = FamilySpec(family=family, **params)
        result = analyze(spec, numeric_check=include_oracle)
    except CccSpectraError as exc:
        return SweepRow(family=family, params=label, error=str(exc))
    if result.abelian:
        return SweepRow(
            family=family, params=label, error="abelian group: no ccc graph exists"
        )
    report = result.report
    cls = result.classification
    return SweepRow(
        family=family,
        params=label,
        vertices=report.vertex_count,
        e_cn=report.e_cn,
        le_cn=report.le_cn,
        le_plus_cn=report.le_plus_cn,
        cnl_status=cls.cnl_status,
        cnsl_status=cls.cnsl_status,
        ordering=cls.ordering,
        oracle_mismatches=list(result.mismatches) if include_oracle else [],
    )


def run_sweep(family: str, param_sets, include_oracle: bool = False) -> list:
    return [row_for_params(family, params, include_oracle) for params in param_sets]


def rows_to_csv(rows) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in rows:
        writer.writerow(row.csv_fields())
    return buffer.getvalue()


def rows_to_json(rows) -> str:
    return json.dumps([row.to_json() for row in rows], indent=2, sort_keys=True) + "\n"


# ---------------------------------------------------------------------------
# Figure presets: the family/range/series behind each published energy plot.
# Claims return exact (e_cn, le_cn, le_plus_cn) at one abscissa.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FigurePreset:
    name: str
    description: str
    family: str
    fixed: dict
    ranged: str
    values: tuple
    claims: Callable[[int], tuple]


def _fig1(n: int):
    return (
        F((n - 3) * (n - 5), 2),
        F((n - 5) * (n - 3) * (n - 1), n + 1),
        F((n - 5) * (n - 3) * (n + 3), 2 * (n + 1)),
    )


def _fig2(n: int):
    lep = F(28, 5) if n == 8 else F((n - 6) * (n - 4) * (n - 2), n + 2)
    return (
        F((n - 4) * (n - 6), 2),
        F(3 * (n - 6) * (n - 4) * (n - 2), 2 * (n + 2)),
        lep,
    )


def _fig3(n: int):
    lep = F(28, 5) if n == 4 else F(4 * (n - 3) * (n - 2) * (n - 1), n + 1)
    return (
        F(2 * (n - 2) * (n - 3)),
        F(6 * (n - 3) * (n - 2) * (n - 1), n + 1),
        lep,
    )


def _fig4(m: int):
    le = F(24) if m == 3 else F(4 * (2 * m - 3) * (5 * m * m - 15 * m + 4), m + 1)
    lep = F(24) if m == 3 else F(8 * (m - 3) * (m - 1) * (4 * m - 2), m + 1)
    return (F(4 * (2 * m * m - 7 * m + 9)), le, lep)


def _fig5(n: int):
    lep = F(28, 5) if n == 2 else F(8 * (n - 1) * (2 * n - 3) * (2 * n - 1), 2 * n + 1)
    return (
        F(2 * (2 * n - 2) * (2 * n - 3)),
        F(12 * (n - 1) * (4 * (n - 2) * n + 3), 2 * n + 1),
        lep,
    )


def _fig6(n: int):
    le = F(24) if n == 3 else F(4 * (2 * n - 3) * (5 * (n - 3) * n + 4), n + 1)
    lep = F(24) if n == 3 else F(16 * (n - 3) * (n - 1) * (2 * n - 1), n + 1)
    return (F(2 * (2 * n - 3) * (2 * n - 4) + 12), le, lep)


def _fig7(n: int):
    return (
        F(2 * (2 * n - 3) * (2 * n - 4)),
        F(20 * (n - 2) * (n - 1) * (2 * n - 3), n + 1),
        F(16 * (n - 2) * (n - 1) * (2 * n - 3), n + 1),
    )


def _fig8(n: int):
    return (
        F(2 * (2 * n - 2) * (2 * n - 3)),
        F(12 * (n - 1) * (4 * (n - 2) * n + 3), 2 * n + 1),
        F(8 * (n - 1) * (2 * n - 3) * (2 * n - 1), 2 * n + 1),
    )


FIGURES = {
    "fig1": FigurePreset(
        "fig1", "dihedral family, odd n", "dihedral", {}, "n", tuple(range(3, 22, 2)), _fig1
    ),
    "fig2": FigurePreset(
        "fig2", "dihedral family, even n", "dihedral", {}, "n", tuple(range(4, 21, 2)), _fig2
    ),
    "fig3": FigurePreset(
        "fig3", "dicyclic family", "dicyclic", {}, "n", tuple(range(2, 21)), _fig3
    ),
    "fig4": FigurePreset(
        "fig4", "unm family at n=4, odd m", "unm", {"n": 4}, "m", tuple(range(3, 22, 2)), _fig4
    ),
    "fig5": FigurePreset(
        "fig5", "semidihedral family, even n", "semidihedral", {}, "n", tuple(range(2, 21, 2)), _fig5
    ),
    "fig6": FigurePreset(
        "fig6", "semidihedral family, odd n", "semidihedral", {}, "n", tuple(range(3, 22, 2)), _fig6
    ),
    "fig7": FigurePreset(
        "fig7", "v8n family, even n", "v8n", {}, "n", tuple(range(2, 21, 2)), _fig7
    ),
    "fig8": FigurePreset(
        "fig8", "v8n family, odd n", "v8n", {}, "n", tuple(range(3, 22, 2)), _fig8
    ),
}


def figure_rows(name: str, include_oracle: bool = False) -> list:
    preset = FIGURES[name]
    param_sets = [{**preset.fixed, preset.ranged: v} for v in preset.values]
    return run_sweep(preset.family, param_sets, include_oracle)


def figure_check(name: str) -> list:
    """Exact comparison of swept energies against the figure's series formulas."""
    preset = FIGURES[name]
    problems = []
    for value, row in zip(preset.values, figure_rows(name)):
        if row.error is not None:
            problems.append(f"{name} at {preset.ranged}={value}: {row.error}")
            continue
        e, le, lep = preset.claims(value)
        for label, got, expected in (
            ("e_cn", row.e_cn, e),
            ("le_cn", row.le_cn, le),
            ("le_plus_cn", row.le_plus_cn, lep),
        ):
            if got != expected:
                problems.append(
                    f"{name} at {preset.ranged}={value}: {label} = {got}, series says {expected}"
                )
    return problems
