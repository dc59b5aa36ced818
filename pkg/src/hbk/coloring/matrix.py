"""The coloring matrix A(D, φ; X) with row and column provenance."""

from __future__ import annotations

from dataclasses import dataclass

from ..algebra import AlexanderBiquandle, FieldElement
from ..diagram import Diagram
from ..exceptions import InvalidFlowError
from ..flow import Flow, flow_violations

UNDER = "under"
OVER = "over"
VERTEX_ALPHA = "vertex-alpha"
VERTEX_BETA = "vertex-beta"


@dataclass(frozen=True)
class RowProvenance:
    kind: str
    node: str

    def __str__(self) -> str:
        return f"{self.kind}({self.node})"


@dataclass(frozen=True)
class ColoringMatrix:
    entries: tuple[tuple[FieldElement, ...], ...]
    rows: tuple[RowProvenance, ...]
    columns: tuple[str, ...]

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.columns)

    def row(self, kind: str, node: str) -> tuple[FieldElement, ...]:
        return self.entries[self.rows.index(RowProvenance(kind, node))]

    def entry(self, kind: str, node: str, semi_arc: str) -> FieldElement:
        return self.row(kind, node)[self.columns.index(semi_arc)]


def coloring_matrix(d: Diagram, phi: Flow, ab: AlexanderBiquandle) -> ColoringMatrix:
    """Rows: n under-relations, n over-relations, 2k α-rows, 2k β-rows."""
    ab.require_family(phi.m)
    violations = flow_violations(d, phi)
    if violations:
        raise InvalidFlowError("; ".join(violations))

    field = ab.field
    columns = d.semi_arcs
    col = {s: j for j, s in enumerate(columns)}
    rows: list[list[FieldElement]] = []
    provenance: list[RowProvenance] = []

    def new_row(kind: str, node: str) -> list[FieldElement]:
        row = [field.zero] * len(columns)
        rows.append(row)
        provenance.append(RowProvenance(kind, node))
        return row

    frames = [(c.id, c.frame) for c in d.crossings]
    for node, f in frames:
        psi = phi.at(f.v)
        row = new_row(UNDER, node)
        row[col[f.u]] += ab.t_pow(psi)
        row[col[f.v]] += ab.s_pow(psi) - ab.t_pow(psi)
        row[col[f.w]] -= field.one
    for node, f in frames:
        under_flow = phi.at(f.u)
        row = new_row(OVER, node)
        row[col[f.v]] -= ab.s_pow(under_flow)
        row[col[f.v_prime]] += field.one
    for v in d.vertices:
        vf = v.frame
        row = new_row(VERTEX_ALPHA, v.id)
        row[col[vf.alpha]] += field.one
        row[col[vf.gamma]] -= field.one
    for v in d.vertices:
        vf = v.frame
        row = new_row(VERTEX_BETA, v.id)
        row[col[vf.beta]] += field.one
        row[col[vf.gamma]] -= ab.s_pow(phi.at(vf.alpha))

    return ColoringMatrix(
        tuple(tuple(r) for r in rows), tuple(provenance), tuple(columns)
    )
