"""The linear relation among coloring-matrix rows.

Weighting each row by a signed power of t taken from the Alexander
numbering makes the rows sum to zero, so one relation always drops the
rank and the coloring space is never trivial.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..algebra import AlexanderBiquandle, FieldElement
from ..diagram import Diagram
from ..flow import Flow, alexander_numbering
from .matrix import ColoringMatrix, RowProvenance, coloring_matrix


@dataclass(frozen=True)
class RelationResidual:
    matrix: ColoringMatrix
    coefficients: tuple[FieldElement, ...]
    residual: tuple[FieldElement, ...]

    @property
    def is_zero(self) -> bool:
        return not any(self.residual)

    def nonzero_columns(self) -> list[str]:
        return [s for s, x in zip(self.matrix.columns, self.residual) if x]

    def weights(self) -> list[tuple[RowProvenance, FieldElement]]:
        return list(zip(self.matrix.rows, self.coefficients))


def relation_coefficients(
    d: Diagram, phi: Flow, ab: AlexanderBiquandle
) -> tuple[FieldElement, ...]:
    """Row weights in the row order of :func:`coloring_matrix`."""
    rho = alexander_numbering(d, phi).rho

    def weight(sign: int, semi_arc: str, exponent: int) -> FieldElement:
        return (ab.s_pow(exponent) - ab.t_pow(exponent)) * ab.t_pow(
            -rho[semi_arc]
        ) * sign

    frames = [c.frame for c in d.crossings]
    coefficients = [weight(f.sign, f.w, phi.at(f.u)) for f in frames]
    coefficients += [weight(f.sign, f.v_prime, phi.at(f.v)) for f in frames]
    vertex_frames = [v.frame for v in d.vertices]
    coefficients += [
        weight(vf.sign, vf.alpha, phi.at(vf.alpha)) for vf in vertex_frames
    ]
    coefficients += [
        weight(vf.sign, vf.beta, phi.at(vf.beta)) for vf in vertex_frames
    ]
    return tuple(coefficients)


def relation_residual(
    d: Diagram, phi: Flow, ab: AlexanderBiquandle
) -> RelationResidual:
    """Σ coefficient · row over all rows; every entry is zero for a valid input."""
    mx = coloring_matrix(d, phi, ab)
    coefficients = relation_coefficients(d, phi, ab)
    field = ab.field
    residual = [field.zero] * len(mx.columns)
    for coefficient, row in zip(coefficients, mx.entries):
        if not coefficient:
            continue
        for j, entry in enumerate(row):
            if entry:
                residual[j] += coefficient * entry
    return RelationResidual(mx, coefficients, tuple(residual))
