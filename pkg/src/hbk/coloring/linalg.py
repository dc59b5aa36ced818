"""Rank and coloring dimension over the coefficient field."""

from __future__ import annotations

from ..algebra import AlexanderBiquandle, FieldElement
from ..diagram import Diagram
from ..flow import Flow
from .matrix import ColoringMatrix, coloring_matrix


def echelon_rank(rows: list[list[FieldElement]]) -> int:
    """Forward elimination; the pivot is the first nonzero entry in column order."""
    work = [list(r) for r in rows]
    rank = 0
    width = len(work[0]) if work else 0
    for col in range(width):
        pivot = next((i for i in range(rank, len(work)) if work[i][col]), None)
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        inv = work[rank][col].inverse()
        work[rank] = [x * inv for x in work[rank]]
        for i in range(rank + 1, len(work)):
            factor = work[i][col]
            if factor:
                work[i] = [x - factor * y for x, y in zip(work[i], work[rank])]
        rank += 1
        if rank == len(work):
            break
    return rank


def rank(mx: ColoringMatrix) -> int:
    return echelon_rank([list(r) for r in mx.entries])


def coloring_dimension(d: Diagram, phi: Flow, ab: AlexanderBiquandle) -> int:
    """dim Col_X(D, φ) = #semi-arcs − rank A(D, φ; X)."""
    mx = coloring_matrix(d, phi, ab)
    return len(mx.columns) - rank(mx)


def coloring_count(d: Diagram, phi: Flow, ab: AlexanderBiquandle) -> int:
    """#Col_X(D, φ) = (#X)^dim as an exact integer."""
    return ab.field.order ** coloring_dimension(d, phi, ab)
