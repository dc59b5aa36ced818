"""Coloring matrices, their rank and the brute-force coloring oracle."""

from .linalg import coloring_count, coloring_dimension, echelon_rank, rank
from .matrix import (
    OVER,
    UNDER,
    VERTEX_ALPHA,
    VERTEX_BETA,
    ColoringMatrix,
    RowProvenance,
    coloring_matrix,
)
from .oracle import (
    DEFAULT_BRUTE_CAP,
    Constraint,
    branching_variables,
    coloring_constraints,
    coloring_count_bruteforce,
)
from .relation import RelationResidual, relation_coefficients, relation_residual

__all__ = [
    "DEFAULT_BRUTE_CAP",
    "OVER",
    "UNDER",
    "VERTEX_ALPHA",
    "VERTEX_BETA",
    "ColoringMatrix",
    "Constraint",
    "RelationResidual",
    "RowProvenance",
    "branching_variables",
    "coloring_constraints",
    "coloring_count",
    "coloring_count_bruteforce",
    "coloring_dimension",
    "coloring_matrix",
    "echelon_rank",
    "rank",
    "relation_coefficients",
    "relation_residual",
]
