"""Local moves between diagrams of the same handlebody-knot."""

from .local import FreshIds, Workspace, compass_crossing
from .reidemeister import (
    BACKWARD,
    FORWARD,
    OVER_FIRST,
    TWIST_FIRST,
    TWIST_SECOND,
    UNDER_FIRST,
    apply_move,
    enumerate_applicable,
)
from .site import (
    CROSSING_DELTA,
    KINDS,
    R1_NEGATIVE,
    R1_POSITIVE,
    R2_ADD,
    R2_REMOVE,
    R3,
    R4_OVER,
    R4_UNDER,
    R5,
    R6,
    MoveSite,
)
from .walk import random_equivalent, random_walk

__all__ = [
    "BACKWARD",
    "CROSSING_DELTA",
    "FORWARD",
    "KINDS",
    "OVER_FIRST",
    "R1_NEGATIVE",
    "R1_POSITIVE",
    "R2_ADD",
    "R2_REMOVE",
    "R3",
    "R4_OVER",
    "R4_UNDER",
    "R5",
    "R6",
    "TWIST_FIRST",
    "TWIST_SECOND",
    "UNDER_FIRST",
    "FreshIds",
    "MoveSite",
    "Workspace",
    "apply_move",
    "compass_crossing",
    "enumerate_applicable",
    "random_equivalent",
    "random_walk",
]
