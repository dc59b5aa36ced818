"""Diagram model, JSON codec, topology and isomorphism."""

from .codec import (
    diagram_from_dict,
    diagram_to_dict,
    load_diagram,
    parse_diagram,
    save_diagram,
    serialize,
)
from .isomorphism import is_isomorphic
from .model import (
    IN,
    LEFT,
    MERGE,
    OUT,
    RIGHT,
    SPLIT,
    Crossing,
    CrossingFrame,
    Diagram,
    Slot,
    SlotRef,
    Vertex,
    VertexFrame,
    crossing_change,
    crossing_changes,
    disjoint_union,
)
from .topology import (
    Arc,
    Face,
    FaceSet,
    ValidationReport,
    arc_index,
    arcs,
    components,
    faces,
    require_valid,
    validate,
)

__all__ = [
    "IN",
    "LEFT",
    "MERGE",
    "OUT",
    "RIGHT",
    "SPLIT",
    "Arc",
    "Crossing",
    "CrossingFrame",
    "Diagram",
    "Face",
    "FaceSet",
    "Slot",
    "SlotRef",
    "ValidationReport",
    "Vertex",
    "VertexFrame",
    "arc_index",
    "arcs",
    "components",
    "crossing_change",
    "crossing_changes",
    "diagram_from_dict",
    "diagram_to_dict",
    "disjoint_union",
    "faces",
    "is_isomorphic",
    "load_diagram",
    "parse_diagram",
    "require_valid",
    "save_diagram",
    "serialize",
    "validate",
]
