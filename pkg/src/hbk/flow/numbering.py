"""Alexander numbering of a flowed diagram."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from ..diagram import Diagram, FaceSet, faces
from ..exceptions import InconsistentError
from .space import Flow


@dataclass(frozen=True)
class Numbering:
    """Face labels in Z_m; ``rho`` is the label of the face left of each semi-arc."""

    faces: FaceSet
    labels: tuple[int, ...]
    rho: dict[str, int]


def alexander_numbering(d: Diagram, phi: Flow) -> Numbering:
    """Label the outer face 0 and step by +φ(s) from the right of s to its left."""
    face_set = faces(d)
    m = phi.m
    # dual edges: right face -> (left face, step)
    neighbours: dict[int, list[tuple[int, int]]] = {}
    for semi_arc in d.semi_arcs:
        left, right = face_set.left_of(semi_arc), face_set.right_of(semi_arc)
        step = phi.at(semi_arc)
        neighbours.setdefault(right, []).append((left, step))
        neighbours.setdefault(left, []).append((right, -step))

    labels: list[int | None] = [None] * len(face_set)
    for outer in face_set.outer:
        labels[outer] = 0
        queue = deque([outer])
        while queue:
            face = queue.popleft()
            base = labels[face]
            assert base is not None
            for other, step in neighbours.get(face, []):
                if labels[other] is None:
                    labels[other] = (base + step) % m
                    queue.append(other)

    if any(label is None for label in labels):
        raise InconsistentError("some faces are unreachable from an outer face")
    final = tuple(label or 0 for label in labels)
    # every dual edge must agree with the breadth-first labels
    for semi_arc in d.semi_arcs:
        left, right = face_set.left_of(semi_arc), face_set.right_of(semi_arc)
        if (final[left] - final[right] - phi.at(semi_arc)) % m:
            raise InconsistentError(f"labels disagree across semi-arc {semi_arc}")
    rho = {s: final[face_set.left_of(s)] for s in d.semi_arcs}
    return Numbering(face_set, final, rho)
