"""Validation, connected components, face tracing and arcs of a diagram."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Optional

import networkx as nx
from networkx.utils import UnionFind

from ..exceptions import InvalidDiagramError
from .model import IN, LEFT, OUT, RIGHT, Diagram

Dart = tuple[str, str]


@dataclass(frozen=True)
class Face:
    """A face as the cyclic sequence of (semi_arc, side) darts bounding it."""

    darts: tuple[Dart, ...]
    component: int


@dataclass(frozen=True)
class FaceSet:
    faces: tuple[Face, ...]
    face_of: dict[Dart, int]
    outer: tuple[int, ...]  # one outer face index per component

    def __len__(self) -> int:
        return len(self.faces)

    @property
    def regions(self) -> int:
        """Plane regions, counting the outer faces of all components once."""
        return len(self.faces) - len(self.outer) + 1

    def left_of(self, semi_arc: str) -> int:
        return self.face_of[(semi_arc, LEFT)]

    def right_of(self, semi_arc: str) -> int:
        return self.face_of[(semi_arc, RIGHT)]


@dataclass(frozen=True)
class Arc:
    """Semi-arcs glued along over-strands; named after its smallest member."""

    members: tuple[str, ...]

    @property
    def name(self) -> str:
        return self.members[0]


@dataclass
class ValidationReport:
    name: str
    violations: list[str] = field(default_factory=list)
    n: int = 0
    k: int = 0
    semi_arcs: int = 0
    components: int = 0
    faces: Optional[int] = None
    regions: Optional[int] = None

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "valid": self.ok,
            "n": self.n,
            "k": self.k,
            "semi_arcs": self.semi_arcs,
            "components": self.components,
            "faces": self.faces,
            "regions": self.regions,
            "violations": list(self.violations),
        }


def node_graph(d: Diagram) -> nx.MultiGraph:
    """Underlying graph: one node per crossing or vertex, one edge per semi-arc."""
    graph = nx.MultiGraph()
    graph.add_nodes_from(d.rotations)
    for semi_arc in d.semi_arcs:
        if semi_arc in d.tails and semi_arc in d.heads:
            graph.add_edge(d.tails[semi_arc].node, d.heads[semi_arc].node, key=semi_arc)
    return graph


def components(d: Diagram) -> list[list[str]]:
    """Node ids per connected component, ordered by smallest semi-arc id."""
    comps = [sorted(c) for c in nx.connected_components(node_graph(d))]

    def first_semi_arc(nodes: list[str]) -> str:
        return min(s.semi_arc for node in nodes for s in d.rotations[node])

    return sorted(comps, key=first_semi_arc)


def semi_arc_components(d: Diagram) -> dict[str, int]:
    index = {}
    for i, nodes in enumerate(components(d)):
        for node in nodes:
            for slot in d.rotations[node]:
                index[slot.semi_arc] = i
    return index


def next_dart(d: Diagram, dart: Dart) -> Dart:
    """Follow the boundary of the face on the given side of a semi-arc."""
    semi_arc, side = dart
    ref = d.heads[semi_arc] if side == LEFT else d.tails[semi_arc]
    rotation = d.rotations[ref.node]
    slot = rotation[(ref.index - 1) % len(rotation)]
    return (slot.semi_arc, RIGHT if slot.is_in else LEFT)


def trace_faces(d: Diagram) -> list[tuple[Dart, ...]]:
    remaining = sorted((s, side) for s in d.semi_arcs for side in (LEFT, RIGHT))
    seen: set[Dart] = set()
    cycles = []
    for start in remaining:
        if start in seen:
            continue
        cycle = [start]
        seen.add(start)
        current = next_dart(d, start)
        while current != start:
            if current in seen:
                raise InvalidDiagramError([f"face tracing does not close at {current}"])
            cycle.append(current)
            seen.add(current)
            current = next_dart(d, current)
        cycles.append(tuple(cycle))
    return cycles


def faces(d: Diagram) -> FaceSet:
    """Faces per component with each component's outer face.

    The designated outer dart fixes the outer face of its component; every
    other component uses the face holding its smallest (semi_arc, left) dart.
    """
    comp_of = semi_arc_components(d)
    cycles = trace_faces(d)
    face_list = tuple(Face(c, comp_of[c[0][0]]) for c in cycles)
    face_of = {dart: i for i, f in enumerate(face_list) for dart in f.darts}
    outer = []
    for comp in range(max(comp_of.values(), default=-1) + 1):
        members = sorted(s for s, c in comp_of.items() if c == comp)
        dart = (members[0], LEFT)
        if d.outer is not None and comp_of.get(d.outer[0]) == comp:
            dart = d.outer
        outer.append(face_of[dart])
    return FaceSet(face_list, face_of, tuple(outer))


def arcs(d: Diagram) -> tuple[Arc, ...]:
    """Union-find closure of over_in ~ over_out at every crossing."""
    uf = UnionFind(d.semi_arcs)
    for c in d.crossings:
        uf.union(c.over_in, c.over_out)
    classes = [tuple(sorted(members)) for members in uf.to_sets()]
    return tuple(Arc(m) for m in sorted(classes))


def arc_index(d: Diagram) -> dict[str, int]:
    """Map each semi-arc to the position of its arc in :func:`arcs`."""
    return {s: i for i, arc in enumerate(arcs(d)) for s in arc.members}


def _slot_violations(d: Diagram) -> list[str]:
    violations = []
    ins: Counter[str] = Counter()
    outs: Counter[str] = Counter()
    for _, slot in d.slot_refs():
        (ins if slot.is_in else outs)[slot.semi_arc] += 1
    for semi_arc in d.semi_arcs:
        if ins[semi_arc] != 1:
            violations.append(f"semi-arc {semi_arc} has {ins[semi_arc]} in-slots")
        if outs[semi_arc] != 1:
            violations.append(f"semi-arc {semi_arc} has {outs[semi_arc]} out-slots")
    ids = Counter([c.id for c in d.crossings] + [v.id for v in d.vertices])
    for node, count in sorted(ids.items()):
        if count > 1:
            violations.append(f"node id {node} is used {count} times")
    for c in d.crossings:
        if c.sign not in (1, -1):
            violations.append(f"crossing {c.id} has sign {c.sign}")
    for v in d.vertices:
        if len(v.slots) != 3:
            violations.append(f"vertex {v.id} has {len(v.slots)} slots")
        elif v.in_count not in (1, 2):
            violations.append(
                f"vertex {v.id} is not Y-oriented ({v.in_count} {IN}, "
                f"{3 - v.in_count} {OUT})"
            )
    return violations


def validate(d: Diagram) -> ValidationReport:
    """Check every structural invariant, including planarity via Euler's relation."""
    report = ValidationReport(d.name, n=d.n, semi_arcs=len(d.semi_arcs))
    report.violations.extend(_slot_violations(d))
    if report.violations:
        return report

    report.k = d.k
    if len(d.vertices) % 2:
        report.violations.append(f"odd number of vertices ({len(d.vertices)})")
    if len(d.semi_arcs) != 2 * d.n + 3 * len(d.vertices) // 2:
        report.violations.append("semi-arc count differs from 2n + 3k")

    comps = components(d)
    report.components = len(comps)
    try:
        cycles = trace_faces(d)
    except InvalidDiagramError as e:
        report.violations.extend(e.violations)
        return report
    comp_of = semi_arc_components(d)
    report.faces = len(cycles)
    report.regions = len(cycles) - len(comps) + 1

    for i, nodes in enumerate(comps):
        crossing_count = sum(1 for node in nodes if d.is_crossing(node))
        vertex_nodes = [d.vertex(node) for node in nodes if not d.is_crossing(node)]
        edge_count = sum(len(d.rotations[node]) for node in nodes) // 2
        face_count = sum(1 for c in cycles if comp_of[c[0][0]] == i)
        if crossing_count == 0:
            report.violations.append(f"component {i} has no crossing")
        merges = sum(1 for v in vertex_nodes if v.sign > 0)
        if merges != len(vertex_nodes) - merges:
            report.violations.append(
                f"component {i} has {merges} merge and "
                f"{len(vertex_nodes) - merges} split vertices"
            )
        euler = len(nodes) - edge_count + face_count
        if euler != 2:
            report.violations.append(
                f"EulerViolation: component {i} has V - E + F = {euler}, expected 2"
            )

    if d.outer is not None:
        if d.outer[0] not in d.heads or d.outer[1] not in (LEFT, RIGHT):
            report.violations.append(f"outer dart {d.outer} does not exist")
    return report


def require_valid(d: Diagram) -> None:
    report = validate(d)
    if not report.ok:
        raise InvalidDiagramError(report.violations)
