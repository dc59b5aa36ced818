"""Planar rotation-system model of a Y-oriented trivalent graph diagram."""

from __future__ import annotations

from dataclasses import dataclass, replace
from functools import cached_property
from typing import Iterator, Optional

from ..exceptions import UnknownCrossingError

IN = "in"
OUT = "out"
LEFT = "left"
RIGHT = "right"

MERGE = "merge"
SPLIT = "split"


@dataclass(frozen=True)
class Slot:
    semi_arc: str
    direction: str

    @property
    def is_in(self) -> bool:
        return self.direction == IN


@dataclass(frozen=True)
class CrossingFrame:
    """Semi-arcs of a crossing in the roles they play in its two relations."""

    u: str
    v: str
    v_prime: str
    w: str
    sign: int


@dataclass(frozen=True)
class Crossing:
    """A signed crossing; positive means the under strand passes right-to-left.

    Viewed with the over strand heading north, a positive crossing has its
    under strand heading west.
    """

    id: str
    sign: int
    under_in: str
    under_out: str
    over_in: str
    over_out: str

    @property
    def rotation(self) -> tuple[Slot, Slot, Slot, Slot]:
        """Counterclockwise slot order, derived from the sign."""
        if self.sign > 0:
            return (
                Slot(self.under_in, IN),
                Slot(self.over_out, OUT),
                Slot(self.under_out, OUT),
                Slot(self.over_in, IN),
            )
        return (
            Slot(self.under_in, IN),
            Slot(self.over_in, IN),
            Slot(self.under_out, OUT),
            Slot(self.over_out, OUT),
        )

    @property
    def frame(self) -> CrossingFrame:
        if self.sign > 0:
            return CrossingFrame(
                self.under_in, self.over_out, self.over_in, self.under_out, 1
            )
        return CrossingFrame(
            self.under_out, self.over_in, self.over_out, self.under_in, -1
        )

    def changed(self) -> Crossing:
        """The same crossing with under and over strands swapped."""
        return Crossing(
            self.id,
            -self.sign,
            self.over_in,
            self.over_out,
            self.under_in,
            self.under_out,
        )


@dataclass(frozen=True)
class VertexFrame:
    alpha: str
    beta: str
    gamma: str
    sign: int


@dataclass(frozen=True)
class Vertex:
    id: str
    slots: tuple[Slot, ...]

    @property
    def in_count(self) -> int:
        return sum(1 for s in self.slots if s.is_in)

    @property
    def kind(self) -> str:
        return MERGE if self.in_count == 2 else SPLIT

    @property
    def sign(self) -> int:
        return 1 if self.kind == MERGE else -1

    @property
    def lone_index(self) -> int:
        """Slot index of the edge whose direction occurs once."""
        lone_dir = OUT if self.kind == MERGE else IN
        return next(i for i, s in enumerate(self.slots) if s.direction == lone_dir)

    @property
    def frame(self) -> VertexFrame:
        i = self.lone_index
        first = self.slots[(i + 1) % 3].semi_arc
        second = self.slots[(i + 2) % 3].semi_arc
        gamma = self.slots[i].semi_arc
        if self.kind == MERGE:
            return VertexFrame(second, first, gamma, 1)
        return VertexFrame(first, second, gamma, -1)


@dataclass(frozen=True)
class SlotRef:
    """Position of a slot: node id and index in that node's rotation."""

    node: str
    index: int


@dataclass(frozen=True)
class Diagram:
    """A diagram: signed crossings and Y-oriented trivalent vertices.

    Crossings and vertices are kept sorted by id so equal diagrams compare
    equal regardless of construction order.
    """

    name: str
    crossings: tuple[Crossing, ...]
    vertices: tuple[Vertex, ...] = ()
    outer: Optional[tuple[str, str]] = None

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "crossings", tuple(sorted(self.crossings, key=lambda c: c.id))
        )
        object.__setattr__(
            self, "vertices", tuple(sorted(self.vertices, key=lambda v: v.id))
        )

    @property
    def n(self) -> int:
        return len(self.crossings)

    @property
    def k(self) -> int:
        return len(self.vertices) // 2

    @cached_property
    def rotations(self) -> dict[str, tuple[Slot, ...]]:
        """Counterclockwise slot order of every node, keyed by node id."""
        table: dict[str, tuple[Slot, ...]] = {c.id: c.rotation for c in self.crossings}
        table.update({v.id: v.slots for v in self.vertices})
        return table

    def slot_refs(self) -> Iterator[tuple[SlotRef, Slot]]:
        for node, rotation in self.rotations.items():
            for i, slot in enumerate(rotation):
                yield SlotRef(node, i), slot

    @cached_property
    def heads(self) -> dict[str, SlotRef]:
        """Where each semi-arc ends (its in-slot)."""
        return {s.semi_arc: ref for ref, s in self.slot_refs() if s.is_in}

    @cached_property
    def tails(self) -> dict[str, SlotRef]:
        """Where each semi-arc starts (its out-slot)."""
        return {s.semi_arc: ref for ref, s in self.slot_refs() if not s.is_in}

    @cached_property
    def semi_arcs(self) -> tuple[str, ...]:
        return tuple(sorted({s.semi_arc for _, s in self.slot_refs()}))

    @cached_property
    def _crossing_index(self) -> dict[str, Crossing]:
        return {c.id: c for c in self.crossings}

    @cached_property
    def _vertex_index(self) -> dict[str, Vertex]:
        return {v.id: v for v in self.vertices}

    def crossing(self, crossing_id: str) -> Crossing:
        try:
            return self._crossing_index[crossing_id]
        except KeyError:
            raise UnknownCrossingError(crossing_id) from None

    def vertex(self, vertex_id: str) -> Vertex:
        return self._vertex_index[vertex_id]

    def is_crossing(self, node: str) -> bool:
        return node in self._crossing_index

    def next_along_edge(self, semi_arc: str) -> Optional[str]:
        """The semi-arc continuing the same strand through the head crossing.

        None when the head is a vertex.
        """
        head = self.heads[semi_arc].node
        if not self.is_crossing(head):
            return None
        c = self.crossing(head)
        return c.under_out if c.under_in == semi_arc else c.over_out

    def with_outer(self, outer: Optional[tuple[str, str]]) -> Diagram:
        return replace(self, outer=outer)

    def renamed(self, name: str) -> Diagram:
        return replace(self, name=name)


def crossing_change(d: Diagram, crossing_id: str) -> Diagram:
    """Swap the under and over strand at one crossing and flip its sign."""
    target = d.crossing(crossing_id)
    crossings = tuple(
        target.changed() if c.id == crossing_id else c for c in d.crossings
    )
    return replace(d, crossings=crossings)


def crossing_changes(d: Diagram, crossing_ids: list[str]) -> Diagram:
    for crossing_id in crossing_ids:
        d = crossing_change(d, crossing_id)
    return d


def disjoint_union(d1: Diagram, d2: Diagram, name: Optional[str] = None) -> Diagram:
    """Split union; every id is prefixed with "a." or "b." to keep them apart."""

    def prefixed(d: Diagram, tag: str) -> tuple[list[Crossing], list[Vertex]]:
        crossings = [
            Crossing(
                f"{tag}.{c.id}",
                c.sign,
                f"{tag}.{c.under_in}",
                f"{tag}.{c.under_out}",
                f"{tag}.{c.over_in}",
                f"{tag}.{c.over_out}",
            )
            for c in d.crossings
        ]
        vertices = [
            Vertex(
                f"{tag}.{v.id}",
                tuple(Slot(f"{tag}.{s.semi_arc}", s.direction) for s in v.slots),
            )
            for v in d.vertices
        ]
        return crossings, vertices

    c1, v1 = prefixed(d1, "a")
    c2, v2 = prefixed(d2, "b")
    outer = None if d1.outer is None else (f"a.{d1.outer[0]}", d1.outer[1])
    return Diagram(
        name or f"{d1.name} + {d2.name}", tuple(c1 + c2), tuple(v1 + v2), outer
    )
