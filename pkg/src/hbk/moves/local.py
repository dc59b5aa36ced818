"""Mutable workspace for local rewrites of a diagram.

Compass positions are used to build new crossings from a local picture:
EAST, NORTH, WEST and SOUTH in counterclockwise order.
"""

from __future__ import annotations

from dataclasses import replace
from typing import Optional

from networkx.utils import UnionFind

from ..diagram import Crossing, Diagram, Slot, Vertex
from ..exceptions import NotApplicableError
from .site import MoveSite

EAST, NORTH, WEST, SOUTH = range(4)


def compass_crossing(
    crossing_id: str,
    over: tuple[int, str, int, str],
    under: tuple[int, str, int, str],
) -> Crossing:
    """Crossing from (in position, in id, out position, out id) of both strands."""
    o_in_pos, o_in, o_out_pos, o_out = over
    u_in_pos, u_in, u_out_pos, u_out = under
    assert (o_in_pos - o_out_pos) % 4 == 2 and (u_in_pos - u_out_pos) % 4 == 2
    assert (o_in_pos - u_in_pos) % 2 == 1
    sign = 1 if (o_out_pos - u_in_pos) % 4 == 1 else -1
    return Crossing(crossing_id, sign, u_in, u_out, o_in, o_out)


class FreshIds:
    """``<prefix><counter>`` ids unused by any semi-arc or node of a diagram."""

    def __init__(self, d: Diagram):
        self.used = set(d.semi_arcs) | set(d.rotations)
        self.counters: dict[str, int] = {}

    def take(self, prefix: str) -> str:
        n = self.counters.get(prefix, 0)
        while True:
            n += 1
            candidate = f"{prefix}{n}"
            if candidate not in self.used:
                self.counters[prefix] = n
                self.used.add(candidate)
                return candidate


class Workspace:
    """Crossings and vertices by id, edited in place and rebuilt into a Diagram."""

    def __init__(self, d: Diagram, site: MoveSite):
        self.source = d
        self.site = site
        self.crossings = {c.id: c for c in d.crossings}
        self.vertices = {v.id: v for v in d.vertices}
        self.fresh = FreshIds(d)

    def fail(self, reason: str) -> NotApplicableError:
        return NotApplicableError(self.site, reason)

    def _replace(self, semi_arc: str, new: str, head: bool) -> None:
        for cid, c in self.crossings.items():
            if head and semi_arc in (c.under_in, c.over_in):
                field = "under_in" if c.under_in == semi_arc else "over_in"
                self.crossings[cid] = replace(c, **{field: new})
                return
            if not head and semi_arc in (c.under_out, c.over_out):
                field = "under_out" if c.under_out == semi_arc else "over_out"
                self.crossings[cid] = replace(c, **{field: new})
                return
        for vid, v in self.vertices.items():
            for i, slot in enumerate(v.slots):
                if slot.semi_arc == semi_arc and slot.is_in == head:
                    self.set_slot(vid, i, Slot(new, slot.direction))
                    return
        raise self.fail(f"semi-arc {semi_arc} has no {'head' if head else 'tail'}")

    def replace_head(self, semi_arc: str, new: str) -> None:
        """Make ``new`` end where ``semi_arc`` ended."""
        self._replace(semi_arc, new, head=True)

    def replace_tail(self, semi_arc: str, new: str) -> None:
        self._replace(semi_arc, new, head=False)

    def set_slot(self, vertex_id: str, index: int, slot: Slot) -> None:
        v = self.vertices[vertex_id]
        slots = list(v.slots)
        slots[index] = slot
        self.vertices[vertex_id] = Vertex(v.id, tuple(slots))

    def add_crossing(self, c: Crossing) -> None:
        self.crossings[c.id] = c

    def splice(self, crossing_ids: list[str]) -> dict[str, str]:
        """Remove crossings, joining each strand through them into one semi-arc.

        The joined semi-arc keeps the id of its tail-side piece. Returns the
        map from every removed or renamed semi-arc to its survivor.
        """
        removed = {cid: self.crossings.pop(cid) for cid in crossing_ids}
        uf = UnionFind()
        for c in removed.values():
            uf.union(c.under_in, c.under_out)
            uf.union(c.over_in, c.over_out)
        tails_removed = {s for c in removed.values() for s in (c.under_out, c.over_out)}
        mapping: dict[str, str] = {}
        for members in uf.to_sets():
            outside = sorted(s for s in members if s not in tails_removed)
            if not outside:
                raise self.fail("a closed strand would lose all its crossings")
            for s in members:
                mapping[s] = outside[0]
        for cid, c in self.crossings.items():
            self.crossings[cid] = Crossing(
                c.id,
                c.sign,
                mapping.get(c.under_in, c.under_in),
                mapping.get(c.under_out, c.under_out),
                mapping.get(c.over_in, c.over_in),
                mapping.get(c.over_out, c.over_out),
            )
        for vid, v in self.vertices.items():
            self.vertices[vid] = Vertex(
                v.id,
                tuple(
                    Slot(mapping.get(s.semi_arc, s.semi_arc), s.direction)
                    for s in v.slots
                ),
            )
        return mapping

    def build(self) -> Diagram:
        d = Diagram(
            self.source.name,
            tuple(self.crossings.values()),
            tuple(self.vertices.values()),
        )
        outer = self.source.outer
        if outer is not None and outer[0] in d.heads:
            return d.with_outer(outer)
        return d


def other_end(d: Diagram, semi_arc: str, node: str) -> Optional[str]:
    """Node at the far end of ``semi_arc`` seen from ``node``; None for a loop."""
    head, tail = d.heads[semi_arc].node, d.tails[semi_arc].node
    if head == tail:
        return None
    return head if tail == node else tail


def slot_index_at(d: Diagram, semi_arc: str, node: str) -> int:
    """Rotation index of the (non-loop) semi-arc at one of its end nodes."""
    ref = d.heads[semi_arc]
    if ref.node != node:
        ref = d.tails[semi_arc]
    return ref.index


def strand_partner(c: Crossing, semi_arc: str) -> str:
    """The semi-arc continuing the same strand through ``c``."""
    pairs = {
        c.under_in: c.under_out,
        c.under_out: c.under_in,
        c.over_in: c.over_out,
        c.over_out: c.over_in,
    }
    return pairs[semi_arc]


def is_over(c: Crossing, semi_arc: str) -> bool:
    return semi_arc in (c.over_in, c.over_out)
