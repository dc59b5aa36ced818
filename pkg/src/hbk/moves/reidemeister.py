"""The R1-R6 rewrites for Y-oriented diagrams.

Every rewrite keeps the ids of semi-arcs that survive on the same edge and
draws fresh ids for new pieces, so flows can be carried across with
:func:`hbk.flow.associate_flow`.
"""

from __future__ import annotations

from typing import Callable

from ..diagram import (
    IN,
    LEFT,
    OUT,
    RIGHT,
    Crossing,
    Diagram,
    Slot,
    Vertex,
    components,
    faces,
)
from ..exceptions import NotApplicableError, UnknownCrossingError
from .local import (
    EAST,
    NORTH,
    SOUTH,
    WEST,
    Workspace,
    compass_crossing,
    is_over,
    other_end,
    slot_index_at,
    strand_partner,
)
from .site import (
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

UNDER_FIRST = "under"
OVER_FIRST = "over"
TWIST_FIRST = "first"
TWIST_SECOND = "second"
FORWARD = "forward"
BACKWARD = "backward"


def _anchors(site: MoveSite, count: int) -> tuple[str, ...]:
    if len(site.anchors) != count:
        raise NotApplicableError(site, f"expected {count} anchors")
    return site.anchors


def _crossing(d: Diagram, site: MoveSite, crossing_id: str) -> Crossing:
    try:
        return d.crossing(crossing_id)
    except UnknownCrossingError:
        raise NotApplicableError(site, f"no crossing {crossing_id}") from None


def _vertex_slot(d: Diagram, site: MoveSite) -> tuple[Vertex, int]:
    vertex_id, raw_index = site.anchors[0], site.anchors[1]
    if d.is_crossing(vertex_id) or vertex_id not in d.rotations:
        raise NotApplicableError(site, f"no vertex {vertex_id}")
    try:
        index = int(raw_index)
    except ValueError:
        raise NotApplicableError(site, f"bad slot {raw_index!r}") from None
    if not 0 <= index < 3:
        raise NotApplicableError(site, f"slot {index} out of range")
    return d.vertex(vertex_id), index


def _require_distinct(site: MoveSite, ids: list[str]) -> None:
    if len(set(ids)) != len(ids):
        raise NotApplicableError(site, "the local picture is degenerate")


# R1


def add_kink(d: Diagram, site: MoveSite) -> Diagram:
    semi_arc, first = _anchors(site, 2)
    if semi_arc not in d.heads or first not in (UNDER_FIRST, OVER_FIRST):
        raise NotApplicableError(site)
    sign = 1 if site.kind == R1_POSITIVE else -1
    ws = Workspace(d, site)
    loop, after = ws.fresh.take("s"), ws.fresh.take("s")
    ws.replace_head(semi_arc, after)
    cid = ws.fresh.take("c")
    if first == UNDER_FIRST:
        ws.add_crossing(Crossing(cid, sign, semi_arc, loop, loop, after))
    else:
        ws.add_crossing(Crossing(cid, sign, loop, after, semi_arc, loop))
    return ws.build()


def remove_kink(d: Diagram, site: MoveSite) -> Diagram:
    (cid,) = _anchors(site, 1)
    c = _crossing(d, site, cid)
    if c.sign != (1 if site.kind == R1_POSITIVE else -1):
        raise NotApplicableError(site, "kink sign differs")
    loops = [
        s
        for s in (c.under_out, c.over_out)
        if d.heads[s].node == cid
        and (d.heads[s].index - d.tails[s].index) % 4 in (1, 3)
    ]
    if not loops:
        raise NotApplicableError(site, f"{cid} carries no kink")
    ws = Workspace(d, site)
    ws.splice([cid])
    return ws.build()


# R2


def poke(d: Diagram, site: MoveSite) -> Diagram:
    """Push the first semi-arc over the second across the face both bound."""
    o, side_o, u, side_u = _anchors(site, 4)
    if o == u or o not in d.heads or u not in d.heads:
        raise NotApplicableError(site)
    if {side_o, side_u} - {LEFT, RIGHT}:
        raise NotApplicableError(site, "sides are left or right")
    fs = faces(d)
    if fs.face_of[(o, side_o)] != fs.face_of[(u, side_u)]:
        raise NotApplicableError(site, "the darts bound different faces")

    ws = Workspace(d, site)
    o2, o3, u2, u3 = (ws.fresh.take("s") for _ in range(4))
    ws.replace_head(o, o3)
    ws.replace_head(u, u3)
    left, right = ws.fresh.take("c"), ws.fresh.take("c")
    o_east = side_o == LEFT
    u_east = side_u == RIGHT
    o_order = (left, right) if o_east else (right, left)
    u_order = (left, right) if u_east else (right, left)
    o_pieces = {o_order[0]: (o, o2), o_order[1]: (o2, o3)}
    u_pieces = {u_order[0]: (u, u2), u_order[1]: (u2, u3)}
    for x in (left, right):
        going_north = (x == left) == o_east
        o_in_pos, o_out_pos = (SOUTH, NORTH) if going_north else (NORTH, SOUTH)
        u_in_pos, u_out_pos = (WEST, EAST) if u_east else (EAST, WEST)
        ws.add_crossing(
            compass_crossing(
                x,
                (o_in_pos, o_pieces[x][0], o_out_pos, o_pieces[x][1]),
                (u_in_pos, u_pieces[x][0], u_out_pos, u_pieces[x][1]),
            )
        )
    return ws.build()


def unpoke(d: Diagram, site: MoveSite) -> Diagram:
    """Remove a bigon whose strands are over at both and under at both crossings."""
    c1, c2 = _anchors(site, 2)
    if c1 == c2:
        raise NotApplicableError(site)
    x1, x2 = _crossing(d, site, c1), _crossing(d, site, c2)
    fs = faces(d)
    joining = [
        s
        for s in (x1.under_in, x1.under_out, x1.over_in, x1.over_out)
        if {d.heads[s].node, d.tails[s].node} == {c1, c2}
    ]
    for face in fs.faces:
        pair = sorted({s for s, _ in face.darts})
        if len(face.darts) != 2 or len(pair) != 2 or not set(pair) <= set(joining):
            continue
        roles = [(is_over(x1, s), is_over(x2, s)) for s in pair]
        if sorted(roles) == [(False, False), (True, True)]:
            ws = Workspace(d, site)
            ws.splice([c1, c2])
            return ws.build()
    raise NotApplicableError(site, "no removable bigon")


# R3


def slide_triangle(d: Diagram, site: MoveSite) -> Diagram:
    semi_arc, side = _anchors(site, 2)
    if semi_arc not in d.heads or side not in (LEFT, RIGHT):
        raise NotApplicableError(site)
    fs = faces(d)
    face = fs.faces[fs.face_of[(semi_arc, side)]]
    sides = [s for s, _ in face.darts]
    if len(sides) != 3 or len(set(sides)) != 3:
        raise NotApplicableError(site, "not a triangle")
    nodes = {d.heads[s].node for s in sides} | {d.tails[s].node for s in sides}
    if any(d.heads[s].node == d.tails[s].node for s in sides):
        raise NotApplicableError(site, "a side of the triangle is a loop")
    if len(nodes) != 3 or not all(d.is_crossing(n) for n in nodes):
        raise NotApplicableError(site, "the triangle corners are not three crossings")

    strands = []
    for s in sides:
        first = d.crossing(d.tails[s].node)
        second = d.crossing(d.heads[s].node)
        strands.append(
            (
                s,
                first,
                second,
                strand_partner(first, s),
                strand_partner(second, s),
            )
        )
    _require_distinct(site, [x for st in strands for x in (st[0], st[3], st[4])])
    if not any(not is_over(f, s) and not is_over(g, s) for s, f, g, _, _ in strands):
        raise NotApplicableError(site, "the strands overlap cyclically")

    fields: dict[str, dict[str, str]] = {n: {} for n in nodes}
    for s, first, second, before, after in strands:
        role = "over" if is_over(first, s) else "under"
        fields[first.id].update({f"{role}_in": s, f"{role}_out": after})
        role = "over" if is_over(second, s) else "under"
        fields[second.id].update({f"{role}_in": before, f"{role}_out": s})
    ws = Workspace(d, site)
    for node, new in fields.items():
        c = d.crossing(node)
        ws.add_crossing(
            Crossing(
                c.id,
                c.sign,
                new["under_in"],
                new["under_out"],
                new["over_in"],
                new["over_out"],
            )
        )
    return ws.build()


# R4


def _strand_through(c: Crossing, edge: str) -> tuple[str, str]:
    """In and out semi-arcs of the strand crossing ``edge`` at ``c``."""
    if is_over(c, edge):
        return c.under_in, c.under_out
    return c.over_in, c.over_out


def _edge_positions(slot: Slot, near: str, far: str) -> tuple[int, str, int, str]:
    """Edge through a new crossing: near piece to the north, far piece south."""
    if slot.is_in:
        return SOUTH, far, NORTH, near
    return NORTH, near, SOUTH, far


def push_past_vertex(d: Diagram, site: MoveSite) -> Diagram:
    """Move the crossing next to a vertex onto the vertex's other two edges."""
    _anchors(site, 2)
    v, j = _vertex_slot(d, site)
    strand_over = site.kind == R4_OVER
    s = v.slots[j].semi_arc
    a_slot, b_slot = v.slots[(j + 1) % 3], v.slots[(j + 2) % 3]
    cid = other_end(d, s, v.id)
    if cid is None or not d.is_crossing(cid):
        raise NotApplicableError(site, "no crossing next to the vertex")
    c = d.crossing(cid)
    if is_over(c, s) == strand_over:
        raise NotApplicableError(site, "the edge has the wrong role at the crossing")
    s_far = strand_partner(c, s)
    p_in, p_out = _strand_through(c, s)
    _require_distinct(site, [s, s_far, p_in, p_out, a_slot.semi_arc, b_slot.semi_arc])
    if any(other_end(d, x.semi_arc, v.id) is None for x in (a_slot, b_slot)):
        raise NotApplicableError(site, "loop at the vertex")
    i = slot_index_at(d, s, cid)
    east = d.rotations[cid][(i + 1) % 4].semi_arc == p_out

    ws = Workspace(d, site)
    ws.splice([cid])
    ws.replace_head(p_in, p_out)
    mid = ws.fresh.take("s")
    x1, x2 = ws.fresh.take("c"), ws.fresh.take("c")
    order = (x1, x2) if east else (x2, x1)
    pieces = {order[0]: (p_in, mid), order[1]: (mid, p_out)}
    in_pos, out_pos = (WEST, EAST) if east else (EAST, WEST)
    for x, slot in ((x1, a_slot), (x2, b_slot)):
        near = ws.fresh.take("s")
        if slot.is_in:
            ws.replace_head(slot.semi_arc, near)
        else:
            ws.replace_tail(slot.semi_arc, near)
        edge = _edge_positions(slot, near, slot.semi_arc)
        strand = (in_pos, pieces[x][0], out_pos, pieces[x][1])
        over, under = (strand, edge) if strand_over else (edge, strand)
        ws.add_crossing(compass_crossing(x, over, under))
    return ws.build()


def pull_back_past_vertex(d: Diagram, site: MoveSite) -> Diagram:
    """Undo :func:`push_past_vertex`: two crossings become one on the anchor edge."""
    _anchors(site, 2)
    v, j = _vertex_slot(d, site)
    strand_over = site.kind == R4_OVER
    s_slot = v.slots[j]
    a, b = v.slots[(j + 1) % 3].semi_arc, v.slots[(j + 2) % 3].semi_arc
    ends = [other_end(d, x, v.id) for x in (a, b)]
    if None in ends or ends[0] == ends[1]:
        raise NotApplicableError(site)
    if not all(d.is_crossing(str(e)) for e in ends):
        raise NotApplicableError(site, "the edges do not end at crossings")
    c1, c2 = d.crossing(str(ends[0])), d.crossing(str(ends[1]))
    if is_over(c1, a) == strand_over or is_over(c2, b) == strand_over:
        raise NotApplicableError(site, "the edges have the wrong role")
    (in1, out1), (in2, out2) = _strand_through(c1, a), _strand_through(c2, b)
    if out1 == in2:
        east, mid, p_in = True, out1, in1
    elif out2 == in1:
        east, mid, p_in = False, out2, in2
    else:
        raise NotApplicableError(site, "the crossings are not consecutive on a strand")
    p_out = out2 if east else out1
    _require_distinct(
        site,
        [
            s_slot.semi_arc,
            a,
            b,
            strand_partner(c1, a),
            strand_partner(c2, b),
            p_in,
            mid,
            p_out,
        ],
    )
    b_slot = v.slots[(j + 2) % 3]
    fs = faces(d)
    face = fs.faces[fs.face_of[(b, LEFT if b_slot.is_in else RIGHT)]]
    if sorted(x for x, _ in face.darts) != sorted([a, b, mid]):
        raise NotApplicableError(site, "the strand does not cut off a triangle")

    ws = Workspace(d, site)
    ws.splice([c1.id, c2.id])
    last = ws.fresh.take("s")
    ws.replace_head(p_in, last)
    s = s_slot.semi_arc
    s_new = ws.fresh.take("s")
    ws.replace_head(s, s_new)
    if s_slot.is_in:
        edge = (NORTH, s, SOUTH, s_new)
    else:
        edge = (SOUTH, s, NORTH, s_new)
    in_pos, out_pos = (WEST, EAST) if east else (EAST, WEST)
    strand = (in_pos, p_in, out_pos, last)
    over, under = (strand, edge) if strand_over else (edge, strand)
    ws.add_crossing(compass_crossing(ws.fresh.take("c"), over, under))
    return ws.build()


# R5


def twist(d: Diagram, site: MoveSite) -> Diagram:
    """Cross the two edges beside the axis slot just below the vertex."""
    _anchors(site, 3)
    v, j = _vertex_slot(d, site)
    which = site.anchors[2]
    if which not in (TWIST_FIRST, TWIST_SECOND):
        raise NotApplicableError(site, "choose first or second over")
    p_slot, q_slot = v.slots[(j + 1) % 3], v.slots[(j + 2) % 3]
    p, q = p_slot.semi_arc, q_slot.semi_arc
    if p == q or other_end(d, p, v.id) is None or other_end(d, q, v.id) is None:
        raise NotApplicableError(site, "loop at the vertex")

    ws = Workspace(d, site)
    p_near, q_near = ws.fresh.take("s"), ws.fresh.take("s")
    ws.set_slot(v.id, (j + 1) % 3, Slot(q_near, q_slot.direction))
    ws.set_slot(v.id, (j + 2) % 3, Slot(p_near, p_slot.direction))
    if p_slot.is_in:
        p_strand = (WEST, p, EAST, p_near)
    else:
        p_strand = (EAST, p_near, WEST, p)
    if q_slot.is_in:
        q_strand = (SOUTH, q, NORTH, q_near)
    else:
        q_strand = (NORTH, q_near, SOUTH, q)
    over, under = (p_strand, q_strand) if which == TWIST_FIRST else (q_strand, p_strand)
    ws.add_crossing(compass_crossing(ws.fresh.take("c"), over, under))
    return ws.build()


def untwist(d: Diagram, site: MoveSite) -> Diagram:
    _anchors(site, 2)
    v, j = _vertex_slot(d, site)
    a, b = v.slots[(j + 1) % 3].semi_arc, v.slots[(j + 2) % 3].semi_arc
    cid = other_end(d, a, v.id)
    if a == b or cid is None or cid != other_end(d, b, v.id):
        raise NotApplicableError(site, "the edges do not meet at one crossing")
    if not d.is_crossing(cid):
        raise NotApplicableError(site)
    c = d.crossing(cid)
    if slot_index_at(d, a, cid) != (slot_index_at(d, b, cid) + 1) % 4:
        raise NotApplicableError(site, "the edges are not twisted around each other")
    a_far, b_far = strand_partner(c, a), strand_partner(c, b)
    _require_distinct(site, [v.slots[j].semi_arc, a, b, a_far, b_far])

    ws = Workspace(d, site)
    ws.splice([cid])
    slots = list(ws.vertices[v.id].slots)
    slots[(j + 1) % 3], slots[(j + 2) % 3] = slots[(j + 2) % 3], slots[(j + 1) % 3]
    ws.vertices[v.id] = Vertex(v.id, tuple(slots))
    return ws.build()


# R6


def ih_move(d: Diagram, site: MoveSite) -> Diagram:
    """Replace the edge between two vertices by the transverse edge."""
    f, orientation = _anchors(site, 2)
    if f not in d.heads or orientation not in (FORWARD, BACKWARD):
        raise NotApplicableError(site)
    tail, head = d.tails[f], d.heads[f]
    if d.is_crossing(tail.node) or d.is_crossing(head.node) or tail.node == head.node:
        raise NotApplicableError(site, "the semi-arc does not join two vertices")
    pv, qv = d.vertex(tail.node), d.vertex(head.node)
    x1, x2 = pv.slots[(tail.index + 1) % 3], pv.slots[(tail.index + 2) % 3]
    y1, y2 = qv.slots[(head.index + 1) % 3], qv.slots[(head.index + 2) % 3]
    _require_distinct(site, [f] + [s.semi_arc for s in (x1, x2, y1, y2)])

    ws = Workspace(d, site)
    edge = ws.fresh.take("s")
    forward = orientation == FORWARD
    new_p = Vertex(pv.id, (Slot(edge, OUT if forward else IN), x2, y1))
    new_q = Vertex(qv.id, (Slot(edge, IN if forward else OUT), y2, x1))
    if new_p.in_count not in (1, 2) or new_q.in_count not in (1, 2):
        raise NotApplicableError(site, "the new vertices would not be Y-oriented")
    ws.vertices[pv.id] = new_p
    ws.vertices[qv.id] = new_q
    return ws.build()


_FORWARD: dict[str, Callable[[Diagram, MoveSite], Diagram]] = {
    R1_POSITIVE: add_kink,
    R1_NEGATIVE: add_kink,
    R2_ADD: poke,
    R2_REMOVE: unpoke,
    R3: slide_triangle,
    R4_OVER: push_past_vertex,
    R4_UNDER: push_past_vertex,
    R5: twist,
    R6: ih_move,
}

_INVERSE: dict[str, Callable[[Diagram, MoveSite], Diagram]] = {
    R1_POSITIVE: remove_kink,
    R1_NEGATIVE: remove_kink,
    R2_ADD: unpoke,
    R2_REMOVE: poke,
    R3: slide_triangle,
    R4_OVER: pull_back_past_vertex,
    R4_UNDER: pull_back_past_vertex,
    R5: untwist,
    R6: ih_move,
}


# candidates of these kinds are built so that they always match
_ALWAYS_APPLICABLE = {R1_POSITIVE, R1_NEGATIVE, R2_ADD}


def apply_move(d: Diagram, site: MoveSite) -> Diagram:
    """Apply one move; raises NotApplicableError when the site does not match.

    A site whose result would leave a component without crossings does not
    match either.
    """
    table = _INVERSE if site.inverse else _FORWARD
    moved = table[site.kind](d, site)
    if site.crossing_delta < 0:
        for nodes in components(moved):
            if not any(moved.is_crossing(node) for node in nodes):
                raise NotApplicableError(
                    site, "a component would lose its last crossing"
                )
    return moved


def _candidates(d: Diagram) -> list[MoveSite]:
    fs = faces(d)
    sites: list[MoveSite] = []
    for s in d.semi_arcs:
        for kind in (R1_POSITIVE, R1_NEGATIVE):
            for first in (UNDER_FIRST, OVER_FIRST):
                sites.append(MoveSite(kind, (s, first)))
    for c in d.crossings:
        kind = R1_POSITIVE if c.sign > 0 else R1_NEGATIVE
        sites.append(MoveSite(kind, (c.id,), inverse=True))
    for face in fs.faces:
        darts = sorted(face.darts)
        for o in darts:
            for u in darts:
                if o[0] != u[0]:
                    sites.append(MoveSite(R2_ADD, (o[0], o[1], u[0], u[1])))
        if len(darts) == 2:
            nodes = sorted(
                {d.heads[darts[0][0]].node, d.tails[darts[0][0]].node}
            )
            if len(nodes) == 2 and all(d.is_crossing(n) for n in nodes):
                sites.append(MoveSite(R2_REMOVE, (nodes[0], nodes[1])))
        if len(darts) == 3:
            sites.append(MoveSite(R3, darts[0]))
    for v in d.vertices:
        for j in range(3):
            for kind in (R4_OVER, R4_UNDER):
                sites.append(MoveSite(kind, (v.id, str(j))))
                sites.append(MoveSite(kind, (v.id, str(j)), inverse=True))
            for which in (TWIST_FIRST, TWIST_SECOND):
                sites.append(MoveSite(R5, (v.id, str(j), which)))
            sites.append(MoveSite(R5, (v.id, str(j)), inverse=True))
    for s in d.semi_arcs:
        if not d.is_crossing(d.tails[s].node) and not d.is_crossing(d.heads[s].node):
            for orientation in (FORWARD, BACKWARD):
                sites.append(MoveSite(R6, (s, orientation)))
    return sites


def enumerate_applicable(d: Diagram) -> list[MoveSite]:
    """Every applicable site, in a deterministic order."""
    applicable = []
    for site in _candidates(d):
        if not site.inverse and site.kind in _ALWAYS_APPLICABLE:
            applicable.append(site)
            continue
        try:
            apply_move(d, site)
        except NotApplicableError:
            continue
        applicable.append(site)
    return applicable
