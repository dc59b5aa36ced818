"""JSON diagram documents: parsing and byte-stable serialization."""

import json
from collections import Counter
from pathlib import Path
from typing import Any, Optional

from ..exceptions import (
    BadSignError,
    DiagramSyntaxError,
    DuplicateSlotError,
    MissingSlotError,
)
from .model import IN, LEFT, OUT, RIGHT, Crossing, Diagram, Slot, Vertex

CROSSING_KEYS = ("id", "sign", "under_in", "under_out", "over_in", "over_out")


def _require(obj: dict, key: str, kind: type, where: str) -> Any:
    if key not in obj:
        raise DiagramSyntaxError("missing key", f"{where}.{key}")
    value = obj[key]
    if kind is int and isinstance(value, bool):
        raise DiagramSyntaxError("expected an integer", f"{where}.{key}")
    if not isinstance(value, kind):
        raise DiagramSyntaxError(f"expected {kind.__name__}", f"{where}.{key}")
    return value


def _parse_crossing(raw: Any, where: str) -> Crossing:
    if not isinstance(raw, dict):
        raise DiagramSyntaxError("expected an object", where)
    sign = _require(raw, "sign", int, where)
    if sign not in (1, -1):
        raise BadSignError(f"sign must be +1 or -1, got {sign}", f"{where}.sign")
    return Crossing(
        _require(raw, "id", str, where),
        sign,
        _require(raw, "under_in", str, where),
        _require(raw, "under_out", str, where),
        _require(raw, "over_in", str, where),
        _require(raw, "over_out", str, where),
    )


def _parse_vertex(raw: Any, where: str) -> Vertex:
    if not isinstance(raw, dict):
        raise DiagramSyntaxError("expected an object", where)
    vertex_id = _require(raw, "id", str, where)
    raw_slots = _require(raw, "slots", list, where)
    if len(raw_slots) != 3:
        raise DiagramSyntaxError("a vertex has exactly 3 slots", f"{where}.slots")
    slots = []
    for j, raw_slot in enumerate(raw_slots):
        slot_where = f"{where}.slots[{j}]"
        if not isinstance(raw_slot, dict):
            raise DiagramSyntaxError("expected an object", slot_where)
        direction = _require(raw_slot, "dir", str, slot_where)
        if direction not in (IN, OUT):
            raise DiagramSyntaxError("dir must be 'in' or 'out'", f"{slot_where}.dir")
        slots.append(Slot(_require(raw_slot, "semi_arc", str, slot_where), direction))
    return Vertex(vertex_id, tuple(slots))


def _check_slots(crossings: list[Crossing], vertices: list[Vertex]) -> None:
    ins: Counter[str] = Counter()
    outs: Counter[str] = Counter()
    for c in crossings:
        ins.update([c.under_in, c.over_in])
        outs.update([c.under_out, c.over_out])
    for v in vertices:
        for s in v.slots:
            (ins if s.is_in else outs)[s.semi_arc] += 1
    for semi_arc in sorted(set(ins) | set(outs)):
        if ins[semi_arc] > 1:
            raise DuplicateSlotError(semi_arc, IN)
        if outs[semi_arc] > 1:
            raise DuplicateSlotError(semi_arc, OUT)
        if ins[semi_arc] == 0:
            raise MissingSlotError(semi_arc, IN)
        if outs[semi_arc] == 0:
            raise MissingSlotError(semi_arc, OUT)


def diagram_from_dict(doc: Any) -> Diagram:
    if not isinstance(doc, dict):
        raise DiagramSyntaxError("top level must be an object")
    name = doc.get("name", "")
    if not isinstance(name, str):
        raise DiagramSyntaxError("expected str", "name")
    raw_crossings = _require(doc, "crossings", list, "$")
    raw_vertices = doc.get("vertices", [])
    if not isinstance(raw_vertices, list):
        raise DiagramSyntaxError("expected list", "vertices")

    crossings = [
        _parse_crossing(raw, f"crossings[{i}]") for i, raw in enumerate(raw_crossings)
    ]
    vertices = [
        _parse_vertex(raw, f"vertices[{i}]") for i, raw in enumerate(raw_vertices)
    ]
    ids = Counter([c.id for c in crossings] + [v.id for v in vertices])
    duplicated = sorted(node for node, count in ids.items() if count > 1)
    if duplicated:
        raise DiagramSyntaxError(f"duplicate node id {duplicated[0]!r}", "id")
    _check_slots(crossings, vertices)

    outer: Optional[tuple[str, str]] = None
    if doc.get("outer") is not None:
        raw_outer = doc["outer"]
        if not isinstance(raw_outer, dict):
            raise DiagramSyntaxError("expected an object", "outer")
        semi_arc = _require(raw_outer, "semi_arc", str, "outer")
        side = _require(raw_outer, "side", str, "outer")
        if side not in (LEFT, RIGHT):
            raise DiagramSyntaxError("side must be 'left' or 'right'", "outer.side")
        known = {c.under_in for c in crossings} | {c.over_in for c in crossings}
        known |= {s.semi_arc for v in vertices for s in v.slots}
        if semi_arc not in known:
            raise DiagramSyntaxError(f"unknown semi-arc {semi_arc!r}", "outer")
        outer = (semi_arc, side)
    return Diagram(name, tuple(crossings), tuple(vertices), outer)


def parse_diagram(text: str) -> Diagram:
    """Parse a JSON diagram document."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise DiagramSyntaxError(f"line {e.lineno} column {e.colno}: {e.msg}") from e
    return diagram_from_dict(doc)


def diagram_to_dict(d: Diagram) -> dict[str, Any]:
    doc: dict[str, Any] = {
        "name": d.name,
        "crossings": [
            {key: getattr(c, key) for key in CROSSING_KEYS} for c in d.crossings
        ],
        "vertices": [
            {
                "id": v.id,
                "slots": [
                    {"semi_arc": s.semi_arc, "dir": s.direction} for s in v.slots
                ],
            }
            for v in d.vertices
        ],
    }
    if d.outer is not None:
        doc["outer"] = {"semi_arc": d.outer[0], "side": d.outer[1]}
    return doc


def serialize(d: Diagram) -> str:
    """Byte-stable JSON text; crossings and vertices come out sorted by id."""
    return json.dumps(diagram_to_dict(d), indent=2, ensure_ascii=False) + "\n"


def load_diagram(path: str) -> Diagram:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise DiagramSyntaxError(f"cannot read diagram file: {e}", path) from e
    return parse_diagram(text)


def save_diagram(d: Diagram, path: str) -> None:
    Path(path).write_text(serialize(d), encoding="utf-8")
