"""Move sites: which rewrite to apply, and where."""

from __future__ import annotations

from dataclasses import dataclass

from ..exceptions import DiagramSyntaxError

R1_POSITIVE = "R1+"
R1_NEGATIVE = "R1-"
R2_ADD = "R2+"
R2_REMOVE = "R2-"
R3 = "R3"
R4_OVER = "R4over"
R4_UNDER = "R4under"
R5 = "R5"
R6 = "R6"

KINDS = (
    R1_POSITIVE,
    R1_NEGATIVE,
    R2_ADD,
    R2_REMOVE,
    R3,
    R4_OVER,
    R4_UNDER,
    R5,
    R6,
)

# net change in the number of crossings when applied forwards
CROSSING_DELTA = {
    R1_POSITIVE: 1,
    R1_NEGATIVE: 1,
    R2_ADD: 2,
    R2_REMOVE: -2,
    R3: 0,
    R4_OVER: 1,
    R4_UNDER: 1,
    R5: 1,
    R6: 0,
}

INVERSE_MARK = "/inv"


@dataclass(frozen=True)
class MoveSite:
    """A move kind, its anchors (ids, sides, slot numbers) and its direction."""

    kind: str
    anchors: tuple[str, ...]
    inverse: bool = False

    @property
    def crossing_delta(self) -> int:
        delta = CROSSING_DELTA[self.kind]
        return -delta if self.inverse else delta

    def __str__(self) -> str:
        mark = INVERSE_MARK if self.inverse else ""
        return f"{self.kind}{mark}:{','.join(self.anchors)}"

    @classmethod
    def parse(cls, text: str) -> MoveSite:
        """Read ``KIND[/inv]:ANCHOR,ANCHOR,...``."""
        head, sep, tail = text.partition(":")
        if not sep:
            raise DiagramSyntaxError(f"move {text!r} has no ':'", field="move")
        inverse = head.endswith(INVERSE_MARK)
        kind = head[: -len(INVERSE_MARK)] if inverse else head
        if kind not in KINDS:
            raise DiagramSyntaxError(f"unknown move kind {kind!r}", field="move")
        anchors = tuple(a.strip() for a in tail.split(",") if a.strip())
        return cls(kind, anchors, inverse)
