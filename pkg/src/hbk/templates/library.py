"""Named diagrams and the trivial diagram of any genus."""

from __future__ import annotations

from typing import Optional

from ..diagram import (
    IN,
    OUT,
    Crossing,
    Diagram,
    Slot,
    Vertex,
    disjoint_union,
    parse_diagram,
)
from ..exceptions import DiagramSyntaxError
from .diagrams import (
    E_TEMPLATE,
    HANDCUFF_TEMPLATE,
    TREFOIL_TEMPLATE,
    UNKNOT_TEMPLATE,
)

TEMPLATES = {
    "unknot": UNKNOT_TEMPLATE,
    "E": E_TEMPLATE,
    "handcuff": HANDCUFF_TEMPLATE,
    "trefoil": TREFOIL_TEMPLATE,
}

TEMPLATE_NAMES = ("unknot", "E", "theta", "handcuff", "trefoil", "trivial")


def trivial_diagram(genus: int) -> Diagram:
    """A circle with genus − 1 parallel chords and one kink on the top arc.

    Genus 1 is the one-kink unknot.
    """
    if genus < 1:
        raise DiagramSyntaxError(f"genus must be at least 1, got {genus}", "genus")
    if genus == 1:
        return parse_diagram(UNKNOT_TEMPLATE).renamed("trivial-1")
    g = genus - 1
    vertices = []
    for i in range(1, g + 1):
        circle_in = "t2" if i == 1 else f"l{i - 1}"
        circle_out = "b" if i == g else f"l{i}"
        vertices.append(
            Vertex(
                f"L{i}",
                (Slot(f"h{i}", OUT), Slot(circle_in, IN), Slot(circle_out, OUT)),
            )
        )
        up = "t" if i == 1 else f"r{i - 1}"
        from_below = "b" if i == g else f"r{i}"
        vertices.append(
            Vertex(
                f"R{i}",
                (Slot(up, OUT), Slot(f"h{i}", IN), Slot(from_below, IN)),
            )
        )
    kink = Crossing("k", 1, "t", "tk", "tk", "t2")
    return Diagram(f"trivial-{genus}", (kink,), tuple(vertices))


def trivial_link(components: int) -> Diagram:
    """Split union of one-kink unknots."""
    d = parse_diagram(UNKNOT_TEMPLATE)
    for _ in range(components - 1):
        d = disjoint_union(d, parse_diagram(UNKNOT_TEMPLATE))
    return d.renamed(f"trivial-link-{components}")


def get_template(name: str, genus: Optional[int] = None) -> Diagram:
    if name == "trivial":
        return trivial_diagram(genus or 1)
    if name == "theta":
        return trivial_diagram(2).renamed("theta")
    if name not in TEMPLATES:
        raise DiagramSyntaxError(
            f"unknown template {name!r}; choose from {', '.join(TEMPLATE_NAMES)}",
            "template",
        )
    return parse_diagram(TEMPLATES[name])
