"""Isomorphism of labeled rotation systems, ignoring ids."""

import networkx as nx
from networkx.algorithms.isomorphism import (
    categorical_multiedge_match,
    categorical_node_match,
)

from .model import Diagram

ROLES = ("under_in", "under_out", "over_in", "over_out")


def dart_graph(d: Diagram) -> nx.MultiDiGraph:
    """One graph node per slot.

    Rotation edges link each slot to its counterclockwise successor and
    semi-arc edges link a tail slot to its head slot. Slot labels carry the
    crossing role and sign, or the vertex direction.
    """
    graph = nx.MultiDiGraph()
    for c in d.crossings:
        for role in ROLES:
            graph.add_node((c.id, role), label=f"{role}{c.sign:+d}")
        ccw = [(c.id, r) for r in _ccw_roles(c.sign)]
        for a, b in zip(ccw, ccw[1:] + ccw[:1]):
            graph.add_edge(a, b, kind="rotation")
    for v in d.vertices:
        nodes = [(v.id, i) for i in range(len(v.slots))]
        for node, slot in zip(nodes, v.slots):
            graph.add_node(node, label=slot.direction)
        for a, b in zip(nodes, nodes[1:] + nodes[:1]):
            graph.add_edge(a, b, kind="rotation")
    for semi_arc in d.semi_arcs:
        tail, head = d.tails[semi_arc], d.heads[semi_arc]
        graph.add_edge(
            _slot_node(d, tail.node, tail.index),
            _slot_node(d, head.node, head.index),
            kind="semi_arc",
        )
    return graph


def _ccw_roles(sign: int) -> list[str]:
    if sign > 0:
        return ["under_in", "over_out", "under_out", "over_in"]
    return ["under_in", "over_in", "under_out", "over_out"]


def _slot_node(d: Diagram, node: str, index: int) -> tuple:
    if d.is_crossing(node):
        return (node, _ccw_roles(d.crossing(node).sign)[index])
    return (node, index)


def is_isomorphic(d1: Diagram, d2: Diagram) -> bool:
    """True when the diagrams differ only by a renaming of ids."""
    if (d1.n, len(d1.vertices), len(d1.semi_arcs)) != (
        d2.n,
        len(d2.vertices),
        len(d2.semi_arcs),
    ):
        return False
    return nx.is_isomorphic(
        dart_graph(d1),
        dart_graph(d2),
        node_match=categorical_node_match("label", None),
        edge_match=categorical_multiedge_match("kind", None),
    )
