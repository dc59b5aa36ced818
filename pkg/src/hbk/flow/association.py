"""Transport a flow to a related diagram that shares semi-arc ids outside a disk."""

from __future__ import annotations

from ..diagram import Diagram, arcs
from ..exceptions import InconsistentError
from .space import Flow, flow_violations


def associate_flow(d: Diagram, phi: Flow, other: Diagram) -> Flow:
    """The unique flow on ``other`` agreeing with ``phi`` on shared semi-arcs.

    Values spread along strands through crossings and by conservation at
    vertices until every semi-arc is determined.
    """
    m = phi.m
    known = {s: phi.at(s) for s in other.semi_arcs if s in d.heads}
    changed = True
    while changed and len(known) < len(other.semi_arcs):
        changed = False
        for c in other.crossings:
            for a, b in ((c.under_in, c.under_out), (c.over_in, c.over_out)):
                if a in known and b not in known:
                    known[b] = known[a]
                    changed = True
                elif b in known and a not in known:
                    known[a] = known[b]
                    changed = True
        for v in other.vertices:
            missing = [s for s in v.slots if s.semi_arc not in known]
            if len(missing) != 1:
                continue
            balance = sum(
                known[s.semi_arc] * (1 if s.is_in else -1)
                for s in v.slots
                if s.semi_arc in known
            )
            # the missing slot must cancel the balance
            lone = missing[0]
            known[lone.semi_arc] = (-balance if lone.is_in else balance) % m
            changed = True

    if len(known) < len(other.semi_arcs):
        raise InconsistentError("the associated flow is not determined")
    arc_list = arcs(other)
    values = []
    for arc in arc_list:
        member_values = {known[s] % m for s in arc.members}
        if len(member_values) != 1:
            raise InconsistentError(f"arc {arc.name} receives several values")
        values.append(member_values.pop())
    result = Flow(m, arc_list, tuple(values))
    violations = flow_violations(other, result)
    if violations:
        raise InconsistentError("; ".join(violations))
    return result
