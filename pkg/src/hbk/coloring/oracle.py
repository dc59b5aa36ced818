"""Brute-force coloring count by backtracking with constraint propagation."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from ..algebra import AlexanderBiquandle, FieldElement, overop_n, underop_n
from ..diagram import Diagram
from ..exceptions import InvalidFlowError, TooLargeError
from ..flow import Flow, flow_violations

DEFAULT_BRUTE_CAP = 10**6


@dataclass(frozen=True)
class Constraint:
    output: str
    inputs: tuple[str, ...]
    rule: Callable[..., FieldElement]


def coloring_constraints(
    d: Diagram, phi: Flow, ab: AlexanderBiquandle
) -> list[Constraint]:
    """Coloring conditions in operation form.

    At a crossing w = u ⊻^[ψ] v and v' = v ⊼^[φ] u; at a vertex
    α = γ and β = γ ⊼^[η] γ.
    """
    constraints = []
    for c in d.crossings:
        f = c.frame
        psi, under_flow = phi.at(f.v), phi.at(f.u)
        constraints.append(
            Constraint(
                f.w, (f.u, f.v), lambda u, v, n=psi: underop_n(ab, u, v, n)
            )
        )
        constraints.append(
            Constraint(
                f.v_prime,
                (f.v, f.u),
                lambda v, u, n=under_flow: overop_n(ab, v, u, n),
            )
        )
    for vertex in d.vertices:
        vf = vertex.frame
        eta = phi.at(vf.alpha)
        constraints.append(Constraint(vf.alpha, (vf.gamma,), lambda g: g))
        constraints.append(
            Constraint(
                vf.beta, (vf.gamma,), lambda g, n=eta: overop_n(ab, g, g, n)
            )
        )
    return constraints


def _propagate(
    constraints: list[Constraint], assignment: dict[str, FieldElement]
) -> bool:
    """Fire every constraint whose inputs are known; False on a contradiction."""
    changed = True
    while changed:
        changed = False
        for con in constraints:
            if not all(name in assignment for name in con.inputs):
                continue
            value = con.rule(*(assignment[name] for name in con.inputs))
            current = assignment.get(con.output)
            if current is None:
                assignment[con.output] = value
                changed = True
            elif current != value:
                return False
    return True


def branching_variables(d: Diagram, constraints: list[Constraint]) -> int:
    """Number of free choices the search makes; independent of the values."""
    known: set[str] = set()
    branches = 0
    for semi_arc in d.semi_arcs:
        if semi_arc in known:
            continue
        branches += 1
        known.add(semi_arc)
        changed = True
        while changed:
            changed = False
            for con in constraints:
                if con.output not in known and all(n in known for n in con.inputs):
                    known.add(con.output)
                    changed = True
    return branches


def coloring_count_bruteforce(
    d: Diagram,
    phi: Flow,
    ab: AlexanderBiquandle,
    cap: int = DEFAULT_BRUTE_CAP,
) -> int:
    """Exact number of colorings, refusing when #X^branches exceeds ``cap``."""
    ab.require_family(phi.m)
    violations = flow_violations(d, phi)
    if violations:
        raise InvalidFlowError("; ".join(violations))
    constraints = coloring_constraints(d, phi, ab)
    estimate = ab.field.order ** branching_variables(d, constraints)
    if estimate > cap:
        raise TooLargeError(estimate, cap)

    elements = list(ab.field.elements())
    order = list(d.semi_arcs)

    def search(assignment: dict[str, FieldElement]) -> int:
        if not _propagate(constraints, assignment):
            return 0
        free: Optional[str] = next((s for s in order if s not in assignment), None)
        if free is None:
            return 1
        return sum(search({**assignment, free: x}) for x in elements)

    return search({})
