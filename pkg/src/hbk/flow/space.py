"""Z_m-flows of a diagram, solved once over Z by Smith normal form."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Mapping

from sympy.polys.domains import ZZ
from sympy.polys.matrices import DM
from sympy.polys.matrices.normalforms import smith_normal_decomp

from ..diagram import Arc, Diagram, arcs, require_valid
from ..exceptions import BadModulusError, InvalidFlowError, TooManyFlowsError

DEFAULT_FLOW_CAP = 10**6


@dataclass(frozen=True)
class Flow:
    """Values in Z_m on the arcs of a diagram, aligned with ``arcs``."""

    m: int
    arcs: tuple[Arc, ...]
    values: tuple[int, ...]

    @cached_property
    def _by_semi_arc(self) -> dict[str, int]:
        return {s: v for arc, v in zip(self.arcs, self.values) for s in arc.members}

    def at(self, semi_arc: str) -> int:
        return self._by_semi_arc[semi_arc]

    def semi_arc_values(self) -> dict[str, int]:
        return dict(self._by_semi_arc)

    def as_dict(self) -> dict[str, int]:
        return {arc.name: v for arc, v in zip(self.arcs, self.values)}

    def is_zero(self) -> bool:
        return not any(self.values)

    def __str__(self) -> str:
        return ",".join(f"{name}={v}" for name, v in self.as_dict().items())


@dataclass(frozen=True)
class FlowSpace:
    """All flows as Σ c_i·basis[i] mod m with 0 <= c_i < orders[i]."""

    m: int
    arcs: tuple[Arc, ...]
    basis: tuple[tuple[int, ...], ...]
    orders: tuple[int, ...]
    elementary_divisors: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.elementary_divisors)

    @property
    def count(self) -> int:
        return math.prod(self.orders)

    @property
    def particular(self) -> Flow:
        return Flow(self.m, self.arcs, (0,) * len(self.arcs))

    def flow_at(self, coefficients: tuple[int, ...]) -> Flow:
        values = [0] * len(self.arcs)
        for c, vector in zip(coefficients, self.basis):
            if c:
                for j, x in enumerate(vector):
                    values[j] += c * x
        return Flow(self.m, self.arcs, tuple(v % self.m for v in values))


def constraint_rows(d: Diagram, arc_list: tuple[Arc, ...]) -> list[list[int]]:
    """One row per crossing (under-arc equality) and per vertex (conservation)."""
    index = {s: i for i, arc in enumerate(arc_list) for s in arc.members}
    rows = []
    for c in d.crossings:
        row = [0] * len(arc_list)
        row[index[c.under_in]] += 1
        row[index[c.under_out]] -= 1
        rows.append(row)
    for v in d.vertices:
        row = [0] * len(arc_list)
        for slot in v.slots:
            row[index[slot.semi_arc]] += 1 if slot.is_in else -1
        rows.append(row)
    return rows


def flow_space(d: Diagram, m: int) -> FlowSpace:
    """Parametrize Flow(D; Z_m).

    With S·M·T = diag(d_1..d_r, 0..) the solutions of M x = 0 mod m are
    x = T y with d_i y_i = 0 mod m, so the count is m^(a-r)·Π gcd(d_i, m).
    """
    if m < 1:
        raise BadModulusError(f"modulus must be at least 1, got {m}")
    require_valid(d)
    arc_list = arcs(d)
    a = len(arc_list)
    rows = [row for row in constraint_rows(d, arc_list) if any(row)]
    if rows:
        snf, _, t = smith_normal_decomp(DM(rows, ZZ))
        diagonal = snf.to_list()
        divisors = []
        for i in range(min(len(rows), a)):
            entry = abs(int(diagonal[i][i]))
            if entry == 0:
                break
            divisors.append(entry)
        transform = [[int(x) for x in row] for row in t.to_list()]
    else:
        divisors = []
        transform = [[int(i == j) for j in range(a)] for i in range(a)]

    basis = []
    orders = []
    for i in range(a):
        column = [transform[j][i] for j in range(a)]
        if i < len(divisors):
            g = math.gcd(divisors[i], m)
            if g == 1:
                continue
            step = m // g
            basis.append(tuple((step * x) % m for x in column))
            orders.append(g)
        elif m > 1:
            basis.append(tuple(x % m for x in column))
            orders.append(m)
    return FlowSpace(m, arc_list, tuple(basis), tuple(orders), tuple(divisors))


def enumerate_flows(fs: FlowSpace, cap: int = DEFAULT_FLOW_CAP) -> Iterator[Flow]:
    """Every flow exactly once, lexicographic in the coefficients, zero flow first."""
    if fs.count > cap:
        raise TooManyFlowsError(fs.count, cap)
    for coefficients in itertools.product(*(range(order) for order in fs.orders)):
        yield fs.flow_at(coefficients)


def gcd_of_flow(phi: Flow) -> int:
    return math.gcd(phi.m, *phi.values)


def flow_violations(d: Diagram, phi: Flow) -> list[str]:
    """Re-check both local conditions directly on the diagram."""
    m = phi.m
    violations = []
    for c in d.crossings:
        if (phi.at(c.under_in) - phi.at(c.under_out)) % m:
            violations.append(f"crossing {c.id}: under-strand values differ")
        if (phi.at(c.over_in) - phi.at(c.over_out)) % m:
            violations.append(f"crossing {c.id}: over-strand values differ")
    for v in d.vertices:
        balance = sum(phi.at(s.semi_arc) * (1 if s.is_in else -1) for s in v.slots)
        if balance % m:
            violations.append(f"vertex {v.id}: inflow differs from outflow")
    return violations


def make_flow(d: Diagram, m: int, assignment: Mapping[str, int]) -> Flow:
    """Build a flow from values keyed by any member semi-arc of each arc.

    Arcs left out get 0; conflicting or invalid assignments raise.
    """
    if m < 1:
        raise BadModulusError(f"modulus must be at least 1, got {m}")
    arc_list = arcs(d)
    index = {s: i for i, arc in enumerate(arc_list) for s in arc.members}
    values: list[int | None] = [None] * len(arc_list)
    for semi_arc, value in assignment.items():
        if semi_arc not in index:
            raise InvalidFlowError(f"unknown semi-arc {semi_arc!r}")
        i = index[semi_arc]
        if values[i] is not None and values[i] != value % m:
            raise InvalidFlowError(f"conflicting values on arc {arc_list[i].name}")
        values[i] = value % m
    phi = Flow(m, arc_list, tuple(v or 0 for v in values))
    violations = flow_violations(d, phi)
    if violations:
        raise InvalidFlowError("; ".join(violations))
    return phi


def classical_flow(d: Diagram, m: int) -> Flow:
    """The constant flow 1 of a vertex-free diagram."""
    if d.vertices:
        raise InvalidFlowError("the constant flow needs a diagram without vertices")
    return make_flow(d, m, {arc.name: 1 for arc in arcs(d)})
