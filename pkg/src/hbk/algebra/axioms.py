"""Axiom checkers for finite biquandle tables and Z_m-families."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .biquandle import AlexanderBiquandle, overop_n, underop_n
from .field import FieldElement

DEFAULT_SAMPLES = 10_000


@dataclass(frozen=True)
class FiniteBiquandleTable:
    """Operation tables indexed by element number: under_table[a][b] = a ⊻ b."""

    size: int
    under_table: tuple[tuple[int, ...], ...]
    over_table: tuple[tuple[int, ...], ...]


@dataclass
class AxiomCheck:
    name: str
    passed: bool = True
    witness: Optional[tuple] = None
    trials: int = 0

    def record(self, ok: bool, witness: tuple) -> None:
        self.trials += 1
        if not ok and self.passed:
            self.passed = False
            self.witness = witness


@dataclass
class AxiomReport:
    method: str
    checks: list[AxiomCheck] = field(default_factory=list)
    seed: Optional[int] = None

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_dict(self) -> dict:
        return {
            "method": self.method,
            "seed": self.seed,
            "ok": self.ok,
            "checks": [
                {
                    "name": c.name,
                    "passed": c.passed,
                    "trials": c.trials,
                    "witness": None if c.witness is None else list(c.witness),
                }
                for c in self.checks
            ],
        }


def alexander_table(ab: AlexanderBiquandle, n: int = 1) -> FiniteBiquandleTable:
    """Tables of the n-fold operations, elements numbered by FieldElement.index()."""
    elements = list(ab.field.elements())
    under = tuple(
        tuple(underop_n(ab, a, b, n).index() for b in elements) for a in elements
    )
    over = tuple(
        tuple(overop_n(ab, a, b, n).index() for b in elements) for a in elements
    )
    return FiniteBiquandleTable(len(elements), under, over)


def check_biquandle_axioms(table: FiniteBiquandleTable) -> AxiomReport:
    """Exhaustive check of the biquandle axioms on a finite table."""
    size = table.size
    under, over = table.under_table, table.over_table
    idempotence = AxiomCheck("x ⊻ x = x ⊼ x")
    under_rows = AxiomCheck("y ↦ y ⊻ x is bijective")
    over_rows = AxiomCheck("y ↦ y ⊼ x is bijective")
    pair_map = AxiomCheck("S(x, y) = (y ⊼ x, x ⊻ y) is bijective")
    exchange_uu = AxiomCheck("(x⊻y)⊻(z⊻y) = (x⊻z)⊻(y⊼z)")
    exchange_ou = AxiomCheck("(x⊻y)⊼(z⊻y) = (x⊼z)⊻(y⊼z)")
    exchange_oo = AxiomCheck("(x⊼y)⊼(z⊼y) = (x⊼z)⊼(y⊻z)")

    for x in range(size):
        idempotence.record(under[x][x] == over[x][x], (x,))
        under_rows.record(len({under[y][x] for y in range(size)}) == size, (x,))
        over_rows.record(len({over[y][x] for y in range(size)}) == size, (x,))
    images = {(over[y][x], under[x][y]) for x in range(size) for y in range(size)}
    pair_map.record(len(images) == size * size, ())

    for x, y, z in itertools.product(range(size), repeat=3):
        w = (x, y, z)
        exchange_uu.record(
            under[under[x][y]][under[z][y]] == under[under[x][z]][over[y][z]], w
        )
        exchange_ou.record(
            over[under[x][y]][under[z][y]] == under[over[x][z]][over[y][z]], w
        )
        exchange_oo.record(
            over[over[x][y]][over[z][y]] == over[over[x][z]][under[y][z]], w
        )

    checks = [
        idempotence,
        under_rows,
        over_rows,
        pair_map,
        exchange_uu,
        exchange_ou,
        exchange_oo,
    ]
    return AxiomReport("exhaustive", checks)


def check_gfamily_axioms(
    ab: AlexanderBiquandle,
    m: int,
    samples: int = DEFAULT_SAMPLES,
    seed: int = 0,
) -> AxiomReport:
    """Check the Z_m-family axioms with exponents taken literally in [0, m).

    Runs exhaustively when #X³·m² fits in ``samples``, otherwise draws
    ``samples`` seeded random (x, y, z, g, h).
    """
    ab.require_family(m)
    f = ab.field

    def under(a: FieldElement, b: FieldElement, g: int) -> FieldElement:
        tg = f.t ** (g % m)
        return tg * a + (ab.s ** (g % m) - tg) * b

    def over(a: FieldElement, b: FieldElement, g: int) -> FieldElement:
        return ab.s ** (g % m) * a

    idempotence = AxiomCheck("x ⊻^g x = x ⊼^g x")
    identity = AxiomCheck("x ⊻^0 y = x = x ⊼^0 y")
    compose_under = AxiomCheck("x ⊻^(g+h) y = (x ⊻^g y) ⊻^h (y ⊻^g y)")
    compose_over = AxiomCheck("x ⊼^(g+h) y = (x ⊼^g y) ⊼^h (y ⊼^g y)")
    exchange_uu = AxiomCheck("(x⊻^g y)⊻^h(z⊼^g y) = (x⊻^h z)⊻^g(y⊻^h z)")
    exchange_ou = AxiomCheck("(x⊼^g y)⊻^h(z⊼^g y) = (x⊻^h z)⊼^g(y⊻^h z)")
    exchange_oo = AxiomCheck("(x⊼^g y)⊼^h(z⊼^g y) = (x⊼^h z)⊼^g(y⊻^h z)")

    def trial(
        x: FieldElement, y: FieldElement, z: FieldElement, g: int, h: int
    ) -> None:
        w = (str(x), str(y), str(z), g, h)
        idempotence.record(under(x, x, g) == over(x, x, g), w)
        identity.record(under(x, y, 0) == x == over(x, y, 0), w)
        compose_under.record(
            under(x, y, g + h) == under(under(x, y, g), under(y, y, g), h), w
        )
        compose_over.record(
            over(x, y, g + h) == over(over(x, y, g), over(y, y, g), h), w
        )
        exchange_uu.record(
            under(under(x, y, g), over(z, y, g), h)
            == under(under(x, z, h), under(y, z, h), g),
            w,
        )
        exchange_ou.record(
            under(over(x, y, g), over(z, y, g), h)
            == over(under(x, z, h), under(y, z, h), g),
            w,
        )
        exchange_oo.record(
            over(over(x, y, g), over(z, y, g), h)
            == over(over(x, z, h), under(y, z, h), g),
            w,
        )

    total = f.order**3 * m * m
    if total <= samples:
        elements = list(f.elements())
        cases: Iterable = itertools.product(
            elements, elements, elements, range(m), range(m)
        )
        report = AxiomReport("exhaustive")
    else:
        rng = random.Random(seed)
        cases = (
            (
                f.from_index(rng.randrange(f.order)),
                f.from_index(rng.randrange(f.order)),
                f.from_index(rng.randrange(f.order)),
                rng.randrange(m),
                rng.randrange(m),
            )
            for _ in range(samples)
        )
        report = AxiomReport("sampled", seed=seed)
    for case in cases:
        trial(*case)
    report.checks = [
        idempotence,
        identity,
        compose_under,
        compose_over,
        exchange_uu,
        exchange_ou,
        exchange_oo,
    ]
    return report


def check_quandle_degeneration(
    ab: AlexanderBiquandle, samples: int = DEFAULT_SAMPLES, seed: int = 0
) -> AxiomCheck:
    """x ⊼ y = x for all pairs, which holds exactly when s = 1."""
    check = AxiomCheck("x ⊼ y = x")
    f = ab.field
    pairs: Iterable[tuple[FieldElement, FieldElement]]
    if f.order**2 <= samples:
        pairs = itertools.product(f.elements(), repeat=2)
    else:
        rng = random.Random(seed)

        def draw() -> FieldElement:
            return f.from_index(rng.randrange(f.order))

        pairs = ((draw(), draw()) for _ in range(samples))
    for x, y in pairs:
        check.record(overop_n(ab, x, y, 1) == x, (str(x), str(y)))
    return check
