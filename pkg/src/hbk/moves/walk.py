"""Seeded random walks through equivalent diagrams."""

from __future__ import annotations

import random
from typing import Iterator, Optional

from ..diagram import Diagram
from .reidemeister import apply_move, enumerate_applicable
from .site import MoveSite


def random_walk(
    d: Diagram,
    seed: int,
    steps: int,
    max_crossings: Optional[int] = None,
) -> Iterator[tuple[MoveSite, Diagram]]:
    """Yield each applied site with the diagram it produced.

    Sites are drawn uniformly among the applicable ones. Once a move would
    push the crossing count past ``max_crossings``, only sites that keep it
    in range are drawn.
    """
    rng = random.Random(seed)
    for _ in range(steps):
        sites = enumerate_applicable(d)
        if max_crossings is not None:
            sites = [s for s in sites if d.n + s.crossing_delta <= max_crossings]
        if not sites:
            return
        site = rng.choice(sites)
        d = apply_move(d, site)
        yield site, d


def random_equivalent(
    d: Diagram,
    seed: int,
    steps: int,
    max_crossings: Optional[int] = None,
) -> Diagram:
    for _, d in random_walk(d, seed, steps, max_crossings):
        pass
    return d
