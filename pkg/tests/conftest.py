import random
from functools import lru_cache
from typing import Iterable

import pytest

from hbk.algebra import AlexanderBiquandle, make_alexander, make_field
from hbk.diagram import Diagram
from hbk.flow import Flow, make_flow
from hbk.moves import random_equivalent
from hbk.templates import get_template

CORPUS_SEEDS = range(70)
CORPUS_TEMPLATES = ("E", "theta", "handcuff")
# fixture name and flow modulus of each algebra the corpus runs over
CORPUS_ALGEBRAS = (("gf4", 3), ("gf4_s_t", 3), ("gf9", 8))


@pytest.fixture
def gf4() -> AlexanderBiquandle:
    """GF(4) = F_2[t]/(t^2+t+1) with s = 1; type 3."""
    field = make_field(2, [1, 1, 1])
    return make_alexander(field, field.one)


@pytest.fixture
def gf4_s_t() -> AlexanderBiquandle:
    field = make_field(2, [1, 1, 1])
    return make_alexander(field, field.t)


@pytest.fixture
def gf9() -> AlexanderBiquandle:
    """F_3[t]/(t^2+t+2) with s = t+1; type 8."""
    field = make_field(3, [2, 1, 1])
    return make_alexander(field, field.parse("1,1"))


@pytest.fixture
def unknot() -> Diagram:
    return get_template("unknot")


@pytest.fixture
def e_diagram() -> Diagram:
    return get_template("E")


@pytest.fixture
def theta() -> Diagram:
    return get_template("theta")


@pytest.fixture
def handcuff() -> Diagram:
    return get_template("handcuff")


@pytest.fixture
def trefoil() -> Diagram:
    return get_template("trefoil")


def e_flow(d: Diagram, m: int, a: int, b: int) -> Flow:
    """The E flow with a on {x2, x3, x6}, b on {x1, x4, x7} and a + b on x5."""
    return make_flow(d, m, {"x2": a, "x6": a, "x1": b, "x4": b, "x5": a + b})


@lru_cache(maxsize=None)
def corpus_diagram(
    name: str, seed: int, steps: int = 8, max_crossings: int = 5
) -> Diagram:
    """A seeded random diagram equivalent to a template."""
    return random_equivalent(get_template(name), seed, steps, max_crossings)


def corpus(seeds: Iterable[int] = CORPUS_SEEDS) -> list[tuple[str, int]]:
    return [(name, seed) for name in CORPUS_TEMPLATES for seed in seeds]


def corpus_algebra(
    request: pytest.FixtureRequest, seed: int
) -> tuple[AlexanderBiquandle, int]:
    """The biquandle and modulus a corpus seed is checked with, in rotation."""
    name, m = CORPUS_ALGEBRAS[seed % len(CORPUS_ALGEBRAS)]
    return request.getfixturevalue(name), m


def random_crossings(d: Diagram, seed: int, count: int) -> list[str]:
    rng = random.Random(seed)
    ids = [c.id for c in d.crossings]
    return rng.sample(ids, min(count, len(ids)))
