from collections import Counter

import pytest

from conftest import corpus, corpus_algebra
from hbk.algebra import AlexanderBiquandle
from hbk.coloring import coloring_dimension
from hbk.diagram import (
    IN,
    OUT,
    Diagram,
    Slot,
    Vertex,
    is_isomorphic,
    serialize,
    validate,
)
from hbk.exceptions import DiagramSyntaxError, NotApplicableError
from hbk.flow import associate_flow, enumerate_flows, flow_space, gcd_of_flow
from hbk.moves import (
    R1_NEGATIVE,
    R1_POSITIVE,
    R2_ADD,
    R2_REMOVE,
    R3,
    R4_OVER,
    R4_UNDER,
    R5,
    R6,
    TWIST_FIRST,
    TWIST_SECOND,
    MoveSite,
    apply_move,
    compass_crossing,
    enumerate_applicable,
    random_equivalent,
    random_walk,
)
from hbk.moves.local import EAST, NORTH, SOUTH, WEST
from hbk.templates import get_template


def test_site_text() -> None:
    site = MoveSite.parse("R1+/inv:c2")
    assert site == MoveSite(R1_POSITIVE, ("c2",), inverse=True)
    assert str(site) == "R1+/inv:c2"
    assert str(MoveSite(R2_ADD, ("x", "left", "y", "right"))) == "R2+:x,left,y,right"
    assert MoveSite.parse("R6: x5 , forward").anchors == ("x5", "forward")


@pytest.mark.parametrize("text", ["R1+", "R7:c1", "R2+/inv"])
def test_site_parse_errors(text: str) -> None:
    with pytest.raises(DiagramSyntaxError):
        MoveSite.parse(text)


def test_crossing_delta() -> None:
    assert MoveSite(R2_ADD, ()).crossing_delta == 2
    assert MoveSite(R2_ADD, (), inverse=True).crossing_delta == -2
    assert MoveSite(R2_REMOVE, ()).crossing_delta == -2
    assert MoveSite(R3, ()).crossing_delta == 0
    assert MoveSite(R1_NEGATIVE, (), inverse=True).crossing_delta == -1


@pytest.mark.parametrize("kind", [R1_POSITIVE, R1_NEGATIVE])
@pytest.mark.parametrize("first", ["under", "over"])
def test_kink_round_trip(unknot, kind: str, first: str) -> None:
    kinked = apply_move(unknot, MoveSite(kind, ("x", first)))
    assert kinked.n == 2
    assert validate(kinked).ok
    assert apply_move(kinked, MoveSite(kind, ("c2",), inverse=True)) == unknot


def test_kink_sign_must_match(unknot) -> None:
    kinked = apply_move(unknot, MoveSite(R1_POSITIVE, ("x", "under")))
    with pytest.raises(NotApplicableError):
        apply_move(kinked, MoveSite(R1_NEGATIVE, ("c2",), inverse=True))


def test_poke_round_trip(unknot) -> None:
    poked = apply_move(unknot, MoveSite(R2_ADD, ("x", "left", "y", "right")))
    assert sorted(c.id for c in poked.crossings) == ["c1", "c2", "c3"]
    assert validate(poked).ok
    assert MoveSite(R2_REMOVE, ("c2", "c3")) in enumerate_applicable(poked)
    assert apply_move(poked, MoveSite(R2_REMOVE, ("c2", "c3"))) == unknot


def test_poke_needs_a_shared_face(e_diagram) -> None:
    with pytest.raises(NotApplicableError):
        apply_move(e_diagram, MoveSite(R2_ADD, ("x5", "left", "x5", "right")))


def test_alternating_trefoil_has_no_bigon_or_triangle_moves(trefoil) -> None:
    kinds = {site.kind for site in enumerate_applicable(trefoil)}
    assert R2_REMOVE not in kinds
    assert R3 not in kinds
    with pytest.raises(NotApplicableError):
        apply_move(trefoil, MoveSite(R2_REMOVE, ("c1", "c2")))


def test_ih_move(e_diagram) -> None:
    site = MoveSite(R6, ("x5", "forward"))
    assert site in enumerate_applicable(e_diagram)
    moved = apply_move(e_diagram, site)
    assert validate(moved).ok
    assert "s1" in moved.heads and "x5" not in moved.heads
    back = apply_move(moved, MoveSite(R6, ("s1", "backward")))
    assert is_isomorphic(back, e_diagram)


@pytest.mark.parametrize("name", ["theta", "handcuff"])
def test_degenerate_edges_have_no_ih_move(name: str) -> None:
    d = get_template(name)
    assert not [site for site in enumerate_applicable(d) if site.kind == R6]


@pytest.mark.parametrize("name", ["E", "handcuff", "trefoil"])
def test_every_applicable_site_gives_a_valid_diagram(name: str) -> None:
    d = get_template(name)
    for site in enumerate_applicable(d):
        moved = apply_move(d, site)
        report = validate(moved)
        assert report.ok, (str(site), report.violations)
        assert moved.n == d.n + site.crossing_delta, str(site)


def test_enumeration_is_deterministic(e_diagram) -> None:
    first = [str(s) for s in enumerate_applicable(e_diagram)]
    assert first == [str(s) for s in enumerate_applicable(e_diagram)]


def test_random_walk_is_seeded(e_diagram) -> None:
    one = [str(site) for site, _ in random_walk(e_diagram, 3, 10)]
    two = [str(site) for site, _ in random_walk(e_diagram, 3, 10)]
    assert one == two
    assert len(one) == 10
    assert serialize(random_equivalent(e_diagram, 3, 10)) == serialize(
        random_equivalent(e_diagram, 3, 10)
    )


def test_random_walk_respects_crossing_limit(e_diagram) -> None:
    for _, d in random_walk(e_diagram, 11, 25, max_crossings=4):
        assert d.n <= 4


@pytest.mark.parametrize("name, seed", corpus(range(24)))
def test_walks_preserve_colorings(request, name: str, seed: int) -> None:
    ab, m = corpus_algebra(request, seed)
    start = get_template(name)
    flows = list(enumerate_flows(flow_space(start, m)))
    expected = [
        (gcd_of_flow(phi), coloring_dimension(start, phi, ab)) for phi in flows
    ]

    d = start
    for _, moved in random_walk(start, seed, 8, max_crossings=5):
        flows = [associate_flow(d, phi, moved) for phi in flows]
        d = moved
    assert validate(d).ok
    assert flow_space(d, m).count == len(flows)
    assert [
        (gcd_of_flow(phi), coloring_dimension(d, phi, ab)) for phi in flows
    ] == expected


@pytest.mark.parametrize(
    "name, site", [("handcuff", "R1+/inv:c1"), ("theta", "R1+/inv:k")]
)
def test_last_crossing_of_a_component_stays(name: str, site: str) -> None:
    d = get_template(name)
    with pytest.raises(NotApplicableError):
        apply_move(d, MoveSite.parse(site))
    assert MoveSite.parse(site) not in enumerate_applicable(d)


@pytest.mark.parametrize("name", ["theta", "handcuff"])
def test_walks_never_strip_a_component(name: str) -> None:
    start = get_template(name)
    for seed in range(60):
        for site, d in random_walk(start, seed, 8, max_crossings=4):
            report = validate(d)
            assert report.ok, (seed, str(site), report.violations)


def pierced_theta(circle_over: bool) -> Diagram:
    """A theta curve whose middle edge passes through a small circle twice.

    P sits on top, Q below; e1 and e2 run down from P, e3 runs back up, and
    the circle is oriented counterclockwise around e2.
    """
    upper = (EAST, "c_b", WEST, "c_a"), (NORTH, "e2a", SOUTH, "e2b")
    lower = (WEST, "c_a", EAST, "c_b"), (NORTH, "e2b", SOUTH, "e2c")
    crossings = []
    for cid, (circle, edge) in (("X1", upper), ("X2", lower)):
        over, under = (circle, edge) if circle_over else (edge, circle)
        crossings.append(compass_crossing(cid, over, under))
    vertices = (
        Vertex("P", (Slot("e1", OUT), Slot("e2a", OUT), Slot("e3", IN))),
        Vertex("Q", (Slot("e3", OUT), Slot("e2c", IN), Slot("e1", IN))),
    )
    return Diagram("pierced", tuple(crossings), vertices)


def venn_link() -> Diagram:
    """Three overlapping counterclockwise circles A, B and C.

    A passes over the other two everywhere and C under, so the middle
    triangle bounded by a2, b2 and c2 admits a triangle move.
    """
    crossings = [
        ("AB_in", (EAST, "a2", WEST, "a3"), (NORTH, "b1", SOUTH, "b2")),
        ("AB_out", (EAST, "a4", WEST, "a1"), (SOUTH, "b3", NORTH, "b4")),
        ("BC_in", (EAST, "b2", WEST, "b3"), (NORTH, "c1", SOUTH, "c2")),
        ("BC_out", (EAST, "b4", WEST, "b1"), (SOUTH, "c3", NORTH, "c4")),
        ("CA_in", (EAST, "a1", WEST, "a2"), (SOUTH, "c2", NORTH, "c3")),
        ("CA_out", (EAST, "a3", WEST, "a4"), (NORTH, "c4", SOUTH, "c1")),
    ]
    return Diagram(
        "venn",
        tuple(compass_crossing(cid, over, under) for cid, over, under in crossings),
        (),
    )


def coloring_profile(d: Diagram, ab: AlexanderBiquandle, m: int) -> Counter:
    return Counter(
        (gcd_of_flow(phi), coloring_dimension(d, phi, ab))
        for phi in enumerate_flows(flow_space(d, m))
    )


def assert_round_trip(
    d: Diagram, kind: str, ab: AlexanderBiquandle, m: int
) -> None:
    """Every site of ``kind`` on ``d`` is undone by some inverse site."""
    sites = [s for s in enumerate_applicable(d) if s.kind == kind and not s.inverse]
    assert sites, kind
    profile = coloring_profile(d, ab, m)
    for site in sites:
        moved = apply_move(d, site)
        assert validate(moved).ok, str(site)
        assert flow_space(moved, m).count == flow_space(d, m).count
        assert coloring_profile(moved, ab, m) == profile, str(site)
        undo = [
            s
            for s in enumerate_applicable(moved)
            if s.kind == kind and (s.inverse or kind == R3)
        ]
        assert any(is_isomorphic(apply_move(moved, s), d) for s in undo), str(site)


@pytest.mark.parametrize("circle_over", [True, False])
def test_pierced_theta_is_valid(circle_over: bool) -> None:
    d = pierced_theta(circle_over)
    report = validate(d)
    assert report.ok, report.violations
    assert (report.n, report.k, report.faces) == (2, 1, 5)


def test_push_past_vertex_round_trip(gf4_s_t) -> None:
    over, under = pierced_theta(True), pierced_theta(False)
    assert MoveSite(R4_OVER, ("P", "1")) in enumerate_applicable(over)
    assert MoveSite(R4_UNDER, ("P", "1")) in enumerate_applicable(under)
    assert_round_trip(over, R4_OVER, gf4_s_t, 3)
    assert_round_trip(under, R4_UNDER, gf4_s_t, 3)


def test_pushed_strand_crosses_the_other_edges() -> None:
    moved = apply_move(pierced_theta(True), MoveSite(R4_OVER, ("P", "1")))
    assert moved.n == 3
    back = apply_move(moved, MoveSite(R4_OVER, ("P", "1"), inverse=True))
    assert is_isomorphic(back, pierced_theta(True))


@pytest.mark.parametrize("name", ["E", "theta"])
def test_twist_round_trip(gf9, name: str) -> None:
    assert_round_trip(get_template(name), R5, gf9, 8)


@pytest.mark.parametrize("which", [TWIST_FIRST, TWIST_SECOND])
def test_twist_adds_one_crossing_at_the_vertex(e_diagram, which: str) -> None:
    moved = apply_move(e_diagram, MoveSite(R5, ("V1", "0", which)))
    assert moved.n == 3
    assert validate(moved).ok
    assert MoveSite(R5, ("V1", "0"), inverse=True) in enumerate_applicable(moved)
    back = apply_move(moved, MoveSite(R5, ("V1", "0"), inverse=True))
    assert is_isomorphic(back, e_diagram)


def test_venn_link_is_valid() -> None:
    report = validate(venn_link())
    assert report.ok, report.violations
    assert (report.n, report.faces) == (6, 8)


def test_triangle_move_round_trip(gf4_s_t) -> None:
    assert_round_trip(venn_link(), R3, gf4_s_t, 3)
