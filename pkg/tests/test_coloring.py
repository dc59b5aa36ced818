import pytest

from conftest import corpus, corpus_algebra, corpus_diagram, e_flow
from hbk.coloring import (
    OVER,
    UNDER,
    VERTEX_ALPHA,
    VERTEX_BETA,
    RowProvenance,
    branching_variables,
    coloring_constraints,
    coloring_count,
    coloring_count_bruteforce,
    coloring_dimension,
    coloring_matrix,
    echelon_rank,
    rank,
    relation_coefficients,
    relation_residual,
)
from hbk.diagram import crossing_change
from hbk.exceptions import InvalidFlowError, NotZmFamilyError, TooLargeError
from hbk.flow import (
    Flow,
    classical_flow,
    enumerate_flows,
    flow_space,
    make_flow,
)
from hbk.templates import trivial_link


@pytest.mark.parametrize("a, b", [(1, 1), (1, 2), (2, 1)])
def test_e_matrix(e_diagram, gf9, a: int, b: int) -> None:
    mx = coloring_matrix(e_diagram, e_flow(e_diagram, 8, a, b), gf9)
    one, zero = gf9.field.one, gf9.field.zero
    t_pow, s_pow = gf9.t_pow, gf9.s_pow
    assert mx.shape == (8, 7)
    assert mx.columns == ("x1", "x2", "x3", "x4", "x5", "x6", "x7")

    assert mx.row(UNDER, "c1") == (
        -one,
        zero,
        s_pow(a) - t_pow(a),
        t_pow(a),
        zero,
        zero,
        zero,
    )
    assert mx.entry(OVER, "c1", "x3") == -s_pow(b)
    assert mx.entry(OVER, "c1", "x2") == one

    assert mx.entry(UNDER, "c2", "x6") == t_pow(b)
    assert mx.entry(UNDER, "c2", "x4") == s_pow(b) - t_pow(b)
    assert mx.entry(UNDER, "c2", "x2") == -one
    assert mx.entry(OVER, "c2", "x4") == -s_pow(a)
    assert mx.entry(OVER, "c2", "x7") == one

    assert mx.entry(VERTEX_ALPHA, "V1", "x3") == one
    assert mx.entry(VERTEX_ALPHA, "V1", "x5") == -one
    assert mx.entry(VERTEX_BETA, "V1", "x1") == one
    assert mx.entry(VERTEX_BETA, "V1", "x5") == -s_pow(a)
    assert mx.entry(VERTEX_ALPHA, "V2", "x6") == one
    assert mx.entry(VERTEX_BETA, "V2", "x7") == one
    assert mx.entry(VERTEX_BETA, "V2", "x5") == -s_pow(a)


def test_row_order(e_diagram, gf9) -> None:
    mx = coloring_matrix(e_diagram, e_flow(e_diagram, 8, 1, 2), gf9)
    assert [str(r) for r in mx.rows] == [
        "under(c1)",
        "under(c2)",
        "over(c1)",
        "over(c2)",
        "vertex-alpha(V1)",
        "vertex-alpha(V2)",
        "vertex-beta(V1)",
        "vertex-beta(V2)",
    ]
    assert mx.rows[0] == RowProvenance(UNDER, "c1")


def test_matrix_requires_family(e_diagram, gf9) -> None:
    phi = e_flow(e_diagram, 6, 1, 1)
    with pytest.raises(NotZmFamilyError):
        coloring_matrix(e_diagram, phi, gf9)


def test_matrix_rechecks_flow(e_diagram, gf4) -> None:
    phi = e_flow(e_diagram, 3, 1, 1)
    bad = Flow(phi.m, phi.arcs, tuple(1 for _ in phi.values))
    with pytest.raises(InvalidFlowError):
        coloring_matrix(e_diagram, bad, gf4)


def test_echelon_rank(gf4) -> None:
    one, t = gf4.field.one, gf4.field.t
    zero = gf4.field.zero
    assert echelon_rank([]) == 0
    assert echelon_rank([[one, t], [t, t * t]]) == 1
    assert echelon_rank([[one, t], [t, one]]) == 2
    assert echelon_rank([[zero, zero], [zero, one]]) == 1


def test_zero_flow_colors_each_component_constantly(e_diagram, gf4) -> None:
    phi = next(enumerate_flows(flow_space(e_diagram, 3)))
    assert coloring_dimension(e_diagram, phi, gf4) == 1
    link = trivial_link(3)
    zero = next(enumerate_flows(flow_space(link, 3)))
    assert coloring_dimension(link, zero, gf4) == 3


def test_trivial_link_dimension_counts_components(gf4) -> None:
    link = trivial_link(2)
    for phi in enumerate_flows(flow_space(link, 3)):
        assert coloring_dimension(link, phi, gf4) == 2


def test_trefoil_has_nontrivial_colorings(trefoil, gf4) -> None:
    phi = classical_flow(trefoil, 3)
    assert coloring_dimension(trefoil, phi, gf4) == 2
    assert coloring_count(trefoil, phi, gf4) == 16
    mx = coloring_matrix(trefoil, phi, gf4)
    assert rank(mx) == 4


def test_unknot_count(unknot, gf4) -> None:
    for phi in enumerate_flows(flow_space(unknot, 3)):
        assert coloring_count(unknot, phi, gf4) == 4


def test_residual_vanishes_on_e(e_diagram, gf9) -> None:
    for phi in enumerate_flows(flow_space(e_diagram, 8)):
        residual = relation_residual(e_diagram, phi, gf9)
        assert residual.is_zero, (str(phi), residual.nonzero_columns())


def test_relation_coefficients_are_not_all_zero(e_diagram, gf9) -> None:
    coefficients = relation_coefficients(e_diagram, e_flow(e_diagram, 8, 1, 2), gf9)
    assert len(coefficients) == 8
    assert any(coefficients)


def test_residual_vanishes_on_classical_trefoil(trefoil, gf9) -> None:
    residual = relation_residual(trefoil, classical_flow(trefoil, 8), gf9)
    assert residual.is_zero
    assert len(residual.weights()) == 6


def test_oracle_constraints_match_the_matrix(e_diagram, gf4) -> None:
    phi = e_flow(e_diagram, 3, 1, 2)
    constraints = coloring_constraints(e_diagram, phi, gf4)
    assert len(constraints) == 8
    assert 1 <= branching_variables(e_diagram, constraints) <= 7


@pytest.mark.parametrize(
    "name", ["unknot", "e_diagram", "theta", "handcuff", "trefoil"]
)
def test_oracle_agrees_with_rank(request, gf4, name: str) -> None:
    d = request.getfixturevalue(name)
    for phi in enumerate_flows(flow_space(d, 3)):
        expected = gf4.field.order ** coloring_dimension(d, phi, gf4)
        assert coloring_count_bruteforce(d, phi, gf4) == expected


def test_oracle_refuses_large_searches(e_diagram, gf4) -> None:
    phi = e_flow(e_diagram, 3, 1, 2)
    with pytest.raises(TooLargeError) as info:
        coloring_count_bruteforce(e_diagram, phi, gf4, cap=1)
    assert info.value.cap == 1


@pytest.mark.parametrize("name, seed", corpus())
def test_corpus_relation_and_positive_dimension(request, name: str, seed: int) -> None:
    ab, m = corpus_algebra(request, seed)
    d = corpus_diagram(name, seed)
    for phi in enumerate_flows(flow_space(d, m)):
        assert relation_residual(d, phi, ab).is_zero
        assert coloring_dimension(d, phi, ab) >= 1


@pytest.mark.parametrize("name, seed", corpus(range(24)))
def test_corpus_oracle(request, name: str, seed: int) -> None:
    ab = request.getfixturevalue("gf4" if seed % 2 else "gf4_s_t")
    d = corpus_diagram(name, seed, steps=4, max_crossings=3)
    for phi in enumerate_flows(flow_space(d, 3)):
        expected = ab.field.order ** coloring_dimension(d, phi, ab)
        assert coloring_count_bruteforce(d, phi, ab) == expected


@pytest.mark.parametrize("name, seed", corpus(range(12)))
def test_crossing_change_moves_dimension_by_at_most_one(
    request, name: str, seed: int
) -> None:
    ab, m = corpus_algebra(request, seed)
    d = corpus_diagram(name, seed)
    flows = list(enumerate_flows(flow_space(d, m)))
    dims = [coloring_dimension(d, phi, ab) for phi in flows]
    for c in d.crossings:
        changed = crossing_change(d, c.id)
        for phi, dim in zip(flows, dims):
            phi_bar = make_flow(changed, m, phi.semi_arc_values())
            assert abs(dim - coloring_dimension(changed, phi_bar, ab)) <= 1
