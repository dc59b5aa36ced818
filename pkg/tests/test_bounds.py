import math
from collections import Counter

import pytest

from conftest import corpus, corpus_algebra, corpus_diagram, random_crossings
from hbk.bounds import (
    DimProfile,
    directed_bound,
    distance_report,
    flow_dim_profile,
    gordian_lower_bound,
    unknotting_lower_bound,
    unknotting_report,
)
from hbk.coloring import coloring_count_bruteforce
from hbk.diagram import crossing_changes
from hbk.exceptions import EmptyGcdClassError, NotZmFamilyError
from hbk.flow import enumerate_flows, flow_space
from hbk.templates import trivial_diagram


def test_dim_profile_bookkeeping() -> None:
    profile = DimProfile(3)
    profile.add(3, 1)
    profile.add(1, 2)
    profile.add(1, 2)
    profile.add(1, 1)
    assert profile.total == 4
    assert profile.max_dim == 2
    assert profile.dims(1) == Counter({2: 2, 1: 1})
    assert profile.to_dict()["1"] == {
        "flows": 3,
        "min_dim": 1,
        "max_dim": 2,
        "dims": {"1": 1, "2": 2},
    }


def test_directed_bound() -> None:
    source, target = DimProfile(3), DimProfile(3)
    source.add(3, 1)
    source.add(1, 3)
    target.add(3, 1)
    target.add(1, 1)
    target.add(1, 2)
    assert directed_bound(source, target) == 1
    assert directed_bound(target, source) == 2


def test_directed_bound_needs_matching_gcd_classes() -> None:
    source, target = DimProfile(4), DimProfile(4)
    source.add(2, 1)
    target.add(4, 1)
    with pytest.raises(EmptyGcdClassError) as info:
        directed_bound(source, target)
    assert info.value.gcd == 2


@pytest.mark.parametrize("genus", [1, 2, 3])
def test_trivial_diagrams_have_bound_zero(gf4, genus: int) -> None:
    assert unknotting_lower_bound(trivial_diagram(genus), gf4, 3) == 0


def test_trefoil_unknotting_bound(trefoil, gf4) -> None:
    assert unknotting_lower_bound(trefoil, gf4, 3) == 1
    report = unknotting_report(trefoil, gf4, 3)
    assert report.bound == 1
    assert report.flows_examined == 3
    assert report.to_dict()["direction_details"] == [
        {"from": "trefoil", "to": "trivial", "bound": 1}
    ]


def test_profile_requires_family(e_diagram, gf4) -> None:
    with pytest.raises(NotZmFamilyError):
        flow_dim_profile(e_diagram, gf4, 4)


def test_gordian_bound_between_unknot_and_trefoil(unknot, trefoil, gf4) -> None:
    assert gordian_lower_bound(unknot, trefoil, gf4, 3) == 1
    assert gordian_lower_bound(trefoil, trefoil, gf4, 3) == 0


def test_distance_report(unknot, trefoil, gf4) -> None:
    report = distance_report(unknot, trefoil, gf4, 3)
    assert report.bound == 1
    assert report.warnings == []
    doc = report.to_dict()
    assert set(doc["per_gcd_summary"]) == {"unknot", "trefoil"}
    assert "upper_bound" not in doc


def test_distance_report_names_identical_diagrams(e_diagram, gf4) -> None:
    report = distance_report(e_diagram, e_diagram, gf4, 3)
    assert report.bound == 0
    assert [(d.source, d.target) for d in report.directions] == [
        ("first", "second"),
        ("second", "first"),
    ]


def test_distance_report_warns_on_genus_mismatch(theta, gf4) -> None:
    report = distance_report(theta, trivial_diagram(2), gf4, 3)
    assert report.warnings == []
    report = distance_report(trivial_diagram(2), trivial_diagram(3), gf4, 3)
    assert report.bound == 0
    assert len(report.warnings) == 1
    assert "9 vs 27" in report.warnings[0]


def test_pool_matches_serial(theta, gf4) -> None:
    serial = flow_dim_profile(theta, gf4, 3)
    pooled = flow_dim_profile(theta, gf4, 3, jobs=2)
    assert pooled.to_dict() == serial.to_dict()


@pytest.mark.parametrize("name, seed", corpus(range(36)))
def test_bound_never_exceeds_changes_made(request, name: str, seed: int) -> None:
    ab, m = corpus_algebra(request, seed)
    d = corpus_diagram(name, seed)
    changed_ids = random_crossings(d, seed, seed // 3 % 3 + 1)
    changed = crossing_changes(d, changed_ids)
    assert gordian_lower_bound(d, changed, ab, m) <= len(changed_ids)
    assert gordian_lower_bound(changed, d, ab, m) <= len(changed_ids)


@pytest.mark.parametrize("name, seed", corpus(range(3)))
def test_unknotting_bound_is_the_bruteforce_maximum(gf4, name: str, seed: int) -> None:
    d = corpus_diagram(name, seed, steps=4, max_crossings=3)
    d = crossing_changes(d, random_crossings(d, seed, 1))
    order = gf4.field.order
    dims = []
    for phi in enumerate_flows(flow_space(d, 3)):
        count = coloring_count_bruteforce(d, phi, gf4)
        dim = round(math.log(count, order))
        assert order**dim == count
        dims.append(dim)
    assert unknotting_lower_bound(d, gf4, 3) == max(dims) - 1
