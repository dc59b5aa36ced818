import random

import pytest

from hbk.algebra import (
    alexander_table,
    check_biquandle_axioms,
    check_gfamily_axioms,
    check_quandle_degeneration,
    format_polynomial,
    make_alexander,
    make_field,
    mult_order,
    overop_n,
    parse_polynomial,
    underop_n,
)
from hbk.exceptions import (
    DivisionByZeroError,
    NotPrimeError,
    NotZmFamilyError,
    ReducibleError,
    SNotUnitError,
    TNotInvertibleError,
    ZeroElementError,
)

# (p, f ascending, s ascending, type)
GOLDEN_TYPES = [
    (3, "1,2,1,2,1", "1", 10),
    (3, "2,1,1", "1,1", 8),
    (5, "4,2,1", "1,0,1", 24),
    (3, "2,1,1", "2,2", 8),
    (2, "1,1,1", "1", 3),
]


@pytest.mark.parametrize("p, f, s, expected", GOLDEN_TYPES)
def test_golden_types(p: int, f: str, s: str, expected: int) -> None:
    field = make_field(p, parse_polynomial(f))
    ab = make_alexander(field, field.parse(s))
    assert ab.type == expected


@pytest.mark.parametrize("p, f, s, expected", GOLDEN_TYPES)
def test_type_by_direct_powering(p: int, f: str, s: str, expected: int) -> None:
    field = make_field(p, parse_polynomial(f))
    s_elem, t = field.parse(s), field.t
    n = next(
        n
        for n in range(1, field.order)
        if (s_elem**n).is_one() and (t**n).is_one()
    )
    assert n == expected


def test_field_arithmetic_in_gf4() -> None:
    field = make_field(2, [1, 1, 1])
    t = field.t
    assert field.order == 4
    assert (t + 1) * (t + 1) == t
    assert t * t == t + 1
    assert t**-1 == t + 1
    assert t * t.inverse() == field.one
    assert t**3 == field.one
    assert (t + 1) / t == t


def test_field_rejects_bad_parameters() -> None:
    with pytest.raises(NotPrimeError):
        make_field(4, [1, 1, 1])
    with pytest.raises(ReducibleError):
        make_field(2, [1, 0, 1])
    with pytest.raises(TNotInvertibleError):
        make_field(2, [0, 1, 1])


def test_field_makes_modulus_monic() -> None:
    field = make_field(3, [1, 2, 2])
    assert field.f == (2, 1, 1)


def test_inverse_and_order_of_zero() -> None:
    field = make_field(3, [2, 1, 1])
    with pytest.raises(DivisionByZeroError):
        field.zero.inverse()
    with pytest.raises(ZeroElementError):
        mult_order(field.zero)


def test_every_nonzero_element_is_invertible() -> None:
    field = make_field(3, [2, 1, 1])
    for x in field.elements():
        if x:
            assert (x * x.inverse()).is_one()
            assert (field.order - 1) % mult_order(x) == 0


def test_polynomial_text() -> None:
    assert parse_polynomial("1,0,1") == [1, 0, 1]
    assert format_polynomial([2, 1, 1]) == "t^2+t+2"
    assert format_polynomial([0, 0]) == "0"
    with pytest.raises(ValueError):
        parse_polynomial("1,x")


def test_zero_s_is_rejected() -> None:
    field = make_field(2, [1, 1, 1])
    with pytest.raises(SNotUnitError):
        make_alexander(field, field.zero)


def test_n_fold_operations(gf9) -> None:
    field = gf9.field
    a, b = field.parse("1,2"), field.parse("2")
    assert underop_n(gf9, a, b, 0) == a
    assert overop_n(gf9, a, b, 0) == a
    assert underop_n(gf9, a, b, gf9.type) == a
    assert underop_n(gf9, a, b, 1) == field.t * a + (gf9.s - field.t) * b
    assert overop_n(gf9, a, b, 3) == gf9.s**3 * a
    assert underop_n(gf9, a, b, -1) == underop_n(gf9, a, b, gf9.type - 1)


def test_require_family(gf9) -> None:
    gf9.require_family(16)
    with pytest.raises(NotZmFamilyError) as info:
        gf9.require_family(12)
    assert info.value.type == 8


@pytest.mark.parametrize("n", [1, 2])
def test_alexander_tables_are_biquandles(gf9, n: int) -> None:
    report = check_biquandle_axioms(alexander_table(gf9, n))
    assert report.ok, report.to_dict()
    assert report.method == "exhaustive"


def test_broken_table_is_caught(gf4) -> None:
    table = alexander_table(gf4)
    under = [list(row) for row in table.under_table]
    under[0][1] = under[0][0]
    broken = type(table)(table.size, tuple(map(tuple, under)), table.over_table)
    report = check_biquandle_axioms(broken)
    assert not report.ok
    assert any(c.witness is not None for c in report.checks)


def test_gfamily_axioms_exhaustive(gf4_s_t) -> None:
    report = check_gfamily_axioms(gf4_s_t, 3)
    assert report.method == "exhaustive"
    assert report.ok, report.to_dict()


def test_gfamily_axioms_sampled_is_seeded(gf9) -> None:
    first = check_gfamily_axioms(gf9, 8, samples=500, seed=7)
    second = check_gfamily_axioms(gf9, 8, samples=500, seed=7)
    assert first.method == "sampled"
    assert first.ok
    assert first.to_dict() == second.to_dict()


def test_gfamily_needs_type_dividing_m(gf9) -> None:
    with pytest.raises(NotZmFamilyError):
        check_gfamily_axioms(gf9, 6)


def test_quandle_degeneration(gf4, gf4_s_t) -> None:
    assert check_quandle_degeneration(gf4).passed
    assert not check_quandle_degeneration(gf4_s_t).passed


@pytest.mark.parametrize("p, f", [(2, [1, 1, 1]), (3, [2, 1, 1]), (5, [4, 2, 1])])
def test_field_axioms_on_random_triples(p: int, f: list[int]) -> None:
    field = make_field(p, f)
    rng = random.Random(p)
    for _ in range(1000):
        a, b, c = (field.from_index(rng.randrange(field.order)) for _ in range(3))
        assert (a * b) * c == a * (b * c)
        assert (a + b) + c == a + (b + c)
        assert a * (b + c) == a * b + a * c
        assert (a + b) * c == a * c + b * c


@pytest.mark.parametrize("name", ["gf4", "gf4_s_t", "gf9"])
def test_closed_form_matches_iterated_operations(request, name: str) -> None:
    ab = request.getfixturevalue(name)
    field = ab.field
    rng = random.Random(11)
    for _ in range(25):
        a, b = (field.from_index(rng.randrange(field.order)) for _ in range(2))
        under, over, pivot = a, a, b
        for n in range(2 * ab.type + 1):
            assert underop_n(ab, a, b, n) == under
            assert overop_n(ab, a, b, n) == over
            # x ⊻^[n+1] y = (x ⊻^[n] y) ⊻ (y ⊻^[n] y), and likewise for ⊼
            under = field.t * under + (ab.s - field.t) * pivot
            over = ab.s * over
            pivot = ab.s * pivot
