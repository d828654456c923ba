"""Tests for the toggle-constant solver and refinement checks."""

from __future__ import annotations

from fractions import Fraction

import pytest

from conftest import all_partitions
from qtab.distributions import Statistic, ddeg, statistic_ddeg
from qtab.posets import (
    NotGraded,
    build_minuscule,
    build_propeller,
    build_rectangle,
    build_shape,
    build_shifted,
    order_ideals,
)
from qtab.qpoly import QPoly, RatFunc, parse_poly, qbinom, qnum
from qtab.solver import (
    RefinementReport,
    UnsupportedPoset,
    build_system,
    predict_constant,
    statistic_diagonal,
    statistic_row,
    toggle_solve,
    verify_refinements,
)


def staircase(k: int):
    return build_shifted(tuple(range(k, 0, -1)))


def test_singleton_golden():
    poset = build_shape((1,))
    result = toggle_solve(poset, statistic_ddeg(poset))
    assert result.consistent
    assert result.constant == RatFunc(QPoly.of([1]), parse_poly("1 + q"))
    assert result.coefficients == (RatFunc(QPoly.of([-1]), parse_poly("1 + q")),)
    assert result.witness_mask is None


def test_build_system_shape():
    poset = build_rectangle(2, 2)
    matrix, rhs = build_system(poset, statistic_ddeg(poset))
    assert len(matrix) == 6 and len(rhs) == 6
    assert all(len(row) == 5 for row in matrix)
    assert matrix[0][0] == QPoly.of([1])
    with pytest.raises(ValueError):
        build_system(poset, statistic_ddeg(poset), row_limit=3)


@pytest.mark.parametrize("a,b", [(1, 1), (1, 2), (1, 3), (2, 2), (2, 3), (3, 3)])
def test_rectangle_constants(a, b):
    rect = build_rectangle(a, b)
    result = toggle_solve(rect, statistic_ddeg(rect))
    assert result.consistent
    expected = RatFunc(qnum(a) * qnum(b), qnum(a + b))
    assert result.constant == expected
    assert predict_constant(rect) == expected


@pytest.mark.parametrize("k", [2, 3])
def test_staircase_constants(k):
    poset = staircase(k)
    result = toggle_solve(poset, statistic_ddeg(poset))
    assert result.consistent
    expected = RatFunc(qbinom(k + 1, 2), qnum(2 * k))
    assert result.constant == expected
    assert predict_constant(poset) == expected


def test_propeller_constants():
    for k, expected in [
        (2, RatFunc(parse_poly("1 + q"), parse_poly("1 + q^2"))),
        (3, RatFunc(qnum(5) + QPoly.monomial(1, 2), qnum(6))),
    ]:
        poset = build_propeller(k)
        result = toggle_solve(poset, statistic_ddeg(poset))
        assert result.consistent
        assert result.constant == expected
        assert predict_constant(poset) == expected


def test_exceptional_minuscule_constant():
    poset = build_minuscule("E6")
    result = toggle_solve(poset, statistic_ddeg(poset))
    assert result.consistent
    assert result.constant == predict_constant(poset)


def test_consistency_on_shapes_matches_rectangularity():
    for lam in all_partitions(7):
        poset = build_shape(lam)
        result = toggle_solve(poset, statistic_ddeg(poset))
        is_rectangle = len(set(lam)) == 1
        assert result.consistent == is_rectangle
        if not result.consistent:
            assert result.witness_mask in order_ideals(poset)
            assert result.constant is None


def test_hook_shape_is_consistent_at_one():
    poset = build_shape((2, 1))
    generic = toggle_solve(poset, statistic_ddeg(poset))
    assert not generic.consistent
    at_one = toggle_solve(poset, statistic_ddeg(poset), q_value=1)
    assert at_one.consistent
    assert at_one.constant == RatFunc.from_int(1)


def test_rational_specialization():
    rect = build_rectangle(2, 2)
    result = toggle_solve(rect, statistic_ddeg(rect), q_value=Fraction(1, 2))
    assert result.consistent
    # [2][2]/[4] at q = 1/2 is (3/2)^2 / (15/8) = 6/5
    assert result.constant == RatFunc(QPoly.of([6]), QPoly.of([5]))


def test_predict_constant_requires_grading():
    with pytest.raises(NotGraded):
        predict_constant(build_shape((3, 1)))


def test_row_statistics_sum_to_ddeg():
    rect = build_rectangle(2, 3)
    rows = [statistic_row(rect, i) for i in (1, 2)]
    for mask in order_ideals(rect):
        total = sum((stat.values[mask] for stat in rows), QPoly.of([]))
        assert total == QPoly.of([ddeg(rect, mask)])
    with pytest.raises(ValueError):
        statistic_row(rect, 3)
    with pytest.raises(UnsupportedPoset):
        statistic_row(build_propeller(2), 1)


def test_diagonal_statistics_split_ddeg():
    poset = staircase(3)
    on = statistic_diagonal(poset)
    off = statistic_diagonal(poset, on_diagonal=False)
    for mask in order_ideals(poset):
        total = on.values[mask] + off.values[mask]
        assert total == QPoly.of([ddeg(poset, mask)])


@pytest.mark.parametrize("a,b", [(2, 2), (2, 3), (3, 3)])
def test_rectangle_row_refinements(a, b):
    reports = verify_refinements(build_rectangle(a, b))
    assert [r.label for r in reports] == [f"row:{i}" for i in range(1, a + 1)]
    assert all(r.ok for r in reports)
    total = sum(
        (r.constant for r in reports), RatFunc(QPoly.of([]), QPoly.of([1]))
    )
    assert total == RatFunc(qnum(a) * qnum(b), qnum(a + b))


@pytest.mark.parametrize("k", [2, 3])
def test_staircase_diagonal_refinements(k):
    reports = verify_refinements(staircase(k))
    assert [r.label for r in reports] == ["diagonal", "off-diagonal"]
    assert all(r.ok for r in reports)
    total = sum(
        (r.constant for r in reports), RatFunc(QPoly.of([]), QPoly.of([1]))
    )
    assert total == RatFunc(qbinom(k + 1, 2), qnum(2 * k))


def test_refinements_reject_other_posets():
    with pytest.raises(UnsupportedPoset):
        verify_refinements(build_shape((2, 1)))
    with pytest.raises(UnsupportedPoset):
        verify_refinements(build_propeller(2))


def test_report_ok_semantics():
    bad = RefinementReport("x", False, None, RatFunc.from_int(1))
    assert not bad.ok
    good = RefinementReport("x", True, RatFunc.from_int(1), RatFunc.from_int(1))
    assert good.ok
