"""Exact determination of constants forced by toggle symmetry.

A statistic f on the order ideals has the same expectation c under every
toggle-symmetric distribution exactly when f - c is a pointwise linear
combination of the signed toggle statistics tin_p - q * tout_p.  This module
builds that linear system -- one equation per order ideal, unknowns c and one
coefficient per element -- and solves it exactly over polynomials; when no
solution exists it reports a witness ideal whose equation breaks.  On graded
posets the rank-chain distribution predicts the constant independently.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .distributions import (
    Statistic,
    ensemble_rank,
    expectation,
    statistic_ddeg,
    toggle_statistic_value,
    tout,
)
from .posets import Poset, order_ideals
from .qpoly import QPoly, RatFunc, qbinom, qnum, solve_linear_system


class UnsupportedPoset(Exception):
    """A refinement check was requested for a poset without the needed shape."""


@dataclass(frozen=True)
class ToggleSolveResult:
    """Outcome of the toggle-constant system for one statistic."""

    consistent: bool
    constant: RatFunc | None
    coefficients: tuple[RatFunc, ...] | None
    witness_mask: int | None


@dataclass(frozen=True)
class RefinementReport:
    """One refinement statistic checked against its product-formula constant."""

    label: str
    consistent: bool
    constant: RatFunc | None
    expected: RatFunc

    @property
    def ok(self) -> bool:
        return self.consistent and self.constant == self.expected


def build_system(
    poset: Poset, statistic: Statistic, row_limit: int = 100_000
) -> tuple[list[list[QPoly]], list[QPoly]]:
    """One row per order ideal: c + sum_p a_p * (tin_p - q*tout_p) = f."""
    ideals = order_ideals(poset)
    if len(ideals) > row_limit:
        raise ValueError(f"{len(ideals)} ideals exceed the row limit {row_limit}")
    one = QPoly.of([1])
    matrix = []
    rhs = []
    for mask in ideals:
        row = [one]
        row.extend(toggle_statistic_value(poset, p, mask) for p in range(poset.n))
        matrix.append(row)
        rhs.append(statistic.values[mask])
    return matrix, rhs


def _evaluated_rows(
    matrix: list[list[QPoly]], rhs: list[QPoly], q_value: int | Fraction
) -> tuple[list[list[QPoly]], list[QPoly]]:
    """Specialize q, rescaling each equation to integer coefficients."""
    out_matrix = []
    out_rhs = []
    for row, target in zip(matrix, rhs):
        values = [entry.evaluate(q_value) for entry in row]
        values.append(target.evaluate(q_value))
        scale = math.lcm(*(Fraction(v).denominator for v in values))
        ints = [int(v * scale) for v in values]
        out_matrix.append([QPoly.of([v]) for v in ints[:-1]])
        out_rhs.append(QPoly.of([ints[-1]]))
    return out_matrix, out_rhs


def toggle_solve(
    poset: Poset,
    statistic: Statistic,
    q_value: int | Fraction | None = None,
    row_limit: int = 100_000,
) -> ToggleSolveResult:
    """Solve for the forced expectation of the statistic, exactly."""
    matrix, rhs = build_system(poset, statistic, row_limit)
    if q_value is not None:
        matrix, rhs = _evaluated_rows(matrix, rhs, q_value)
    result = solve_linear_system(matrix, rhs)
    if not result.consistent:
        witness = order_ideals(poset)[result.witness_row]
        return ToggleSolveResult(False, None, None, witness)
    solution = result.solution
    return ToggleSolveResult(True, solution[0], tuple(solution[1:]), None)


def predict_constant(poset: Poset, statistic: Statistic | None = None) -> RatFunc:
    """Expectation under the rank-chain distribution (graded posets only)."""
    if statistic is None:
        statistic = statistic_ddeg(poset)
    return expectation(ensemble_rank(poset), statistic)


# ---------------------------------------------------------------------------
# refinement statistics for box shapes


def _coord_set(poset: Poset) -> set[tuple[int, int]]:
    if poset.coords is None:
        raise UnsupportedPoset("poset has no box coordinates")
    return set(poset.coords)


def statistic_row(poset: Poset, row: int) -> Statistic:
    """Number of maximal elements of the ideal lying in the given row."""
    coords = _coord_set(poset)
    if row not in {r for r, _ in coords}:
        raise ValueError(f"no row {row} in this shape")
    members = [e for e, (r, _) in enumerate(poset.coords) if r == row]
    return Statistic.from_function(
        poset,
        lambda mask: sum(tout(poset, p, mask) for p in members),
        f"row:{row}",
    )


def statistic_diagonal(poset: Poset, on_diagonal: bool = True) -> Statistic:
    """Number of maximal elements on (or off) the main diagonal."""
    _coord_set(poset)
    members = [
        e
        for e, (r, c) in enumerate(poset.coords)
        if (r == c) == on_diagonal
    ]
    label = "diagonal" if on_diagonal else "off-diagonal"
    return Statistic.from_function(
        poset,
        lambda mask: sum(tout(poset, p, mask) for p in members),
        label,
    )


def _rectangle_sides(coords: set[tuple[int, int]]) -> tuple[int, int] | None:
    a = max(r for r, _ in coords)
    b = max(c for _, c in coords)
    expected = {(r, c) for r in range(1, a + 1) for c in range(1, b + 1)}
    return (a, b) if coords == expected else None


def _staircase_side(coords: set[tuple[int, int]]) -> int | None:
    k = max(r for r, _ in coords)
    expected = {(r, c) for r in range(1, k + 1) for c in range(r, k + 1)}
    return k if coords == expected else None


def verify_refinements(poset: Poset, row_limit: int = 100_000) -> tuple[RefinementReport, ...]:
    """Solve each refinement statistic and compare with its product constant.

    Rectangles split the maximal-element count by row, with the row-i
    constant q^(a-i) [b] / [a+b]; staircases split it across the diagonal,
    with constants [k]_(q^2) / [2k] on and q * qbinom(k, 2) / [2k] off.
    """
    coords = _coord_set(poset)
    reports = []
    if (sides := _rectangle_sides(coords)) is not None:
        a, b = sides
        for row in range(1, a + 1):
            expected = RatFunc(QPoly.monomial(1, a - row) * qnum(b), qnum(a + b))
            result = toggle_solve(poset, statistic_row(poset, row), row_limit=row_limit)
            reports.append(
                RefinementReport(f"row:{row}", result.consistent, result.constant, expected)
            )
    elif (k := _staircase_side(coords)) is not None:
        pairs = [
            ("diagonal", True, RatFunc(qnum(k).substitute(2), qnum(2 * k))),
            ("off-diagonal", False, RatFunc(qbinom(k, 2).shift(1), qnum(2 * k))),
        ]
        for label, on_diag, expected in pairs:
            result = toggle_solve(
                poset, statistic_diagonal(poset, on_diag), row_limit=row_limit
            )
            reports.append(
                RefinementReport(label, result.consistent, result.constant, expected)
            )
    else:
        raise UnsupportedPoset("refinements cover rectangles and staircases only")
    return tuple(reports)
