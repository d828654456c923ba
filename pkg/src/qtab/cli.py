"""Command-line front end: generating functions, verification suites, solver.

Subcommands
-----------
``gf``        print a generating function for a poset spec
``verify``    run a named invariant suite and report per-check results
``solve``     solve the toggle-constant system for one statistic
``bijection`` trace the toggle pairing on one tableau

Every size cap defaults to the value used by the acceptance gate, so
``qtab verify all`` runs the full battery.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .distributions import (
    Statistic,
    check_toggle_symmetry,
    ensemble_lin,
    ensemble_rank,
    ensemble_rpp,
    ensemble_uniform,
    expectation,
    statistic_ddeg,
    statistic_toggle,
    theta,
    theta_m,
    tin,
    tout,
)
from .extensions import (
    UnsupportedRefinement,
    d_star,
    descents,
    enumerate_bsv,
    comaj_plus,
    enumerate_linear_extensions,
    format_tableau,
    gf_bsv,
    gf_comaj,
    gf_comaj_hook_formula,
    parse_tableau,
)
from .paths import (
    catalan_number,
    catalan_sum_check,
    enumerate_rbmotz,
    narayana_check,
    verify_cor_dyck_gen_fun,
)
from .posets import (
    NotGraded,
    Poset,
    PosetSpecError,
    build_minuscule,
    build_propeller,
    build_rectangle,
    build_shape,
    build_shifted,
    ideal_members,
    is_self_dual,
    order_ideals,
    parse_poset_spec,
    rank_data,
)
from .ppartitions import (
    bender_knuth_gf,
    gf_bsv_rpp,
    macmahon_gf,
    minuscule_gf,
    rpp_size_gf,
    rpp_size_series,
)
from .qpoly import (
    QPoly,
    QTPoly,
    RatFunc,
    coeff_vector,
    format_poly,
    format_qt_poly,
    qbinom,
    qnum,
    qt_coeff_vector,
    qt_num,
)
from .solver import (
    UnsupportedPoset,
    statistic_diagonal,
    statistic_row,
    toggle_solve,
    verify_refinements,
)
from .togglebij import (
    PNotTogglableIn,
    PNotTogglableOut,
    classify,
    escalate,
    inverse_toggle_bijection,
    toggle_bijection,
)

REPORT_VERSION = 1
DEFAULT_DEGREE_CAP = 20

GF_KINDS = ("comaj", "bsv-comaj", "rpp", "bsv-rpp")
SUITE_NAMES = (
    "thm-syt",
    "thm-pp",
    "toggle-symmetry",
    "m-weight",
    "shifted",
    "minuscule",
    "paths",
    "appendix",
    "solver",
)


class UsageError(Exception):
    """A runtime argument problem reported with exit code 2."""


# ---------------------------------------------------------------------------
# check plumbing


@dataclass(frozen=True)
class Check:
    """One named verification with a thunk returning (ok, lhs, rhs)."""

    id: str
    anchor: str
    run: Callable[[], tuple[bool, object, object]]


@dataclass(frozen=True)
class CheckRecord:
    """Outcome of one check, with the mismatching sides kept on failure."""

    id: str
    anchor: str
    ok: bool
    seconds: float
    lhs: object
    rhs: object


def _vec(value: object) -> object:
    """JSON-ready rendering: polynomials become coefficient vectors."""
    if isinstance(value, QPoly):
        return coeff_vector(value)
    if isinstance(value, QTPoly):
        return qt_coeff_vector(value)
    if isinstance(value, RatFunc):
        return {"num": coeff_vector(value.num), "den": coeff_vector(value.den)}
    if value is None or isinstance(value, (bool, int, str)):
        return value
    if isinstance(value, (list, tuple)):
        return [_vec(item) for item in value]
    return str(value)


def _eq(lhs: object, rhs: object) -> tuple[bool, object, object]:
    return lhs == rhs, lhs, rhs


def _run_checks(checks: Sequence[Check], jobs: int) -> list[CheckRecord]:
    def run_one(check: Check) -> CheckRecord:
        start = time.perf_counter()
        try:
            ok, lhs, rhs = check.run()
        except Exception as exc:  # a crashing check is a failing check
            ok, lhs, rhs = False, f"{type(exc).__name__}: {exc}", None
        return CheckRecord(check.id, check.anchor, ok, time.perf_counter() - start, lhs, rhs)

    ordered = sorted(checks, key=lambda check: check.id)
    if jobs <= 1:
        return [run_one(check) for check in ordered]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(run_one, ordered))


# ---------------------------------------------------------------------------
# corpora


def _partitions(max_boxes: int, min_boxes: int = 1) -> list[tuple[int, ...]]:
    out: list[tuple[int, ...]] = []

    def rec(remaining: int, max_part: int, prefix: list[int]) -> None:
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for part in range(min(remaining, max_part), 0, -1):
            prefix.append(part)
            rec(remaining - part, part, prefix)
            prefix.pop()

    for total in range(min_boxes, max_boxes + 1):
        rec(total, total, [])
    return out


def _strict_partitions(max_boxes: int) -> list[tuple[int, ...]]:
    out: list[tuple[int, ...]] = []

    def rec(remaining: int, max_part: int, prefix: list[int]) -> None:
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for part in range(min(remaining, max_part), 0, -1):
            prefix.append(part)
            rec(remaining - part, part - 1, prefix)
            prefix.pop()

    for total in range(1, max_boxes + 1):
        rec(total, total, [])
    return out


def _shape_label(lam: Sequence[int]) -> str:
    return "shape:" + ",".join(str(part) for part in lam)


def _staircase(k: int) -> Poset:
    return build_shifted(tuple(range(k, 0, -1)))


def _labeled_corpus(max_boxes: int) -> list[tuple[str, Poset]]:
    """Shapes up to the cap plus the staircase and propeller family members."""
    items = [(_shape_label(lam), build_shape(lam)) for lam in _partitions(max_boxes)]
    extras = [
        ("shifted:2,1", build_shifted((2, 1))),
        ("shifted:3,2,1", build_shifted((3, 2, 1))),
        ("minuscule:propeller:2", build_propeller(2)),
        ("minuscule:propeller:3", build_propeller(3)),
    ]
    items.extend((label, poset) for label, poset in extras if poset.n <= max_boxes)
    return items


def _cap(value: int | None, default: int) -> int:
    return default if value is None else value


# ---------------------------------------------------------------------------
# verification suites


def _rect_lin_sides(args: argparse.Namespace) -> list[tuple[int, int]]:
    max_a = _cap(args.max_a, 16)
    max_b = _cap(args.max_b, 16)
    max_boxes = _cap(args.max_boxes, 16)
    return [
        (a, b)
        for a in range(1, max_a + 1)
        for b in range(a, max_b + 1)
        if a * b <= max_boxes
    ]


def _check_rect_lin(a: int, b: int) -> Callable[[], tuple[bool, object, object]]:
    def run() -> tuple[bool, object, object]:
        rect = build_rectangle(a, b)
        lhs = gf_bsv(rect) * qnum(a + b)
        rhs = qt_num(a) * qnum(b) * qnum(a * b + 1) * gf_comaj(rect)
        return _eq(lhs, rhs)

    return run


def _check_hooks(lam: tuple[int, ...], shifted: bool) -> Callable[[], tuple[bool, object, object]]:
    def run() -> tuple[bool, object, object]:
        poset = build_shifted(lam) if shifted else build_shape(lam)
        return _eq(gf_comaj(poset), gf_comaj_hook_formula(lam, shifted=shifted))

    return run


def _suite_thm_syt(args: argparse.Namespace) -> list[Check]:
    checks = [
        Check(f"thm-syt:rect:{a}x{b}", "rectangle-row-refined-identity", _check_rect_lin(a, b))
        for a, b in _rect_lin_sides(args)
    ]
    for lam in _partitions(min(_cap(args.max_boxes, 16), 8)):
        checks.append(
            Check(
                f"thm-syt:hooks:{_shape_label(lam)}",
                "hook-product-q-count",
                _check_hooks(lam, shifted=False),
            )
        )
    return checks


def _check_rect_rpp_t1(a: int, b: int, m: int) -> Callable[[], tuple[bool, object, object]]:
    def run() -> tuple[bool, object, object]:
        rect = build_rectangle(a, b)
        lhs = gf_bsv_rpp(rect, m).at_t1() * qnum(a + b)
        rhs = qnum(a) * qnum(b) * qnum(m) * macmahon_gf(a, b, m)
        return _eq(lhs, rhs)

    return run


def _check_rect_rpp_refined(a: int, b: int, m: int) -> Callable[[], tuple[bool, object, object]]:
    def run() -> tuple[bool, object, object]:
        rect = build_rectangle(a, b)
        lhs = gf_bsv_rpp(rect, m) * qnum(a + b)
        rhs = qt_num(a) * qnum(b) * qnum(m) * macmahon_gf(a, b, m)
        return _eq(lhs, rhs)

    return run


def _suite_thm_pp(args: argparse.Namespace) -> list[Check]:
    max_a = _cap(args.max_a, 3)
    max_b = _cap(args.max_b, 3)
    max_m = _cap(args.max_m, 4)
    checks = []
    for a in range(1, max_a + 1):
        for b in range(a, max_b + 1):
            checks.append(
                Check(
                    f"thm-pp:refined-lin:rect:{a}x{b}",
                    "rectangle-row-refined-identity",
                    _check_rect_lin(a, b),
                )
            )
            for m in range(1, max_m + 1):
                checks.append(
                    Check(
                        f"thm-pp:bounded:rect:{a}x{b}:m{m}",
                        "rectangle-bounded-identity",
                        _check_rect_rpp_t1(a, b, m),
                    )
                )
    for a in range(1, min(max_a, 2) + 1):
        for b in range(a, min(max_b, 2) + 1):
            for m in range(1, min(max_m, 3) + 1):
                checks.append(
                    Check(
                        f"thm-pp:refined-rpp:rect:{a}x{b}:m{m}",
                        "rectangle-bounded-row-refined-identity",
                        _check_rect_rpp_refined(a, b, m),
                    )
                )
    return checks


def _symmetry_failures(poset: Poset, ensemble) -> list[list[int]] | None:
    if check_toggle_symmetry(ensemble):
        return None
    return [
        _vec(expectation(ensemble, statistic_toggle(poset, p)))
        for p in range(poset.n)
    ]


def _check_symmetry(poset: Poset, make_ensemble) -> Callable[[], tuple[bool, object, object]]:
    def run() -> tuple[bool, object, object]:
        failures = _symmetry_failures(poset, make_ensemble(poset))
        return failures is None, failures, None

    return run


def _suite_toggle_symmetry(args: argparse.Namespace) -> list[Check]:
    max_m = _cap(args.max_m, 3)
    checks = []
    for label, poset in _labeled_corpus(_cap(args.max_boxes, 7)):
        families: list[tuple[str, Callable[[Poset], object]]] = [
            ("uni", ensemble_uniform),
            ("lin", ensemble_lin),
        ]
        try:
            rank_data(poset)
        except NotGraded:
            pass
        else:
            families.append(("rank", ensemble_rank))
        for m in range(1, max_m + 1):
            for mode in ("direct", "via_theta_m"):
                families.append(
                    (f"rpp:m{m}:{mode}", lambda p, m=m, mode=mode: ensemble_rpp(p, m, mode=mode))
                )
        for family, make in families:
            checks.append(
                Check(
                    f"toggle-symmetry:{label}:{family}",
                    "toggle-expectation-zero",
                    _check_symmetry(poset, make),
                )
            )
    return checks


def _check_rpp_modes(poset: Poset, m: int) -> Callable[[], tuple[bool, object, object]]:
    def run() -> tuple[bool, object, object]:
        direct = ensemble_rpp(poset, m, mode="direct")
        via = ensemble_rpp(poset, m, mode="via_theta_m")
        ok = direct.weights == via.weights and direct.normalizer == via.normalizer
        if ok:
            return True, None, None
        return False, [_vec(w) for _, w in direct.weights], [_vec(w) for _, w in via.weights]

    return run


def _check_theta_m_factorization(poset: Poset, m: int) -> Callable[[], tuple[bool, object, object]]:
    def run() -> tuple[bool, object, object]:
        n = poset.n
        total = QPoly.of([])
        for ext in enumerate_linear_extensions(poset):
            des = descents(ext)
            for i in range(n + 1):
                value = theta_m(ext, i, m)
                product = theta(ext, i) * qbinom(m + n - len(des - {i}), n + 1)
                if value != product:
                    return False, value, product
                total = total + value
        return _eq(total, qnum(m) * rpp_size_gf(poset, m))

    return run


def _suite_m_weight(args: argparse.Namespace) -> list[Check]:
    corpus = _labeled_corpus(_cap(args.max_boxes, 7))
    modes_max_m = _cap(args.max_m, 3)
    fact_max_m = _cap(args.max_m, 4)
    checks = []
    for label, poset in corpus:
        for m in range(1, modes_max_m + 1):
            checks.append(
                Check(
                    f"m-weight:modes:{label}:m{m}",
                    "bounded-ensemble-two-routes",
                    _check_rpp_modes(poset, m),
                )
            )
        if poset.n <= 6:
            for m in range(1, fact_max_m + 1):
                checks.append(
                    Check(
                        f"m-weight:factorization:{label}:m{m}",
                        "bounded-weight-factorization",
                        _check_theta_m_factorization(poset, m),
                    )
                )
    return checks


def _check_staircase_lin(k: int) -> Callable[[], tuple[bool, object, object]]:
    def run() -> tuple[bool, object, object]:
        poset = _staircase(k)
        lhs = gf_bsv(poset).at_t1() * qnum(2 * k)
        rhs = qbinom(k + 1, 2) * qnum(poset.n + 1) * gf_comaj(poset)
        return _eq(lhs, rhs)

    return run


def _check_staircase_diag(k: int) -> Callable[[], tuple[bool, object, object]]:
    def run() -> tuple[bool, object, object]:
        poset = _staircase(k)
        acc: dict[tuple[int, int], int] = {}
        for bsv in enumerate_bsv(poset):
            key = (comaj_plus(bsv), d_star(bsv))
            acc[key] = acc.get(key, 0) + 1
        lhs = QTPoly.of(acc) * qnum(2 * k)
        bracket_k_q2 = qnum(k).substitute(2)
        split = QTPoly.from_qpoly(qbinom(k, 2).shift(1)) + QTPoly.of(
            {(e, 1): c for e, c in enumerate(bracket_k_q2.coeffs) if c}
        )
        rhs = split * qnum(poset.n + 1) * gf_comaj(poset)
        return _eq(lhs, rhs)

    return run


def _check_staircase_rpp(k: int, m: int) -> Callable[[], tuple[bool, object, object]]:
    def run() -> tuple[bool, object, object]:
        poset = _staircase(k)
        lhs = gf_bsv_rpp(poset, m).at_t1() * qnum(2 * k)
        rhs = qbinom(k + 1, 2) * qnum(m) * bender_knuth_gf(k, m)
        return _eq(lhs, rhs)

    return run


def _check_bounded_product(poset: Poset, m: int, product: QPoly) -> Callable[[], tuple[bool, object, object]]:
    def run() -> tuple[bool, object, object]:
        return _eq(rpp_size_gf(poset, m), product)

    return run


def _suite_shifted(args: argparse.Namespace) -> list[Check]:
    max_m = _cap(args.max_m, 3)
    checks = []
    for k in (2, 3):
        checks.append(
            Check(f"shifted:lin-identity:k{k}", "staircase-product-identity", _check_staircase_lin(k))
        )
        checks.append(
            Check(
                f"shifted:diag-refinement:k{k}",
                "staircase-diagonal-refined-identity",
                _check_staircase_diag(k),
            )
        )
        for m in range(1, max_m + 1):
            checks.append(
                Check(
                    f"shifted:rpp-identity:k{k}:m{m}",
                    "staircase-bounded-identity",
                    _check_staircase_rpp(k, m),
                )
            )
            checks.append(
                Check(
                    f"shifted:bounded-count:k{k}:m{m}",
                    "staircase-bounded-product-formula",
                    _check_bounded_product(_staircase(k), m, bender_knuth_gf(k, m)),
                )
            )
    for lam in _strict_partitions(_cap(args.max_boxes, 8)):
        label = ",".join(str(part) for part in lam)
        checks.append(
            Check(
                f"shifted:hooks:shifted:{label}",
                "shifted-hook-product-q-count",
                _check_hooks(lam, shifted=True),
            )
        )
    return checks


def _check_minuscule_structure(name: str, ideals: int) -> Callable[[], tuple[bool, object, object]]:
    def run() -> tuple[bool, object, object]:
        poset = build_minuscule(name)
        rd = rank_data(poset)
        sizes = [rd.ranks.count(r) for r in range(rd.rank + 1)]
        num = 1
        den = 1
        for r in rd.ranks:
            num *= r + 2
            den *= r + 1
        ok = (
            len(order_ideals(poset)) == ideals
            and is_self_dual(poset)
            and sizes == sizes[::-1]
            and num % den == 0
            and num // den == ideals
        )
        return ok, len(order_ideals(poset)), ideals

    return run


def _check_minuscule_gf(poset: Poset, m: int) -> Callable[[], tuple[bool, object, object]]:
    def run() -> tuple[bool, object, object]:
        return _eq(minuscule_gf(poset, m), rpp_size_gf(poset, m))

    return run


def _suite_minuscule(args: argparse.Namespace) -> list[Check]:
    max_m = _cap(args.max_m, 3)
    checks = [
        Check("minuscule:structure:E6", "rank-product-ideal-count", _check_minuscule_structure("E6", 27)),
        Check("minuscule:structure:E7", "rank-product-ideal-count", _check_minuscule_structure("E7", 56)),
    ]
    members = [
        ("minuscule:E6", build_minuscule("E6")),
        ("minuscule:E7", build_minuscule("E7")),
        ("minuscule:propeller:2", build_propeller(2)),
        ("minuscule:propeller:3", build_propeller(3)),
        ("rect:2x2", build_rectangle(2, 2)),
        ("rect:2x3", build_rectangle(2, 3)),
        ("shifted:2,1", _staircase(2)),
        ("shifted:3,2,1", _staircase(3)),
    ]
    for label, poset in members:
        for m in range(1, max_m + 1):
            checks.append(
                Check(
                    f"minuscule:gf:{label}:m{m}",
                    "rank-product-bounded-count",
                    _check_minuscule_gf(poset, m),
                )
            )
    return checks


def _check_rbmotz_count(length: int) -> Callable[[], tuple[bool, object, object]]:
    def run() -> tuple[bool, object, object]:
        count = sum(1 for _ in enumerate_rbmotz(length))
        return _eq(count, catalan_number(length - 1))

    return run


def _check_bool(fn: Callable[[int], bool], value: int) -> Callable[[], tuple[bool, object, object]]:
    def run() -> tuple[bool, object, object]:
        return fn(value), None, None

    return run


def _suite_paths(args: argparse.Namespace) -> list[Check]:
    max_l = _cap(args.max_l, 10)
    max_b = _cap(args.max_b, 5)
    checks = [
        Check(f"paths:rbmotz-count:l{length}", "path-count-catalan", _check_rbmotz_count(length))
        for length in range(2, max_l + 1)
    ]
    checks += [
        Check(f"paths:gen-fun:b{b}", "colored-path-generating-function", _check_bool(verify_cor_dyck_gen_fun, b))
        for b in range(1, max_b + 1)
    ]
    checks += [
        Check(f"paths:catalan-sum:l{length}", "tableau-count-catalan-sum", _check_bool(catalan_sum_check, length))
        for length in range(2, min(max_l, 8) + 1)
    ]
    checks += [
        Check(f"paths:narayana:l{length}", "tableau-count-narayana-rows", _check_bool(narayana_check, length))
        for length in range(2, min(max_l, 8) + 1)
    ]
    return checks


def _check_bijection(poset: Poset) -> Callable[[], tuple[bool, object, object]]:
    def run() -> tuple[bool, object, object]:
        n = poset.n
        extensions = list(enumerate_linear_extensions(poset))
        q = QPoly.monomial(1, 1)
        for p in range(n):
            out_pairs = []
            in_pairs = []
            for ext in extensions:
                for y in range(n + 1):
                    mask = ext.prefix_ideal(y)
                    if tout(poset, p, mask):
                        out_pairs.append((ext, y))
                    if tin(poset, p, mask):
                        in_pairs.append((ext, y))
            images = []
            for ext, y in out_pairs:
                image, y2 = toggle_bijection(p, ext, y)
                if not tin(poset, p, image.prefix_ideal(y2)):
                    return False, f"p={p}: image pair is not in-togglable", None
                if theta(ext, y) * q != theta(image, y2):
                    return False, f"p={p}: weight law broken", None
                if len(descents(ext) - {y}) != len(descents(image) - {y2}):
                    return False, f"p={p}: descent count changed", None
                if inverse_toggle_bijection(p, image, y2) != (ext, y):
                    return False, f"p={p}: inverse does not roundtrip", None
                images.append((image, y2))
            if len(set(images)) != len(out_pairs) or set(images) != set(in_pairs):
                return False, f"p={p}: images do not match the in-togglable pairs", None
            lhs = sum((theta(ext, y) * q for ext, y in out_pairs), QPoly.of([]))
            rhs = sum((theta(ext, y) for ext, y in in_pairs), QPoly.of([]))
            if lhs != rhs:
                return False, lhs, rhs
            if expectation(ensemble_lin(poset), statistic_toggle(poset, p)) != RatFunc.from_int(0):
                return False, f"p={p}: extension-weight toggle expectation is nonzero", None
        return True, None, None

    return run


def _suite_appendix(args: argparse.Namespace) -> list[Check]:
    return [
        Check(f"appendix:bijection:{label}", "toggle-pairing-exhaustive", _check_bijection(poset))
        for label, poset in _labeled_corpus(_cap(args.max_boxes, 7))
    ]


def _check_shape_solve(lam: tuple[int, ...]) -> Callable[[], tuple[bool, object, object]]:
    def run() -> tuple[bool, object, object]:
        poset = build_shape(lam)
        result = toggle_solve(poset, statistic_ddeg(poset))
        is_rectangle = len(set(lam)) == 1
        if result.consistent != is_rectangle:
            return False, result.consistent, is_rectangle
        if is_rectangle:
            a, b = len(lam), lam[0]
            return _eq(result.constant, RatFunc(qnum(a) * qnum(b), qnum(a + b)))
        return result.witness_mask in order_ideals(poset), result.witness_mask, None

    return run


def _check_refinements(poset: Poset) -> Callable[[], tuple[bool, object, object]]:
    def run() -> tuple[bool, object, object]:
        reports = verify_refinements(poset)
        bad = [report for report in reports if not report.ok]
        if bad:
            return False, [report.label for report in bad], [_vec(report.expected) for report in bad]
        return True, None, None

    return run


def _check_staircase_solve(k: int) -> Callable[[], tuple[bool, object, object]]:
    def run() -> tuple[bool, object, object]:
        poset = _staircase(k)
        result = toggle_solve(poset, statistic_ddeg(poset))
        if not result.consistent:
            return False, "inconsistent", None
        return _eq(result.constant, RatFunc(qbinom(k + 1, 2), qnum(2 * k)))

    return run


def _check_rank_constant(poset: Poset) -> Callable[[], tuple[bool, object, object]]:
    def run() -> tuple[bool, object, object]:
        rd = rank_data(poset)
        coeffs = [0] * (rd.rank + 1)
        for r in rd.ranks:
            coeffs[r] += 1
        expected = RatFunc(QPoly.of(coeffs), qnum(rd.rank + 2))
        result = toggle_solve(poset, statistic_ddeg(poset))
        if not result.consistent:
            return False, "inconsistent", _vec(expected)
        return _eq(result.constant, expected)

    return run


def _check_hook_at_one() -> tuple[bool, object, object]:
    poset = build_shape((2, 1))
    generic = toggle_solve(poset, statistic_ddeg(poset))
    if generic.consistent:
        return False, "consistent at generic q", None
    at_one = toggle_solve(poset, statistic_ddeg(poset), q_value=1)
    if not at_one.consistent:
        return False, "inconsistent at q=1", None
    return _eq(at_one.constant, RatFunc.from_int(1))


def _suite_solver(args: argparse.Namespace) -> list[Check]:
    checks = [
        Check(f"solver:generic:{_shape_label(lam)}", "rectangularity-decides-consistency", _check_shape_solve(lam))
        for lam in _partitions(_cap(args.max_boxes, 9))
    ]
    for a in range(1, 4):
        for b in range(a, 4):
            checks.append(
                Check(
                    f"solver:rows:rect:{a}x{b}",
                    "row-refined-constants",
                    _check_refinements(build_rectangle(a, b)),
                )
            )
    for k in (2, 3):
        checks.append(
            Check(f"solver:staircase:k{k}", "staircase-constant", _check_staircase_solve(k))
        )
        checks.append(
            Check(
                f"solver:diagonal:k{k}",
                "diagonal-refined-constants",
                _check_refinements(_staircase(k)),
            )
        )
    for label, poset in [
        ("minuscule:propeller:2", build_propeller(2)),
        ("minuscule:propeller:3", build_propeller(3)),
        ("minuscule:E6", build_minuscule("E6")),
    ]:
        checks.append(
            Check(f"solver:rank-constant:{label}", "rank-polynomial-constant", _check_rank_constant(poset))
        )
    checks.append(Check("solver:q1:shape:2,1", "hook-shape-at-one", _check_hook_at_one))
    return checks


SUITES: dict[str, Callable[[argparse.Namespace], list[Check]]] = {
    "thm-syt": _suite_thm_syt,
    "thm-pp": _suite_thm_pp,
    "toggle-symmetry": _suite_toggle_symmetry,
    "m-weight": _suite_m_weight,
    "shifted": _suite_shifted,
    "minuscule": _suite_minuscule,
    "paths": _suite_paths,
    "appendix": _suite_appendix,
    "solver": _suite_solver,
}


# ---------------------------------------------------------------------------
# commands


def cmd_gf(args: argparse.Namespace) -> int:
    poset = parse_poset_spec(args.spec)
    if args.m is not None and args.kind not in ("rpp", "bsv-rpp"):
        raise UsageError(f"--m does not apply to kind {args.kind!r}")
    if args.m is not None and args.m < 0:
        raise UsageError("--m must be nonnegative")
    if args.refined and args.kind not in ("bsv-comaj", "bsv-rpp"):
        raise UsageError(f"--refined does not apply to kind {args.kind!r}")

    poly: QPoly | QTPoly
    if args.kind == "comaj":
        poly = gf_comaj(poset)
    elif args.kind == "bsv-comaj":
        full = gf_bsv(poset, refined=args.refined)
        poly = full if args.refined else full.at_t1()
    elif args.kind == "rpp":
        if args.m is None:
            poly = rpp_size_series(poset, _degree_cap(args))
        else:
            poly = rpp_size_gf(poset, args.m)
    else:
        if args.m is None:
            raise UsageError("kind bsv-rpp requires --m")
        full = gf_bsv_rpp(poset, args.m, refined=args.refined)
        poly = full if args.refined else full.at_t1()

    if isinstance(poly, QTPoly):
        text = format_qt_poly(poly)
        coeffs: object = qt_coeff_vector(poly)
    else:
        text = format_poly(poly)
        coeffs = coeff_vector(poly)
    if args.json:
        print(json.dumps({"report_version": REPORT_VERSION, "poly": text, "coefficients": coeffs}))
    else:
        print(text)
        print(f"coefficients: {coeffs}")
    return 0


def _degree_cap(args: argparse.Namespace) -> int:
    if args.degree_cap is not None:
        return args.degree_cap
    env = os.environ.get("QTAB_DEGREE_CAP")
    if env is not None:
        try:
            return int(env)
        except ValueError as exc:
            raise UsageError(f"QTAB_DEGREE_CAP must be an integer, got {env!r}") from exc
    return DEFAULT_DEGREE_CAP


def cmd_verify(args: argparse.Namespace) -> int:
    suite_names = list(SUITE_NAMES) if args.suite == "all" else [args.suite]
    checks: list[Check] = []
    for name in suite_names:
        checks.extend(SUITES[name](args))
    records = _run_checks(checks, args.jobs)
    ok = all(record.ok for record in records)
    if args.json:
        payload = {
            "report_version": REPORT_VERSION,
            "suite": args.suite,
            "ok": ok,
            "checks": [
                {
                    "id": record.id,
                    "anchor": record.anchor,
                    "status": "pass" if record.ok else "fail",
                    "seconds": round(record.seconds, 4),
                    **({} if record.ok else {"lhs": _vec(record.lhs), "rhs": _vec(record.rhs)}),
                }
                for record in records
            ],
        }
        print(json.dumps(payload, indent=2))
    else:
        for record in records:
            print(f"{'PASS' if record.ok else 'FAIL'} {record.id} ({record.seconds:.2f}s)")
            if not record.ok:
                print(f"  lhs: {_vec(record.lhs)}")
                print(f"  rhs: {_vec(record.rhs)}")
        passed = sum(1 for record in records if record.ok)
        total = sum(record.seconds for record in records)
        print(
            f"{'PASS' if ok else 'FAIL'} suite {args.suite}: "
            f"{passed}/{len(records)} checks passed in {total:.2f}s"
        )
    return 0 if ok else 1


def _parse_statistic(poset: Poset, name: str) -> Statistic:
    if name == "ddeg":
        return statistic_ddeg(poset)
    if name == "diag":
        return statistic_diagonal(poset, True)
    if name.startswith("row:"):
        try:
            row = int(name[4:])
        except ValueError as exc:
            raise UsageError(f"bad row statistic {name!r}") from exc
        try:
            return statistic_row(poset, row)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
    raise UsageError(f"unknown statistic {name!r}; use ddeg, row:i, or diag")


def cmd_solve(args: argparse.Namespace) -> int:
    poset = parse_poset_spec(args.spec)
    statistic = _parse_statistic(poset, args.statistic)
    result = toggle_solve(poset, statistic)
    if args.json:
        payload = {
            "report_version": REPORT_VERSION,
            "consistent": result.consistent,
            "c": None if result.constant is None else _vec(result.constant),
            "witness_mask": result.witness_mask,
        }
        print(json.dumps(payload))
    else:
        print(f"consistent: {'yes' if result.consistent else 'no'}")
        if result.consistent:
            print(f"c = ({format_poly(result.constant.num)}) / ({format_poly(result.constant.den)})")
        else:
            members = ideal_members(result.witness_mask)
            shown = "{" + ", ".join(str(e) for e in members) + "}"
            print(f"witness ideal mask: {result.witness_mask} (elements {shown})")
    if args.expect_consistent and not result.consistent:
        return 1
    return 0


def cmd_bijection_trace(args: argparse.Namespace) -> int:
    poset = parse_poset_spec(args.spec)
    try:
        ext = parse_tableau(args.tableau.replace("/", "\n"), poset)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    try:
        if args.inverse:
            image, y2 = inverse_toggle_bijection(args.p, ext, args.y)
            print(f"inverse image: y = {y2}")
        else:
            label, dec = classify(ext, args.p, args.y)
            image = escalate(ext, dec.x, dec.z)
            y2 = dec.y_prime
            blocks = " ".join(f"{kind}[{lo},{hi}]" for kind, lo, hi in dec.blocks)
            print(f"case: {label.left}/{label.right}")
            print(f"x = {dec.x}  y = {dec.y}")
            print(f"blocks: {blocks}")
            parts = [f"f = {dec.f}"]
            for name in ("e", "g", "h"):
                value = getattr(dec, name)
                if value is not None:
                    parts.append(f"{name} = {value}")
            print("  ".join(parts))
            print(f"y' = {dec.y_prime}  z = {dec.z}")
    except (PNotTogglableOut, PNotTogglableIn, ValueError) as exc:
        raise UsageError(str(exc)) from exc
    print("before:")
    print(format_tableau(ext))
    print("after:")
    print(format_tableau(image))
    before = theta(ext, args.y)
    after = theta(image, y2)
    print(f"theta: {format_poly(before)} -> {format_poly(after)}")
    return 0


# ---------------------------------------------------------------------------
# parser


def _add_verify_caps(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--max-a", type=int, default=None, help="cap on the first rectangle side")
    parser.add_argument("--max-b", type=int, default=None, help="cap on the second rectangle side")
    parser.add_argument("--max-m", type=int, default=None, help="cap on the filling bound m")
    parser.add_argument("--max-boxes", type=int, default=None, help="cap on poset size")
    parser.add_argument("--max-l", type=int, default=None, help="cap on path length")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qtab",
        description="Exact q-enumeration of tableaux, order ideals, and toggle statistics.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gf = sub.add_parser("gf", help="print a generating function")
    gf.add_argument("spec", help="poset spec, e.g. rect:2x3, shape:3,1, shifted:3,2,1, minuscule:E6, or a JSON file")
    gf.add_argument("kind", choices=GF_KINDS, help="which generating function")
    gf.add_argument("--m", type=int, default=None, help="filling bound (rpp and bsv-rpp)")
    gf.add_argument("--refined", action="store_true", help="keep the row-marking variable t")
    gf.add_argument("--degree-cap", type=int, default=None, help="truncation degree for unbounded series")
    gf.add_argument("--json", action="store_true", help="machine-readable output")
    gf.set_defaults(func=cmd_gf)

    verify = sub.add_parser("verify", help="run a verification suite")
    verify.add_argument("suite", choices=SUITE_NAMES + ("all",), help="which suite")
    verify.add_argument("--json", action="store_true", help="machine-readable report")
    verify.add_argument("--jobs", type=int, default=1, help="checks run in parallel")
    _add_verify_caps(verify)
    verify.set_defaults(func=cmd_verify)

    solve = sub.add_parser("solve", help="solve the toggle-constant system")
    solve.add_argument("spec", help="poset spec")
    solve.add_argument("statistic", help="ddeg, row:i, or diag")
    solve.add_argument("--expect-consistent", action="store_true", help="exit 1 when inconsistent")
    solve.add_argument("--json", action="store_true", help="machine-readable output")
    solve.set_defaults(func=cmd_solve)

    bijection = sub.add_parser("bijection", help="toggle pairing tools")
    bij_sub = bijection.add_subparsers(dest="bijection_command", required=True)
    trace = bij_sub.add_parser("trace", help="trace one application of the pairing")
    trace.add_argument("spec", help="poset spec with box coordinates")
    trace.add_argument("--tableau", required=True, help="rows separated by '/', cells by ','")
    trace.add_argument("--p", type=int, required=True, help="element index")
    trace.add_argument("--y", type=int, required=True, help="prefix length")
    trace.add_argument("--inverse", action="store_true", help="apply the inverse pairing")
    trace.set_defaults(func=cmd_bijection_trace)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except PosetSpecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (UnsupportedRefinement, UnsupportedPoset) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
