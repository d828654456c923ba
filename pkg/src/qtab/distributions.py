"""Exact q-weighted distributions on the order ideals of a poset, toggle
statistics, and the weight functions behind them.

A distribution is stored as a ``WeightedEnsemble``: one polynomial weight per
order ideal plus a polynomial normalizer equal to their sum, so every
probability is an exact rational function.  The toggle statistic at p is
``tin - q * tout`` where tin marks ideals to which p can be added and tout
marks ideals from which p can be removed; a distribution is toggle-symmetric
when this statistic has expectation zero at every element.

Four families are provided: the corank weighting, the level-ideal weighting
of bounded fillings (computable two independent ways), the prefix weighting
of linear extensions, and the rank-chain weighting of a graded poset.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Iterable, Mapping

from .extensions import (
    LinearExtension,
    comaj_at,
    descents,
    enumerate_linear_extensions,
    gf_comaj,
)
from .posets import Poset, order_ideals, rank_data
from .ppartitions import Rpp, enumerate_rpp, ideal_at_level, rpp_size_gf
from .qpoly import (
    QLaurent,
    QPoly,
    RatFunc,
    qbinom,
    qnum,
)


class PosetMismatch(Exception):
    """An ensemble and a statistic over different posets were combined."""


# ---------------------------------------------------------------------------
# toggles


def tin(poset: Poset, p: int, mask: int) -> int:
    """1 when p can be toggled into the ideal: p absent, lower covers present."""
    if mask >> p & 1:
        return 0
    return int(poset.low_masks[p] & mask == poset.low_masks[p])


def tout(poset: Poset, p: int, mask: int) -> int:
    """1 when p can be toggled out of the ideal: p present and maximal."""
    if not mask >> p & 1:
        return 0
    return int(not poset.up_masks[p] & mask)


def toggle_statistic_value(poset: Poset, p: int, mask: int) -> QPoly:
    """The signed toggle statistic tin - q * tout at one ideal."""
    return QPoly.of([tin(poset, p, mask), -tout(poset, p, mask)])


def ddeg(poset: Poset, mask: int) -> int:
    """Number of maximal elements of the ideal (its down-degree in J(P))."""
    return sum(tout(poset, p, mask) for p in range(poset.n))


# ---------------------------------------------------------------------------
# ensembles and statistics


@dataclass(frozen=True)
class WeightedEnsemble:
    """Polynomial ideal weights summing to a polynomial normalizer."""

    poset: Poset
    weights: tuple[tuple[int, QPoly], ...]
    normalizer: QPoly
    label: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        masks = tuple(mask for mask, _ in self.weights)
        if masks != order_ideals(self.poset):
            raise ValueError("weights must cover exactly the order ideals")
        for mask, weight in self.weights:
            if any(c < 0 for c in weight.coeffs):
                raise ValueError(f"negative weight at ideal {mask:#x}")
        total = sum((weight for _, weight in self.weights), QPoly.of([]))
        if total != self.normalizer:
            raise ValueError("weights do not sum to the normalizer")
        if not self.normalizer:
            raise ValueError("normalizer must be nonzero")

    @classmethod
    def from_weights(
        cls,
        poset: Poset,
        weights: Mapping[int, QPoly],
        normalizer: QPoly,
        label: str = "",
    ) -> "WeightedEnsemble":
        ordered = tuple(
            (mask, weights.get(mask, QPoly.of([]))) for mask in order_ideals(poset)
        )
        return cls(poset, ordered, normalizer, label)

    @cached_property
    def _by_mask(self) -> dict[int, QPoly]:
        return dict(self.weights)

    def weight(self, mask: int) -> QPoly:
        return self._by_mask[mask]

    def probability(self, mask: int) -> RatFunc:
        return RatFunc(self.weight(mask), self.normalizer)


@dataclass(frozen=True, eq=False)
class Statistic:
    """An exact polynomial-valued function of the order ideals."""

    poset: Poset
    values: Mapping[int, QPoly]
    label: str = ""

    @classmethod
    def from_function(
        cls, poset: Poset, fn: Callable[[int], QPoly | int], label: str = ""
    ) -> "Statistic":
        values = {}
        for mask in order_ideals(poset):
            value = fn(mask)
            values[mask] = value if isinstance(value, QPoly) else QPoly.of([value])
        return cls(poset, values, label)


def statistic_ddeg(poset: Poset) -> Statistic:
    return Statistic.from_function(poset, lambda mask: ddeg(poset, mask), "ddeg")


def statistic_toggle(poset: Poset, p: int) -> Statistic:
    return Statistic.from_function(
        poset, lambda mask: toggle_statistic_value(poset, p, mask), f"toggle:{p}"
    )


def expectation(ensemble: WeightedEnsemble, statistic: Statistic) -> RatFunc:
    """Exact expected value of the statistic under the ensemble."""
    if ensemble.poset != statistic.poset:
        raise PosetMismatch("ensemble and statistic posets differ")
    numerator = QPoly.of([])
    for mask, weight in ensemble.weights:
        numerator = numerator + weight * statistic.values[mask]
    return RatFunc(numerator, ensemble.normalizer)


def check_toggle_symmetry(ensemble: WeightedEnsemble) -> bool:
    """Whether every toggle statistic has expectation zero."""
    return all(
        expectation(ensemble, statistic_toggle(ensemble.poset, p)) == 0
        for p in range(ensemble.poset.n)
    )


# ---------------------------------------------------------------------------
# weight functions on linear extensions


def theta(ext: LinearExtension, i: int) -> QPoly:
    """q^(comaj(T, i) + #{descents below i}); summing over i gives
    [n+1] * q^comaj(T)."""
    offset = sum(1 for j in descents(ext) if j < i)
    return QPoly.monomial(1, comaj_at(ext, i) + offset)


def theta_m(ext: LinearExtension, i: int, m: int) -> QPoly:
    """theta(T, i) times the bounded-filling multiplicity
    qbinom(m + n - #(Des \\ {i}), n + 1)."""
    n = ext.poset.n
    others = len(descents(ext) - {i})
    return theta(ext, i) * qbinom(m + n - others, n + 1)


def theta_star(ext: LinearExtension, i: int) -> QLaurent:
    """The dual weight q^(-i) * prod q^(-j) [j in Des, j < i]
    * prod q^(-j-1) [j in Des, j > i]; summing over i gives
    [n+1] at 1/q times q^(-maj(T))."""
    des = descents(ext)
    shift = -i - sum(j for j in des if j < i) - sum(j + 1 for j in des if j > i)
    return QLaurent.of(shift, QPoly.of([1]))


# ---------------------------------------------------------------------------
# the four ensemble families


def ensemble_uniform(poset: Poset) -> WeightedEnsemble:
    """Weight q^(size of complement); the bounded-filling weighting at m=1."""
    n = poset.n
    weights = {
        mask: QPoly.monomial(1, n - mask.bit_count()) for mask in order_ideals(poset)
    }
    return WeightedEnsemble.from_weights(
        poset, weights, rpp_size_gf(poset, 1), "uniform"
    )


def ensemble_rpp(poset: Poset, m: int, mode: str = "direct") -> WeightedEnsemble:
    """Weight of I: sum of q^(size + k) over fillings whose level-k ideal is I.

    ``mode="direct"`` enumerates bounded fillings; ``mode="via_theta_m"``
    assembles the same weights from prefix ideals of linear extensions
    carrying theta_m, providing an independent route to the distribution.
    """
    if m < 1:
        raise ValueError("level bound must be at least 1")
    acc: dict[int, QPoly] = {}
    if mode == "direct":
        for rpp in enumerate_rpp(poset, m):
            for k in range(m):
                mask = ideal_at_level(rpp, k)
                term = QPoly.monomial(1, rpp.size + k)
                acc[mask] = acc.get(mask, QPoly.of([])) + term
    elif mode == "via_theta_m":
        for ext in enumerate_linear_extensions(poset):
            mask = 0
            for i in range(poset.n + 1):
                if i:
                    mask |= 1 << ext.positions[i - 1]
                weight = theta_m(ext, i, m)
                if weight:
                    acc[mask] = acc.get(mask, QPoly.of([])) + weight
    else:
        raise ValueError(f"unknown mode {mode!r}")
    normalizer = qnum(m) * rpp_size_gf(poset, m)
    return WeightedEnsemble.from_weights(poset, acc, normalizer, f"rpp:m={m}")


def ensemble_lin(poset: Poset) -> WeightedEnsemble:
    """Weight of I: sum of theta(T, |I|) over extensions whose prefix is I."""
    acc: dict[int, QPoly] = {}
    for ext in enumerate_linear_extensions(poset):
        mask = 0
        for i in range(poset.n + 1):
            if i:
                mask |= 1 << ext.positions[i - 1]
            acc[mask] = acc.get(mask, QPoly.of([])) + theta(ext, i)
    normalizer = qnum(poset.n + 1) * gf_comaj(poset)
    return WeightedEnsemble.from_weights(poset, acc, normalizer, "lin")


def ensemble_rank(poset: Poset) -> WeightedEnsemble:
    """Rank-chain weighting of a graded poset: the empty ideal and the rank
    levels carry q^(rank+1), q^rank, ..., q, 1; other ideals weight zero."""
    data = rank_data(poset)
    top = data.rank
    weights: dict[int, QPoly] = {0: QPoly.monomial(1, top + 1)}
    mask = 0
    for level in range(top + 1):
        mask |= sum(1 << e for e, r in enumerate(data.ranks) if r == level)
        weights[mask] = QPoly.monomial(1, top - level)
    return WeightedEnsemble.from_weights(
        poset, weights, qnum(top + 2), "rank-chain"
    )


# ---------------------------------------------------------------------------
# the toggle-pairing involution on bounded fillings


def involution_rpp(rpp: Rpp, k: int, p: int) -> tuple[Rpp, int]:
    """Pair (filling, level) instances of tin at p with instances of tout.

    Writing x for the largest entry below p (0 with no lower covers) and y
    for the smallest entry above p (the bound m with no upper covers):
    pairs with k < x or k >= y are fixed; x <= k < entry(p) moves the entry
    down to k and the level to entry(p) - 1, and entry(p) <= k < y moves the
    entry up to k + 1 and the level to entry(p), shifting size + level by -1
    and +1 respectively.
    """
    poset = rpp.poset
    if not 0 <= k < rpp.m:
        raise ValueError(f"level {k} out of 0..{rpp.m - 1}")
    if not 0 <= p < poset.n:
        raise ValueError(f"element {p} out of range")
    x = max((rpp.entries[c] for c in poset.lower_covers[p]), default=0)
    y = min((rpp.entries[c] for c in poset.upper_covers[p]), default=rpp.m)
    v = rpp.entries[p]
    if k < x or k >= y:
        return rpp, k
    entries = list(rpp.entries)
    if k < v:
        entries[p] = k
        return Rpp(poset, rpp.m, tuple(entries)), v - 1
    entries[p] = k + 1
    return Rpp(poset, rpp.m, tuple(entries)), v
