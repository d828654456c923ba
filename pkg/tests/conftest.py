"""Shared strategies and small-poset corpora for the test suite."""

from __future__ import annotations

from hypothesis import strategies as st

from qtab.posets import Poset, build_propeller, build_rectangle, build_shape, build_shifted


def all_partitions(max_boxes: int, min_boxes: int = 1) -> list[tuple[int, ...]]:
    """Every partition with min_boxes..max_boxes boxes, largest part first."""
    out: list[tuple[int, ...]] = []

    def rec(remaining: int, cap: int, prefix: tuple[int, ...]) -> None:
        if prefix and min_boxes <= sum(prefix):
            out.append(prefix)
        for part in range(1, min(cap, remaining) + 1):
            rec(remaining - part, part, prefix + (part,))

    rec(max_boxes, max_boxes, ())
    return sorted(set(out))


def strict_partitions(max_boxes: int, min_boxes: int = 1) -> list[tuple[int, ...]]:
    """Every strictly decreasing partition with min_boxes..max_boxes boxes."""
    out: list[tuple[int, ...]] = []

    def rec(remaining: int, cap: int, prefix: tuple[int, ...]) -> None:
        if prefix and min_boxes <= sum(prefix):
            out.append(prefix)
        for part in range(1, min(cap, remaining) + 1):
            rec(remaining - part, part - 1, prefix + (part,))

    rec(max_boxes, max_boxes, ())
    return sorted(set(out))


def partition_strategy(max_boxes: int = 8) -> st.SearchStrategy[tuple[int, ...]]:
    return st.sampled_from(all_partitions(max_boxes))


def strict_partition_strategy(max_boxes: int = 8) -> st.SearchStrategy[tuple[int, ...]]:
    return st.sampled_from(strict_partitions(max_boxes))


def small_poset_corpus(max_shape_boxes: int = 7) -> list[Poset]:
    """Shapes up to max_shape_boxes boxes, small staircases, small propellers."""
    posets = [build_shape(lam) for lam in all_partitions(max_shape_boxes)]
    posets.append(build_shifted((2, 1)))
    posets.append(build_shifted((3, 2, 1)))
    posets.append(build_propeller(2))
    posets.append(build_propeller(3))
    return posets


def small_shape_corpus(max_boxes: int = 7) -> list[Poset]:
    posets = [build_shape(lam) for lam in all_partitions(max_boxes)]
    posets.append(build_shifted((2, 1)))
    posets.append(build_shifted((3, 2, 1)))
    return posets


def rectangle_corpus(max_side: int = 3) -> list[Poset]:
    return [
        build_rectangle(a, b)
        for a in range(1, max_side + 1)
        for b in range(a, max_side + 1)
    ]
