"""Linear extensions of a naturally labeled poset, their barely set-valued
relatives, and descent generating functions.

A linear extension assigns the values ``1..n`` to the elements so that values
increase upward; ``values[e]`` is the value of element ``e``.  Its word is
``w_1 .. w_n`` where ``w_k`` is the label (element index plus one) of the
element holding value ``k``; enumeration is in ascending lexicographic order
of this word.  A descent is a position ``k`` with ``w_k > w_(k+1)``.

A barely set-valued extension assigns disjoint nonempty sets partitioning
``1..n+1``, increasing along covers, with exactly one doubleton cell.  Its
descents are read off the filling the same way -- the position of value ``u``
against that of ``u+1`` -- except that ``i* - 1`` never counts and ``i*``
always counts, where ``i*`` is the larger entry of the doubleton.

Tableau text format (for posets with box coordinates): one line per row,
entries comma-separated, a doubled cell written ``a|b`` -- e.g. ``"1,3\\n2,4|5"``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Sequence

from .posets import Poset
from .qpoly import QPoly, QTPoly, qfact, qnum


class InvalidTriple(Exception):
    """A (T, i, p) triple that does not define a barely set-valued filling."""


class UnsupportedRefinement(Exception):
    """A row/diagonal refinement was requested on a poset without coordinates."""


@dataclass(frozen=True)
class LinearExtension:
    """A linear extension; ``values[e]`` is the value (1..n) of element e."""

    poset: Poset
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        n = self.poset.n
        if sorted(self.values) != list(range(1, n + 1)):
            raise ValueError("values must be a bijection onto 1..n")
        for lo, hi in self.poset.covers:
            if self.values[lo] > self.values[hi]:
                raise ValueError(f"values decrease along cover ({lo}, {hi})")

    @cached_property
    def positions(self) -> tuple[int, ...]:
        """``positions[k]`` is the element holding value k+1."""
        out = [0] * self.poset.n
        for e, v in enumerate(self.values):
            out[v - 1] = e
        return tuple(out)

    def word(self) -> tuple[int, ...]:
        """The label word w_1 .. w_n."""
        return tuple(e + 1 for e in self.positions)

    def prefix_ideal(self, i: int) -> int:
        """Mask of the elements holding values 1..i."""
        mask = 0
        for e in self.positions[:i]:
            mask |= 1 << e
        return mask


def _extension_positions(poset: Poset) -> Iterator[tuple[int, ...]]:
    """Positions arrays of all linear extensions, in lex word order."""
    n = poset.n
    indegree = [len(poset.lower_covers[e]) for e in range(n)]
    placed = [False] * n
    prefix: list[int] = []

    def rec() -> Iterator[tuple[int, ...]]:
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for e in range(n):
            if not placed[e] and indegree[e] == 0:
                placed[e] = True
                for u in poset.upper_covers[e]:
                    indegree[u] -= 1
                prefix.append(e)
                yield from rec()
                prefix.pop()
                for u in poset.upper_covers[e]:
                    indegree[u] += 1
                placed[e] = False

    return rec()


def _from_positions(poset: Poset, pos: Sequence[int]) -> LinearExtension:
    values = [0] * poset.n
    for k, e in enumerate(pos):
        values[e] = k + 1
    return LinearExtension(poset, tuple(values))


def enumerate_linear_extensions(poset: Poset) -> Iterator[LinearExtension]:
    """All linear extensions in ascending lexicographic word order."""
    for pos in _extension_positions(poset):
        yield _from_positions(poset, pos)


def descents(ext: LinearExtension) -> frozenset[int]:
    """Positions k with w_k > w_(k+1)."""
    pos = ext.positions
    return frozenset(k for k in range(1, ext.poset.n) if pos[k - 1] > pos[k])


def maj(ext: LinearExtension) -> int:
    return sum(descents(ext))


def comaj(ext: LinearExtension) -> int:
    n = ext.poset.n
    return sum(n - k for k in descents(ext))


def comaj_at(ext: LinearExtension, i: int) -> int:
    """comaj over the descents with position i adjoined (0 <= i <= n)."""
    n = ext.poset.n
    if not 0 <= i <= n:
        raise ValueError(f"descent position {i} out of range")
    return sum(n - k for k in descents(ext) | {i})


def gf_comaj(poset: Poset) -> QPoly:
    """Generating function of comaj over all linear extensions."""
    n = poset.n
    acc: dict[int, int] = {}
    for pos in _extension_positions(poset):
        c = sum(n - k for k in range(1, n) if pos[k - 1] > pos[k])
        acc[c] = acc.get(c, 0) + 1
    return QPoly.of(acc.get(e, 0) for e in range(max(acc) + 1)) if acc else QPoly.of([])


def gf_comaj_hook_formula(partition: Sequence[int], shifted: bool = False) -> QPoly:
    """The q-hook-length product [n]! / prod [h(u)] for a (shifted) shape."""
    from .posets import hook_lengths, shifted_hook_lengths

    hooks = (shifted_hook_lengths if shifted else hook_lengths)(partition)
    n = len(hooks)
    denominator = QPoly.of([1])
    for h in hooks.values():
        denominator = denominator * qnum(h)
    return qfact(n).exact_div(denominator)


def f_x_permutation(n: int, xset: Sequence[int]) -> tuple[int, ...]:
    """The permutation i -> #{j in X : j < i} + (n - i if i not in X else 0).

    Defined on 0..n; for any X within 1..n it is a bijection onto 0..n, and
    for X = Des(T) it gives the exponent offsets comaj(T, i) + #{j in X, j < i}
    minus comaj(T).
    """
    xs = set(xset)
    if not all(1 <= x <= n for x in xs):
        raise ValueError("X must lie within 1..n")
    return tuple(
        sum(1 for j in xs if j < i) + (0 if i in xs else n - i) for i in range(n + 1)
    )


# ---------------------------------------------------------------------------
# barely set-valued linear extensions


@dataclass(frozen=True)
class BsvLinearExtension:
    """Barely set-valued extension: per-element sorted value tuples."""

    poset: Poset
    entries: tuple[tuple[int, ...], ...]
    p_star: int
    i_star: int

    def __post_init__(self) -> None:
        n = self.poset.n
        flat = sorted(v for cell in self.entries for v in cell)
        if flat != list(range(1, n + 2)):
            raise ValueError("entries must partition 1..n+1")
        doubles = [e for e, cell in enumerate(self.entries) if len(cell) == 2]
        if doubles != [self.p_star]:
            raise ValueError("exactly the doubled cell must be p_star")
        if max(self.entries[self.p_star]) != self.i_star:
            raise ValueError("i_star must be the larger doubleton entry")
        for lo, hi in self.poset.covers:
            if max(self.entries[lo]) > min(self.entries[hi]):
                raise ValueError(f"entries decrease along cover ({lo}, {hi})")


def bsv_from_triple(ext: LinearExtension, i: int, p: int) -> BsvLinearExtension:
    """Insert value i+1 into the cell of p; p must be maximal among values <= i."""
    poset = ext.poset
    n = poset.n
    if not 0 <= i <= n:
        raise InvalidTriple(f"index {i} out of 0..{n}")
    if not 0 <= p < n:
        raise InvalidTriple(f"element {p} out of range")
    if ext.values[p] > i:
        raise InvalidTriple(f"element {p} is outside the first {i} values")
    for u in poset.upper_covers[p]:
        if ext.values[u] <= i:
            raise InvalidTriple(f"element {p} is not maximal among the first {i}")
    entries = []
    for e, v in enumerate(ext.values):
        if e == p:
            entries.append((v, i + 1))
        else:
            entries.append((v,) if v <= i else (v + 1,))
    return BsvLinearExtension(poset, tuple(entries), p, i + 1)


def triple_from_bsv(bsv: BsvLinearExtension) -> tuple[LinearExtension, int, int]:
    """Inverse of ``bsv_from_triple``."""
    i_star = bsv.i_star
    values = []
    for e, cell in enumerate(bsv.entries):
        v = min(cell)
        values.append(v if v < i_star else v - 1)
    return _from_values(bsv.poset, values), i_star - 1, bsv.p_star


def _from_values(poset: Poset, values: Sequence[int]) -> LinearExtension:
    return LinearExtension(poset, tuple(values))


def bsv_descents(bsv: BsvLinearExtension) -> frozenset[int]:
    """Descents of the filling, with i*-1 never and i* always a descent."""
    n = bsv.poset.n
    holder = [0] * (n + 2)
    for e, cell in enumerate(bsv.entries):
        for v in cell:
            holder[v] = e
    out = []
    for u in range(1, n + 2):
        if u == bsv.i_star - 1:
            continue
        if u == bsv.i_star:
            out.append(u)
        elif u <= n and holder[u + 1] < holder[u]:
            out.append(u)
    return frozenset(out)


def comaj_plus(bsv: BsvLinearExtension) -> int:
    """Sum of n+1-u over the barely set-valued descents."""
    n = bsv.poset.n
    return sum(n + 1 - u for u in bsv_descents(bsv))


def r_star(bsv: BsvLinearExtension) -> int:
    """Row of the doubled cell (1-based)."""
    if bsv.poset.coords is None:
        raise UnsupportedRefinement("poset has no box coordinates")
    return bsv.poset.coords[bsv.p_star][0]


def d_star(bsv: BsvLinearExtension) -> int:
    """1 when the doubled cell lies on the main diagonal, else 0."""
    if bsv.poset.coords is None:
        raise UnsupportedRefinement("poset has no box coordinates")
    row, col = bsv.poset.coords[bsv.p_star]
    return int(row == col)


def enumerate_bsv(poset: Poset) -> Iterator[BsvLinearExtension]:
    """All barely set-valued extensions, ordered by (word of T, i, p)."""
    for ext in enumerate_linear_extensions(poset):
        maximal: list[int] = []
        for i in range(1, poset.n + 1):
            e = ext.positions[i - 1]
            maximal = [p for p in maximal if e not in poset.upper_covers[p]]
            maximal.append(e)
            for p in sorted(maximal):
                yield bsv_from_triple(ext, i, p)


def gf_bsv(poset: Poset, refined: bool = False) -> QTPoly:
    """Generating function q^(comaj+1) * t^(row of doubled cell - 1).

    The t exponent is tracked when the poset carries box coordinates and is 0
    otherwise; ``refined=True`` insists on coordinates.
    """
    track_rows = poset.coords is not None
    if refined and not track_rows:
        raise UnsupportedRefinement("poset has no box coordinates")
    n = poset.n
    rows = [rc[0] for rc in poset.coords] if track_rows else [1] * n
    nrows = max(rows, default=1)
    lower = poset.lower_covers
    acc: dict[tuple[int, int], int] = {}
    for pos in _extension_positions(poset):
        is_max = [False] * n
        row_counts = [0] * (nrows + 1)
        for i in range(1, n + 1):
            e = pos[i - 1]
            for l in lower[e]:
                if is_max[l]:
                    is_max[l] = False
                    row_counts[rows[l]] -= 1
            is_max[e] = True
            row_counts[rows[e]] += 1
            # descents of the inserted filling, read off its values directly:
            # value u sits at pos[u-1] for u <= i and at pos[u-2] for u >= i+2,
            # with u = i never and u = i+1 always a descent.
            c = n - i
            for u in range(1, i):
                if pos[u - 1] > pos[u]:
                    c += n + 1 - u
            for u in range(i + 2, n + 1):
                if pos[u - 2] > pos[u - 1]:
                    c += n + 1 - u
            for r in range(1, nrows + 1):
                cnt = row_counts[r]
                if cnt:
                    key = (c, r - 1)
                    acc[key] = acc.get(key, 0) + cnt
    return QTPoly.of(acc)


# ---------------------------------------------------------------------------
# tableau text format


def _row_layout(poset: Poset) -> list[list[int]]:
    if poset.coords is None:
        raise UnsupportedRefinement("poset has no box coordinates")
    by_row: dict[int, list[tuple[int, int]]] = {}
    for e, (r, c) in enumerate(poset.coords):
        by_row.setdefault(r, []).append((c, e))
    return [[e for _, e in sorted(cells)] for _, cells in sorted(by_row.items())]


def format_tableau(obj: LinearExtension | BsvLinearExtension) -> str:
    """Render as comma-separated rows; a doubled cell prints as ``a|b``."""
    if isinstance(obj, LinearExtension):
        cells = [(v,) for v in obj.values]
    else:
        cells = list(obj.entries)
    lines = []
    for row in _row_layout(obj.poset):
        lines.append(",".join("|".join(str(v) for v in cells[e]) for e in row))
    return "\n".join(lines)


def parse_tableau(text: str, poset: Poset) -> LinearExtension | BsvLinearExtension:
    """Parse the tableau text format against the poset's box layout."""
    layout = _row_layout(poset)
    lines = [line.strip() for line in text.strip().splitlines() if line.strip()]
    if len(lines) != len(layout):
        raise ValueError(f"expected {len(layout)} rows, got {len(lines)}")
    cells: list[tuple[int, ...] | None] = [None] * poset.n
    for row, line in zip(layout, lines):
        parts = [part.strip() for part in line.split(",")]
        if len(parts) != len(row):
            raise ValueError(f"row length mismatch: {line!r}")
        for e, part in zip(row, parts):
            cells[e] = tuple(sorted(int(x) for x in part.split("|")))
    filled = [cell for cell in cells if cell is not None]
    if len(filled) != poset.n:
        raise ValueError("incomplete tableau")
    doubles = [e for e, cell in enumerate(filled) if len(cell) == 2]
    if not doubles:
        return LinearExtension(poset, tuple(cell[0] for cell in filled))
    if len(doubles) > 1:
        raise ValueError("more than one doubled cell")
    p = doubles[0]
    return BsvLinearExtension(poset, tuple(filled), p, max(filled[p]))
