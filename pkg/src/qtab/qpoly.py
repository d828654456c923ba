"""Exact arithmetic for polynomials in q, polynomials in q and t, and their
rational functions, plus a fraction-free linear solver over them.

Representations:

* ``QPoly`` -- a polynomial in q with integer coefficients, stored densely as
  a tuple ``coeffs`` where ``coeffs[e]`` is the coefficient of ``q**e``.
  Canonical form has no trailing zero, so the zero polynomial is ``()``.
* ``QTPoly`` -- a polynomial in q and t with integer coefficients, stored
  sparsely as ``(q_exp, t_exp, coeff)`` triples sorted by ``(t_exp, q_exp)``
  with every ``coeff`` nonzero.
* ``QLaurent`` -- ``q**shift * poly`` with a possibly negative ``shift``;
  canonical form has ``poly`` zero (with shift 0) or with nonzero constant
  term, so equal Laurent polynomials compare equal.
* ``RatFunc`` -- a reduced fraction of two ``QPoly``.  Canonical form: the
  denominator is nonzero with positive leading coefficient, numerator and
  denominator share no polynomial factor and no integer content, and zero is
  ``0/1``.  Equal rational functions therefore compare equal with ``==``.

Every division is exact or raises; nothing here rounds.

Text format for q-polynomials: terms in ascending exponent order joined with
`` + `` / `` - ``, e.g. ``"1 + 2*q + q^2"``.  The parser also accepts ``2q``,
``q**2``, and arbitrary spacing.  For (q, t)-polynomials the same scheme is
used with the q factor before the t factor, e.g. ``"q + 2*q*t + t^2"``, and
terms ordered by (t exponent, q exponent).
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Sequence


class QAlgebraError(Exception):
    """Base class for exact-arithmetic failures."""


class InexactDivision(QAlgebraError):
    """A division that was required to be exact left a remainder."""


class DivisionByZero(QAlgebraError):
    """Division by the zero polynomial or zero rational function."""


class DimensionMismatch(QAlgebraError):
    """Matrix/vector shapes passed to the linear solver do not agree."""


# ---------------------------------------------------------------------------
# QPoly


@dataclass(frozen=True, slots=True)
class QPoly:
    """Dense integer-coefficient polynomial in q; ``coeffs[e]`` multiplies q^e."""

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.coeffs and self.coeffs[-1] == 0:
            raise ValueError("QPoly coefficients must not end in zero")

    @classmethod
    def of(cls, coeffs: Iterable[int]) -> QPoly:
        """Build a polynomial from any coefficient sequence, trimming zeros."""
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        return cls(tuple(cs))

    @classmethod
    def monomial(cls, coeff: int, exp: int) -> QPoly:
        if coeff == 0:
            return ZERO
        return cls((0,) * exp + (coeff,))

    @property
    def degree(self) -> int:
        """Degree of the polynomial; the zero polynomial has degree -1."""
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        """Leading coefficient (0 for the zero polynomial)."""
        return self.coeffs[-1] if self.coeffs else 0

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __add__(self, other: QPoly) -> QPoly:
        if not isinstance(other, QPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        cs = list(a)
        for e, c in enumerate(b):
            cs[e] += c
        return QPoly.of(cs)

    def __neg__(self) -> QPoly:
        return QPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: QPoly) -> QPoly:
        if not isinstance(other, QPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: QPoly | int) -> QPoly:
        if isinstance(other, int):
            if other == 0:
                return ZERO
            return QPoly(tuple(c * other for c in self.coeffs))
        if not isinstance(other, QPoly):
            return NotImplemented
        if not self or not other:
            return ZERO
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for e, c in enumerate(self.coeffs):
            if c:
                for f, d in enumerate(other.coeffs):
                    out[e + f] += c * d
        return QPoly(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> QPoly:
        if k < 0:
            raise ValueError("negative power of a QPoly")
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def exact_div(self, other: QPoly) -> QPoly:
        """Divide exactly by ``other``; raise InexactDivision on remainder."""
        if not other:
            raise DivisionByZero("division by the zero polynomial")
        if not self:
            return ZERO
        rem = list(self.coeffs)
        d, lead = other.degree, other.lc
        out = [0] * (len(rem) - d) if len(rem) > d else []
        if not out:
            raise InexactDivision(f"degree {self.degree} < degree {d}")
        for k in range(len(out) - 1, -1, -1):
            top = rem[d + k]
            if top % lead:
                raise InexactDivision("leading coefficient does not divide")
            f = top // lead
            out[k] = f
            if f:
                for e, c in enumerate(other.coeffs):
                    rem[e + k] -= f * c
        if any(rem):
            raise InexactDivision("nonzero remainder")
        return QPoly.of(out)

    def shift(self, k: int) -> QPoly:
        """Multiply by q^k (k >= 0)."""
        if k < 0:
            raise ValueError("negative shift; use QLaurent")
        if not self or k == 0:
            return self
        return QPoly((0,) * k + self.coeffs)

    def substitute(self, r: int) -> QPoly:
        """Substitute q -> q^r for an integer r >= 1."""
        if r < 1:
            raise ValueError("substitution power must be >= 1")
        if r == 1 or not self:
            return self
        out = [0] * (self.degree * r + 1)
        for e, c in enumerate(self.coeffs):
            out[e * r] = c
        return QPoly(tuple(out))

    def reverse(self, degree: int | None = None) -> QPoly:
        """Return q^degree * p(1/q); ``degree`` defaults to the degree of p."""
        if not self:
            return self
        d = self.degree if degree is None else degree
        if d < self.degree:
            raise ValueError("reversal degree below polynomial degree")
        padded = self.coeffs + (0,) * (d - self.degree)
        return QPoly.of(reversed(padded))

    def evaluate(self, x: int | Fraction) -> int | Fraction:
        """Evaluate at an exact point by Horner's rule."""
        acc: int | Fraction = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def content(self) -> int:
        """Nonnegative gcd of all coefficients (0 for the zero polynomial)."""
        return math.gcd(*self.coeffs) if self.coeffs else 0

    def __str__(self) -> str:
        return format_poly(self)


ZERO = QPoly(())
ONE = QPoly((1,))
Q = QPoly((0, 1))


# ---------------------------------------------------------------------------
# q-numbers


@lru_cache(maxsize=None)
def qnum(k: int) -> QPoly:
    """The q-integer [k] = 1 + q + ... + q^(k-1); [0] = 0."""
    if k < 0:
        raise ValueError("q-integer of a negative number")
    return QPoly((1,) * k)


@lru_cache(maxsize=None)
def qfact(n: int) -> QPoly:
    """The q-factorial [n]! = [1][2]...[n]."""
    if n < 0:
        raise ValueError("q-factorial of a negative number")
    if n == 0:
        return ONE
    return qfact(n - 1) * qnum(n)


@lru_cache(maxsize=None)
def qbinom(n: int, k: int) -> QPoly:
    """The q-binomial coefficient [n choose k]; zero when k < 0 or k > n."""
    if k < 0 or k > n:
        return ZERO
    return qfact(n).exact_div(qfact(k) * qfact(n - k))


def qt_num(k: int) -> QTPoly:
    """The (q, t)-integer t^(k-1) + q*t^(k-2) + ... + q^(k-1)."""
    if k < 0:
        raise ValueError("(q, t)-integer of a negative number")
    return QTPoly(tuple((r, k - 1 - r, 1) for r in range(k - 1, -1, -1)))


# ---------------------------------------------------------------------------
# QTPoly


@dataclass(frozen=True, slots=True)
class QTPoly:
    """Sparse integer-coefficient polynomial in q and t.

    ``terms`` holds ``(q_exp, t_exp, coeff)`` triples sorted by
    ``(t_exp, q_exp)`` with nonzero coefficients.
    """

    terms: tuple[tuple[int, int, int], ...]

    def __post_init__(self) -> None:
        keys = [(te, qe) for qe, te, _ in self.terms]
        if keys != sorted(set(keys)) or any(c == 0 for _, _, c in self.terms):
            raise ValueError("QTPoly terms must be sorted, unique, and nonzero")

    @classmethod
    def of(cls, entries: dict[tuple[int, int], int]) -> QTPoly:
        """Build from a {(q_exp, t_exp): coeff} map, dropping zeros."""
        triples = sorted(
            ((qe, te, c) for (qe, te), c in entries.items() if c),
            key=lambda t: (t[1], t[0]),
        )
        return cls(tuple(triples))

    @classmethod
    def from_qpoly(cls, p: QPoly, t_exp: int = 0) -> QTPoly:
        return cls.of({(e, t_exp): c for e, c in enumerate(p.coeffs) if c})

    def as_map(self) -> dict[tuple[int, int], int]:
        return {(qe, te): c for qe, te, c in self.terms}

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, other: QTPoly | QPoly | int) -> QTPoly:
        other = _embed_qt(other)
        if other is None:
            return NotImplemented
        out = self.as_map()
        for qe, te, c in other.terms:
            out[(qe, te)] = out.get((qe, te), 0) + c
        return QTPoly.of(out)

    __radd__ = __add__

    def __neg__(self) -> QTPoly:
        return QTPoly(tuple((qe, te, -c) for qe, te, c in self.terms))

    def __sub__(self, other: QTPoly | QPoly | int) -> QTPoly:
        other = _embed_qt(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: QTPoly | QPoly | int) -> QTPoly:
        other = _embed_qt(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other: QTPoly | QPoly | int) -> QTPoly:
        other = _embed_qt(other)
        if other is None:
            return NotImplemented
        out: dict[tuple[int, int], int] = {}
        for qa, ta, ca in self.terms:
            for qb, tb, cb in other.terms:
                key = (qa + qb, ta + tb)
                out[key] = out.get(key, 0) + ca * cb
        return QTPoly.of(out)

    __rmul__ = __mul__

    @property
    def t_degree(self) -> int:
        """Highest power of t present; -1 for the zero polynomial."""
        return max((te for _, te, _ in self.terms), default=-1)

    def coefficient_of_t(self, t_exp: int) -> QPoly:
        """The q-polynomial multiplying t^t_exp."""
        out: dict[int, int] = {}
        for qe, te, c in self.terms:
            if te == t_exp:
                out[qe] = c
        if not out:
            return ZERO
        size = max(out) + 1
        return QPoly.of(out.get(e, 0) for e in range(size))

    def at_t1(self) -> QPoly:
        """Specialize t = 1."""
        out: dict[int, int] = {}
        for qe, _, c in self.terms:
            out[qe] = out.get(qe, 0) + c
        if not out:
            return ZERO
        return QPoly.of(out.get(e, 0) for e in range(max(out) + 1))

    def __str__(self) -> str:
        return format_qt_poly(self)


QT_ZERO = QTPoly(())
QT_ONE = QTPoly(((0, 0, 1),))
T = QTPoly(((0, 1, 1),))


def _embed_qt(x: QTPoly | QPoly | int) -> QTPoly | None:
    if isinstance(x, QTPoly):
        return x
    if isinstance(x, QPoly):
        return QTPoly.from_qpoly(x)
    if isinstance(x, int):
        return QTPoly.of({(0, 0): x})
    return None


# ---------------------------------------------------------------------------
# QLaurent


@dataclass(frozen=True, slots=True)
class QLaurent:
    """A Laurent polynomial q^shift * poly with canonical (shift, poly) split."""

    shift: int
    poly: QPoly

    @classmethod
    def of(cls, shift: int, poly: QPoly) -> QLaurent:
        if not poly:
            return cls(0, ZERO)
        low = next(e for e, c in enumerate(poly.coeffs) if c)
        return cls(shift + low, QPoly(poly.coeffs[low:]))

    @classmethod
    def from_qpoly(cls, poly: QPoly) -> QLaurent:
        return cls.of(0, poly)

    def __bool__(self) -> bool:
        return bool(self.poly)

    def __mul__(self, other: QLaurent) -> QLaurent:
        if not isinstance(other, QLaurent):
            return NotImplemented
        return QLaurent.of(self.shift + other.shift, self.poly * other.poly)

    def __add__(self, other: QLaurent) -> QLaurent:
        if not isinstance(other, QLaurent):
            return NotImplemented
        if not self:
            return other
        if not other:
            return self
        base = min(self.shift, other.shift)
        return QLaurent.of(
            base,
            self.poly.shift(self.shift - base) + other.poly.shift(other.shift - base),
        )

    def evaluate(self, x: Fraction) -> Fraction:
        """Evaluate exactly at a nonzero rational point."""
        if x == 0:
            raise DivisionByZero("Laurent evaluation at 0")
        return Fraction(self.poly.evaluate(x)) * Fraction(x) ** self.shift


# ---------------------------------------------------------------------------
# polynomial gcd (subresultant pseudo-remainder sequence)


def _primitive(p: QPoly) -> QPoly:
    c = p.content()
    if c <= 1:
        return p if (p.lc >= 0 or not p) else -p
    q = QPoly(tuple(x // c for x in p.coeffs))
    return q if q.lc >= 0 else -q


def _pseudo_rem(a: QPoly, b: QPoly) -> QPoly:
    """lc(b)^(deg a - deg b + 1) * a mod b, computed without fractions."""
    rem = list(a.coeffs)
    db, lead = b.degree, b.lc
    for k in range(a.degree - db, -1, -1):
        top = rem[db + k]
        rem = [lead * x for x in rem]
        if top:
            for e, c in enumerate(b.coeffs):
                rem[e + k] -= top * c
    return QPoly.of(rem[:db] if len(rem) > db else rem)


def _exact_scalar_div(p: QPoly, d: int) -> QPoly:
    if d in (1, -1):
        return p if d == 1 else -p
    out = []
    for c in p.coeffs:
        if c % d:
            raise InexactDivision("subresultant coefficient division failed")
        out.append(c // d)
    return QPoly.of(out)


def poly_gcd(a: QPoly, b: QPoly) -> QPoly:
    """Greatest common divisor in Z[q], with positive leading coefficient."""
    if not a:
        return _primitive(b) * b.content() if b else ZERO
    if not b:
        return _primitive(a) * a.content()
    c = math.gcd(a.content(), b.content())
    fa, fb = _primitive(a), _primitive(b)
    if fa.degree < fb.degree:
        fa, fb = fb, fa
    g = h = 1
    while True:
        d = fa.degree - fb.degree
        rem = _pseudo_rem(fa, fb)
        if not rem:
            return _primitive(fb) * c
        if rem.degree == 0:
            return QPoly((c,))
        fa, fb = fb, _exact_scalar_div(rem, g * h**d)
        g = fa.lc
        if d > 0:
            num = g**d
            den = h ** (d - 1)
            if num % den:
                raise InexactDivision("subresultant h-update failed")
            h = num // den


# ---------------------------------------------------------------------------
# RatFunc


class RatFunc:
    """Reduced fraction of two QPoly with a canonical representative."""

    __slots__ = ("num", "den")

    def __init__(self, num: QPoly, den: QPoly = ONE) -> None:
        if not den:
            raise DivisionByZero("rational function with zero denominator")
        if not num:
            num, den = ZERO, ONE
        else:
            g = poly_gcd(num, den)
            if g.degree > 0 or g.lc > 1:
                num = num.exact_div(g)
                den = den.exact_div(g)
            c = math.gcd(num.content(), den.content())
            if c > 1:
                num = QPoly(tuple(x // c for x in num.coeffs))
                den = QPoly(tuple(x // c for x in den.coeffs))
            if den.lc < 0:
                num, den = -num, -den
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    @classmethod
    def from_int(cls, k: int) -> RatFunc:
        return cls(QPoly.of([k]))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("RatFunc is immutable")

    def __bool__(self) -> bool:
        return bool(self.num)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, RatFunc):
            return self.num == other.num and self.den == other.den
        if isinstance(other, QPoly):
            return self.den == ONE and self.num == other
        if isinstance(other, int):
            return self.den == ONE and self.num == QPoly.of([other])
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __add__(self, other: RatFunc) -> RatFunc:
        if not isinstance(other, RatFunc):
            return NotImplemented
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    def __sub__(self, other: RatFunc) -> RatFunc:
        if not isinstance(other, RatFunc):
            return NotImplemented
        return RatFunc(self.num * other.den - other.num * self.den, self.den * other.den)

    def __neg__(self) -> RatFunc:
        return RatFunc(-self.num, self.den)

    def __mul__(self, other: RatFunc) -> RatFunc:
        if not isinstance(other, RatFunc):
            return NotImplemented
        return RatFunc(self.num * other.num, self.den * other.den)

    def __truediv__(self, other: RatFunc) -> RatFunc:
        if not isinstance(other, RatFunc):
            return NotImplemented
        if not other:
            raise DivisionByZero("division by the zero rational function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def evaluate(self, x: int | Fraction) -> Fraction:
        d = self.den.evaluate(x)
        if d == 0:
            raise DivisionByZero(f"denominator vanishes at {x}")
        return Fraction(self.num.evaluate(x), 1) / Fraction(d, 1)

    def __repr__(self) -> str:
        if self.den == ONE:
            return format_poly(self.num)
        return f"({format_poly(self.num)}) / ({format_poly(self.den)})"


RAT_ZERO = RatFunc(ZERO)
RAT_ONE = RatFunc(ONE)


# ---------------------------------------------------------------------------
# linear solver


@dataclass(frozen=True)
class LinearSystemResult:
    """Outcome of a fraction-free solve.

    When ``consistent``, ``solution`` assigns a RatFunc to every column with
    free columns set to zero (listed in ``free_columns``).  Otherwise
    ``witness_row`` is the input index of an equation that cannot be
    satisfied.
    """

    consistent: bool
    solution: tuple[RatFunc, ...] | None
    free_columns: tuple[int, ...]
    witness_row: int | None


def solve_linear_system(
    matrix: Sequence[Sequence[QPoly]], rhs: Sequence[QPoly]
) -> LinearSystemResult:
    """Solve ``matrix @ x = rhs`` over Q(q) by fraction-free elimination.

    Entries stay integer polynomials throughout (Bareiss one-step division);
    rational functions appear only during back-substitution.
    """
    m = len(matrix)
    if len(rhs) != m:
        raise DimensionMismatch(f"{m} rows but {len(rhs)} right-hand sides")
    ncols = len(matrix[0]) if m else 0
    rows: list[list[QPoly]] = []
    for i, row in enumerate(matrix):
        if len(row) != ncols:
            raise DimensionMismatch(f"row {i} has {len(row)} entries, expected {ncols}")
        rows.append(list(row) + [rhs[i]])
    origin = list(range(m))

    prev = ONE
    pivots: list[tuple[int, int]] = []
    r = 0
    for c in range(ncols):
        pivot_row = next((i for i in range(r, m) if rows[i][c]), None)
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        origin[r], origin[pivot_row] = origin[pivot_row], origin[r]
        piv = rows[r][c]
        for i in range(r + 1, m):
            fi = rows[i][c]
            for j in range(c + 1, ncols + 1):
                rows[i][j] = (piv * rows[i][j] - fi * rows[r][j]).exact_div(prev)
            rows[i][c] = ZERO
        pivots.append((r, c))
        prev = piv
        r += 1
        if r == m:
            break

    for i in range(r, m):
        if rows[i][ncols]:
            return LinearSystemResult(False, None, (), origin[i])

    xs: list[RatFunc] = [RAT_ZERO] * ncols
    pivot_cols = {c for _, c in pivots}
    for pr, pc in reversed(pivots):
        acc = RatFunc(rows[pr][ncols])
        for j in range(pc + 1, ncols):
            if rows[pr][j] and xs[j]:
                acc = acc - RatFunc(rows[pr][j]) * xs[j]
        xs[pc] = acc / RatFunc(rows[pr][pc])
    free = tuple(c for c in range(ncols) if c not in pivot_cols)
    return LinearSystemResult(True, tuple(xs), free, None)


# ---------------------------------------------------------------------------
# text format


def format_poly(p: QPoly) -> str:
    """Render in the documented text format, e.g. ``1 + 2*q + q^2``."""
    if not p:
        return "0"
    parts: list[tuple[bool, str]] = []
    for e, c in enumerate(p.coeffs):
        if c == 0:
            continue
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            power = "q" if e == 1 else f"q^{e}"
            body = power if mag == 1 else f"{mag}*{power}"
        parts.append((c < 0, body))
    neg, body = parts[0]
    pieces = [("-" if neg else "") + body]
    for neg, body in parts[1:]:
        pieces.append((" - " if neg else " + ") + body)
    return "".join(pieces)


_TERM_RE = re.compile(
    r"(?P<coeff>\d+)?\s*\*?\s*(?:(?P<q>q)(?:\^(?P<qe>\d+))?)?"
    r"\s*\*?\s*(?:(?P<t>t)(?:\^(?P<te>\d+))?)?$"
)


def _parse_terms(text: str) -> Iterator[tuple[int, int, int]]:
    """Yield (coeff, q_exp, t_exp) for each term of a polynomial string."""
    s = text.replace("**", "^").strip()
    if not s:
        raise ValueError("empty polynomial string")
    tokens = re.findall(r"[+-]|[^+\-\s]+(?:\s*[^+\-\s]+)*", s)
    sign = 1
    expect_term = True
    seen = False
    for tok in tokens:
        if tok in "+-":
            if expect_term and tok == "-":
                sign = -sign
                continue
            if expect_term:
                raise ValueError(f"misplaced {tok!r} in {text!r}")
            sign = -1 if tok == "-" else 1
            expect_term = True
            continue
        if not expect_term:
            raise ValueError(f"missing operator before {tok!r} in {text!r}")
        m = _TERM_RE.match(tok.replace(" ", ""))
        if not m or (m.group("coeff") is None and m.group("q") is None and m.group("t") is None):
            raise ValueError(f"cannot parse term {tok!r} in {text!r}")
        coeff = int(m.group("coeff")) if m.group("coeff") else 1
        qe = (int(m.group("qe")) if m.group("qe") else 1) if m.group("q") else 0
        te = (int(m.group("te")) if m.group("te") else 1) if m.group("t") else 0
        yield sign * coeff, qe, te
        sign = 1
        expect_term = False
        seen = True
    if expect_term or not seen:
        raise ValueError(f"dangling operator in {text!r}")


def parse_poly(text: str) -> QPoly:
    """Parse the text format of a q-polynomial."""
    acc: dict[int, int] = {}
    for coeff, qe, te in _parse_terms(text):
        if te:
            raise ValueError(f"unexpected t in q-polynomial {text!r}")
        acc[qe] = acc.get(qe, 0) + coeff
    if not acc:
        return ZERO
    return QPoly.of(acc.get(e, 0) for e in range(max(acc) + 1))


def format_qt_poly(p: QTPoly) -> str:
    """Render a (q, t)-polynomial, e.g. ``q + 2*q*t + t^2``."""
    if not p:
        return "0"
    parts: list[tuple[bool, str]] = []
    for qe, te, c in p.terms:
        factors = []
        if qe:
            factors.append("q" if qe == 1 else f"q^{qe}")
        if te:
            factors.append("t" if te == 1 else f"t^{te}")
        mag = abs(c)
        if mag != 1 or not factors:
            factors.insert(0, str(mag))
        parts.append((c < 0, "*".join(factors)))
    neg, body = parts[0]
    pieces = [("-" if neg else "") + body]
    for neg, body in parts[1:]:
        pieces.append((" - " if neg else " + ") + body)
    return "".join(pieces)


def parse_qt_poly(text: str) -> QTPoly:
    """Parse the text format of a (q, t)-polynomial."""
    acc: dict[tuple[int, int], int] = {}
    for coeff, qe, te in _parse_terms(text):
        acc[(qe, te)] = acc.get((qe, te), 0) + coeff
    return QTPoly.of(acc)


def coeff_vector(p: QPoly) -> list[int]:
    """Machine-readable coefficient vector, index = exponent."""
    return list(p.coeffs)


def qt_coeff_vector(p: QTPoly) -> list[list[int]]:
    """Machine-readable [q_exp, t_exp, coeff] triples, sorted by (t, q)."""
    return [[qe, te, c] for qe, te, c in p.terms]
