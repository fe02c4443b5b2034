"""Injective partial maps of {1..n} and their rook-matrix forms.

Conventions used throughout the package:

- Maps act on positions 1..n.  A map is stored as its graph: a tuple of
  (source, image) pairs sorted by source.  The empty graph is the zero
  map, valid for every n (including n = 0, where it is also the identity).
- The product ``compose(g, f)`` is composition ``g`` after ``f``:
  ``(g*f)(x) = g(f(x))``, defined exactly when both applications are.
  In matrix form this is the ordinary matrix product ``M(g) @ M(f)``.
- ``to_matrix(f)`` has a 1 in row ``t``, column ``s`` (1-indexed) for each
  pair ``(s, t)``: column = where the map reads, row = where it writes.
- A map is *order preserving* when its images increase with its sources,
  *order decreasing* when every image is <= its source.  Maps that are
  both form the planar upper triangular rook monoid, called B_n here.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    DimensionMismatch,
    DuplicateDomain,
    DuplicateRange,
    IndexOutOfRange,
    NotARookMatrix,
    ParseError,
)

#: Largest supported ground set; subsets of {1..n} must fit one machine word.
N_MAX = 62

#: Documented practical bound for exhaustive monoid iteration.
ENUM_MAX = 14


def _check_n(n: int) -> None:
    if not isinstance(n, int) or not 0 <= n <= N_MAX:
        raise IndexOutOfRange(f"dimension n must satisfy 0 <= n <= {N_MAX}, got {n!r}")


@dataclass(frozen=True)
class PartialMap:
    """An injective partial map of {1..n}, stored as a sorted pair graph.

    Equality is structural on (n, pairs); equal graphs over different n are
    distinct elements (they live in different monoids).
    """

    n: int
    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        _check_n(self.n)
        prev_s = 0
        seen_targets = set()
        for s, t in self.pairs:
            if not 1 <= s <= self.n:
                raise IndexOutOfRange(f"source {s} outside 1..{self.n}")
            if not 1 <= t <= self.n:
                raise IndexOutOfRange(f"image {t} outside 1..{self.n}")
            if s == prev_s:
                raise DuplicateDomain(f"source {s} appears twice")
            if s < prev_s:
                raise ValueError("pairs must be sorted by source; use make_partial_map")
            if t in seen_targets:
                raise DuplicateRange(f"image {t} appears twice")
            prev_s = s
            seen_targets.add(t)

    @property
    def rank(self) -> int:
        return len(self.pairs)

    @property
    def is_zero(self) -> bool:
        return not self.pairs

    @property
    def domain(self) -> tuple[int, ...]:
        return tuple(s for s, _ in self.pairs)

    @property
    def image(self) -> tuple[int, ...]:
        """Image values sorted ascending (not positionally paired)."""
        return tuple(sorted(t for _, t in self.pairs))

    @property
    def domain_mask(self) -> int:
        mask = 0
        for s, _ in self.pairs:
            mask |= 1 << (s - 1)
        return mask

    @property
    def image_mask(self) -> int:
        mask = 0
        for _, t in self.pairs:
            mask |= 1 << (t - 1)
        return mask

    def __call__(self, x: int) -> int | None:
        """Apply the map; None when x is outside the domain."""
        for s, t in self.pairs:
            if s == x:
                return t
        return None

    def preimage(self, y: int) -> int | None:
        for s, t in self.pairs:
            if t == y:
                return s
        return None

    def __mul__(self, other: "PartialMap") -> "PartialMap":
        return compose(self, other)

    def __repr__(self) -> str:
        return f"PartialMap({self.n}, {print_element(self)!r})"


def make_partial_map(n: int, pairs: Iterable[tuple[int, int]]) -> PartialMap:
    """Build a PartialMap from (source, image) pairs in any order.

    >>> make_partial_map(5, [(3, 4), (1, 1), (2, 2), (5, 5)]).domain
    (1, 2, 3, 5)
    """
    ordered = sorted(pairs)
    return PartialMap(n, tuple((int(s), int(t)) for s, t in ordered))


def identity(n: int) -> PartialMap:
    return PartialMap(n, tuple((i, i) for i in range(1, n + 1)))


def zero_map(n: int) -> PartialMap:
    return PartialMap(n, ())


def restriction_identity(n: int, elements: Iterable[int]) -> PartialMap:
    """The idempotent fixing ``elements`` pointwise and undefined elsewhere."""
    return make_partial_map(n, ((x, x) for x in elements))


def compose(g: PartialMap, f: PartialMap) -> PartialMap:
    """g after f: defined at x exactly when f(x) exists and lies in g's domain."""
    if g.n != f.n:
        raise DimensionMismatch(f"cannot compose maps of {g.n} and {f.n}")
    lookup = dict(g.pairs)
    return PartialMap(f.n, tuple((s, lookup[t]) for s, t in f.pairs if t in lookup))


def embed(f: PartialMap, n: int) -> PartialMap:
    """View f as a map of {1..n} (n >= f.n) fixing the new points f.n+1..n."""
    if n < f.n:
        raise DimensionMismatch(f"cannot embed a map of {f.n} into {n}")
    extra = tuple((i, i) for i in range(f.n + 1, n + 1))
    return PartialMap(n, f.pairs + extra)


def is_order_preserving(f: PartialMap) -> bool:
    images = [t for _, t in f.pairs]
    return all(a < b for a, b in zip(images, images[1:]))


def is_order_decreasing(f: PartialMap) -> bool:
    return all(t <= s for s, t in f.pairs)


def in_bn(f: PartialMap) -> bool:
    """Membership in the planar upper triangular rook monoid B_n."""
    return is_order_preserving(f) and is_order_decreasing(f)


@dataclass(frozen=True)
class RookMatrix:
    """An n x n 0/1 matrix with at most one 1 per row and per column."""

    n: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        _check_n(self.n)
        if len(self.rows) != self.n or any(len(r) != self.n for r in self.rows):
            raise NotARookMatrix(f"expected a {self.n}x{self.n} grid")
        col_sums = [0] * self.n
        for row in self.rows:
            row_sum = 0
            for j, entry in enumerate(row):
                if entry not in (0, 1):
                    raise NotARookMatrix(f"entry {entry!r} is not 0 or 1")
                row_sum += entry
                col_sums[j] += entry
            if row_sum > 1:
                raise NotARookMatrix("row with more than one 1")
        if any(c > 1 for c in col_sums):
            raise NotARookMatrix("column with more than one 1")

    def is_upper_triangular(self) -> bool:
        return all(
            entry == 0
            for i, row in enumerate(self.rows)
            for j, entry in enumerate(row)
            if j < i
        )

    def __str__(self) -> str:
        return "\n".join(" ".join(str(e) for e in row) for row in self.rows)


def rook_matrix(rows: Sequence[Sequence[int]]) -> RookMatrix:
    return RookMatrix(len(rows), tuple(tuple(int(e) for e in row) for row in rows))


def to_matrix(f: PartialMap) -> RookMatrix:
    grid = [[0] * f.n for _ in range(f.n)]
    for s, t in f.pairs:
        grid[t - 1][s - 1] = 1
    return RookMatrix(f.n, tuple(tuple(row) for row in grid))


def from_matrix(m: RookMatrix | Sequence[Sequence[int]]) -> PartialMap:
    if not isinstance(m, RookMatrix):
        m = rook_matrix(m)
    pairs = []
    for i, row in enumerate(m.rows):
        for j, entry in enumerate(row):
            if entry:
                pairs.append((j + 1, i + 1))
    return make_partial_map(m.n, pairs)


def is_generalized_reduced_echelon(m: RookMatrix) -> bool:
    """Leading-entry test for generalized (row and column) reduced echelon form.

    Reading nonzero rows top to bottom, their leading 1s must move strictly
    right; reading nonzero columns left to right, their leading 1s must move
    strictly down; and every leading 1 must be alone in its row and column.
    Zero rows and columns may appear anywhere.
    """
    n = m.n
    last_col = 0
    for row in m.rows:
        lead = next((j for j, e in enumerate(row) if e), None)
        if lead is None:
            continue
        if sum(row) != 1:
            return False
        if sum(m.rows[i][lead] for i in range(n)) != 1:
            return False
        if lead + 1 <= last_col:
            return False
        last_col = lead + 1
    last_row = 0
    for j in range(n):
        lead = next((i for i in range(n) if m.rows[i][j]), None)
        if lead is None:
            continue
        if lead + 1 <= last_row:
            return False
        last_row = lead + 1
    return True


def _parse_int_set(text: str, pos: int) -> tuple[tuple[int, ...], int]:
    """Parse '{a,b,...}' starting at pos; returns (values, next position)."""
    if pos >= len(text) or text[pos] != "{":
        raise ParseError("expected '{'", pos)
    pos += 1
    values: list[int] = []
    if pos < len(text) and text[pos] == "}":
        return (), pos + 1
    while True:
        start = pos
        while pos < len(text) and text[pos].isdigit():
            pos += 1
        if pos == start:
            raise ParseError("expected an integer", pos)
        value = int(text[start:pos])
        if values and value <= values[-1]:
            raise ParseError("entries must be strictly increasing", start)
        values.append(value)
        if pos < len(text) and text[pos] == ",":
            pos += 1
            continue
        if pos < len(text) and text[pos] == "}":
            return tuple(values), pos + 1
        raise ParseError("expected ',' or '}'", pos)


def parse_element(text: str, n: int) -> PartialMap:
    """Parse '[{s1,...}->{t1,...}]' as the order preserving map s_i -> t_i.

    Both lists must be strictly increasing and of equal length; the text does
    not carry n, so the target dimension is explicit.

    >>> parse_element("[{1,3,4,5}->{1,2,3,4}]", 5).pairs
    ((1, 1), (3, 2), (4, 3), (5, 4))
    """
    pos = 0
    if not text.startswith("["):
        raise ParseError("expected '['", 0)
    sources, pos = _parse_int_set(text, 1)
    if not text.startswith("->", pos):
        raise ParseError("expected '->'", pos)
    targets, pos = _parse_int_set(text, pos + 2)
    if pos >= len(text) or text[pos] != "]":
        raise ParseError("expected ']'", pos)
    if pos + 1 != len(text):
        raise ParseError("trailing characters", pos + 1)
    if len(sources) != len(targets):
        raise ParseError("domain and range have different sizes", 0)
    return make_partial_map(n, zip(sources, targets))


def print_element(f: PartialMap, style: str = "pairs") -> str:
    """Render a map as 'pairs' text, 'twoline' notation, or a 0/1 'matrix'.

    The 'pairs' form round-trips through parse_element exactly for order
    preserving maps (the grammar requires increasing sequences).
    """
    if style == "pairs":
        src = ",".join(str(s) for s, _ in f.pairs)
        dst = ",".join(str(t) for _, t in f.pairs)
        return f"[{{{src}}}->{{{dst}}}]"
    if style == "twoline":
        widths = [max(len(str(s)), len(str(t))) for s, t in f.pairs]
        top = " ".join(str(s).rjust(w) for (s, _), w in zip(f.pairs, widths))
        bot = " ".join(str(t).rjust(w) for (_, t), w in zip(f.pairs, widths))
        return f"( {top} )\n( {bot} )" if f.pairs else "( )\n( )"
    if style == "matrix":
        return str(to_matrix(f))
    raise ValueError(f"unknown style {style!r}")
