"""Orders, exhaustive enumeration, and the ballot-sequence bijection.

All counts are exact Python integers.  The Catalan numbers follow the
convolution recurrence c_0 = c_1 = 1, c_m = sum c_i * c_{m-1-i}; the order
of B_n is c_{n+1}, independently recomputable through the window recursion
(`order_recursive`) and by exhaustive enumeration (`enumerate_bn`).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cache
from itertools import combinations, groupby, permutations
from typing import Iterator

from .elements import (
    ENUM_MAX,
    PartialMap,
    in_bn,
    is_generalized_reduced_echelon,
    to_matrix,
)
from .errors import BoundExceeded, InvalidBallot, NotInBn

#: Exhaustive iteration over *all* rook matrices is feasible a bit below
#: ENUM_MAX; |R_8| is already about 1.4 million.
MATRIX_ENUM_MAX = 8


def binom(top: int, bottom: int) -> int:
    """Binomial coefficient with the convention C(y, x) = 0 for x < 0 or x > y."""
    if bottom < 0 or bottom > top or top < 0:
        return 0
    return math.comb(top, bottom)


@cache
def catalan(m: int) -> int:
    if m < 0:
        raise ValueError("Catalan numbers are indexed by m >= 0")
    if m <= 1:
        return 1
    return sum(catalan(i) * catalan(m - 1 - i) for i in range(m))


def order_bn(n: int) -> int:
    """|B_n| = c_{n+1}."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return catalan(n + 1)


def order_prn(n: int) -> int:
    """|PR_n| = C(2n, n), the number of generalized reduced echelon matrices."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return math.comb(2 * n, n)


@cache
def _b(n: int) -> int:
    # b_n = 2 b_{n-1} + 1 + sum_{q=0}^{n-3} b_{n-2,q}, splitting B_n by the
    # preimage of 1 (absent / at n-1-q / at n).
    if n == 0:
        return 1
    if n == 1:
        return 2
    return 2 * _b(n - 1) + 1 + sum(_bpq(n - 2, q) for q in range(n - 2))


@cache
def _bpq(p: int, q: int) -> int:
    # Count of maps with domain in the last q+1 and image in the last p+1
    # positions; independent of the ambient n.  Only q <= p is ever needed.
    if q == 0:
        return p + 2
    if q == p:
        return _b(p + 1)
    return 1 + sum(_bpq(p - 1, r) for r in range(q + 1))


def order_recursive(n: int) -> int:
    """|B_n| by the window recursion, with no Catalan numbers involved."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return _b(n)


@dataclass(frozen=True)
class OrderTable:
    """Snapshot of the order recursion for one n: b_n, the (p,q) window
    counts for 0 <= q <= p <= n-1, and the Catalan values c_0..c_{n+2}."""

    n: int
    b: int
    bpq: dict[tuple[int, int], int]
    catalan_values: tuple[int, ...]


def build_order_table(n: int) -> OrderTable:
    if n < 1:
        raise ValueError("the order table is defined for n >= 1")
    table = {(p, q): _bpq(p, q) for p in range(n) for q in range(p + 1)}
    return OrderTable(n, _b(n), table, tuple(catalan(i) for i in range(n + 3)))


def _dominated_masks(sources: tuple[int, ...]) -> list[int]:
    """Bitmasks of all tuples t_1 < ... < t_k with t_i <= s_i, sorted."""
    masks: list[int] = []

    def walk(i: int, lowest: int, acc: int) -> None:
        if i == len(sources):
            masks.append(acc)
            return
        for t in range(lowest, sources[i] + 1):
            walk(i + 1, t + 1, acc | (1 << (t - 1)))

    walk(0, 1, 0)
    masks.sort()
    return masks


def _mask_elements(mask: int) -> tuple[int, ...]:
    out = []
    x = mask
    while x:
        low = x & -x
        out.append(low.bit_length())
        x ^= low
    return tuple(out)


def enumerate_bn(n: int) -> Iterator[PartialMap]:
    """All elements of B_n, ordered by (domain bitmask, image bitmask).

    Elements correspond to pairs of equal-size subsets T <= S (componentwise
    on sorted elements): S is the domain, T the image, matched in order.
    """
    if not 0 <= n <= ENUM_MAX:
        raise BoundExceeded(f"enumeration supports 0 <= n <= {ENUM_MAX}")
    for smask in range(1 << n):
        sources = _mask_elements(smask)
        for tmask in _dominated_masks(sources):
            yield PartialMap(n, tuple(zip(sources, _mask_elements(tmask))))


def enumerate_rn(n: int) -> Iterator[PartialMap]:
    """All injective partial maps of {1..n} (every rook matrix)."""
    if not 0 <= n <= MATRIX_ENUM_MAX:
        raise BoundExceeded(f"matrix enumeration supports 0 <= n <= {MATRIX_ENUM_MAX}")
    universe = range(1, n + 1)
    for k in range(n + 1):
        for dom in combinations(universe, k):
            for img in combinations(universe, k):
                for assigned in permutations(img):
                    yield PartialMap(n, tuple(zip(dom, assigned)))


def count_echelon(n: int) -> int:
    """Brute-force count of upper triangular generalized reduced echelon
    rook matrices of size n; equals c_{n+1}."""
    total = 0
    for f in enumerate_rn(n):
        m = to_matrix(f)
        if m.is_upper_triangular() and is_generalized_reduced_echelon(m):
            total += 1
    return total


def count_planar(n: int) -> int:
    """Brute-force count of all generalized reduced echelon rook matrices
    of size n; equals C(2n, n)."""
    return sum(1 for f in enumerate_rn(n) if is_generalized_reduced_echelon(to_matrix(f)))


@dataclass(frozen=True)
class BallotSequence:
    """A +-1 sequence of length 2n+2 with n+1 ones and nonnegative prefix sums."""

    n: int
    steps: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.steps) != 2 * self.n + 2:
            raise InvalidBallot(f"expected length {2 * self.n + 2}, got {len(self.steps)}")
        if any(step not in (1, -1) for step in self.steps):
            raise InvalidBallot("entries must be +1 or -1")
        if sum(1 for step in self.steps if step == 1) != self.n + 1:
            raise InvalidBallot(f"expected {self.n + 1} entries equal to +1")
        running = 0
        for i, step in enumerate(self.steps):
            running += step
            if running < 0:
                raise InvalidBallot(f"prefix sum negative at position {i}")

    def to_bits(self) -> str:
        return "".join("1" if step == 1 else "0" for step in self.steps)


def ballot_from_bits(text: str) -> BallotSequence:
    """Inverse of BallotSequence.to_bits; n is recovered from the length."""
    if len(text) % 2 or len(text) < 2:
        raise InvalidBallot(f"length {len(text)} is not of the form 2n+2")
    if set(text) - {"0", "1"}:
        raise InvalidBallot("text must consist of '0' and '1'")
    steps = tuple(1 if ch == "1" else -1 for ch in text)
    return BallotSequence(len(text) // 2 - 1, steps)


def ballot_encode(f: PartialMap) -> BallotSequence:
    """Encode an element of B_n as a ballot sequence.

    With domain s_1 < ... < s_k and image t_1 < ... < t_k, the sequence is
    built from gap blocks: s'_1 = s_1, s'_i = s_i - s_{i-1}, s'_{k+1} =
    n+1-s_k (and likewise t'), laid out as s'_1 ones, t'_1 minus-ones, ...,
    s'_{k+1} ones, t'_{k+1} minus-ones.  The zero map (k = 0) degenerates to
    n+1 ones followed by n+1 minus-ones.
    """
    if not in_bn(f):
        raise NotInBn("only order preserving, order decreasing maps are encodable")
    sources = list(f.domain)
    targets = [t for _, t in f.pairs]
    steps: list[int] = []
    prev_s = prev_t = 0
    for s, t in zip(sources, targets):
        steps.extend([1] * (s - prev_s))
        steps.extend([-1] * (t - prev_t))
        prev_s, prev_t = s, t
    steps.extend([1] * (f.n + 1 - prev_s))
    steps.extend([-1] * (f.n + 1 - prev_t))
    return BallotSequence(f.n, tuple(steps))


def ballot_decode(b: BallotSequence) -> PartialMap:
    """Inverse of ballot_encode."""
    runs = [(step, len(list(group))) for step, group in groupby(b.steps)]
    # A valid sequence alternates starting with +1 and ending with -1, so
    # runs pair up as (ones, minus-ones) blocks; all but the last block
    # contributes one (source, image) pair.
    blocks = len(runs) // 2
    pairs = []
    s_total = t_total = 0
    for idx in range(blocks - 1):
        s_total += runs[2 * idx][1]
        t_total += runs[2 * idx + 1][1]
        pairs.append((s_total, t_total))
    return PartialMap(b.n, tuple(pairs))
