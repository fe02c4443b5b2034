"""The B_n-module carried by the subset lattice of {1..n}.

V has one basis vector v_S per subset S; a map f sends v_S to v_{f(S)}
when S lies inside the domain of f and kills it otherwise.  Equal-size
subsets are ordered componentwise on their sorted elements (dominance);
subsets of different sizes are incomparable.  Under this order:

- the span of v_S has basis {v_T : T <= S} (its "down-set"),
- every span of a single vector is determined by the maximal elements of
  its support (the reduced support), and
- dimensions of spans are computed three independent ways: a closed
  recursion (`dim_single`), a subpartition count (`dim_oracle`), and
  direct enumeration (`down_set` / `cyclic_span`).

Coefficients are exact rationals (fractions.Fraction); dimensions and
multiplicities are exact integers.
"""
from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from itertools import combinations
from typing import Iterable, Iterator, Optional

from .counting import _dominated_masks, binom
from .elements import PartialMap, _check_n
from .errors import (
    CardinalityMismatch,
    DimensionMismatch,
    IndexOutOfRange,
    InvalidRange,
    NotDownClosed,
)


@dataclass(frozen=True)
class Subset:
    """A subset of {1..n} held as a bitmask (bit i-1 set iff i is in the set)."""

    n: int
    mask: int

    def __post_init__(self) -> None:
        _check_n(self.n)
        if not 0 <= self.mask < (1 << self.n):
            raise IndexOutOfRange(f"mask {self.mask:#x} has bits outside 1..{self.n}")

    @classmethod
    def from_elements(cls, n: int, elements: Iterable[int]) -> "Subset":
        mask = 0
        for x in elements:
            if not 1 <= x <= n:
                raise IndexOutOfRange(f"element {x} outside 1..{n}")
            mask |= 1 << (x - 1)
        return cls(n, mask)

    @property
    def elements(self) -> tuple[int, ...]:
        out = []
        x = self.mask
        while x:
            low = x & -x
            out.append(low.bit_length())
            x ^= low
        return tuple(out)

    @property
    def size(self) -> int:
        return self.mask.bit_count()

    def __contains__(self, x: int) -> bool:
        return 1 <= x <= self.n and bool(self.mask >> (x - 1) & 1)

    def __repr__(self) -> str:
        return f"Subset({self.n}, {{{','.join(map(str, self.elements))}}})"


def bold(n: int, k: int) -> Subset:
    """The least k-subset {1..k}."""
    if not 0 <= k <= n:
        raise IndexOutOfRange(f"k must satisfy 0 <= k <= {n}")
    return Subset(n, (1 << k) - 1)


def top_block(n: int, k: int) -> Subset:
    """The greatest k-subset {n-k+1..n}."""
    if not 0 <= k <= n:
        raise IndexOutOfRange(f"k must satisfy 0 <= k <= {n}")
    return Subset(n, ((1 << k) - 1) << (n - k))


def subset_leq(t: Subset, s: Subset) -> bool:
    """Dominance: t_i <= s_i componentwise; False across different sizes."""
    if t.n != s.n:
        raise DimensionMismatch(f"subsets of {t.n} and {s.n} are unrelated")
    if t.size != s.size:
        return False
    return all(a <= b for a, b in zip(t.elements, s.elements))


def meet(s: Subset, t: Subset) -> Subset:
    """Componentwise minimum: the greatest lower bound of two k-subsets."""
    if s.n != t.n:
        raise DimensionMismatch(f"subsets of {s.n} and {t.n} are unrelated")
    if s.size != t.size:
        raise CardinalityMismatch("meet needs subsets of equal size")
    return Subset.from_elements(s.n, (min(a, b) for a, b in zip(s.elements, t.elements)))


def down_set(s: Subset) -> tuple[Subset, ...]:
    """All T <= S, ordered by bitmask; the basis of the span of v_S."""
    return tuple(Subset(s.n, m) for m in _dominated_masks(s.elements))


class ModuleVector:
    """A finitely supported rational combination of basis vectors v_S.

    Zero coefficients are never stored; all subsets share one n.
    """

    __slots__ = ("n", "_coeffs")

    def __init__(self, n: int, coeffs: Optional[dict[int, Fraction]] = None):
        _check_n(n)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "_coeffs", dict(coeffs) if coeffs else {})

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("ModuleVector is immutable")

    @classmethod
    def zero(cls, n: int) -> "ModuleVector":
        return cls(n)

    @classmethod
    def from_terms(
        cls, n: int, terms: Iterable[tuple[Subset, Fraction | int]]
    ) -> "ModuleVector":
        coeffs: dict[int, Fraction] = {}
        for subset, coeff in terms:
            if subset.n != n:
                raise DimensionMismatch(f"term over {subset.n} in a vector over {n}")
            value = coeffs.get(subset.mask, Fraction(0)) + Fraction(coeff)
            if value:
                coeffs[subset.mask] = value
            else:
                coeffs.pop(subset.mask, None)
        return cls(n, coeffs)

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    def coefficient(self, subset: Subset) -> Fraction:
        if subset.n != self.n:
            raise DimensionMismatch(f"subset over {subset.n}, vector over {self.n}")
        return self._coeffs.get(subset.mask, Fraction(0))

    def support(self) -> tuple[Subset, ...]:
        return tuple(
            Subset(self.n, m)
            for m in sorted(self._coeffs, key=lambda m: (m.bit_count(), m))
        )

    def terms(self) -> Iterator[tuple[Subset, Fraction]]:
        for m in sorted(self._coeffs, key=lambda m: (m.bit_count(), m)):
            yield Subset(self.n, m), self._coeffs[m]

    def _combine(self, other: "ModuleVector", sign: int) -> "ModuleVector":
        if not isinstance(other, ModuleVector):
            return NotImplemented
        if other.n != self.n:
            raise DimensionMismatch(f"vectors over {self.n} and {other.n}")
        coeffs = dict(self._coeffs)
        for m, c in other._coeffs.items():
            value = coeffs.get(m, Fraction(0)) + sign * c
            if value:
                coeffs[m] = value
            else:
                coeffs.pop(m, None)
        return ModuleVector(self.n, coeffs)

    def __add__(self, other: "ModuleVector") -> "ModuleVector":
        return self._combine(other, 1)

    def __sub__(self, other: "ModuleVector") -> "ModuleVector":
        return self._combine(other, -1)

    def __neg__(self) -> "ModuleVector":
        return ModuleVector(self.n, {m: -c for m, c in self._coeffs.items()})

    def __rmul__(self, scalar: Fraction | int) -> "ModuleVector":
        scalar = Fraction(scalar)
        if not scalar:
            return ModuleVector.zero(self.n)
        return ModuleVector(self.n, {m: scalar * c for m, c in self._coeffs.items()})

    __mul__ = __rmul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ModuleVector):
            return NotImplemented
        return self.n == other.n and self._coeffs == other._coeffs

    def __repr__(self) -> str:
        if self.is_zero:
            return f"ModuleVector({self.n}, 0)"
        parts = []
        for subset, coeff in self.terms():
            label = "{" + ",".join(map(str, subset.elements)) + "}"
            parts.append(f"{coeff}*v{label}")
        return f"ModuleVector({self.n}, {' + '.join(parts)})"


def basis_vector(subset: Subset) -> ModuleVector:
    return ModuleVector(subset.n, {subset.mask: Fraction(1)})


def act_on_subset(f: PartialMap, s: Subset) -> Optional[Subset]:
    """f(S) when S is inside the domain of f, else None (the term dies)."""
    if f.n != s.n:
        raise DimensionMismatch(f"map over {f.n}, subset over {s.n}")
    if s.mask & f.domain_mask != s.mask:
        return None
    image = 0
    for src, dst in f.pairs:
        if s.mask >> (src - 1) & 1:
            image |= 1 << (dst - 1)
    return Subset(s.n, image)


def act(f: PartialMap, v: ModuleVector) -> ModuleVector:
    """Linear extension of v_S -> v_{f(S)} (S inside the domain) else 0."""
    if f.n != v.n:
        raise DimensionMismatch(f"map over {f.n}, vector over {v.n}")
    coeffs: dict[int, Fraction] = {}
    for subset, coeff in v.terms():
        image = act_on_subset(f, subset)
        if image is None:
            continue
        value = coeffs.get(image.mask, Fraction(0)) + coeff
        if value:
            coeffs[image.mask] = value
        else:
            coeffs.pop(image.mask, None)
    return ModuleVector(v.n, coeffs)


def cyclic_span(v: ModuleVector) -> tuple[Subset, ...]:
    """Basis subsets of the span of v: the union of down-sets of its support."""
    masks: set[int] = set()
    for subset in v.support():
        masks.update(_dominated_masks(subset.elements))
    return tuple(
        Subset(v.n, m) for m in sorted(masks, key=lambda m: (m.bit_count(), m))
    )


def _maximal(subsets: Iterable[Subset]) -> list[Subset]:
    items = list(subsets)
    return [
        s
        for s in items
        if not any(s.mask != t.mask and subset_leq(s, t) for t in items)
    ]


@dataclass(frozen=True)
class ReducedSupport:
    """An antichain of subsets: the maximal support elements of a vector."""

    n: int
    sets: tuple[Subset, ...]

    def __post_init__(self) -> None:
        for s in self.sets:
            if s.n != self.n:
                raise DimensionMismatch(f"subset over {s.n} in antichain over {self.n}")
        for a, b in combinations(self.sets, 2):
            if subset_leq(a, b) or subset_leq(b, a):
                raise ValueError(f"{a!r} and {b!r} are comparable")


def reduced_support(v: ModuleVector) -> ReducedSupport:
    maximal = _maximal(v.support())
    maximal.sort(key=lambda s: (s.size, s.mask))
    return ReducedSupport(v.n, tuple(maximal))


def reduced_form(v: ModuleVector) -> ModuleVector:
    """The coefficient-1 combination over the reduced support; generates the
    same span as v."""
    return ModuleVector.from_terms(v.n, ((s, 1) for s in reduced_support(v).sets))


def reduced_generator_of_span(
    basis: Iterable[Subset], *, n: Optional[int] = None
) -> ModuleVector:
    """The unique reduced generator of the span with the given basis.

    The basis must be down-closed within each cardinality (a valid submodule
    basis); the generator is the coefficient-1 sum over its maximal elements.
    """
    provided = list(basis)
    if not provided:
        if n is None:
            raise ValueError("n is required for the empty basis")
        return ModuleVector.zero(n)
    n0 = provided[0].n
    for s in provided:
        if s.n != n0:
            raise DimensionMismatch("basis mixes different n")
    if n is not None and n != n0:
        raise DimensionMismatch(f"basis over {n0}, requested n={n}")
    subsets = {s.mask: s for s in provided}
    items = list(subsets.values())
    for s in items:
        for t in down_set(s):
            if t.mask not in subsets:
                raise NotDownClosed(f"{t!r} is below {s!r} but missing from the basis")
    return ModuleVector.from_terms(n0, ((s, 1) for s in _maximal(items)))


@dataclass(frozen=True)
class DimRecursion:
    """Trace of the dimension recursion for one subset: the gap sequence
    lambda_i = s_{k-i+1} - (k-i+1), the gamma coefficients, and the result."""

    subset: Subset
    lam: tuple[int, ...]
    gamma: tuple[int, ...]
    value: int


def dim_recursion(s: Subset) -> DimRecursion:
    """Dimension of the span of v_S by the closed binomial recursion.

    For k >= 2 the answer is an alternating binomial combination driven by
    integer coefficients gamma_1 = 1, gamma_j = -sum_{i<=j-2} C(s_{k+1-i} -
    s_{k+2-j}, j-i) gamma_i; a single element contributes its own value.
    """
    elems = s.elements
    k = len(elems)

    def sv(i: int) -> int:
        return elems[i - 1]

    lam = tuple(sv(k - i + 1) - (k - i + 1) for i in range(1, k + 1))
    if k == 0:
        return DimRecursion(s, (), (), 1)
    if k == 1:
        return DimRecursion(s, lam, (), sv(1))
    gamma = [0] * k  # 1-indexed; entries 1..k-1 are used
    gamma[1] = 1
    for j in range(2, k):
        gamma[j] = -sum(
            binom(sv(k + 1 - i) - sv(k + 2 - j), j - i) * gamma[i]
            for i in range(1, j - 1)
        )
    value = sum(binom(sv(k - i + 1), k + 1 - i) * gamma[i] for i in range(1, k))
    value -= sum(binom(sv(k - i + 1) - sv(1), k + 1 - i) * gamma[i] for i in range(1, k))
    value -= sum(
        sv(1) * binom(sv(k - i + 1) - sv(2), k - i) * gamma[i] for i in range(1, k - 1)
    )
    return DimRecursion(s, lam, tuple(gamma[1:]), value)


def dim_single(s: Subset) -> int:
    return dim_recursion(s).value


def dim_oracle(s: Subset) -> int:
    """Dimension of the span of v_S counted as subpartitions.

    Counts weakly decreasing sequences mu with 0 <= mu_i <= lambda_i where
    lambda is the gap sequence of S; equivalently, Young diagrams obtained
    from lambda by shrinking rows.  Shares no code with dim_recursion.
    """
    elems = s.elements
    k = len(elems)
    lam = [elems[k - i] - (k - i + 1) for i in range(1, k + 1)]
    if k == 0:
        return 1
    # counts[c] = number of admissible tails mu_i.. with mu_i <= c
    counts = [c + 1 for c in range(lam[-1] + 1)]
    for i in range(k - 2, -1, -1):
        prev_cap = lam[i + 1]
        new_counts = []
        running = 0
        for c in range(lam[i] + 1):
            running += counts[min(c, prev_cap)]
            new_counts.append(running)
        counts = new_counts
    return counts[lam[0]]


def dim_cyclic(v: ModuleVector) -> int:
    """Dimension of the span of v by inclusion-exclusion over meets of the
    reduced support, applied within each cardinality class and summed."""
    groups: dict[int, list[Subset]] = defaultdict(list)
    for s in reduced_support(v).sets:
        groups[s.size].append(s)
    total = 0
    for group in groups.values():
        m = len(group)
        for selector in range(1, 1 << m):
            chosen = [group[i] for i in range(m) if selector >> i & 1]
            glb = reduce(meet, chosen)
            sign = -1 if selector.bit_count() % 2 == 0 else 1
            total += sign * dim_single(glb)
    return total


def mixed_subset_elements(k: int, m: int) -> tuple[int, ...]:
    """The k-subset {2,4,...,2m, 2m+1,...,m+k}: m even steps then a block."""
    if m < 0 or k < m:
        raise InvalidRange(f"need 0 <= m <= k, got m={m}, k={k}")
    return tuple(2 * i for i in range(1, m + 1)) + tuple(
        2 * m + j for j in range(1, k - m + 1)
    )


def mixed_subset(k: int, m: int, n: Optional[int] = None) -> Subset:
    elems = mixed_subset_elements(k, m)
    least = max(elems) if elems else 0
    if n is None:
        n = least
    if n < least:
        raise IndexOutOfRange(f"subset needs n >= {least}")
    return Subset.from_elements(n, elems)


def dim_mixed(k: int, m: int) -> int:
    """Dimension of the span of v over the mixed subset of `mixed_subset`.

    For m >= 2 this is the specialized binomial recursion with gamma_1 = 1,
    gamma_2 = ... = gamma_{k-m+2} = 0 and gamma_{k-m+3} = -1; m = 0 and
    m = 1 reduce to the consecutive-block binomial.
    """
    if m < 0 or k < m:
        raise InvalidRange(f"need 0 <= m <= k, got m={m}, k={k}")
    if m == 0:
        return binom(k, k)
    if m == 1:
        return dim_single(mixed_subset(k, 1))
    gamma = {1: 1}
    for i in range(2, k - m + 3):
        gamma[i] = 0
    gamma[k - m + 3] = -1
    for i in range(k - m + 4, k):
        gamma[i] = -binom(m - k + 2 * i - 4, i - 1) - sum(
            binom(2 * (i - j - 1), i - j) * gamma[j] for j in range(k - m + 3, i - 1)
        )
    value = binom(m + k, k) - binom(m + k - 2, k) - 2 * binom(m + k - 4, k - 1)
    value += sum(
        binom(2 * (k - i + 1), k + 1 - i) * gamma[i] for i in range(k - m + 3, k)
    )
    value -= sum(binom(2 * (k - i), k + 1 - i) * gamma[i] for i in range(k - m + 3, k))
    value -= sum(
        2 * binom(2 * (k - i - 1), k - i) * gamma[i] for i in range(k - m + 3, k - 1)
    )
    return value


def catalan_via_gamma(k: int) -> int:
    """c_{k+1} as the alternating binomial-gamma combination; the dimension
    recursion evaluated on the even subset {2,4,...,2k}."""
    if k < 2:
        raise InvalidRange("the identity is stated for k >= 2")
    gamma = {1: 1}
    for i in range(2, k):
        gamma[i] = -sum(
            binom(2 * (i - j - 1), i - j) * gamma[j] for j in range(1, i - 1)
        )
    value = sum(binom(2 * (k - i + 1), k + 1 - i) * gamma[i] for i in range(1, k))
    value -= sum(binom(2 * (k - i), k + 1 - i) * gamma[i] for i in range(1, k))
    value -= sum(2 * binom(2 * (k - i - 1), k - i) * gamma[i] for i in range(1, k - 1))
    return value


def is_indecomposable(v: ModuleVector) -> bool:
    """True when the span of v cannot split: all of Red(v) in one cardinality."""
    red = reduced_support(v).sets
    if not red:
        return False
    return len({s.size for s in red}) == 1


def decompose(v: ModuleVector) -> tuple[ModuleVector, ...]:
    """Split the span of v into indecomposable summands, one per cardinality
    appearing in Red(v); returns their reduced generators, sizes ascending."""
    groups: dict[int, list[Subset]] = defaultdict(list)
    for s in reduced_support(v).sets:
        groups[s.size].append(s)
    return tuple(
        ModuleVector.from_terms(v.n, ((s, 1) for s in groups[size]))
        for size in sorted(groups)
    )


def minimal_irreducible(k: int, n: int) -> ModuleVector:
    """Generator v_{1..k} of the 1-dimensional module inside every nonzero
    submodule of the k-th layer."""
    if k > n:
        raise IndexOutOfRange(f"k={k} exceeds n={n}")
    return basis_vector(bold(n, k))


@dataclass(frozen=True)
class BranchSummand:
    """One indecomposable constituent of a restricted module.

    `top` generates the summand (its span is the down-set of `top` inside
    the smaller monoid's ground set); when the summand is a consecutive
    block {m+1..m+k}, `m` records the offset, else `m` is None.
    """

    m: Optional[int]
    k: int
    multiplicity: int
    dimension: int
    top: tuple[int, ...]


def _check_branch(m: int, k: int, l: int) -> None:
    if m < 1 or l < 1 or not l < k:
        raise InvalidRange(f"need m >= 1 and 1 <= l < k, got m={m}, k={k}, l={l}")


def branch_predict(m: int, k: int, l: int) -> tuple[BranchSummand, ...]:
    """Decomposition of the block module {m+1..m+k} after restricting from
    the monoid on m+k points to the one on m+l points, by the closed rule.

    The intersection size a with the forgotten window {m+l+1..m+k} can be
    chosen in C(k-l, a) ways, each contributing a block summand on k-a
    points at offset m+l-k+a.  Offsets that would be negative correspond to
    empty modules (dimension 0) and are omitted.
    """
    _check_branch(m, k, l)
    out = []
    for a in range(k - l + 1):
        kp = k - a
        mp = m + l - k + a
        if mp < 0:
            continue
        out.append(
            BranchSummand(
                m=mp,
                k=kp,
                multiplicity=binom(k - l, a),
                dimension=binom(mp + kp, kp),
                top=tuple(range(mp + 1, mp + kp + 1)),
            )
        )
    return tuple(out)


def branch_compute(m: int, k: int, l: int) -> tuple[BranchSummand, ...]:
    """Same decomposition derived from the basis itself.

    Basis subsets of the block module are grouped by their intersection
    with the forgotten window; deleting the (pointwise fixed) intersection
    must leave the full down-set of a consecutive block, which names the
    summand.  Raises if the grouping fails to have that shape.
    """
    _check_branch(m, k, l)
    ambient = m + k
    window_lo = m + l + 1
    groups: dict[tuple[int, ...], list[tuple[int, ...]]] = defaultdict(list)
    for combo in combinations(range(1, ambient + 1), k):
        inter = tuple(x for x in combo if x >= window_lo)
        groups[inter].append(combo)
    tally: Counter[tuple[int, int, int]] = Counter()
    for inter, members in groups.items():
        stripped = [
            Subset.from_elements(m + l, (x for x in t if x < window_lo))
            for t in members
        ]
        tops = _maximal(stripped)
        if len(tops) != 1:
            raise RuntimeError("restriction group is not a cyclic span")
        top = tops[0]
        if {s.mask for s in stripped} != {s.mask for s in down_set(top)}:
            raise RuntimeError("restriction group is not a down-set")
        kp = top.size
        first = top.elements[0] if kp else m + l + 1
        if top.elements != tuple(range(first, first + kp)) or first + kp != m + l + 1:
            raise RuntimeError("restriction group is not a consecutive block")
        tally[(first - 1, kp, len(members))] += 1
    return tuple(
        BranchSummand(
            m=mp,
            k=kp,
            multiplicity=count,
            dimension=dim,
            top=tuple(range(mp + 1, mp + kp + 1)),
        )
        for (mp, kp, dim), count in sorted(tally.items(), key=lambda kv: -kv[0][1])
    )


def branch_even(k: int) -> tuple[BranchSummand, ...]:
    """Decomposition of the even-subset module {2,4,...,2k} after dropping
    the last two points: two copies of the smaller even module plus the
    mixed module over {2,...,2(k-2),2k-3,2k-2}."""
    if k < 2:
        raise InvalidRange("even branching needs k >= 2")
    restricted = 2 * (k - 1)
    even_top = tuple(2 * i for i in range(1, k))
    even_dim = dim_single(Subset.from_elements(restricted, even_top))
    mixed_top = mixed_subset_elements(k, k - 2)
    return (
        BranchSummand(
            m=None, k=k - 1, multiplicity=2, dimension=even_dim, top=even_top
        ),
        BranchSummand(
            m=None, k=k, multiplicity=1, dimension=dim_mixed(k, k - 2), top=mixed_top
        ),
    )
