"""Generators, relations, and the normal-form rewriting engine.

The monoid B_n is generated by the idempotents e_j (the identity with j
removed from the domain, 1 <= j <= n) and the shifts l_i (i missing from
the domain, i+1 sent down to i, everything else fixed, 1 <= i <= n-1).

Composition-order convention, frozen for the whole module: a word
``g_1 g_2 ... g_k`` evaluates to the product g_1 * g_2 * ... * g_k where
``(g*h)(x) = g(h(x))`` -- the rightmost symbol acts first, exactly as in
matrix multiplication.  "Multiplying a word on the right by g" therefore
means precomposing the underlying map with g.

Every element has a normal form determined by a pair of equal-size
subsets T <= S (dominance order): the word E_T L^{S,T} E_S, where E_X is
the product of e_u over u outside X, L^{a,b} = l_b l_{b+1} ... l_{a-1}
walks a down to b, and L^{S,T} applies the walks for s_k -> t_k first in
writing order.  The pair (S, T) is the domain/image of the element it
evaluates to, so normal forms biject with B_n.  `rewrite` folds a word
symbol by symbol through the one-step multiplication tables, which never
need backtracking.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .counting import _dominated_masks
from .elements import PartialMap, compose, identity, in_bn, make_partial_map
from .errors import (
    CardinalityMismatch,
    DimensionMismatch,
    IndexOutOfRange,
    NotInBn,
    ParseError,
)
from .modules import Subset, subset_leq


@dataclass(frozen=True)
class GeneratorSymbol:
    """One letter: kind 'l' or 'e' with an index, or the identity kind '1'."""

    kind: str
    index: int = 0

    def __post_init__(self) -> None:
        if self.kind not in ("l", "e", "1"):
            raise ValueError(f"kind must be 'l', 'e' or '1', got {self.kind!r}")
        if self.kind == "1" and self.index:
            raise ValueError("the identity symbol carries no index")
        if self.kind != "1" and self.index < 1:
            raise IndexOutOfRange(f"index must be >= 1, got {self.index}")

    def __str__(self) -> str:
        return "1" if self.kind == "1" else f"{self.kind}{self.index}"


ONE = GeneratorSymbol("1")


def l_sym(i: int) -> GeneratorSymbol:
    return GeneratorSymbol("l", i)


def e_sym(j: int) -> GeneratorSymbol:
    return GeneratorSymbol("e", j)


def _check_symbol(sym: GeneratorSymbol, n: int) -> None:
    if sym.kind == "l" and not 1 <= sym.index <= n - 1:
        raise IndexOutOfRange(f"l{sym.index} needs 1 <= i <= {n - 1}")
    if sym.kind == "e" and not 1 <= sym.index <= n:
        raise IndexOutOfRange(f"e{sym.index} needs 1 <= j <= {n}")


@dataclass(frozen=True)
class Word:
    """A finite sequence of generator symbols over a fixed n."""

    n: int
    symbols: tuple[GeneratorSymbol, ...]

    def __post_init__(self) -> None:
        for sym in self.symbols:
            _check_symbol(sym, self.n)

    def __str__(self) -> str:
        return " ".join(str(s) for s in self.symbols) if self.symbols else "1"


def parse_word(text: str, n: int) -> Word:
    """Parse whitespace-separated tokens 'l<i>', 'e<j>', '1'.

    >>> str(parse_word("e2 l1 e1", 2))
    'e2 l1 e1'
    """
    symbols = []
    pos = 0
    for token in text.split():
        pos = text.index(token, pos)
        if token == "1":
            symbols.append(ONE)
        elif token[0] in ("l", "e") and token[1:].isdigit():
            symbols.append(GeneratorSymbol(token[0], int(token[1:])))
        else:
            raise ParseError(f"unrecognized token {token!r}", pos)
        pos += len(token)
    return Word(n, tuple(symbols))


def concrete_generator(sym: GeneratorSymbol, n: int) -> PartialMap:
    """The partial map a symbol names at dimension n."""
    _check_symbol(sym, n)
    if sym.kind == "1":
        return identity(n)
    if sym.kind == "e":
        return make_partial_map(n, ((x, x) for x in range(1, n + 1) if x != sym.index))
    i = sym.index
    pairs = [(x, x) for x in range(1, n + 1) if x not in (i, i + 1)]
    pairs.append((i + 1, i))
    return make_partial_map(n, pairs)


def eval_word(w: Word) -> PartialMap:
    """Product of the symbols' maps, rightmost applied first."""
    result = identity(w.n)
    for sym in w.symbols:
        result = compose(result, concrete_generator(sym, w.n))
    return result


@dataclass(frozen=True)
class StandardWord:
    """Normal form E_T L^{S,T} E_S, encoded by its subset pair T <= S.

    S = T = {1..n} is the identity; S = T = {} is the zero element.
    """

    n: int
    s: Subset
    t: Subset

    def __post_init__(self) -> None:
        if self.s.n != self.n or self.t.n != self.n:
            raise DimensionMismatch("subset dimensions disagree with the word")
        if self.s.size != self.t.size:
            raise CardinalityMismatch("S and T must have equal size")
        if not subset_leq(self.t, self.s):
            raise NotInBn("T must be dominated by S componentwise")


def identity_std(n: int) -> StandardWord:
    full = Subset(n, (1 << n) - 1)
    return StandardWord(n, full, full)


def zero_std(n: int) -> StandardWord:
    empty = Subset(n, 0)
    return StandardWord(n, empty, empty)


def std_to_element(w: StandardWord) -> PartialMap:
    return PartialMap(w.n, tuple(zip(w.s.elements, w.t.elements)))


def element_to_std(f: PartialMap) -> StandardWord:
    if not in_bn(f):
        raise NotInBn("only order preserving, order decreasing maps have normal forms")
    return StandardWord(
        f.n,
        Subset.from_elements(f.n, f.domain),
        Subset.from_elements(f.n, f.image),
    )


def enumerate_standard_words(n: int) -> Iterator[StandardWord]:
    """All valid normal forms at dimension n, ordered by (S mask, T mask)."""
    for smask in range(1 << n):
        s = Subset(n, smask)
        for tmask in _dominated_masks(s.elements):
            yield StandardWord(n, s, Subset(n, tmask))


def expand_std(w: StandardWord) -> Word:
    """The literal generator word E_T L^{S,T} E_S."""
    s_elems = w.s.elements
    t_elems = w.t.elements
    in_s = set(s_elems)
    in_t = set(t_elems)
    symbols = [e_sym(v) for v in range(1, w.n + 1) if v not in in_t]
    for a, b in zip(reversed(s_elems), reversed(t_elems)):
        symbols.extend(l_sym(x) for x in range(b, a))
    symbols.extend(e_sym(u) for u in range(1, w.n + 1) if u not in in_s)
    return Word(w.n, tuple(symbols))


def _drop(values: tuple[int, ...], pos: int) -> tuple[int, ...]:
    return values[:pos] + values[pos + 1 :]


def mul_std_right(w: StandardWord, sym: GeneratorSymbol) -> StandardWord:
    """Normal form of (the element of) w multiplied on the right by sym.

    Right multiplication precomposes: the generator edits the domain side.
    For l_i the four cases are membership of i and i+1 in S; whenever i+1
    leaves S, its image leaves T with it.
    """
    _check_symbol(sym, w.n)
    if sym.kind == "1":
        return w
    s_elems = w.s.elements
    t_elems = w.t.elements
    i = sym.index
    if sym.kind == "e":
        if i not in w.s:
            return w
        c = s_elems.index(i)
        return StandardWord(
            w.n,
            Subset.from_elements(w.n, _drop(s_elems, c)),
            Subset.from_elements(w.n, _drop(t_elems, c)),
        )
    has_i = i in w.s
    has_next = (i + 1) in w.s
    if not has_i and not has_next:
        return w
    if has_i and has_next:
        c1 = s_elems.index(i + 1)
        new_s = tuple(x for x in s_elems if x != i)
        new_t = _drop(t_elems, c1)
    elif has_i:
        new_s = tuple(sorted([x for x in s_elems if x != i] + [i + 1]))
        new_t = t_elems
    else:
        c1 = s_elems.index(i + 1)
        new_s = tuple(x for x in s_elems if x != i + 1)
        new_t = _drop(t_elems, c1)
    return StandardWord(
        w.n, Subset.from_elements(w.n, new_s), Subset.from_elements(w.n, new_t)
    )


def mul_std_left(sym: GeneratorSymbol, w: StandardWord) -> StandardWord:
    """Normal form of sym times (the element of) w: edits the image side."""
    _check_symbol(sym, w.n)
    if sym.kind == "1":
        return w
    s_elems = w.s.elements
    t_elems = w.t.elements
    i = sym.index
    if sym.kind == "e":
        if i not in w.t:
            return w
        c = t_elems.index(i)
        return StandardWord(
            w.n,
            Subset.from_elements(w.n, _drop(s_elems, c)),
            Subset.from_elements(w.n, _drop(t_elems, c)),
        )
    has_i = i in w.t
    has_next = (i + 1) in w.t
    if not has_i and not has_next:
        return w
    if has_i and has_next:
        c = t_elems.index(i)
        new_s = _drop(s_elems, c)
        new_t = tuple(x for x in t_elems if x != i + 1)
    elif has_i:
        c = t_elems.index(i)
        new_s = _drop(s_elems, c)
        new_t = tuple(x for x in t_elems if x != i)
    else:
        new_s = s_elems
        new_t = tuple(sorted([i] + [x for x in t_elems if x != i + 1]))
    return StandardWord(
        w.n, Subset.from_elements(w.n, new_s), Subset.from_elements(w.n, new_t)
    )


def rewrite(w: Word) -> StandardWord:
    """Normal form of a word: fold its symbols from the identity.

    eval_word(w) == std_to_element(rewrite(w)) always; the fold realizes
    the confluent one-step tables, so no relation ever needs to be applied
    backwards.
    """
    acc = identity_std(w.n)
    for sym in w.symbols:
        acc = mul_std_right(acc, sym)
    return acc


@dataclass(frozen=True)
class RelationFamilyReport:
    family: int
    rule: str
    instances: int
    failures: tuple[str, ...]


@dataclass(frozen=True)
class RelationReport:
    n: int
    families: tuple[RelationFamilyReport, ...]

    @property
    def total_instances(self) -> int:
        return sum(f.instances for f in self.families)

    @property
    def ok(self) -> bool:
        return all(not f.failures for f in self.families)


def _relation_instances(n: int) -> Iterator[tuple[int, str, list[list[GeneratorSymbol]]]]:
    """Yield (family, description, chain of equal words) for every valid index."""
    for i in range(1, n + 1):
        yield 1, f"e{i}^2 = e{i}", [[e_sym(i), e_sym(i)], [e_sym(i)]]
    for i in range(1, n - 1):
        yield 2, f"l{i} l{i + 1} l{i} = l{i} l{i + 1} = l{i + 1} l{i} l{i + 1}", [
            [l_sym(i), l_sym(i + 1), l_sym(i)],
            [l_sym(i), l_sym(i + 1)],
            [l_sym(i + 1), l_sym(i), l_sym(i + 1)],
        ]
    for i in range(1, n):
        yield 3, f"l{i} e{i} = l{i} = e{i + 1} l{i}", [
            [l_sym(i), e_sym(i)],
            [l_sym(i)],
            [e_sym(i + 1), l_sym(i)],
        ]
    for i in range(1, n):
        yield 4, f"l{i} e{i + 1} = e{i} e{i + 1} = e{i} l{i} = l{i}^3 = l{i}^2", [
            [l_sym(i), e_sym(i + 1)],
            [e_sym(i), e_sym(i + 1)],
            [e_sym(i), l_sym(i)],
            [l_sym(i), l_sym(i), l_sym(i)],
            [l_sym(i), l_sym(i)],
        ]
    for i in range(1, n + 1):
        for j in range(1, n):
            if i not in (j, j + 1):
                yield 5, f"e{i} l{j} = l{j} e{i}", [
                    [e_sym(i), l_sym(j)],
                    [l_sym(j), e_sym(i)],
                ]
    for i in range(1, n):
        for j in range(1, n):
            if abs(i - j) >= 2:
                yield 6, f"l{i} l{j} = l{j} l{i}", [
                    [l_sym(i), l_sym(j)],
                    [l_sym(j), l_sym(i)],
                ]
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            yield 7, f"e{i} e{j} = e{j} e{i}", [
                [e_sym(i), e_sym(j)],
                [e_sym(j), e_sym(i)],
            ]


_RELATION_RULES = {
    1: "e_i^2 = e_i",
    2: "l_i l_{i+1} l_i = l_i l_{i+1} = l_{i+1} l_i l_{i+1}",
    3: "l_i e_i = l_i = e_{i+1} l_i",
    4: "l_i e_{i+1} = e_i e_{i+1} = e_i l_i = l_i^3 = l_i^2",
    5: "e_i l_j = l_j e_i  (i != j, j+1)",
    6: "l_i l_j = l_j l_i  (|i-j| >= 2)",
    7: "e_i e_j = e_j e_i",
}


def check_relations(n: int) -> RelationReport:
    """Evaluate every defining relation instance at dimension n.

    Each instance is a chain of words asserted equal; all sides are
    evaluated to concrete maps and compared.  Vacuous families (small n)
    report zero instances.
    """
    counts = {fam: 0 for fam in _RELATION_RULES}
    failures: dict[int, list[str]] = {fam: [] for fam in _RELATION_RULES}
    for family, description, chain in _relation_instances(n):
        counts[family] += 1
        evaluated = [eval_word(Word(n, tuple(side))) for side in chain]
        if any(side != evaluated[0] for side in evaluated[1:]):
            failures[family].append(description)
    return RelationReport(
        n,
        tuple(
            RelationFamilyReport(
                fam, _RELATION_RULES[fam], counts[fam], tuple(failures[fam])
            )
            for fam in sorted(_RELATION_RULES)
        ),
    )


def words_over(n: int, max_len: int, include_one: bool = False) -> Iterator[Word]:
    """All words up to max_len over the generator alphabet at dimension n."""
    alphabet: list[GeneratorSymbol] = [l_sym(i) for i in range(1, n)]
    alphabet += [e_sym(j) for j in range(1, n + 1)]
    if include_one:
        alphabet.append(ONE)

    def extend(prefix: tuple[GeneratorSymbol, ...], remaining: int) -> Iterator[Word]:
        yield Word(n, prefix)
        if remaining:
            for sym in alphabet:
                yield from extend(prefix + (sym,), remaining - 1)

    yield from extend((), max_len)
