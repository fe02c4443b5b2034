"""Cross-checking sweeps: every checkable claim, each against an
independent second computation.

Each suite returns CheckResult rows (name, how many cases, how many
failed).  Defaults match the acceptance bounds; `small=True` shrinks them
for quick runs.  Randomized sweeps take an explicit seed so failures are
reproducible.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from . import counting, elements, modules, words


@dataclass(frozen=True)
class CheckResult:
    name: str
    checked: int
    failures: int
    detail: str = ""

    @property
    def ok(self) -> bool:
        return self.failures == 0


def _result(name: str, checked: int, mismatches: list[str]) -> CheckResult:
    return CheckResult(name, checked, len(mismatches), "; ".join(mismatches[:5]))


# ---------------------------------------------------------------- orders


def verify_orders(
    nmax: int = 11, ballot_nmax: int = 8, echelon_nmax: int = 6
) -> list[CheckResult]:
    results = []

    mismatches = []
    for n in range(nmax + 1):
        counted = sum(1 for _ in counting.enumerate_bn(n))
        formula = counting.order_bn(n)
        recursive = counting.order_recursive(n)
        if not counted == formula == recursive:
            mismatches.append(f"n={n}: {counted}/{formula}/{recursive}")
    results.append(_result(f"order triple agreement n<={nmax}", nmax + 1, mismatches))

    mismatches = []
    checked = 0
    for n in range(ballot_nmax + 1):
        for f in counting.enumerate_bn(n):
            checked += 1
            seq = counting.ballot_encode(f)  # constructor enforces the invariants
            if counting.ballot_decode(seq) != f:
                mismatches.append(f"n={n}: {elements.print_element(f)}")
    results.append(_result(f"ballot bijection n<={ballot_nmax}", checked, mismatches))

    mismatches = []
    for n in range(echelon_nmax + 1):
        if counting.count_echelon(n) != counting.catalan(n + 1):
            mismatches.append(f"triangular n={n}")
        if counting.count_planar(n) != counting.order_prn(n):
            mismatches.append(f"planar n={n}")
    results.append(
        _result(f"echelon matrix counts n<={echelon_nmax}", 2 * (echelon_nmax + 1), mismatches)
    )
    return results


# ------------------------------------------------------------------ dims


def _random_vector(rng: random.Random, nmax: int) -> modules.ModuleVector:
    n = rng.randint(1, nmax)
    terms = []
    for _ in range(rng.randint(1, 5)):
        mask = rng.randrange(1 << n)
        num = rng.choice([x for x in range(-9, 10) if x])
        den = rng.randint(1, 4)
        terms.append((modules.Subset(n, mask), Fraction(num, den)))
    return modules.ModuleVector.from_terms(n, terms)


def _down_closed_families(n: int) -> list[list[int]]:
    """All down-closed subsets of the powerset of {1..n}, as mask lists."""
    closure = {}
    for mask in range(1 << n):
        closure[mask] = [t.mask for t in modules.down_set(modules.Subset(n, mask))]
    families = []
    for selector in range(1 << (1 << n)):
        members = [m for m in range(1 << n) if selector >> m & 1]
        chosen = set(members)
        if all(t in chosen for m in members for t in closure[m]):
            families.append(members)
    return families


def verify_dims(
    subset_n: int = 10,
    block_max: int = 16,
    even_kmax: int = 8,
    mixed_kmax: int = 8,
    samples: int = 1000,
    random_nmax: int = 7,
    seed: int = 0,
    basis_nmax: int = 4,
    structure_nmax: int = 5,
) -> list[CheckResult]:
    results = []

    mismatches = []
    for mask in range(1, 1 << subset_n):
        s = modules.Subset(subset_n, mask)
        d1 = modules.dim_single(s)
        d2 = modules.dim_oracle(s)
        d3 = len(modules.down_set(s))
        if not d1 == d2 == d3:
            mismatches.append(f"{s!r}: {d1}/{d2}/{d3}")
    results.append(
        _result(f"dimension formula vs oracle, S within {{1..{subset_n}}}", (1 << subset_n) - 1, mismatches)
    )

    mismatches = []
    checked = 0
    for total in range(1, block_max + 1):
        for k in range(1, total + 1):
            m = total - k
            s = modules.Subset.from_elements(total, range(m + 1, m + k + 1))
            checked += 1
            if modules.dim_single(s) != counting.binom(m + k, k):
                mismatches.append(f"block m={m},k={k}")
    for k in range(1, even_kmax + 1):
        s = modules.Subset.from_elements(2 * k, range(2, 2 * k + 1, 2))
        checked += 1
        if modules.dim_single(s) != counting.catalan(k + 1):
            mismatches.append(f"even k={k}")
    for k in range(2, mixed_kmax + 1):
        for m in range(2, k + 1):
            checked += 1
            if modules.dim_mixed(k, m) != modules.dim_oracle(modules.mixed_subset(k, m)):
                mismatches.append(f"mixed k={k},m={m}")
    results.append(_result("special dimension families", checked, mismatches))

    rng = random.Random(seed)
    mismatches = []
    for idx in range(samples):
        v = _random_vector(rng, random_nmax)
        if modules.dim_cyclic(v) != len(modules.cyclic_span(v)):
            mismatches.append(f"sample {idx}")
    results.append(
        _result(f"inclusion-exclusion vs span size ({samples} seeded vectors)", samples, mismatches)
    )

    mismatches = []
    checked = 0
    for n in range(basis_nmax + 1):
        for members in _down_closed_families(n):
            checked += 1
            subsets = [modules.Subset(n, m) for m in members]
            gen = modules.reduced_generator_of_span(subsets, n=n)
            span = {s.mask for s in modules.cyclic_span(gen)}
            if span != set(members):
                mismatches.append(f"n={n} members={members}: span differs")
                continue
            if members:
                alt = modules.ModuleVector.from_terms(
                    n, ((modules.Subset(n, m), rng.randint(1, 7)) for m in members)
                )
                if modules.reduced_form(alt) != gen:
                    mismatches.append(f"n={n} members={members}: reduced form differs")
    results.append(
        _result(f"reduced generators over all down-closed bases n<={basis_nmax}", checked, mismatches)
    )

    mismatches = []
    checked = 0
    for n in range(1, structure_nmax + 1):
        for k in range(n + 1):
            layer = list(combinations(range(1, n + 1), k))
            least = modules.bold(n, k)
            for subset_elems in layer:
                s = modules.Subset.from_elements(n, subset_elems)
                checked += 1
                if not modules.is_indecomposable(modules.basis_vector(s)):
                    mismatches.append(f"v_{subset_elems} not indecomposable")
                if least.mask not in {t.mask for t in modules.down_set(s)}:
                    mismatches.append(f"least {k}-subset missing below {subset_elems}")
                witness = elements.make_partial_map(
                    n, zip(subset_elems, range(1, k + 1))
                )
                if modules.act(witness, modules.basis_vector(s)) != modules.minimal_irreducible(k, n):
                    mismatches.append(f"no witness onto v_bold for {subset_elems}")
        mixed = modules.ModuleVector.from_terms(
            n,
            [(modules.Subset(n, 0), 1), (modules.Subset(n, 1), 1)],
        )
        checked += 1
        if modules.is_indecomposable(mixed) or len(modules.decompose(mixed)) != 2:
            mismatches.append(f"mixed-cardinality vector at n={n} misclassified")
    results.append(
        _result(f"irreducible/indecomposable structure n<={structure_nmax}", checked, mismatches)
    )
    return results


# ------------------------------------------------------------ identities


def verify_identities(
    kmax: int = 15, mkl_max: int = 12, even_kmax: int = 10
) -> list[CheckResult]:
    results = []

    mismatches = []
    for k in range(2, kmax + 1):
        if modules.catalan_via_gamma(k) != counting.catalan(k + 1):
            mismatches.append(f"k={k}")
    results.append(
        _result(f"Catalan gamma identity 2<=k<={kmax}", max(kmax - 1, 0), mismatches)
    )

    mismatches = []
    checked = 0
    for k in range(1, mkl_max + 1):
        for l in range(1, k):
            for m in range(1, mkl_max + 1):
                checked += 1
                lhs = counting.binom(m + k, k)
                rhs = sum(
                    counting.binom(k - l, a) * counting.binom(m + l, k - a)
                    for a in range(k - l + 1)
                )
                if lhs != rhs:
                    mismatches.append(f"m={m},k={k},l={l}")
    results.append(
        _result(f"branching dimension identity m,k,l<={mkl_max}", checked, mismatches)
    )

    mismatches = []
    for k in range(2, even_kmax + 1):
        if counting.catalan(k + 1) != 2 * counting.catalan(k) + modules.dim_mixed(k, k - 2):
            mismatches.append(f"k={k}")
    results.append(
        _result(f"even branching identity 2<=k<={even_kmax}", max(even_kmax - 1, 0), mismatches)
    )
    return results


# ------------------------------------------------------------- branching


def _summand_key(s: modules.BranchSummand) -> tuple:
    return (s.m, s.k, s.multiplicity, s.dimension)


def verify_branching(
    kmax: int = 5, mmax: int = 3, even_kmax: int = 5
) -> list[CheckResult]:
    results = []

    mismatches = []
    checked = 0
    for k in range(2, kmax + 1):
        for l in range(1, k):
            for m in range(1, mmax + 1):
                checked += 1
                predicted = sorted(map(_summand_key, modules.branch_predict(m, k, l)))
                computed = sorted(map(_summand_key, modules.branch_compute(m, k, l)))
                if predicted != computed:
                    mismatches.append(f"m={m},k={k},l={l}")
    results.append(
        _result(f"block branching predict=compute k<={kmax},m<={mmax}", checked, mismatches)
    )

    mismatches = []
    checked = 0
    for k in range(2, even_kmax + 1):
        checked += 1
        top = modules.Subset.from_elements(2 * k, range(2, 2 * k + 1, 2))
        basis = modules.down_set(top)
        with_last = [s for s in basis if 2 * k in s]
        with_prev = [s for s in basis if 2 * k not in s and 2 * k - 1 in s]
        rest = [s for s in basis if 2 * k not in s and 2 * k - 1 not in s]
        summands = modules.branch_even(k)
        even_dim = next(s.dimension for s in summands if s.multiplicity == 2)
        mixed_dim = next(s.dimension for s in summands if s.multiplicity == 1)
        if not (
            len(with_last) == len(with_prev) == even_dim
            and len(rest) == mixed_dim
        ):
            mismatches.append(f"k={k}: group sizes")
            continue
        # dropping the fixed point must leave the predicted generators' down-sets
        restricted = 2 * (k - 1)
        for group, fixed, top_elems in (
            (with_last, 2 * k, tuple(range(2, 2 * k - 1, 2))),
            (with_prev, 2 * k - 1, tuple(range(2, 2 * k - 1, 2))),
            (rest, None, modules.mixed_subset_elements(k, k - 2)),
        ):
            kept = {
                tuple(x for x in s.elements if x != fixed) for s in group
            }
            expected_top = modules.Subset.from_elements(restricted, top_elems)
            expected = {t.elements for t in modules.down_set(expected_top)}
            if kept != expected:
                mismatches.append(f"k={k}: grouping for fixed={fixed}")
    results.append(
        _result(f"even branching structure 2<=k<={even_kmax}", checked, mismatches)
    )
    return results


# ------------------------------------------------------------- relations


def _random_word(rng: random.Random, nmax: int, max_len: int) -> words.Word:
    n = rng.randint(1, nmax)
    alphabet = [words.l_sym(i) for i in range(1, n)]
    alphabet += [words.e_sym(j) for j in range(1, n + 1)]
    alphabet.append(words.ONE)
    length = rng.randint(0, max_len)
    return words.Word(n, tuple(rng.choice(alphabet) for _ in range(length)))


def verify_relations(
    nmax: int = 8,
    samples: int = 10000,
    seed: int = 0,
    sample_nmax: int = 6,
    sample_len: int = 25,
    exhaustive_n: int = 4,
    exhaustive_len: int = 4,
    bijection_nmax: int = 10,
    roundtrip_n: int = 8,
) -> list[CheckResult]:
    results = []

    mismatches = []
    checked = 0
    for n in range(1, nmax + 1):
        report = words.check_relations(n)
        checked += report.total_instances
        for family in report.families:
            mismatches.extend(f"n={n}: {f}" for f in family.failures)
    results.append(_result(f"defining relations n<={nmax}", checked, mismatches))

    rng = random.Random(seed)
    mismatches = []
    for idx in range(samples):
        w = _random_word(rng, sample_nmax, sample_len)
        if words.std_to_element(words.rewrite(w)) != words.eval_word(w):
            mismatches.append(f"sample {idx}: n={w.n} {w}")
    results.append(
        _result(f"rewrite vs evaluation ({samples} seeded words)", samples, mismatches)
    )

    mismatches = []
    checked = 0
    for w in words.words_over(exhaustive_n, exhaustive_len):
        checked += 1
        if words.rewrite(w) != words.element_to_std(words.eval_word(w)):
            mismatches.append(str(w))
    results.append(
        _result(
            f"rewrite exhaustive, length<={exhaustive_len} at n={exhaustive_n}",
            checked,
            mismatches,
        )
    )

    mismatches = []
    checked = 0
    for n in range(bijection_nmax + 1):
        count = sum(1 for _ in words.enumerate_standard_words(n))
        checked += 1
        if count != counting.catalan(n + 1):
            mismatches.append(f"count n={n}")
    for f in counting.enumerate_bn(roundtrip_n):
        checked += 1
        if words.std_to_element(words.element_to_std(f)) != f:
            mismatches.append(elements.print_element(f))
    for w in words.enumerate_standard_words(min(roundtrip_n, 6)):
        checked += 1
        if words.element_to_std(words.std_to_element(w)) != w:
            mismatches.append(f"S={w.s.elements} T={w.t.elements}")
    results.append(
        _result(f"standard words biject with elements n<={bijection_nmax}", checked, mismatches)
    )
    return results


# ------------------------------------------------------------------- all


SUITES = ("orders", "dims", "identities", "branching", "relations")


def run_suite(
    suite: str,
    *,
    small: bool = False,
    seed: int = 0,
    nmax: int | None = None,
    kmax: int | None = None,
    samples: int | None = None,
) -> list[CheckResult]:
    """Dispatch one suite (or 'all'), mapping the generic bound flags onto
    the suite-specific parameters."""
    if suite == "all":
        out = []
        for name in SUITES:
            out.extend(run_suite(name, small=small, seed=seed))
        return out
    if suite == "orders":
        if small:
            return verify_orders(nmax=nmax or 8, ballot_nmax=6, echelon_nmax=4)
        return verify_orders(nmax=nmax or 11)
    if suite == "dims":
        if small:
            return verify_dims(
                subset_n=8,
                block_max=10,
                even_kmax=6,
                mixed_kmax=6,
                samples=samples or 200,
                random_nmax=6,
                seed=seed,
                basis_nmax=3,
                structure_nmax=4,
            )
        return verify_dims(samples=samples or 1000, seed=seed)
    if suite == "identities":
        if small:
            return verify_identities(kmax=kmax or 10, mkl_max=8, even_kmax=8)
        return verify_identities(kmax=kmax or 15)
    if suite == "branching":
        if small:
            return verify_branching(kmax=kmax or 4, mmax=2, even_kmax=4)
        return verify_branching(kmax=kmax or 5)
    if suite == "relations":
        if small:
            return verify_relations(
                nmax=nmax or 6,
                samples=samples or 1000,
                seed=seed,
                exhaustive_len=3,
                bijection_nmax=8,
                roundtrip_n=6,
            )
        return verify_relations(nmax=nmax or 8, samples=samples or 10000, seed=seed)
    raise ValueError(f"unknown suite {suite!r}")
