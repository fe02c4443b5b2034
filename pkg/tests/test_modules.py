import random
from fractions import Fraction
from itertools import combinations, product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from trirook import (
    CardinalityMismatch,
    DimensionMismatch,
    IndexOutOfRange,
    InvalidRange,
    ModuleVector,
    NotDownClosed,
    ReducedSupport,
    Subset,
    act,
    act_on_subset,
    basis_vector,
    bold,
    branch_compute,
    branch_even,
    branch_predict,
    catalan,
    catalan_via_gamma,
    compose,
    cyclic_span,
    decompose,
    dim_cyclic,
    dim_mixed,
    dim_oracle,
    dim_recursion,
    dim_single,
    down_set,
    binom,
    is_indecomposable,
    make_partial_map,
    meet,
    minimal_irreducible,
    mixed_subset,
    mixed_subset_elements,
    reduced_form,
    reduced_generator_of_span,
    reduced_support,
    restriction_identity,
    subset_leq,
    top_block,
    zero_map,
)

from conftest import bn


def S(n, *elems):
    return Subset.from_elements(n, elems)


def ksubsets(n, k):
    return [S(n, *c) for c in combinations(range(1, n + 1), k)]


class TestSubsetOrder:
    def test_examples(self):
        assert subset_leq(S(4, 1, 3), S(4, 2, 4))
        assert not subset_leq(S(4, 1), S(4, 1, 2))
        assert subset_leq(S(4, 2, 4), S(4, 2, 4))

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            subset_leq(S(3, 1), S(4, 1))

    def test_poset_axioms_exhaustive(self):
        n = 5
        for k in range(n + 1):
            layer = ksubsets(n, k)
            for a in layer:
                assert subset_leq(a, a)
            for a, b in product(layer, repeat=2):
                if subset_leq(a, b) and subset_leq(b, a):
                    assert a == b
            for a, b, c in product(layer, repeat=3):
                if subset_leq(a, b) and subset_leq(b, c):
                    assert subset_leq(a, c)

    def test_incomparable_across_sizes(self):
        for a in ksubsets(4, 1):
            for b in ksubsets(4, 2):
                assert not subset_leq(a, b)
                assert not subset_leq(b, a)


class TestMeet:
    def test_example(self):
        assert meet(S(5, 2, 5), S(5, 3, 4)) == S(5, 2, 4)

    def test_idempotent(self):
        s = S(6, 1, 4, 6)
        assert meet(s, s) == s

    def test_cardinality_mismatch(self):
        with pytest.raises(CardinalityMismatch):
            meet(S(4, 1), S(4, 1, 2))

    def test_is_greatest_lower_bound(self):
        layer = ksubsets(6, 3)
        for a, b in combinations(layer, 2):
            glb = meet(a, b)
            assert subset_leq(glb, a) and subset_leq(glb, b)
            for u in layer:
                if subset_leq(u, a) and subset_leq(u, b):
                    assert subset_leq(u, glb)

    def test_span_intersection(self):
        # span(meet) = span intersection, over all 2-subset pairs of {1..5}
        for a, b in combinations(ksubsets(5, 2), 2):
            lhs = {t.mask for t in down_set(meet(a, b))}
            rhs = {t.mask for t in down_set(a)} & {t.mask for t in down_set(b)}
            assert lhs == rhs


class TestAction:
    def test_restriction_fixes_its_own_subset(self):
        s = S(5, 2, 4)
        f = restriction_identity(5, [2, 4])
        assert act(f, basis_vector(s)) == basis_vector(s)

    def test_zero_map_kills(self):
        assert act(zero_map(3), basis_vector(S(3, 1))).is_zero

    def test_partial_overlap_kills(self):
        f = restriction_identity(4, [1, 2])
        assert act(f, basis_vector(S(4, 2, 3))).is_zero

    def test_action_axiom_exhaustive_b3(self):
        vectors = [basis_vector(Subset(3, m)) for m in range(8)]
        for f, g in product(bn(3), repeat=2):
            fg = compose(f, g)
            for v in vectors:
                assert act(f, act(g, v)) == act(fg, v)

    def test_identity_acts_trivially(self):
        v = ModuleVector.from_terms(4, [(S(4, 1, 3), 2), (S(4, 2), Fraction(-1, 3))])
        assert act(make_partial_map(4, [(i, i) for i in range(1, 5)]), v) == v

    def test_action_axiom_sampled_b4(self):
        rng = random.Random(3)
        members = bn(4)
        for _ in range(500):
            f, g = rng.choice(members), rng.choice(members)
            v = ModuleVector.from_terms(
                4, [(Subset(4, rng.randrange(16)), rng.choice([1, -2, 3]))]
            )
            assert act(f, act(g, v)) == act(compose(f, g), v)

    def test_linearity(self):
        f = make_partial_map(3, [(2, 1), (3, 2)])
        u = ModuleVector.from_terms(3, [(S(3, 2), 1), (S(3, 2, 3), 3)])
        v = ModuleVector.from_terms(3, [(S(3, 2), Fraction(1, 2)), (S(3, 3), -1)])
        assert act(f, u + v) == act(f, u) + act(f, v)
        assert act(f, 5 * u) == 5 * act(f, u)

    def test_act_on_subset(self):
        f = make_partial_map(4, [(2, 1), (3, 2), (4, 4)])
        assert act_on_subset(f, S(4, 2, 4)) == S(4, 1, 4)
        assert act_on_subset(f, S(4, 1, 2)) is None


class TestDownSet:
    def test_example(self):
        got = {t.elements for t in down_set(S(4, 2, 4))}
        assert got == {(1, 2), (1, 3), (1, 4), (2, 3), (2, 4)}

    def test_least_subset_is_alone(self):
        assert down_set(bold(5, 3)) == (bold(5, 3),)

    def test_top_block_spans_layer(self):
        for k in range(5):
            assert len(down_set(top_block(4, k))) == binom(4, k)

    def test_containment_criterion(self):
        # down(T) within down(S) exactly when T <= S, all equal-size pairs
        n = 5
        for k in range(n + 1):
            layer = ksubsets(n, k)
            for a, b in product(layer, repeat=2):
                nested = {t.mask for t in down_set(a)} <= {t.mask for t in down_set(b)}
                assert nested == subset_leq(a, b)


class TestSpan:
    def test_single_term(self):
        v = basis_vector(S(5, 2, 4))
        assert cyclic_span(v) == down_set(S(5, 2, 4))

    def test_two_singletons(self):
        v = ModuleVector.from_terms(3, [(S(3, 1), 1), (S(3, 2), 1)])
        assert {t.elements for t in cyclic_span(v)} == {(1,), (2,)}

    def test_support_vectors_are_reachable(self):
        # the extraction procedure: peel off minimal-cardinality layers by
        # acting with restriction idempotents, then subtract and recurse
        rng = random.Random(7)
        for _ in range(50):
            n = rng.randint(1, 6)
            terms = [
                (Subset(n, rng.randrange(1 << n)), Fraction(rng.choice([-3, -1, 1, 2, 5])))
                for _ in range(rng.randint(1, 4))
            ]
            v = ModuleVector.from_terms(n, terms)
            remaining = v
            seen = set()
            while not remaining.is_zero:
                supp = remaining.support()
                r = min(s.size for s in supp)
                layer = [s for s in supp if s.size == r]
                for s in layer:
                    extracted = act(restriction_identity(n, s.elements), remaining)
                    assert extracted == remaining.coefficient(s) * basis_vector(s)
                    seen.add(s.mask)
                remaining = remaining - ModuleVector.from_terms(
                    n, ((s, remaining.coefficient(s)) for s in layer)
                )
            assert seen == {s.mask for s in v.support()}

    def test_span_closed_under_action(self):
        for n in range(1, 5):
            v = ModuleVector.from_terms(
                n, [(Subset(n, (1 << n) - 1), 1), (Subset(n, 1 << (n - 1)), 1)]
            )
            basis = {s.mask for s in cyclic_span(v)}
            for f in bn(n):
                for mask in basis:
                    image = act_on_subset(f, Subset(n, mask))
                    assert image is None or image.mask in basis


class TestReduction:
    def test_worked_example_n7(self):
        v = ModuleVector.from_terms(
            7,
            [
                (S(7), 1),
                (S(7, 1), -2),
                (S(7, 3), 1),
                (S(7, 1, 2), 5),
                (S(7, 4, 7), 3),
                (S(7, 5, 6), -2),
                (S(7, 1, 2, 3), 1),
            ],
        )
        red = reduced_support(v)
        assert {s.elements for s in red.sets} == {
            (),
            (3,),
            (5, 6),
            (4, 7),
            (1, 2, 3),
        }
        form = reduced_form(v)
        assert all(form.coefficient(s) == 1 for s in red.sets)
        assert len(form.support()) == 5

    def test_zero_vector(self):
        assert reduced_support(ModuleVector.zero(4)).sets == ()
        assert reduced_form(ModuleVector.zero(4)).is_zero

    def test_reduced_form_preserves_span(self):
        rng = random.Random(11)
        for _ in range(100):
            n = rng.randint(1, 6)
            v = ModuleVector.from_terms(
                n,
                (
                    (Subset(n, rng.randrange(1 << n)), rng.choice([-2, -1, 1, 3]))
                    for _ in range(rng.randint(1, 5))
                ),
            )
            assert cyclic_span(reduced_form(v)) == cyclic_span(v)

    def test_antichain_validation(self):
        with pytest.raises(ValueError):
            ReducedSupport(4, (S(4, 1), S(4, 2)))


class TestReducedGenerator:
    def test_full_layer(self):
        basis = ksubsets(5, 2)
        assert reduced_generator_of_span(basis) == basis_vector(top_block(5, 2))

    def test_origin_only(self):
        assert reduced_generator_of_span([S(3)]) == basis_vector(S(3))

    def test_rejects_non_down_closed(self):
        with pytest.raises(NotDownClosed):
            reduced_generator_of_span([S(4, 2)])

    def test_empty_needs_n(self):
        assert reduced_generator_of_span([], n=3).is_zero
        with pytest.raises(ValueError):
            reduced_generator_of_span([])

    def test_round_trip_exhaustive_n3(self):
        closure = {m: [t.mask for t in down_set(Subset(3, m))] for m in range(8)}
        for selector in range(1 << 8):
            members = {m for m in range(8) if selector >> m & 1}
            if not all(t in members for m in members for t in closure[m]):
                continue
            gen = reduced_generator_of_span([Subset(3, m) for m in members], n=3)
            assert {s.mask for s in cyclic_span(gen)} == members


class TestDimensions:
    def test_singletons(self):
        for s1 in range(1, 7):
            assert dim_single(S(7, s1)) == s1

    def test_blocks_are_binomial(self):
        for total in range(1, 9):
            for k in range(1, total + 1):
                m = total - k
                s = Subset.from_elements(total, range(m + 1, m + k + 1))
                assert dim_single(s) == binom(m + k, k)

    def test_even_subsets_are_catalan(self):
        for k in range(1, 7):
            s = Subset.from_elements(2 * k, range(2, 2 * k + 1, 2))
            assert dim_single(s) == catalan(k + 1)

    def test_empty_subset(self):
        assert dim_single(S(3)) == 1
        assert dim_oracle(S(3)) == 1

    def test_oracle_examples(self):
        assert dim_oracle(S(4, 2, 4)) == 5
        assert dim_oracle(bold(5, 3)) == 1

    def test_three_paths_agree_exhaustively(self):
        for mask in range(1, 1 << 8):
            s = Subset(8, mask)
            assert dim_single(s) == dim_oracle(s) == len(down_set(s))

    def test_large_subsets_big_integer_paths(self):
        # far beyond enumeration range: recursion vs subpartition count only
        even = Subset.from_elements(60, range(2, 61, 2))
        assert dim_single(even) == dim_oracle(even) == catalan(31)
        block = Subset.from_elements(40, range(11, 31))
        assert dim_single(block) == dim_oracle(block) == binom(30, 20)
        rng = random.Random(41)
        for _ in range(20):
            elems = sorted(rng.sample(range(1, 41), 12))
            s = Subset.from_elements(40, elems)
            assert dim_single(s) == dim_oracle(s)

    def test_recursion_trace(self):
        trace = dim_recursion(S(8, 2, 4, 6, 8))
        assert trace.lam == (4, 3, 2, 1)
        assert trace.gamma[0] == 1
        assert trace.value == catalan(5)
        assert all(a >= b for a, b in zip(trace.lam, trace.lam[1:]))


class TestDimCyclic:
    def test_single_term(self):
        v = 3 * basis_vector(S(6, 2, 5))
        assert dim_cyclic(v) == dim_single(S(6, 2, 5))

    def test_two_singletons(self):
        v = ModuleVector.from_terms(3, [(S(3, 2), 1), (S(3, 3), 1)])
        assert dim_cyclic(v) == 2 + 3 - 2

    def test_zero(self):
        assert dim_cyclic(ModuleVector.zero(5)) == 0

    def test_matches_span_size(self):
        rng = random.Random(2)
        for _ in range(300):
            n = rng.randint(1, 6)
            v = ModuleVector.from_terms(
                n,
                (
                    (Subset(n, rng.randrange(1 << n)), rng.choice([-1, 1, 2]))
                    for _ in range(rng.randint(1, 5))
                ),
            )
            assert dim_cyclic(v) == len(cyclic_span(v))

    @given(st.data())
    def test_matches_span_size_hypothesis(self, data):
        n = data.draw(st.integers(1, 6))
        terms = data.draw(
            st.lists(
                st.tuples(
                    st.integers(0, (1 << n) - 1),
                    st.integers(-4, 4).filter(bool),
                ),
                min_size=1,
                max_size=5,
            )
        )
        v = ModuleVector.from_terms(n, ((Subset(n, m), c) for m, c in terms))
        assert dim_cyclic(v) == len(cyclic_span(v))


class TestDimMixed:
    def test_shape(self):
        assert mixed_subset_elements(5, 3) == (2, 4, 6, 7, 8)
        assert mixed_subset_elements(3, 0) == (1, 2, 3)
        assert mixed_subset(4, 2).n == 6

    def test_diagonal_is_catalan(self):
        for k in range(2, 9):
            assert dim_mixed(k, k) == catalan(k + 1)

    def test_low_m(self):
        assert dim_mixed(2, 0) == 1
        assert dim_mixed(3, 1) == 4
        assert dim_mixed(1, 1) == 2

    def test_matches_oracle(self):
        for k in range(2, 9):
            for m in range(2, k + 1):
                assert dim_mixed(k, m) == dim_oracle(mixed_subset(k, m))

    def test_invalid(self):
        with pytest.raises(InvalidRange):
            dim_mixed(2, 3)
        with pytest.raises(InvalidRange):
            dim_mixed(2, -1)


class TestCatalanIdentity:
    def test_values(self):
        for k in range(2, 16):
            assert catalan_via_gamma(k) == catalan(k + 1)

    def test_needs_k_at_least_two(self):
        with pytest.raises(InvalidRange):
            catalan_via_gamma(1)


class TestDecomposition:
    def test_single_cardinality_is_indecomposable(self):
        v = basis_vector(S(5, 2, 4))
        assert is_indecomposable(v)
        assert decompose(v) == (v,)

    def test_mixed_cardinalities_split(self):
        v = ModuleVector.from_terms(4, [(S(4), 1), (S(4, 2), 1)])
        assert not is_indecomposable(v)
        parts = decompose(v)
        assert parts == (basis_vector(S(4)), basis_vector(S(4, 2)))

    def test_zero(self):
        assert not is_indecomposable(ModuleVector.zero(3))
        assert decompose(ModuleVector.zero(3)) == ()

    def test_summand_dimensions_add_up(self):
        rng = random.Random(5)
        for _ in range(200):
            n = rng.randint(1, 6)
            v = ModuleVector.from_terms(
                n,
                (
                    (Subset(n, rng.randrange(1 << n)), rng.choice([1, 2, -1]))
                    for _ in range(rng.randint(1, 5))
                ),
            )
            if v.is_zero:
                continue
            parts = decompose(v)
            assert sum(dim_cyclic(p) for p in parts) == dim_cyclic(v)
            spans = [set(s.mask for s in cyclic_span(p)) for p in parts]
            for a, b in combinations(spans, 2):
                assert not (a & b)


class TestMinimalIrreducible:
    def test_k0(self):
        assert minimal_irreducible(0, 3) == basis_vector(S(3))

    def test_k_equals_n(self):
        v = minimal_irreducible(4, 4)
        assert v == basis_vector(bold(4, 4))
        assert len(cyclic_span(v)) == 1

    def test_out_of_range(self):
        with pytest.raises(IndexOutOfRange):
            minimal_irreducible(5, 4)

    def test_contained_in_every_down_set(self):
        for n in range(1, 6):
            for k in range(n + 1):
                least = bold(n, k)
                for s in ksubsets(n, k):
                    assert least.mask in {t.mask for t in down_set(s)}


class TestBranching:
    def test_small_example(self):
        got = {(s.m, s.k, s.multiplicity, s.dimension) for s in branch_predict(1, 2, 1)}
        assert got == {(0, 2, 1, 1), (1, 1, 1, 2)}

    def test_predict_equals_compute(self):
        for k in range(2, 5):
            for l in range(1, k):
                for m in range(1, 3):
                    p = sorted(
                        (s.m, s.k, s.multiplicity, s.dimension)
                        for s in branch_predict(m, k, l)
                    )
                    c = sorted(
                        (s.m, s.k, s.multiplicity, s.dimension)
                        for s in branch_compute(m, k, l)
                    )
                    assert p == c, (m, k, l)

    def test_dimensions_add_up(self):
        for k in range(2, 7):
            for l in range(1, k):
                for m in range(1, 5):
                    total = sum(
                        s.multiplicity * s.dimension for s in branch_predict(m, k, l)
                    )
                    assert total == binom(m + k, k)

    def test_empty_offsets_are_omitted(self):
        # m=1, k=3, l=1: the a=0 group would need 3-subsets of {1, 2}
        summands = branch_predict(1, 3, 1)
        assert all(s.m >= 0 for s in summands)
        assert sum(s.multiplicity * s.dimension for s in summands) == binom(4, 3)

    def test_invalid_ranges(self):
        with pytest.raises(InvalidRange):
            branch_predict(0, 2, 1)
        with pytest.raises(InvalidRange):
            branch_predict(1, 2, 2)
        with pytest.raises(InvalidRange):
            branch_compute(1, 1, 1)


class TestBranchEven:
    def test_k2(self):
        summands = branch_even(2)
        assert [(s.k, s.multiplicity, s.dimension) for s in summands] == [
            (1, 2, 2),
            (2, 1, 1),
        ]
        assert catalan(3) == 2 * 2 + 1

    def test_k3(self):
        summands = branch_even(3)
        assert sum(s.multiplicity * s.dimension for s in summands) == catalan(4)
        assert summands[1].dimension == 4  # mixed module over {2,3,4}

    def test_identity_up_to_k7(self):
        for k in range(2, 8):
            total = sum(s.multiplicity * s.dimension for s in branch_even(k))
            assert total == catalan(k + 1)

    def test_three_case_partition(self):
        for k in range(2, 6):
            top = Subset.from_elements(2 * k, range(2, 2 * k + 1, 2))
            basis = down_set(top)
            with_last = [s for s in basis if 2 * k in s]
            with_prev = [s for s in basis if 2 * k not in s and 2 * k - 1 in s]
            rest = [s for s in basis if 2 * k not in s and 2 * k - 1 not in s]
            assert len(with_last) == len(with_prev) == catalan(k)
            assert len(rest) == dim_mixed(k, k - 2)
            assert len(with_last) + len(with_prev) + len(rest) == len(basis)

    def test_invalid(self):
        with pytest.raises(InvalidRange):
            branch_even(1)
