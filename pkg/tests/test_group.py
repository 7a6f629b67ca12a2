"""Group engine: closure, cosets, actions, conjugacy, subgroup bitsets."""

import pytest

from pgonal.group import GroupSizeError, generate
from pgonal.perm import Permutation

from conftest import get_model


def klein_gens():
    return [
        Permutation.from_cycles("(1,2)(3,4)", 4),
        Permutation.from_cycles("(1,3)(2,4)", 4),
    ]


class TestGenerate:
    def test_trivial_group(self):
        table = generate([Permutation.identity(5)])
        assert table.order == 1
        assert table.index_of_identity == 0

    def test_closure_order_for_p3(self, model3):
        assert model3.G.order == 12

    def test_klein_group_on_four_points(self):
        table = generate(klein_gens())
        assert table.order == 4

    def test_orders_match_odd_prime_family(self):
        for p in (3, 5, 7):
            assert get_model(p).G.order == p * 2 ** (p - 1)

    def test_size_cap_error_names_cap(self):
        with pytest.raises(GroupSizeError, match="size cap of 5"):
            generate([Permutation.from_cycles("(1,2,3,4,5,6,7)", 7)], max_order=5)

    def test_empty_generators_rejected(self):
        with pytest.raises(ValueError):
            generate([])

    def test_mixed_degrees_rejected(self):
        with pytest.raises(ValueError):
            generate([Permutation.identity(4), Permutation.identity(6)])

    def test_canonical_order_is_lexicographic(self, model3):
        rows = model3.G.rows
        for i in range(len(rows) - 1):
            assert tuple(rows[i]) < tuple(rows[i + 1])


class TestMultiplication:
    def test_mul_matches_permutation_composition(self, model3):
        G = model3.G
        for i in range(G.order):
            for j in range(G.order):
                expected = G.perm(i) * G.perm(j)
                assert G.perm(G.mul(i, j)) == expected

    def test_cayley_table_is_latin_square(self, model3):
        G = model3.G
        full = set(range(G.order))
        for i in range(G.order):
            assert {G.mul(i, j) for j in range(G.order)} == full
            assert {G.mul(j, i) for j in range(G.order)} == full

    def test_on_demand_mul_agrees_with_dense(self, model3):
        from pgonal.group import GroupTable

        sparse = GroupTable(model3.G.rows, model3.G.generator_indices, dense_cap=1)
        assert sparse.dense_table is None
        for i in range(sparse.order):
            for j in range(sparse.order):
                assert sparse.mul(i, j) == model3.G.mul(i, j)
        assert [sparse.inv(i) for i in range(sparse.order)] == [
            model3.G.inv(i) for i in range(model3.G.order)
        ]

    def test_inverse_and_power(self, model3):
        G = model3.G
        for i in range(G.order):
            assert G.mul(i, G.inv(i)) == G.index_of_identity
        assert G.power(model3.sigma, 3) == G.index_of_identity
        assert G.power(model3.sigma, -1) == G.inv(model3.sigma)

    def test_element_order(self, model3):
        G = model3.G
        assert G.element_order(G.index_of_identity) == 1
        assert G.element_order(model3.sigma) == 3
        assert G.element_order(model3.s[0]) == 2


class TestSubgroups:
    def test_index_of_member_and_foreigner(self, model3):
        G = model3.G
        assert G.index_of(G.perm(5)) == 5
        with pytest.raises(ValueError, match="not an element"):
            G.index_of(Permutation.from_cycles("(1,2)", 6))

    def test_lagrange_enforced(self, model3):
        from pgonal.group import Subgroup

        with pytest.raises(ValueError, match="divide"):
            Subgroup(model3.G, 0b11111)  # 5 elements in a group of order 12

    def test_identity_required(self, model3):
        from pgonal.group import Subgroup

        with pytest.raises(ValueError, match="identity"):
            Subgroup(model3.G, 0b10)

    def test_validated_construction_rejects_non_closed(self, model3):
        G = model3.G
        indices = [G.index_of_identity, model3.sigma]
        with pytest.raises(ValueError, match="closed"):
            G.subgroup_from_indices(indices, validate=True)

    def test_subgroup_closure(self, model3):
        N = model3.N
        assert N.order == 4
        for a in N.indices():
            for b in N.indices():
                assert N.contains(model3.G.mul(a, b))


class TestCosets:
    def test_whole_group_single_coset(self, model3):
        G = model3.G
        cosets = G.right_cosets(G.whole_group())
        assert len(cosets) == 1 and len(cosets[0]) == G.order

    def test_n_has_three_cosets(self, model3):
        cosets = model3.G.right_cosets(model3.N)
        assert len(cosets) == 3
        assert all(len(c) == 4 for c in cosets)
        assert cosets[0][0] == model3.G.index_of_identity

    def test_h_has_six_cosets(self, model3):
        # |G|/|H| = 2p; enumerated directly.
        cosets = model3.G.right_cosets(model3.H)
        assert len(cosets) == 6
        assert all(len(c) == 2 for c in cosets)

    def test_coset_blocks_ordered_by_min(self, model3):
        cosets = model3.G.right_cosets(model3.N)
        mins = [c[0] for c in cosets]
        assert mins == sorted(mins)


class TestCosetAction:
    def test_whole_group_action_trivial(self, model3):
        G = model3.G
        act = G.coset_action(G.whole_group(), model3.sigma)
        assert act == Permutation.identity(1)

    def test_sigma_cycles_the_n_cosets(self, model3):
        act = model3.G.coset_action(model3.N, model3.sigma)
        assert act.cycle_type() == (3,)

    def test_n_elements_fix_the_n_cosets(self, model3):
        act = model3.G.coset_action(model3.N, model3.s[0])
        assert act == Permutation.identity(3)

    def test_action_is_homomorphism_exhaustive(self, model3):
        G = model3.G
        for sub in (model3.N, model3.H):
            actions = [G.coset_action(sub, g) for g in range(G.order)]
            for g in range(G.order):
                for h in range(G.order):
                    assert actions[g] * actions[h] == actions[G.mul(g, h)]

    def test_action_is_homomorphism_sampled(self, model5):
        import random

        G = model5.G
        rng = random.Random(5)
        for _ in range(200):
            g, h = rng.randrange(G.order), rng.randrange(G.order)
            lhs = G.coset_action(model5.N, g) * G.coset_action(model5.N, h)
            assert lhs == G.coset_action(model5.N, G.mul(g, h))

    def test_action_on_h_cosets_is_faithful(self, model3, model5):
        for model in (model3, model5):
            G = model.G
            ident = Permutation.identity(2 * model.p)
            fixers = [
                g for g in range(G.order)
                if G.coset_action(model.H, g) == ident
            ]
            assert fixers == [G.index_of_identity]

    def test_all_elements_even(self, model3, model5):
        for model in (model3, model5):
            assert all(model.G.perm(i).is_even() for i in range(model.G.order))


class TestConjugacyClasses:
    def test_abelian_classes_are_singletons(self):
        table = generate(klein_gens())
        assert [len(c) for c in table.conjugacy_classes()] == [1, 1, 1, 1]

    def test_p3_class_sizes_match_brute_force(self, model3):
        G = model3.G
        # Independent oracle: conjugate every element by every element.
        brute = []
        seen = set()
        for i in range(G.order):
            if i in seen:
                continue
            orbit = {G.conjugate(i, g) for g in range(G.order)}
            seen |= orbit
            brute.append(sorted(orbit))
        brute.sort(key=lambda c: (len(c), c[0]))
        assert G.conjugacy_classes() == brute
        assert sorted(len(c) for c in brute) == [1, 3, 4, 4]

    def test_p5_class_count(self, model5):
        assert len(model5.G.conjugacy_classes()) == 8

    def test_class_equation(self, model3, model5, model7):
        for model in (model3, model5, model7):
            sizes = [len(c) for c in model.G.conjugacy_classes()]
            assert sum(sizes) == model.G.order
            assert model.G.conjugacy_classes()[0] == [model.G.index_of_identity]


class TestNormality:
    def test_trivial_subgroup_normal(self, model3):
        assert model3.G.is_normal(model3.G.trivial_subgroup())

    def test_n_is_normal(self, model3, model5):
        for model in (model3, model5):
            assert model.G.is_normal(model.N)

    def test_h_is_not_normal(self, model3):
        # Conjugating H by sigma gives a different index-2 subgroup of N.
        assert not model3.G.is_normal(model3.H)
        conj = model3.H.conjugate_by(model3.sigma)
        assert conj != model3.H
