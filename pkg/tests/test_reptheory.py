"""Cyclotomic arithmetic, characters of N, induction, the irreducible
inventory, and the isotypic dimension bookkeeping."""

import random
from fractions import Fraction

import pytest

from pgonal.covers import CoverParams, genus_closed_forms
from pgonal.galois import enumerate_maximal_subgroups, p_orbits_on_subgroups
from pgonal.reptheory import (
    Character,
    CycloNum,
    NCharacter,
    characters_of_N,
    frobenius_schur_indicator,
    induce_character,
    irreducible_characters,
    isotypic_dimensions,
    one_dim_characters,
    psi_character,
    verify_irreducible_inventory,
)

from conftest import get_model


def random_cyclo(rng, p):
    return CycloNum(p, [Fraction(rng.randint(-4, 4), rng.randint(1, 5))
                        for _ in range(p - 1)])


class TestCycloNum:
    @pytest.mark.parametrize("p", [3, 5, 7])
    def test_all_roots_sum_to_zero(self, p):
        total = CycloNum.zero(p)
        for k in range(p):
            total = total + CycloNum.root_power(p, k)
        assert total == CycloNum.zero(p)
        assert not total

    def test_root_powers_multiply_by_exponent_addition(self):
        p = 5
        for a in range(p):
            for b in range(p):
                lhs = CycloNum.root_power(p, a) * CycloNum.root_power(p, b)
                assert lhs == CycloNum.root_power(p, a + b)

    def test_conjugation_is_an_involution(self):
        rng = random.Random(3)
        for p in (3, 5, 7):
            for _ in range(20):
                x = random_cyclo(rng, p)
                assert x.conjugate().conjugate() == x

    def test_conjugation_is_multiplicative(self):
        rng = random.Random(5)
        for _ in range(20):
            x, y = random_cyclo(rng, 5), random_cyclo(rng, 5)
            assert (x * y).conjugate() == x.conjugate() * y.conjugate()

    def test_multiplication_commutative_associative(self):
        rng = random.Random(7)
        for _ in range(20):
            x, y, z = (random_cyclo(rng, 7) for _ in range(3))
            assert x * y == y * x
            assert (x * y) * z == x * (y * z)

    def test_rational_detection(self):
        x = CycloNum.from_rational(5, Fraction(3, 2))
        assert x.is_rational() and x.rational_value() == Fraction(3, 2)
        assert not CycloNum.root_power(5, 1).is_rational()
        with pytest.raises(ValueError):
            CycloNum.root_power(5, 2).rational_value()

    def test_norm_of_root_is_one(self):
        z = CycloNum.root_power(7, 3)
        assert z * z.conjugate() == CycloNum.one(7)

    def test_mixed_orders_rejected(self):
        with pytest.raises(ValueError, match="mixed"):
            CycloNum.one(3) + CycloNum.one(5)

    def test_canonical_equality(self):
        # zeta^(p-1) written two ways reduces to one canonical form.
        p = 5
        direct = CycloNum.root_power(p, p - 1)
        folded = -(CycloNum.one(p) + CycloNum.root_power(p, 1)
                   + CycloNum.root_power(p, 2) + CycloNum.root_power(p, 3))
        assert direct == folded
        assert hash(direct) == hash(folded)


class TestCharactersOfN:
    def test_trivial_kernel_is_n(self, model3):
        chars = characters_of_N(model3)
        assert chars[0].is_trivial()
        assert chars[0].kernel() == model3.N

    def test_p3_inventory(self, model3):
        chars = characters_of_N(model3)
        assert len(chars) == 4
        kernels_found = [c.kernel() for c in chars[1:]]
        assert kernels_found == enumerate_maximal_subgroups(model3)

    def test_p5_count_and_kernel_bijection(self, model5):
        chars = characters_of_N(model5)
        assert len(chars) == 16
        assert [c.kernel() for c in chars[1:]] == enumerate_maximal_subgroups(model5)

    def test_orbit_structures_match(self, model5):
        # The functional-level action on characters and the subgroup-level
        # conjugation orbits give the same partition through kernels.
        subs = enumerate_maximal_subgroups(model5)
        orbits = p_orbits_on_subgroups(model5, subs)
        orbit_of = {}
        for k, orbit in enumerate(orbits):
            for sub in orbit:
                orbit_of[sub.bitset] = k
        G = model5.G
        for chi in characters_of_N(model5)[1:]:
            conj_values = {
                idx: chi.value(G.conjugate(idx, model5.sigma))
                for idx in model5.N.indices()
            }
            conj_kernel_bits = 0
            for idx, v in conj_values.items():
                if v == 1:
                    conj_kernel_bits |= 1 << idx
            assert orbit_of[conj_kernel_bits] == orbit_of[chi.kernel().bitset]

    def test_values_are_signs(self, model3):
        for chi in characters_of_N(model3):
            for idx in model3.N.indices():
                assert chi.value(idx) in (1, -1)


class TestInduction:
    def test_trivial_character_rejected(self, model3):
        with pytest.raises(ValueError, match="trivial"):
            induce_character(model3, NCharacter(model3, 0))

    def test_degree_p_supported_on_n(self, model3):
        theta = induce_character(model3, NCharacter(model3, 1))
        assert theta.degree == 3
        classes = model3.G.conjugacy_classes()
        for cls, value in zip(classes, theta.values):
            if not model3.N.contains(cls[0]):
                assert value == CycloNum.zero(3)

    def test_value_on_involution_class(self, model3):
        # Sum of the three character values over the conjugates of s1:
        # one +1 (the kernel member pattern) and two -1 in some order.
        theta = induce_character(model3, NCharacter(model3, 1))
        cls = model3.G.class_of(model3.s[0])
        assert theta.values[cls] == CycloNum.from_rational(3, -1)

    def test_integer_valued(self, model5):
        for f in (1, 2, 3):
            theta = induce_character(model5, NCharacter(model5, f))
            assert theta.is_integer_valued()

    def test_unit_norm(self, model5):
        theta = induce_character(model5, NCharacter(model5, 1))
        assert theta.norm() == CycloNum.one(5)

    def test_orbit_members_induce_the_same_character(self, model5):
        subs = enumerate_maximal_subgroups(model5)
        orbit = p_orbits_on_subgroups(model5, subs)[0]
        from pgonal.galois import subgroup_functional

        induced = [
            induce_character(
                model5, NCharacter(model5, subgroup_functional(model5, sub))
            ).values
            for sub in orbit
        ]
        assert all(vals == induced[0] for vals in induced)


class TestOneDims:
    def test_trivial_character_norm(self, model3):
        rho0 = one_dim_characters(model3)[0]
        assert rho0.degree == 1
        assert rho0.norm() == CycloNum.one(3)
        assert all(v == CycloNum.one(3) for v in rho0.values)

    def test_psi_value_at_sigma_is_minus_one(self, model3, model5):
        for model in (model3, model5):
            psi = psi_character(model)
            cls = model.G.class_of(model.sigma)
            assert psi.values[cls] == CycloNum.from_rational(model.p, -1)

    def test_psi_on_n_is_p_minus_one(self, model5):
        psi = psi_character(model5)
        cls = model5.G.class_of(model5.s[0])
        assert psi.values[cls] == CycloNum.from_rational(5, 4)
        assert psi.degree == 4
        assert psi.is_integer_valued()


class TestInventory:
    @pytest.mark.parametrize("p", [3, 5, 7])
    def test_all_checks_pass(self, p):
        report = verify_irreducible_inventory(get_model(p))
        assert report.passed, [c.name for c in report.failures()]

    def test_p3_degrees(self, model3):
        one_dims, induced = irreducible_characters(model3)
        assert sorted(c.degree for c in one_dims + induced) == [1, 1, 1, 3]
        assert sum(c.degree**2 for c in one_dims + induced) == 12

    def test_p5_degrees(self, model5):
        one_dims, induced = irreducible_characters(model5)
        degrees = sorted(c.degree for c in one_dims + induced)
        assert degrees == [1] * 5 + [5] * 3
        assert sum(d**2 for d in degrees) == 80

    def test_row_sums_vanish_for_nontrivial(self, model5):
        # sum over the group of chi(g) is |G| <chi, trivial>.
        G = model5.G
        classes = G.conjugacy_classes()
        one_dims, induced = irreducible_characters(model5)
        for chi in one_dims[1:] + induced:
            total = CycloNum.zero(5)
            for cls, value in zip(classes, chi.values):
                total = total + len(cls) * value
            assert total == CycloNum.zero(5)

    def test_column_orthogonality(self, model3):
        G = model3.G
        classes = G.conjugacy_classes()
        one_dims, induced = irreducible_characters(model3)
        chars = one_dims + induced
        for a in range(len(classes)):
            for b in range(len(classes)):
                total = CycloNum.zero(3)
                for chi in chars:
                    total = total + chi.values[a] * chi.values[b].conjugate()
                expected = (
                    CycloNum.from_rational(3, G.order // len(classes[a]))
                    if a == b
                    else CycloNum.zero(3)
                )
                assert total == expected

    def test_fs_indicator_values(self, model5):
        one_dims, induced = irreducible_characters(model5)
        for theta in induced:
            assert frobenius_schur_indicator(theta) == CycloNum.one(5)
        # Nontrivial one-dims pair off by conjugation: indicator 0.
        for rho in one_dims[1:]:
            assert frobenius_schur_indicator(rho) == CycloNum.zero(5)


class TestIsotypicDimensions:
    @pytest.mark.parametrize(
        "p,beta,expected_total",
        [(3, 4, 5), (5, 3, 17), (3, 3, 1)],
    )
    def test_totals(self, p, beta, expected_total):
        model = get_model(p)
        table = genus_closed_forms(CoverParams(p, beta), model.m)
        iso = isotypic_dimensions(table, p)
        assert iso.report.passed
        assert iso.total == expected_total == table.g_Z
        assert iso.dim_trivial == 0
        assert iso.dim_psi == table.g_X
        assert iso.n_psi == 1 and iso.n_theta == p

    def test_mismatch_reported_not_raised(self, model3):
        import dataclasses

        table = genus_closed_forms(CoverParams(3, 4), model3.m)
        broken = dataclasses.replace(table, g_Z=table.g_Z + 1)
        iso = isotypic_dimensions(broken, 3)
        assert not iso.report.passed
