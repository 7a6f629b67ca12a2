"""Permutation arithmetic, cycle structure, and the cycle-notation codec."""

import random

import pytest

from pgonal.perm import Permutation, compose, cycle_type, is_even


def sigma_p(p):
    return Permutation([(i + 1) % p for i in range(p)]
                       + [p + (i + 1) % p for i in range(p)])


def s1_p(p):
    images = list(range(2 * p))
    images[0], images[p] = p, 0
    images[1], images[p + 1] = p + 1, 1
    return Permutation(images)


class TestCompose:
    def test_identity_neutral(self):
        x = Permutation([2, 0, 1, 3])
        e = Permutation.identity(4)
        assert compose(e, x) == x
        assert compose(x, e) == x

    def test_double_cycle_inverse_pair(self):
        for p in (3, 5, 7):
            sigma = sigma_p(p)
            assert compose(sigma, sigma ** (p - 1)) == Permutation.identity(2 * p)

    def test_hand_multiplied_product(self):
        # t1*t2 then sigma for p=3, multiplied out point by point.
        sigma = sigma_p(3)
        t1t2 = s1_p(3)
        prod = compose(t1t2, sigma)
        assert prod.images == (4, 5, 0, 1, 2, 3)

    def test_degree_mismatch_rejected(self):
        with pytest.raises(ValueError, match="degree mismatch"):
            compose(Permutation.identity(4), Permutation.identity(6))


class TestCycleStructure:
    def test_identity_cycle_type(self):
        assert cycle_type(Permutation.identity(6)) == (1, 1, 1, 1, 1, 1)

    def test_double_p_cycle(self):
        assert cycle_type(sigma_p(3)) == (3, 3)
        assert cycle_type(sigma_p(5)) == (5, 5)

    def test_two_transposition_type(self):
        assert cycle_type(s1_p(3)) == (1, 1, 2, 2)

    def test_cycle_type_sums_to_degree(self):
        rng = random.Random(7)
        for _ in range(50):
            n = rng.randrange(1, 12)
            images = list(range(n))
            rng.shuffle(images)
            assert sum(cycle_type(Permutation(images))) == n

    def test_conjugation_invariance(self):
        rng = random.Random(11)
        for _ in range(50):
            n = rng.randrange(2, 10)
            a, g = list(range(n)), list(range(n))
            rng.shuffle(a)
            rng.shuffle(g)
            a, g = Permutation(a), Permutation(g)
            conj = compose(compose(g.inverse(), a), g)
            assert cycle_type(conj) == cycle_type(a)

    def test_order(self):
        assert sigma_p(5).order() == 5
        assert s1_p(3).order() == 2
        assert Permutation.identity(4).order() == 1


class TestParity:
    def test_identity_even(self):
        assert is_even(Permutation.identity(6))

    def test_double_p_cycle_even(self):
        for p in (3, 5, 7, 11):
            assert is_even(sigma_p(p))

    def test_single_transposition_odd(self):
        t1 = Permutation.from_cycles("(1,4)", 6)
        assert not is_even(t1)

    def test_sign_multiplicative(self):
        rng = random.Random(13)
        for _ in range(100):
            n = rng.randrange(2, 10)
            a, b = list(range(n)), list(range(n))
            rng.shuffle(a)
            rng.shuffle(b)
            a, b = Permutation(a), Permutation(b)
            assert is_even(compose(a, b)) == (is_even(a) == is_even(b))


class TestGroupLaws:
    def test_associativity_exhaustive_small(self):
        # Exhaustive over the 24 degree-4 permutations' triples sampled
        # down, plus full triples over S3.
        from itertools import permutations as iperm

        s3 = [Permutation(p) for p in iperm(range(3))]
        for a in s3:
            for b in s3:
                for c in s3:
                    assert compose(compose(a, b), c) == compose(a, compose(b, c))

    def test_associativity_random(self):
        rng = random.Random(17)
        for _ in range(100):
            n = rng.randrange(2, 9)
            trip = []
            for _ in range(3):
                images = list(range(n))
                rng.shuffle(images)
                trip.append(Permutation(images))
            a, b, c = trip
            assert compose(compose(a, b), c) == compose(a, compose(b, c))

    def test_inverse_roundtrip(self):
        rng = random.Random(19)
        for _ in range(100):
            n = rng.randrange(1, 9)
            images = list(range(n))
            rng.shuffle(images)
            a = Permutation(images)
            assert compose(a, a.inverse()) == Permutation.identity(n)
            assert compose(a.inverse(), a) == Permutation.identity(n)

    def test_power(self):
        sigma = sigma_p(5)
        assert sigma**0 == Permutation.identity(10)
        assert sigma**5 == Permutation.identity(10)
        assert sigma**-1 == sigma.inverse()
        assert sigma**7 == compose(sigma, sigma)


class TestValidation:
    def test_rejects_non_bijection(self):
        with pytest.raises(ValueError, match="repeated"):
            Permutation([0, 0, 1])

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError, match="out of range"):
            Permutation([0, 3])


class TestCycleNotation:
    def test_identity_prints_as_unit(self):
        assert Permutation.identity(6).cycle_string() == "()"

    def test_one_based_output(self):
        assert sigma_p(3).cycle_string() == "(1,2,3)(4,5,6)"
        assert s1_p(3).cycle_string() == "(1,4)(2,5)"

    def test_parse_round_trip(self):
        rng = random.Random(23)
        for _ in range(50):
            n = rng.randrange(1, 12)
            images = list(range(n))
            rng.shuffle(images)
            a = Permutation(images)
            assert Permutation.from_cycles(a.cycle_string(), n) == a

    def test_whitespace_insensitive(self):
        a = Permutation.from_cycles(" ( 1 , 2 , 3 ) ( 4 , 5 , 6 ) ", 6)
        assert a == sigma_p(3)
        assert Permutation.from_cycles(" ( ) ", 4) == Permutation.identity(4)

    def test_rejects_garbage(self):
        with pytest.raises(ValueError):
            Permutation.from_cycles("(1,2", 4)
        with pytest.raises(ValueError):
            Permutation.from_cycles("(1)(2)", 4)
        with pytest.raises(ValueError):
            Permutation.from_cycles("(1,2)(2,3)", 4)
        with pytest.raises(ValueError):
            Permutation.from_cycles("(1,9)", 4)
