"""Field axioms, irreducible counting and enumeration, root-free cofactors."""

import itertools
import random

import pytest

from swcodes.galois import (
    MINUS_INF,
    count_monic_irreducibles,
    count_rootfree_monic,
    evaluation_word,
    field,
    is_irreducible,
    iter_monic_irreducibles,
    iter_rootfree_monic,
    mobius,
    poly_degree,
    poly_divmod,
    poly_eval,
    poly_from_roots,
    poly_interpolate,
    poly_mul,
)

FIELD_SIZES = [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17]


class TestFieldAxioms:
    @pytest.mark.parametrize("q", FIELD_SIZES)
    def test_axioms_random_triples(self, q):
        F = field(q)
        rng = random.Random(q)
        for _ in range(300):
            a, b, c = (rng.randrange(q) for _ in range(3))
            assert F.add(a, b) == F.add(b, a)
            assert F.mul(a, b) == F.mul(b, a)
            assert F.add(F.add(a, b), c) == F.add(a, F.add(b, c))
            assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
            assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
            assert F.add(a, 0) == a
            assert F.mul(a, 1) == a
            assert F.add(a, F.neg(a)) == 0
            if a:
                assert F.mul(a, F.inv(a)) == 1

    def test_gf7_product(self):
        assert field(7).mul(3, 5) == 1

    def test_zero_inverse_raises(self):
        with pytest.raises(ZeroDivisionError):
            field(5).inv(0)

    def test_not_prime_power(self):
        with pytest.raises(ValueError):
            field(6)

    def test_modulus_is_irreducible(self):
        for q in (4, 8, 9, 16, 25, 27):
            F = field(q)
            assert is_irreducible(field(F.p), F.modulus)
            assert poly_degree(F.modulus) == F.m

    def test_pow(self):
        F = field(9)
        for a in F.nonzero():
            assert F.pow(a, F.q - 1) == 1  # multiplicative group order


class TestPolynomials:
    def test_divmod_roundtrip(self):
        F = field(7)
        rng = random.Random(3)
        for _ in range(100):
            a = tuple(rng.randrange(7) for _ in range(rng.randrange(1, 6)))
            b = tuple(rng.randrange(7) for _ in range(rng.randrange(1, 4)))
            if not any(b):
                continue
            quo, rem = poly_divmod(F, a, b)
            back = poly_mul(F, quo, b)
            total = tuple(
                F.add(x, y)
                for x, y in itertools.zip_longest(back, rem, fillvalue=0)
            )
            assert total == tuple(a[: len(total)]) + (0,) * (len(total) - len(a))

    def test_eval_from_roots(self):
        F = field(11)
        f = poly_from_roots(F, [2, 5, 7], lead=3)
        for x in F.elements():
            expected = F.mul(3, F.mul(F.sub(x, 2), F.mul(F.sub(x, 5), F.sub(x, 7))))
            assert poly_eval(F, f, x) == expected

    def test_interpolation_roundtrip(self):
        F = field(8)
        rng = random.Random(8)
        coeffs = tuple(rng.randrange(8) for _ in range(4))
        xs = list(F.nonzero())
        ys = [poly_eval(F, coeffs, x) for x in xs]
        back = poly_interpolate(F, xs, ys)
        assert back == tuple(coeffs[: len(back)]) + (0,) * max(0, len(back) - len(coeffs))

    def test_zero_degree_sentinel(self):
        assert poly_degree(()) == MINUS_INF

    def test_evaluation_word_identity(self):
        F = field(5)
        assert evaluation_word(F, (0, 1)) == (1, 2, 3, 4)

    def test_evaluation_word_constant(self):
        F = field(7)
        assert evaluation_word(F, (3,)) == (3,) * 6

    def test_evaluation_word_cubic(self):
        # f = x^3 + 2 over GF(7), evaluated by hand at 1..6
        F = field(7)
        want = tuple((x ** 3 + 2) % 7 for x in range(1, 7))
        assert evaluation_word(F, (2, 0, 0, 1)) == want


class TestMobius:
    def test_values(self):
        assert mobius(1) == 1
        assert mobius(6) == 1
        assert mobius(12) == 0
        assert mobius(30) == -1
        assert mobius(7) == -1

    def test_divisor_sum_vanishes(self):
        for n in range(2, 60):
            assert sum(mobius(d) for d in range(1, n + 1) if n % d == 0) == 0


class TestIrreducibleCounting:
    def test_examples(self):
        assert count_monic_irreducibles(2, 2) == 1
        assert count_monic_irreducibles(7, 1) == 7
        assert count_monic_irreducibles(7, 3) == 112

    def test_gf2_degree2(self):
        assert list(iter_monic_irreducibles(field(2), 2)) == [(1, 1, 1)]

    def test_linear(self):
        assert len(list(iter_monic_irreducibles(field(7), 1))) == 7

    @pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9])
    def test_enumeration_matches_count(self, q):
        F = field(q)
        for t in range(1, 5):
            if q ** t > 10000:
                continue
            polys = list(iter_monic_irreducibles(F, t))
            assert len(polys) == count_monic_irreducibles(q, t), (q, t)
            assert len(set(polys)) == len(polys)

    def test_gf7_contains_paper_cubic(self):
        assert (2, 0, 0, 1) in set(iter_monic_irreducibles(field(7), 3))


class TestRootFree:
    def test_degree_zero_and_one(self):
        F = field(7)
        assert list(iter_rootfree_monic(F, 0)) == [(1,)]
        assert list(iter_rootfree_monic(F, 1)) == []

    def test_gf7_cubics_are_the_irreducibles(self):
        F = field(7)
        rootfree = list(iter_rootfree_monic(F, 3))
        # independent brute force: monic cubics with no roots
        brute = []
        for tail in itertools.product(range(7), repeat=3):
            c = tail + (1,)
            if all(poly_eval(F, c, x) != 0 for x in range(7)):
                brute.append(c)
        assert sorted(rootfree) == sorted(brute)
        assert len(rootfree) == 112 == count_rootfree_monic(7, 3)

    def test_closed_form_matches_enumeration(self):
        for q in (3, 4, 5, 8):
            F = field(q)
            for t in (2, 3):
                assert len(list(iter_rootfree_monic(F, t))) == count_rootfree_monic(q, t)

    def test_everything_evaluates_nonzero(self):
        F = field(9)
        for c in iter_rootfree_monic(F, 2):
            assert all(poly_eval(F, c, x) != 0 for x in F.elements())

    def test_numpy_prefilter_agrees(self):
        # prime field large enough to trigger the vectorised path
        F = field(13)
        fast = list(iter_rootfree_monic(F, 4))
        assert len(fast) == count_rootfree_monic(13, 4)
        rng = random.Random(4)
        for c in rng.sample(fast, 50):
            assert all(poly_eval(F, c, x) != 0 for x in F.elements())
