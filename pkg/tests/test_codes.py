"""Code containers, oracles, constructions, Reed-Solomon machinery."""

import itertools
import math
from collections import Counter

import pytest

from swcodes import galois
from swcodes.codes import (
    Code,
    ball_size,
    best_coset_intersection,
    concat_construct,
    conjecture_check,
    conjecture_sweep_pairs,
    count_rs_constant_weight,
    exhaustive_optimum,
    iter_rs_codewords,
    iter_rs_csw_subcode,
    max_code_in_words,
    mds_weight_distribution,
    rs_code,
    rs_csw_subcode_size,
    rs_reencode_check,
    rs_weight_census,
    symbol_weight,
    uv_construct,
    word_composition,
)
from swcodes.galois import field


class TestSymbolWeight:
    def test_all_zero(self):
        assert symbol_weight((0,) * 9) == 9

    def test_paper_word(self):
        assert symbol_weight((0, 1, 2, 2, 2, 3, 3, 3)) == 3

    def test_permutation_word(self):
        assert symbol_weight((3, 1, 0, 2)) == 1


class TestCode:
    def test_duplicates_rejected(self):
        with pytest.raises(ValueError):
            Code([(0, 1), (0, 1)], 2)

    def test_min_distance_repetition(self):
        c = Code([(a,) * 5 for a in range(3)], 3)
        assert c.min_distance() == 5

    def test_singleton_distance_flagged(self):
        with pytest.raises(ValueError):
            Code([(0, 1)], 2).min_distance()

    def test_text_roundtrip(self):
        c = Code([(0, 1, 2), (1, 2, 0), (2, 0, 1)], 3)
        back, claims = Code.from_text(c.to_text())
        assert back.words == c.words
        assert claims == {"d": 3, "r": 1}

    def test_json_roundtrip(self):
        c = Code([(0, 0), (1, 1)], 2)
        assert Code.from_json(c.to_json()).words == c.words


class TestBalls:
    def test_paper_examples(self):
        assert ball_size((1, 0, 0), 1, 3, max_weight=2) == 6
        assert ball_size((2, 1, 0), 1, 3, max_weight=2) == 7

    def test_radius_zero(self):
        assert ball_size((2, 1, 0), 0, 3, max_weight=2) == 1


class TestExhaustiveOptimum:
    def test_shift_family_instance(self):
        size, witness = exhaustive_optimum(3, 3, 3, exact_weight=3)
        assert size == 3
        assert witness.min_distance() >= 3

    def test_whole_space_at_distance_one(self):
        size, _ = exhaustive_optimum(3, 3, 1, max_weight=2)
        assert size == 24

    def test_balanced_binary(self):
        size, witness = exhaustive_optimum(4, 2, 4, exact_weight=2)
        assert size == 2
        a, b = witness.words
        assert all(x != y for x, y in zip(a, b))

    def test_matches_independent_bruteforce(self):
        # tiny instance checked against direct subset enumeration
        words = [
            w for w in itertools.product(range(2), repeat=5)
            if max(Counter(w).values()) == 3
        ]
        size, _ = max_code_in_words(words, 3)
        best = 0
        for k in range(len(words), 0, -1):
            if any(
                all(sum(x != y for x, y in zip(a, b)) >= 3
                    for a, b in itertools.combinations(sub, 2))
                for sub in itertools.combinations(words, k)
            ):
                best = k
                break
        assert size == best

    def test_composition_mode(self):
        size, witness = exhaustive_optimum(4, 2, 2, composition=(2, 2))
        assert witness.symbol_weights() == {2}
        assert size >= 3  # e.g. 0011,0101,1001 pairwise distance 2


class TestConstructions:
    def test_uv_example(self):
        c = Code([(0, 1, 2)], 3)
        fpa = Code([(0, 1, 2)], 3)
        d = uv_construct(c, fpa)
        assert d.words == ((0, 1, 2, 0, 1, 2),)
        assert d.symbol_weights() == {2}

    def test_uv_parameters(self):
        c = Code([(0, 1, 2), (1, 2, 0), (2, 0, 1)], 3)  # weight 1, d = 3
        fpa = Code([(0, 1, 2, 0, 1, 2), (1, 2, 0, 1, 2, 0)], 3)  # lambda=2, d'=6
        d = uv_construct(c, fpa)
        assert len(d) == 6
        assert d.symbol_weights() == {3}
        assert d.min_distance() == 3  # min(3, 6)

    def test_uv_rejects_non_fpa(self):
        c = Code([(0, 1, 2)], 3)
        with pytest.raises(ValueError):
            uv_construct(c, Code([(0, 0, 1)], 3))

    def test_concat_single_word(self):
        outer = Code([(0, 1)], 2)
        inner = Code([(0, 1, 0, 1), (1, 0, 1, 0)], 2)  # FPA lambda=2 over Z_2
        d = concat_construct(outer, inner)
        assert d.words == ((0, 1, 0, 1, 1, 0, 1, 0),)
        assert d.symbol_weights() == {4}  # n*lambda = 2*2

    def test_concat_distance_floor(self):
        F = field(5)
        outer = rs_code(F, 2)  # [4,2,3]_5
        perms = [tuple((a + i) % 5 for a in range(5)) for i in range(5)]
        inner = Code(perms, 5)  # FPA lambda=1, pairwise distance 5
        d = concat_construct(outer, inner)
        assert len(d) == len(outer)
        assert d.symbol_weights() == {4}
        assert d.min_distance() >= outer.min_distance() * inner.min_distance()


class TestReedSolomon:
    def test_rs63_parameters(self):
        F = field(7)
        code = rs_code(F, 3)
        assert len(code) == 343
        assert code.min_distance() == 4  # n - k + 1

    def test_k1_constant_words(self):
        F = field(5)
        code = rs_code(F, 1)
        assert len(code) == 5
        assert code.min_distance() == 4  # length n = q-1

    def test_nonconstant_weight_bound(self):
        # non-constant codewords take any value at most k-1 times
        for q in (5, 7, 8, 9):
            F = field(q)
            for k in range(2, q - 1):
                if q ** k > 20000:
                    break
                census = rs_weight_census(F, k)
                nonconst = {w: c for w, c in census.items() if w < q - 1}
                assert max(nonconst) <= k - 1, (q, k)

    def test_census_partition(self):
        F = field(7)
        census = rs_weight_census(F, 3)
        assert sum(census.values()) == 343
        assert census[6] == 7  # constant words have full weight n = 6

    def test_count_by_weight(self):
        F = field(5)
        census = rs_weight_census(F, 2)
        for r in (1,):
            assert count_rs_constant_weight(F, 2, r) == census.get(r, 0)

    def test_reencode_check(self):
        F = field(7)
        word = next(iter_rs_codewords(F, 3))
        assert rs_reencode_check(F, 3, word)
        corrupted = (word[0] + 1) % 7, *word[1:]
        assert not rs_reencode_check(F, 3, corrupted)


class TestCosets:
    def test_whole_space_single_coset(self):
        F = field(5)
        from swcodes.spaces import constant_space_size

        rep, count = best_coset_intersection(F, 4, 1)
        assert count == constant_space_size(4, 5, 1)

    def test_averaging_guarantee(self):
        F = field(5)
        from swcodes.spaces import constant_space_size

        size = constant_space_size(4, 5, 1)
        assert size == 120  # injective words: 5*4*3*2
        rep, count = best_coset_intersection(F, 2, 1)
        assert count >= -(-size // 5 ** 2)
        # independent recount of the winning coset
        xs = list(F.nonzero())
        rep_poly = galois.poly_interpolate(F, xs, list(rep))
        rep_syndrome = (tuple(rep_poly) + (0,) * 4)[2:4]
        recount = 0
        for w in itertools.product(range(5), repeat=4):
            if symbol_weight(w) != 1:
                continue
            c = galois.poly_interpolate(F, xs, list(w))
            if (tuple(c) + (0,) * 4)[2:4] == rep_syndrome:
                recount += 1
        assert recount == count


class TestConstantWeightSubcode:
    def test_gf7_k6_r5(self):
        F = field(7)
        words = list(iter_rs_csw_subcode(F, 6, 5))
        assert len(words) == 36 == rs_csw_subcode_size(F, 6, 5)
        assert len(set(words)) == 36
        assert all(symbol_weight(w) == 5 for w in words)
        assert all(rs_reencode_check(F, 6, w) for w in words)

    def test_gf8_k7_r4(self):
        F = field(8)
        words = list(iter_rs_csw_subcode(F, 7, 4))
        assert len(words) == rs_csw_subcode_size(F, 7, 4)
        assert len(set(words)) == len(words)
        assert all(symbol_weight(w) == 4 for w in words)

    def test_count_at_least_cofactors(self):
        F = field(8)
        assert rs_csw_subcode_size(F, 7, 4) >= galois.count_rootfree_monic(8, 2)

    def test_hypothesis_enforced(self):
        F = field(7)
        with pytest.raises(ValueError):
            list(iter_rs_csw_subcode(F, 3, 2))  # r < n/2


class TestWeightDistribution:
    def test_rs63_b4(self):
        wd = mds_weight_distribution(6, 3, 7)
        assert wd.B[4] == 90

    def test_linear_identities(self):
        wd = mds_weight_distribution(6, 3, 7)
        assert wd.B[0] == 1
        assert all(wd.B[w] == 0 for w in range(1, wd.d))
        assert wd.total() == 7 ** 3

    def test_matches_exhaustive_hamming_weights(self):
        for q, k in [(5, 2), (5, 3), (7, 3), (8, 2)]:
            F = field(q)
            n = q - 1
            wd = mds_weight_distribution(n, k, q)
            hist = Counter()
            for w in iter_rs_codewords(F, k):
                hist[sum(1 for s in w if s)] += 1
            for w in range(n + 1):
                assert wd.B[w] == hist.get(w, 0), (q, k, w)

    def test_first_term_upper(self):
        wd = mds_weight_distribution(6, 3, 7)
        # q > (n-r)/(1-1/q) holds for all r in [0, k-1] here
        for r in range(0, 3):
            w = 6 - r
            assert wd.B[w] <= wd.first_term_upper(w), r

    def test_proposition_bound_gf7_k3(self):
        F = field(7)
        wd = mds_weight_distribution(6, 3, 7)
        census = rs_weight_census(F, 3)
        for r in range(1, 3):
            s_r = census.get(r, 0)
            assert s_r <= 7 * 6 * wd.B[6 - r], r


class TestConjecture:
    def test_gf7_paper_failure(self):
        rep = conjecture_check(field(7), 5, 1)
        entry = {tuple(e["g"]): e["ok"] for e in rep["results"]}
        assert entry[(2, 0, 0, 1)] is False  # x^3 + 2 fails for every alpha
        assert rep["counterexample"]

    def test_degenerate_degree_zero(self):
        rep = conjecture_check(field(7), 5, 4)
        assert rep["cofactor_degree"] == 0
        assert len(rep["results"]) == 1 and rep["results"][0]["ok"]
        assert not rep["counterexample"]

    def test_degree_one_vacuous(self):
        rep = conjecture_check(field(7), 4, 2)
        assert rep["cofactor_degree"] == 1
        assert rep["results"] == [] and "vacuous" in rep

    def test_witness_is_valid(self):
        F = field(9)
        rep = conjecture_check(F, 5, 3)
        for e in rep["results"]:
            assert e["ok"]
            g = tuple(e["g"])
            f = galois.poly_mul(F, galois.poly_from_roots(F, e["witness"]), g)
            assert symbol_weight(galois.evaluation_word(F, f)) == 3

    def test_sweep_pairs_range(self):
        pairs = conjecture_sweep_pairs(7)
        assert all(1 <= r < k < 6 and 2 * r >= k - 1 for k, r in pairs)
        assert (5, 2) in pairs and (5, 1) not in pairs
