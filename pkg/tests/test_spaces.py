"""Space sizes against brute-force scans, entropy, asymptotic rates."""

import itertools
import math
from collections import Counter

import pytest

from swcodes.spaces import (
    AsymptoticRegime,
    asymptotic_space_rate,
    bounded_space_size,
    constant_space_size,
    count_exact_weight_compositions,
    empirical_space_rate,
    min_symbols_at_weight,
    multinomial,
    q_ary_entropy,
)


def scan_weight_histogram(n, q):
    """Independent oracle: symbol-weight histogram of Z_q^n by full scan."""
    hist = Counter()
    for w in itertools.product(range(q), repeat=n):
        hist[max(Counter(w).values())] += 1
    return hist


class TestK0:
    def test_examples(self):
        assert min_symbols_at_weight(24, 8, 5) == 1
        assert min_symbols_at_weight(24, 8, 3) == 8  # n = rq forces all symbols full
        assert min_symbols_at_weight(7, 3, 3) == 1

    def test_branch_consistency(self):
        # at the optimal weight r = ceil(n/q) = (n+D)/q the value is q - D
        for n in range(1, 30):
            for q in range(2, 8):
                r = -(-n // q)
                delta = r * q - n
                assert min_symbols_at_weight(n, q, r) == q - delta


class TestExactWeightCompositionCount:
    def test_trivial(self):
        assert count_exact_weight_compositions(3, 3, 1) == 1
        assert count_exact_weight_compositions(3, 3, 3) == 3

    def test_derived_6_3_3(self):
        comps = [
            v for v in itertools.product(range(7), repeat=3)
            if sum(v) == 6 and max(v) == 3
        ]
        assert count_exact_weight_compositions(6, 3, 3) == len(comps) == 9

    def test_sums_to_all_compositions(self):
        for n in range(1, 12):
            for q in range(1, 6):
                total = sum(
                    count_exact_weight_compositions(n, q, r)
                    for r in range(-(-n // q), n + 1)
                )
                assert total == math.comb(n + q - 1, q - 1), (n, q)


class TestSizes:
    def test_trivial_examples(self):
        assert constant_space_size(3, 3, 1) == 6
        assert constant_space_size(3, 3, 3) == 3
        assert bounded_space_size(3, 3, 3) == 27

    def test_paper_bounded_24(self):
        assert bounded_space_size(3, 3, 2) == 24

    def test_derived(self):
        assert constant_space_size(3, 3, 2) == 18
        assert bounded_space_size(4, 2, 2) == math.comb(4, 2)

    def test_against_scan_small_grid(self):
        for n, q in [(4, 2), (5, 2), (3, 3), (4, 3), (2, 5), (3, 4)]:
            hist = scan_weight_histogram(n, q)
            for r in range(-(-n // q), n + 1):
                assert constant_space_size(n, q, r) == hist.get(r, 0), (n, q, r)
                want_b = sum(v for w, v in hist.items() if w <= r)
                assert bounded_space_size(n, q, r) == want_b, (n, q, r)

    def test_partition_identity(self):
        for n, q in [(5, 3), (4, 4), (6, 2), (3, 5)]:
            total = sum(
                constant_space_size(n, q, r) for r in range(-(-n // q), n + 1)
            )
            assert total == q ** n

    def test_bounded_difference_is_exact(self):
        for n, q in [(6, 3), (5, 4), (7, 2)]:
            for r in range(-(-n // q) + 1, n + 1):
                assert (
                    bounded_space_size(n, q, r) - bounded_space_size(n, q, r - 1)
                    == constant_space_size(n, q, r)
                )

    def test_no_constraint(self):
        for n, q in [(4, 3), (5, 2)]:
            assert bounded_space_size(n, q, n) == q ** n

    def test_multinomial(self):
        assert multinomial(6, (3, 2, 1)) == 60
        assert multinomial(5, (5,)) == 1


class TestEntropy:
    def test_conventions(self):
        assert q_ary_entropy(0, 5) == 0.0
        assert q_ary_entropy(0.5, 2) == pytest.approx(1.0)
        for q in (2, 3, 7, 16):
            assert q_ary_entropy((q - 1) / q, q) == pytest.approx(1.0)
        assert q_ary_entropy(1, 4) == pytest.approx(math.log(3, 4))

    def test_domain(self):
        with pytest.raises(ValueError):
            q_ary_entropy(-0.1, 3)
        with pytest.raises(ValueError):
            q_ary_entropy(1.1, 3)


class TestAsymptoticRate:
    def test_optimal_weight(self):
        regime = AsymptoticRegime(3, 0.0, 1 / 3)
        assert asymptotic_space_rate(regime, optimal_weight=True) == 1.0

    def test_full_weight_vanishes(self):
        assert asymptotic_space_rate(AsymptoticRegime(3, 0.0, 1.0)) == 0.0

    def test_growing_q_limit(self):
        assert asymptotic_space_rate(AsymptoticRegime(1, 0.5, 0.4)) == pytest.approx(0.6)

    def test_constant_q_matches_entropy(self):
        regime = AsymptoticRegime(3, 0.0, 2 / 3)
        assert asymptotic_space_rate(regime) == pytest.approx(q_ary_entropy(1 / 3, 3))

    def test_empirical_rates_approach_entropy(self):
        # finite-n rates increase toward h_3(1/3) (smaller version of the
        # acceptance check)
        target = q_ary_entropy(1 / 3, 3)
        r12 = empirical_space_rate(12, 3, 8)
        r24 = empirical_space_rate(24, 3, 16)
        assert r12 < r24 < target
