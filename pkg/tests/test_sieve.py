import math
import random

import pytest

from ssmodpoly.arith import quad_extension
from ssmodpoly.ec import curve_from_j, is_supersingular_j
from ssmodpoly.errors import BadReduction, RangeTooLarge
from ssmodpoly.oracles import count_points
from ssmodpoly.sieve import (CrtPrimeSet, segmented_primes, select_primes_bigchar,
                             select_primes_biglevel, supersingular_reduction_test)


def trial_division(n):
    return n >= 2 and all(n % d for d in range(2, math.isqrt(n) + 1))


def test_examples():
    assert segmented_primes(10, 30).to_list() == [11, 13, 17, 19, 23, 29]
    assert segmented_primes(2, 2).to_list() == [2]
    assert segmented_primes(0, 1).to_list() == []


def test_against_trial_division():
    lo, hi = 10 ** 6, 10 ** 6 + 10 ** 4
    assert segmented_primes(lo, hi).to_list() == [n for n in range(lo, hi + 1) if trial_division(n)]


@pytest.mark.parametrize("segment", [1, 7, 100, 1 << 16])
def test_segment_partition_independent(segment):
    ref = segmented_primes(5000, 20000).to_list()
    assert segmented_primes(5000, 20000, segment=segment).to_list() == ref


def test_range_limit():
    with pytest.raises(RangeTooLarge):
        segmented_primes(2, (1 << 50) + 1)


def test_bigchar_selection():
    s = select_primes_bigchar(5, 101, 2)
    assert s.primes == [89]
    for ell in (2, 5, 11):
        s = select_primes_bigchar(ell, 1009, 1 << 300)
        assert min(s.primes) >= 12 * (ell + 2) + 1
        assert s.product >= s.bound and s.is_minimal()


def test_reduction_test_examples():
    assert supersingular_reduction_test(0, 11)
    assert not supersingular_reduction_test(1, 13)
    with pytest.raises(BadReduction):
        supersingular_reduction_test(5, 7, model=(0, 0))


def test_reduction_test_matches_point_count():
    for q in segmented_primes(5, 200):
        for j in range(0, 60):
            F = quad_extension(q)
            E = curve_from_j(F(j % q), F)
            A, B = F.parts(E.A)[0], F.parts(E.B)[0]
            expect = count_points(A, B, q) == q + 1
            assert supersingular_reduction_test(j, q, rng=random.Random(q)) == expect, (j, q)


def test_biglevel_cm_congruences():
    s0 = select_primes_biglevel(2, 0, 1 << 200)
    assert all(q % 3 == 2 for q in s0.primes)
    delta = (s0.bound - 1).bit_length()
    scanned = [q for q in segmented_primes(delta + 1, s0.primes[-1]) if q > 3]
    assert s0.primes == [q for q in scanned if q % 3 == 2]
    s1 = select_primes_biglevel(2, 1728, 1 << 200)
    assert all(q % 4 == 3 for q in s1.primes)
    scanned = [q for q in segmented_primes(delta + 1, s1.primes[-1]) if q > 3]
    assert s1.primes == [q for q in scanned if q % 4 == 3]


def test_biglevel_members_are_supersingular():
    s = select_primes_biglevel(3, 123456, 1 << 120)
    assert s.is_minimal()
    for q in s.primes:
        assert is_supersingular_j(123456 % q, q)


def test_prime_set_json():
    s = select_primes_bigchar(3, 1009, 1 << 100)
    t = CrtPrimeSet.from_json(s.to_json())
    assert t.primes == s.primes and t.product == s.product and t.bound == s.bound


def _density(j, x):
    n = sum(1 for q in segmented_primes(x, 2 * x)
            if q > 3 and supersingular_reduction_test(j, q, rng=random.Random(q)))
    return n / (math.sqrt(x) / math.log(x))


@pytest.mark.slow
def test_supersingular_density_scaling():
    # admitted primes in [x, 2x] should scale like sqrt(x)/log(x)
    j = 1234567
    d = [_density(j, x) for x in (1 << 14, 1 << 16, 1 << 18)]
    assert all(v > 0 for v in d)
    assert max(d) / min(d) <= 4
