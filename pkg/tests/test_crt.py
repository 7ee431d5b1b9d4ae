import math
import random

import pytest
from hypothesis import given, strategies as st

from ssmodpoly.crt import (CrtAccumulator, crt_finalize, crt_precompute, crt_update,
                           height_bound_bigchar, height_bound_biglevel, lift_powers)
from ssmodpoly.errors import AmbiguousLift, IncompleteUpdateSet, ModulusReuse, UnknownModulus
from ssmodpoly.oracles import classical_modular_polynomial, phi_integer_at
from ssmodpoly.sieve import segmented_primes

SMALL_PRIMES = segmented_primes(3, 5000).to_list()


def residues(vec, q):
    return [c % q for c in vec]


def test_two_modulus_example_nonnegative_lift():
    acc = crt_precompute([3, 5], 7, lift="nonnegative")
    crt_update(acc, 3, [2])
    crt_update(acc, 5, [3])
    assert crt_finalize(acc) == [8 % 7]


def test_two_modulus_example_symmetric_lift():
    # 8 is outside (-15/2, 15/2], so the symmetric lift gives 8 - 15 = -7
    acc = crt_precompute([3, 5], 7)
    acc.update(3, [2])
    acc.update(5, [3])
    assert acc.finalize() == [0]


def test_single_modulus():
    acc = crt_precompute([101], 1009)
    acc.update(101, [(-17) % 101, 40])
    assert acc.finalize() == [(-17) % 1009, 40]


def test_errors():
    acc = crt_precompute([3, 5], 7)
    acc.update(3, [1])
    with pytest.raises(ModulusReuse):
        acc.update(3, [1])
    with pytest.raises(UnknownModulus):
        acc.update(11, [1])
    with pytest.raises(IncompleteUpdateSet):
        acc.finalize()
    with pytest.raises(ModulusReuse):
        crt_precompute([3, 3], 7)


def test_ambiguous_lift_detected():
    # 1 = M/2 sits on the boundary of (-M/2, M/2]; the guard refuses to guess
    acc = CrtAccumulator([2], 7)
    acc.update(2, [1])
    with pytest.raises(AmbiguousLift):
        acc.finalize()


def round_trip(vec, moduli, p, lift="symmetric"):
    acc = crt_precompute(moduli, p, lift=lift)
    order = list(moduli)
    random.Random(len(moduli)).shuffle(order)
    for q in order:
        acc.update(q, residues(vec, q))
    return acc.finalize()


@given(st.lists(st.integers(-2 ** 120, 2 ** 120), min_size=1, max_size=6),
       st.sampled_from([1009, 2 ** 31 - 1, 2 ** 61 - 1, 2 ** 127 - 1]))
def test_symmetric_round_trip(vec, p):
    bound = 2 * max(abs(c) for c in vec) + 1
    moduli, M = [], 1
    for q in reversed(SMALL_PRIMES):
        if M > bound:
            break
        moduli.append(q)
        M *= q
    assert round_trip(vec, moduli, p) == [c % p for c in vec]


@given(st.lists(st.integers(-10 ** 30, 10 ** 30), min_size=3, max_size=3),
       st.lists(st.integers(-10 ** 30, 10 ** 30), min_size=3, max_size=3))
def test_linearity(a, b):
    moduli = SMALL_PRIMES[-12:]
    p = 1048583
    s = [x + y for x, y in zip(a, b)]
    ra, rb, rs = (round_trip(v, moduli, p) for v in (a, b, s))
    assert rs == [(x + y) % p for x, y in zip(ra, rb)]


def test_update_order_is_immaterial():
    rng = random.Random(5)
    moduli = SMALL_PRIMES[100:130]
    vec = [rng.randrange(-10 ** 40, 10 ** 40) for _ in range(5)]
    outs = set()
    for seed in range(5):
        order = list(moduli)
        random.Random(seed).shuffle(order)
        acc = crt_precompute(moduli, 2 ** 31 - 1)
        for q in order:
            acc.update(q, residues(vec, q))
        outs.add(tuple(acc.finalize()))
    assert len(outs) == 1


def test_checkpoint_restore():
    moduli = SMALL_PRIMES[200:210]
    vec = [-12345678901234567, 98765432109876543]
    acc = crt_precompute(moduli, 1009)
    for q in moduli[:5]:
        acc.update(q, residues(vec, q))
    acc2 = CrtAccumulator.restore(acc.checkpoint())
    for q in moduli[5:]:
        acc2.update(q, residues(vec, q))
    assert acc2.finalize() == [c % 1009 for c in vec]


def test_height_bound_examples():
    assert height_bound_bigchar(5, 101).exponent == 170
    assert height_bound_biglevel(5, 2).exponent == 169
    ex = math.ceil(6 * 5 * math.log2(5) + 90 + math.log2(101) + math.log2(7))
    assert height_bound_bigchar(5, 101).exponent == ex


def test_height_bound_monotone():
    for ell in (2, 3, 5, 7):
        assert height_bound_bigchar(ell, 101).exponent <= height_bound_bigchar(ell, 10 ** 9).exponent
        assert height_bound_bigchar(ell, 101).exponent < height_bound_bigchar(ell + 2, 101).exponent


def test_biglevel_exceeds_bigchar_when_j_large():
    p = 1009
    for ell in (2, 3, 5):
        for j in (5, 100, 10 ** 6):
            if (ell + 1) * math.log2(j) > math.log2(p) + 1:
                assert height_bound_biglevel(ell, j).value > height_bound_bigchar(ell, p).value


@pytest.mark.parametrize("ell", [2, 3, 5])
def test_integer_phi_below_bound(ell):
    B = height_bound_bigchar(ell, 2).value
    assert all(abs(c) < B for c in classical_modular_polynomial(ell).values())


def test_phi3_at_5_below_biglevel_bound():
    B = height_bound_biglevel(3, 5).value
    assert all(abs(c) < B for c in phi_integer_at(3, 5))


def test_lift_powers():
    assert lift_powers(1, 4, 11) == [1] * 5
    assert lift_powers(0, 4, 11) == [0] * 5
    assert lift_powers(3, 2, 7) == [3, 2, 6]
