import random
from math import gcd

import pytest
from hypothesis import given, strategies as st

from ssmodpoly.arith import (build_tower, coerce, frobenius, is_prime, legendre, lift,
                             quad_extension, smallest_nonresidue, sqrt_mod, tower_from_json)
from ssmodpoly.errors import NotInImage, TowerConstructionFailed

PRIMES = [5, 7, 11, 13, 101, 1009, 1048583]


def test_quad_extension_p_3_mod_4_uses_minus_one():
    F = quad_extension(11)
    assert F.omega_sq == 10
    assert F.omega ** 2 == F.ctx(-1)


@pytest.mark.parametrize("p", PRIMES)
def test_omega_is_trace_zero_nonresidue(p):
    F = quad_extension(p)
    assert legendre(F.omega_sq, p) == -1
    w = F.omega
    assert w + w ** p == 0
    assert F.conj(w) == -w


def test_rejects_small_or_composite():
    for n in (2, 3, 9, 15):
        with pytest.raises(TowerConstructionFailed):
            quad_extension(n)


def test_smallest_nonresidue_and_sqrt():
    assert smallest_nonresidue(7) == 3
    assert sqrt_mod(3, 7) is None
    for p in (13, 1009, 2 ** 31 - 1):
        for a in range(1, 40):
            r = sqrt_mod(a, p)
            if legendre(a, p) >= 0:
                assert r * r % p == a % p
            else:
                assert r is None


def test_is_prime():
    small = [n for n in range(200) if is_prime(n)]
    assert small == [n for n in range(2, 200) if all(n % d for d in range(2, n))]


@pytest.mark.parametrize("p,k", [(11, 1), (13, 2), (101, 3), (1009, 2), (1048583, 4)])
def test_tower_invariants(p, k):
    T = build_tower(p, k)
    assert T.omega_image ** 2 == T.ctx(T.base.omega_sq)
    assert lift(T.base.omega, T) == T.omega_image
    rng = random.Random(p + k)
    for _ in range(10):
        a = T.random(rng)
        assert frobenius(a, 2 * k, T) == a
        assert frobenius(a, 1, T) == a ** p


def test_tower_13_2_omega_image():
    T = build_tower(13, 2)
    assert T.omega_image * T.omega_image == T.lift(T.base(T.base.omega_sq))


@pytest.mark.parametrize("p,k", [(11, 2), (1009, 3)])
def test_lift_is_ring_homomorphism(p, k):
    T = build_tower(p, k)
    F = T.base
    rng = random.Random(1)
    for _ in range(50):
        x, y = F.random(rng), F.random(rng)
        assert lift(x * y, T) == lift(x, T) * lift(y, T)
        assert lift(x + y, T) == lift(x, T) + lift(y, T)
        assert coerce(lift(x, T), T) == x
    assert lift(F(5), T) == T.ctx(5)
    assert coerce(T.ctx(7), T) == F(7)


def test_coerce_outside_image():
    T = build_tower(11, 2)
    z = T.ctx.gen()
    assert not T.in_image(z)
    with pytest.raises(NotInImage):
        coerce(z, T)


@given(st.integers(0, 1008), st.integers(0, 1008))
def test_lift_coerce_round_trip_property(a, b):
    T = build_tower(1009, 2)
    x = T.base(a, b)
    assert coerce(lift(x, T), T) == x


@given(st.integers(1, 6), st.sampled_from([1, 2, 3, 6]))
def test_frobenius_fixed_field(m, d):
    # the trace of a random element down to F_{p^d} is fixed by the m-th
    # power of Frobenius exactly when d divides m
    p, k = 11, 3
    T = build_tower(p, k)
    a = T.random(random.Random(m * 10 + d))
    b = sum((T.frobenius(a, d * i) for i in range(2 * k // d)), T.ctx.zero())
    assert T.frobenius(b, d) == b
    if m % d == 0:
        assert T.frobenius(b, m) == b
    elif b ** (p ** gcd(m, d)) != b:
        assert T.frobenius(b, m) != b


def test_frobenius_of_omega_p11():
    T = build_tower(11, 1)
    assert frobenius(T.omega_image, 1, T) == -T.omega_image


def test_tower_json_round_trip():
    T = build_tower(101, 2)
    T2 = tower_from_json(T.to_json())
    x = T.base(3, 4)
    assert T2.vec(T2.lift(x)) == T.vec(T.lift(x))
