import random

import pytest
from hypothesis import given, strategies as st

from ssmodpoly.arith import quad_extension
from ssmodpoly.errors import DuplicateAbscissa
from ssmodpoly.poly import (coeffs, evaluate_many, from_roots, gcd, interpolate, poly_ring,
                            roots)


def ring(p):
    F = quad_extension(p)
    return F, poly_ring(F.ctx)


def test_from_roots_small():
    F, R = ring(5)
    f = from_roots([F(1), F(2)], R)
    assert f == R([2, 2, 1])
    assert from_roots([], R) == R.one()


def test_from_roots_many():
    F, R = ring(1009)
    rng = random.Random(0)
    rs = [F.random(rng) for _ in range(10000)]
    f = from_roots(rs, R)
    assert f.degree() == 10000
    sample = rs[:: 97]
    assert all(v == 0 for v in evaluate_many(f, sample, R))


def test_interpolate_examples():
    F, R = ring(7)
    assert interpolate([(F(0), F(1)), (F(1), F(2))], R) == R([1, 1])
    with pytest.raises(DuplicateAbscissa):
        interpolate([(F(1), F(1)), (F(1), F(2))], R)


@pytest.mark.parametrize("deg", [5, 40, 999])
def test_interpolation_reproduces_polynomial(deg):
    F, R = ring(1048583)
    rng = random.Random(deg)
    f = R([F.random(rng) for _ in range(deg + 1)])
    xs = []
    seen = set()
    while len(xs) < deg + 1:
        x = F.random(rng)
        if str(x) not in seen:
            seen.add(str(x))
            xs.append(x)
    ys = evaluate_many(f, xs, R)
    assert interpolate(list(zip(xs, ys)), R) == f


def test_tree_and_lagrange_agree():
    F, R = ring(101)
    rng = random.Random(3)
    pts = [(F(i), F.random(rng)) for i in range(50)]
    assert interpolate(pts, R, threshold=4) == interpolate(pts, R, threshold=100)


def test_gcd_examples():
    F, R = ring(7)
    f = R([3, 1]) * R([4, 1])       # (Y-4)(Y-3)
    g = R([4, 1]) * R([2, 1])
    assert gcd(f, g) == R([4, 1])   # Y - 3
    h = R([2, 0, 4])
    assert gcd(h, R.zero()) == h.monic()


@given(st.lists(st.integers(0, 100), min_size=1, max_size=12),
       st.lists(st.integers(0, 100), min_size=1, max_size=12))
def test_gcd_divides_both(a, b):
    F, R = ring(101)
    f, g = from_roots([F(x) for x in a], R), from_roots([F(x) for x in b], R)
    d = gcd(f, g)
    assert d.degree() <= min(f.degree(), g.degree())
    assert (f % d).is_zero() and (g % d).is_zero()
    assert d.degree() == sum(min(a.count(x), b.count(x)) for x in set(a) & set(b))


def test_roots_examples():
    F, R = ring(7)
    assert roots(R([-1, 0, 1])) == [F(1), F(6)]
    # quadratics over F_p all split in F_{p^2}; an irreducible cubic has no roots
    assert roots(R([1, 1, 0, 1])) == []      # Y^3 + Y + 1 is irreducible mod 7
    assert len(roots(R([1, 0, 1]))) == 2


@given(st.lists(st.tuples(st.integers(0, 100), st.integers(0, 100)), min_size=1, max_size=15))
def test_roots_recover_set(pairs):
    F, R = ring(101)
    rs = [F(a, b) for a, b in pairs]
    got = roots(from_roots(rs, R))
    assert {str(r) for r in got} == {str(r) for r in rs}
    assert got == sorted(got, key=lambda x: tuple(int(c) for c in x.to_list()))


def test_coeffs_padding():
    F, R = ring(11)
    c = coeffs(R([1, 2]), 4)
    assert len(c) == 4 and c[2] == 0 and c[3] == 0
