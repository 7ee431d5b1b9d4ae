import random
from collections import Counter

import pytest
from hypothesis import given, strategies as st

from ssmodpoly.arith import build_tower, quad_extension
from ssmodpoly.ec import (Curve, curve_from_j, curve_from_json, evaluate_isogeny, group_action_step,
                          is_supersingular_j, isogeny_chain, isogeny_from_kernel_point,
                          normalize_twist, split_eigenvalue, torsion_basis, torsion_degree,
                          two_torsion_rank, weil_pairing)
from ssmodpoly.errors import SingularCurve
from ssmodpoly.oracles import classical_modular_polynomial, count_points, velu_neighbors
from ssmodpoly.sieve import segmented_primes


def supersingular_fp(p):
    return [j for j in range(p) if is_supersingular_j(j, p)]


def test_special_models():
    F = quad_extension(11)
    assert (curve_from_j(F(1728), F).A, curve_from_j(F(1728), F).B) == (1, 0)
    assert (curve_from_j(F(0), F).A, curve_from_j(F(0), F).B) == (0, 1)
    assert Curve(F, 1, 0).j_invariant() == 1728 % 11
    assert Curve(F, 0, 1).j_invariant() == 0
    with pytest.raises(SingularCurve):
        Curve(F, 0, 0)


@given(st.integers(0, 1048582), st.integers(0, 1048582))
def test_curve_from_j_round_trip(a, b):
    F = quad_extension(1048583)
    j = F(a, b)
    E = curve_from_j(j, F)
    assert E.j_invariant() == j
    d = F(3, 1)
    assert E.twist(d).j_invariant() == j
    assert curve_from_json(E.to_json()) == E


def test_supersingular_examples():
    assert is_supersingular_j(0, 11)
    assert is_supersingular_j(5, 13)
    assert not is_supersingular_j(1, 13)


@pytest.mark.slow
def test_supersingular_matches_point_count():
    for p in segmented_primes(5, 2000):
        F = quad_extension(p)
        for j in range(p):
            E = curve_from_j(F(j), F)
            A, B = F.parts(E.A)[0], F.parts(E.B)[0]
            assert is_supersingular_j(j, p) == (count_points(A, B, p) == p + 1), (p, j)


def test_supersingular_matches_point_count_small():
    for p in segmented_primes(5, 140):
        F = quad_extension(p)
        for j in range(p):
            E = curve_from_j(F(j), F)
            A, B = F.parts(E.A)[0], F.parts(E.B)[0]
            assert is_supersingular_j(j, p) == (count_points(A, B, p) == p + 1), (p, j)


def test_two_torsion_rank_against_cubic_roots():
    for p in segmented_primes(5, 500):
        F = quad_extension(p)
        for j in supersingular_fp(p):
            E = curve_from_j(F(j), F)
            A, B = F.parts(E.A)[0], F.parts(E.B)[0]
            n = sum(1 for x in range(p) if (x ** 3 + A * x + B) % p == 0)
            assert two_torsion_rank(E) == n
            assert n in (1, 3)
            if p % 4 == 1:
                assert n == 1


@pytest.mark.parametrize("ell", [2, 3, 5])
def test_torsion_basis(ell):
    p = 1009
    F = quad_extension(p)
    E = normalize_twist(curve_from_j(F(supersingular_fp(p)[1]), F))
    T = build_tower(p, torsion_degree(p, ell))
    C = E.over(T)
    P, Q = torsion_basis(E, ell, T, random.Random(1))
    assert C.mul(P, ell) is None and C.mul(Q, ell) is None
    e = weil_pairing(C, P, Q, ell)
    assert e ** ell == 1 and e != 1
    if ell == 2:
        assert P[1] == 0 and Q[1] == 0 and P[0] != Q[0]


def test_three_torsion_p11():
    p = 11
    F = quad_extension(p)
    E = normalize_twist(curve_from_j(F(0), F))
    k = torsion_degree(p, 3)
    # the 3-division polynomial 3x^4 + 6Ax^2 + 12Bx - A^2 splits over F_{p^{2k}}
    T = build_tower(p, k)
    P, Q = torsion_basis(E, 3, T, random.Random(0))
    C = E.over(T)
    assert C.mul(P, 3) is None and weil_pairing(C, P, Q, 3) != 1


@pytest.mark.parametrize("ell", [2, 3, 5, 7, 11, 13])
def test_isogeny_properties(ell):
    p = 1009
    F = quad_extension(p)
    rng = random.Random(ell)
    E = normalize_twist(curve_from_j(F(supersingular_fp(p)[1]), F))
    T = build_tower(p, torsion_degree(p, ell))
    C = E.over(T)
    P, Q = torsion_basis(E, ell, T, rng)
    phi = isogeny_from_kernel_point(E, P, ell, T)
    if ell > 2:
        assert phi.kernel_poly.degree() == (ell - 1) // 2
    C2 = phi.codomain.over(T)
    assert evaluate_isogeny(phi, None, T) is None
    assert evaluate_isogeny(phi, P, T) is None
    for _ in range(5):
        R1, R2 = C.random_point(rng), C.random_point(rng)
        a, b = evaluate_isogeny(phi, R1, T), evaluate_isogeny(phi, R2, T)
        assert C2.is_on(a)
        assert C2.add(a, b) == evaluate_isogeny(phi, C.add(R1, R2), T)
    # dual: kernel generated by the image of Q; composite is [ell] up to isomorphism
    psi = isogeny_from_kernel_point(phi.codomain, evaluate_isogeny(phi, Q, T), ell, T)
    assert psi.codomain.j_invariant() == E.j_invariant()
    E3 = psi.codomain
    for _ in range(20):
        R = C.random_point(rng)
        lhs = C.mul(R, ell)
        rhs = evaluate_isogeny(psi, evaluate_isogeny(phi, R, T), T)
        if lhs is None or rhs is None:
            assert lhs is None and rhs is None
            continue
        u2 = lhs[0] / rhs[0]
        assert T.lift(E.A) == u2 * u2 * T.lift(E3.A)
        assert T.lift(E.B) == u2 ** 3 * T.lift(E3.B)


@pytest.mark.parametrize("ell", [2, 3])
def test_codomain_on_modular_curve(ell):
    p = 101
    F = quad_extension(p)
    phi = classical_modular_polynomial(ell)
    for j in supersingular_fp(p):
        for j2 in velu_neighbors(p, F(j), ell):
            v = sum(c * F(j) ** a * j2 ** b for (a, b), c in phi.items())
            assert v == 0


def test_three_isogeny_kernel_root():
    p = 11
    F = quad_extension(p)
    E = normalize_twist(curve_from_j(F(0), F))
    T = build_tower(p, 1)
    if torsion_degree(p, 3) == 1:
        P, _ = torsion_basis(E, 3, T, random.Random(0))
        phi = isogeny_from_kernel_point(E, P, 3, T)
        assert phi.kernel_poly.degree() == 1
        assert phi.kernel_poly(T.coerce(P[0])) == 0


def test_isogeny_chain_degree_16():
    p = 1009
    F = quad_extension(p)
    E = normalize_twist(curve_from_j(F(supersingular_fp(p)[2]), F))
    T = build_tower(p, torsion_degree(p, 16))
    P, _ = torsion_basis(E, 16, T, random.Random(2))
    cod, steps, _ = isogeny_chain(E, P, 2, 4, T)
    assert len(steps) == 4 and steps[-1].codomain == cod
    for a, b in zip(steps, steps[1:]):
        assert a.codomain == b.domain


def test_group_action():
    p = 1009
    F = quad_extension(p)
    E = curve_from_j(F(supersingular_fp(p)[1]), F)
    ells = [l for l in (3, 5, 7, 11, 13, 17, 19, 23) if l != p and _split(p, l)]
    rng = random.Random(7)
    for ell in ells[:3]:
        E1 = group_action_step(E, ell, 1, rng)
        assert E1.is_over_prime_field()
        assert group_action_step(E1, ell, -1, rng).j_invariant() == E.j_invariant()
    a, b = ells[0], ells[1]
    x = group_action_step(group_action_step(E, a, 1, rng), b, 1, rng)
    y = group_action_step(group_action_step(E, b, 1, rng), a, 1, rng)
    assert x.j_invariant() == y.j_invariant()


def _split(p, ell):
    try:
        split_eigenvalue(p, ell)
        return True
    except Exception:
        return False


@pytest.mark.parametrize("p", [101, 131, 229])
def test_group_action_orbit(p):
    # the orbit of E under the class group is the set of supersingular F_p
    # invariants with the same F_p-endomorphism ring (same 2-torsion rank)
    F = quad_extension(p)
    js = supersingular_fp(p)
    start = curve_from_j(F(js[0]), F)
    ells = [l for l in segmented_primes(3, 60) if l != p and _split(p, l)][:4]
    seen = {js[0]: start}
    queue = [start]
    rng = random.Random(1)
    while queue:
        E = queue.pop()
        for ell in ells:
            for s in (1, -1):
                E2 = group_action_step(E, ell, s, rng)
                j2 = F.parts(E2.j_invariant())[0]
                if j2 not in seen:
                    seen[j2] = E2
                    queue.append(E2)
    rank = two_torsion_rank(start)
    expect = {j for j in js if two_torsion_rank(curve_from_j(F(j), F)) == rank}
    assert set(seen) == expect


def test_velu_oracle_counts():
    p = 1009
    F = quad_extension(p)
    for ell in (2, 3, 5):
        for j in supersingular_fp(p)[:3]:
            c = velu_neighbors(p, F(j), ell)
            assert sum(c.values()) == ell + 1
            assert isinstance(c, Counter)
