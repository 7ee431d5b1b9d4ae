import random
import subprocess
import sys
from pathlib import Path

import pytest

from ssmodpoly import _weber_data
from ssmodpoly.arith import quad_extension
from ssmodpoly.ec import curve_from_j, is_supersingular_j, normalize_twist
from ssmodpoly.oracles import supersingular_census
from ssmodpoly.poly import poly_ring
from ssmodpoly.sieve import segmented_primes
from ssmodpoly.weber import (FS, G0, GS, H0, HS, I0, IS, J0, JS, LevelStructure48, _data, _ev,
                             _ev2, _in_x, _roots, _specialise, chain_parameters, chain_t_values,
                             fallback_candidates, gamma2_candidates, psi,
                             random_level_structure, weber_from_level_structure, weber_invariant)

ROOT = Path(__file__).resolve().parents[1]
Q30 = 1000000007


def curve(p, j):
    F = quad_extension(p)
    return normalize_twist(curve_from_j(j if hasattr(j, "to_list") else F(j), F))


def test_gamma2_pairings_p11_j0():
    E = curve(11, 0)
    assert gamma2_candidates(E) == [0, 0, 0]


def test_gamma2_pairings_are_the_three_cube_roots():
    p = 1009
    for j in sorted(supersingular_census(p), key=str)[:5]:
        if j == 0:
            continue
        gs = gamma2_candidates(curve(p, j))
        assert len({str(g) for g in gs}) == 3
        assert all(g ** 3 == j for g in gs)


def test_xs16_projections_agree():
    # both X_0(16) coordinates of a point of F_s = 0 sit over the same j
    F = quad_extension(Q30)
    R = poly_ring(F.ctx)
    rng = random.Random(1)
    n = 0
    for _ in range(20):
        y = F(rng.randrange(Q30))
        for r in _roots(_in_x(FS, y, R)):
            a1 = _ev2(GS, r, y) / _ev2(HS, r, y)
            a2 = _ev2(IS, r, y) / _ev2(JS, r, y)
            assert _ev(G0, a1) / _ev(H0, a1) == _ev(G0, a2) / _ev(H0, a2)
            n += 1
    assert n > 0


def test_chain_maps_compose_x0_2():
    F = quad_extension(Q30)
    rng = random.Random(2)
    for _ in range(50):
        x = F(rng.randrange(Q30))
        t = chain_t_values(x)
        assert (t[0] + 16) ** 3 / t[0] == _ev(G0, x) / _ev(H0, x)
        for i in range(3):
            assert (t[i] + 256) ** 3 / t[i] ** 2 == (t[i + 1] + 16) ** 3 / t[i + 1]
        assert (t[3] + 256) ** 3 / t[3] ** 2 == _ev(I0, x) / _ev(J0, x)


def test_chain_parameters_match_isogenies():
    p = 1009
    E = curve(p, sorted(supersingular_census(p), key=str)[3])
    L = random_level_structure(E, random.Random(4))
    js, ts = chain_parameters(E, L.G1, L.tower)
    for i, t in enumerate(ts):
        assert (t + 16) ** 3 / t == js[i]
        assert (t + 256) ** 3 / t ** 2 == js[i + 1]


def test_eliminants_coprime_generically():
    F = quad_extension(Q30)
    R = poly_ring(F.ctx)
    rng = random.Random(3)
    for _ in range(10):
        a, b = F(rng.randrange(Q30)), F(rng.randrange(Q30))
        h1 = R(_specialise(_data().P12, a))
        h2 = R(_specialise(_data().P23, a, b))
        assert h1.gcd(h2).degree() == 0


@pytest.mark.slow
def test_generated_tables_reproducible(tmp_path):
    out = tmp_path / "data.py"
    subprocess.run([sys.executable, str(ROOT / "tools" / "gen_weber_data.py"), str(out)],
                   check=True, capture_output=True)
    assert out.read_text() == Path(_weber_data.__file__).read_text()


def test_swapping_subgroups_keeps_f():
    p = 1009
    for j in sorted(supersingular_census(p), key=str)[:4]:
        L = random_level_structure(curve(p, j), random.Random(3))
        w = weber_from_level_structure(L)
        w2 = weber_from_level_structure(LevelStructure48(L.curve, L.xs, L.G2, L.G1, L.tower))
        assert w.f == w2.f and w.t == w2.t


def test_f_lies_in_the_fibre():
    p = 1009
    rng = random.Random(5)
    for j in sorted(supersingular_census(p), key=str)[:8]:
        L = random_level_structure(curve(p, j), rng)
        w = weber_from_level_structure(L)
        assert psi(w.f, j) == 0
        assert w.f ** 3 == w.t
        assert w.gamma2 ** 3 == j
        assert (w.f ** 24 - 16) == w.gamma2 * w.f ** 8


def test_fallback_instance_p37():
    # (j, j_k) has several X_0(16) points here; the 2-isogeny chain picks one
    p = 37
    F = quad_extension(p)
    j = F(3, 10)
    assert j in supersingular_census(p)
    L = random_level_structure(curve(p, j), random.Random(0))
    w = weber_from_level_structure(L)
    assert w.fallback and not w.ambiguous
    assert w.check()
    assert len(fallback_candidates(L.curve, L.G1, L.tower)) == 1


def test_weber_invariant_census_small_p():
    for p in segmented_primes(5, 103):
        for j in sorted(supersingular_census(p), key=str):
            w = weber_invariant(p, j)
            assert w.check(), (p, j)
            if w.ambiguous:
                # only extra automorphisms or a tiny field leave the choice open
                assert j == 0 or j == 1728 % p or p <= 23, (p, j)


@pytest.mark.parametrize("j", [0, 1728])
def test_weber_invariant_extra_automorphisms(j):
    p = 1048583
    assert is_supersingular_j(j, p)
    w = weber_invariant(p, j)
    assert w.check()
