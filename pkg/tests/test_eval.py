import random

import pytest

from ssmodpoly.arith import quad_extension
from ssmodpoly.ec import is_supersingular_j
from ssmodpoly.errors import NotInPrimeField, NotSupersingular
from ssmodpoly.eval import (EvaluationResult, interpolation_base, modular_evaluation_big_char,
                            modular_evaluation_big_level, prime_set_for,
                            special_supersingular_evaluation, supersingular_evaluation,
                            supersingular_neighbors)
from ssmodpoly.oracles import (classical_modular_polynomial, phi_contracted, phi_evaluated,
                               phi_integer_at, supersingular_census, velu_neighbors,
                               velu_polynomial)
from ssmodpoly.poly import poly_ring, roots

# Phi_2 as printed in the standard tables
PHI2 = {(3, 0): 1, (0, 3): 1, (2, 2): -1, (2, 1): 1488, (1, 2): 1488, (2, 0): -162000,
        (0, 2): -162000, (1, 1): 40773375, (1, 0): 8748000000, (0, 1): 8748000000,
        (0, 0): -157464000000000}


def ss_fp(p):
    return [j for j in range(p) if is_supersingular_j(j, p)]


def test_phi2_matches_table():
    assert classical_modular_polynomial(2) == PHI2


@pytest.mark.parametrize("ell", [2, 3, 5, 7])
def test_phi_is_symmetric_and_monic(ell):
    phi = classical_modular_polynomial(ell)
    for (a, b), c in phi.items():
        assert phi.get((b, a)) == c
    assert phi[(ell + 1, 0)] == 1
    assert max(a for a, _ in phi) == ell + 1


@pytest.mark.parametrize("ell", [2, 3])
@pytest.mark.parametrize("p", [101, 1009, 10007])
def test_phi_matches_velu(ell, p):
    # the q-expansion polynomial against brute-force isogeny enumeration
    F = quad_extension(p)
    for j in ss_fp(p)[:4]:
        v = velu_polynomial(p, F(j), ell)
        assert [F.parts(c)[0] for c in v] == phi_evaluated(ell, j, p)


def test_examples():
    assert supersingular_evaluation(13, 5, 2).coefficients == [5, 10, 11, 1]
    assert supersingular_evaluation(5, 0, 2).coefficients == [0, 0, 0, 1]


@pytest.mark.parametrize("q", [101, 1009])
@pytest.mark.parametrize("ell", [2, 3, 5, 7])
def test_special_evaluation_contracts(q, ell):
    rng = random.Random(q + ell)
    for _ in range(3):
        xs = [rng.randrange(q) for _ in range(ell + 2)]
        assert special_supersingular_evaluation(q, ell, xs) == phi_contracted(ell, xs, q)
    e0 = [1] + [0] * (ell + 1)
    assert special_supersingular_evaluation(q, ell, e0) == phi_contracted(ell, e0, q)
    short = [rng.randrange(q) for _ in range(ell + 1)]
    assert special_supersingular_evaluation(q, ell, short) == phi_contracted(ell, short + [0], q)


def test_special_evaluation_at_powers_of_supersingular_j():
    for q in (101, 211, 499):
        F = quad_extension(q)
        for ell in (2, 3, 5):
            for j in ss_fp(q)[:2]:
                xs = [pow(j, i, q) for i in range(ell + 2)]
                out = special_supersingular_evaluation(q, ell, xs)
                assert out[-1] == 1
                v = velu_polynomial(q, F(j), ell)
                assert out == [F.parts(c)[0] for c in v]


def test_special_evaluation_wrong_length():
    with pytest.raises(ValueError):
        special_supersingular_evaluation(101, 2, [1, 2])


def test_interpolation_base_distinct():
    for q, ell in ((101, 5), (1009, 7), (1009, 13)):
        base = interpolation_base(q, ell)
        assert len(base) == ell + 2
        assert len({str(j) for j, _ in base}) == ell + 2
        for _, nb in base:
            assert len(nb) == ell + 1


@pytest.mark.parametrize("ell", [2, 3, 5, 7])
def test_big_char_against_oracle(ell):
    rng = random.Random(ell)
    for _ in range(3):
        j = rng.randrange(1009)
        r = modular_evaluation_big_char(1009, j, ell)
        assert r.coefficients == phi_evaluated(ell, j, 1009)


def test_big_char_symmetry_spot_check():
    # every root j' of Phi_l(j, Y) has j among the l-neighbours of j'
    p, ell = 1009, 3
    F = quad_extension(p)
    R = poly_ring(F.ctx)
    for j in ss_fp(p)[:3]:
        r = modular_evaluation_big_char(p, j, ell)
        f = R([F(c) for c in r.coefficients])
        for jp in roots(f):
            assert F(j) in velu_neighbors(p, jp, ell)


@pytest.mark.parametrize("ell", [2, 3, 5, 7])
def test_supersingular_against_oracle(ell):
    p = 1009
    for j in ss_fp(p)[:5]:
        assert supersingular_evaluation(p, j, ell).coefficients == phi_evaluated(ell, j, p)


def test_supersingular_small_and_big_sets_agree():
    p = 1009
    F = quad_extension(p)
    for j in ss_fp(p)[:4]:
        small = supersingular_neighbors(p, j, 3, big_fraction=10)
        big = supersingular_neighbors(p, j, 3, big_fraction=0)
        assert sorted(map(str, small)) == sorted(map(str, big))
        exp = velu_neighbors(p, F(j), 3)
        assert sorted(map(str, big)) == sorted(str(k) for k, m in exp.items() for _ in range(m))


def test_supersingular_fp2_flag():
    p = 101
    F = quad_extension(p)
    j = next(j for j in supersingular_census(p) if not F.in_prime_field(j))
    with pytest.raises(NotInPrimeField):
        supersingular_neighbors(p, j, 2)
    for ell in (2, 3, 5):
        out = supersingular_evaluation(p, j, ell, allow_fp2=True)
        # F_p coefficients come back as a result, others as F_{p^2} elements
        coeffs = out.coefficients if hasattr(out, "coefficients") else out
        assert [F.ctx(c) if isinstance(c, int) else c for c in coeffs] == velu_polynomial(p, j, ell)


def test_supersingular_rejects_ordinary():
    with pytest.raises(NotSupersingular):
        supersingular_evaluation(1009, next(j for j in range(1009) if not is_supersingular_j(j, 1009)), 2)


def test_big_level_against_big_char():
    for j in range(0, 21):
        assert (modular_evaluation_big_level(1009, j, 2).coefficients
                == modular_evaluation_big_char(1009, j, 2).coefficients)


def test_big_level_small_j_integer_oracle():
    p = 2 ** 31 - 1
    for j in (3, 1000, 65535):
        r = modular_evaluation_big_level(p, j, 3)
        assert r.coefficients == [c % p for c in phi_integer_at(3, j)]


def test_big_level_cached_prime_set_reuse():
    p, j = 1009, 17
    ps5 = prime_set_for("biglevel", p, j, 5)
    fresh = modular_evaluation_big_level(p, j, 3)
    reused = modular_evaluation_big_level(p, j, 3, prime_set=ps5)
    assert fresh.coefficients == reused.coefficients


def test_big_level_rejects_short_prime_set():
    ps2 = prime_set_for("biglevel", 1009, 17, 2)
    with pytest.raises(ValueError):
        modular_evaluation_big_level(1009, 17, 7, prime_set=ps2)


def test_result_json_round_trip():
    r = modular_evaluation_big_char(1009, 7, 2)
    assert EvaluationResult.from_json(r.to_json()) == EvaluationResult(1009, 2, "7", r.coefficients)
    assert r.plain() == "371 347 726 1"
    with pytest.raises(ValueError):
        EvaluationResult(7, 2, 0, [1, 2, 3, 2])

