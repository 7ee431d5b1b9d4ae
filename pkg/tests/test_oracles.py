"""The reference oracles checked against one another."""

import pytest

from ssmodpoly.arith import quad_extension
from ssmodpoly.ec import curve_from_j
from ssmodpoly.oracles import (classical_modular_polynomial, count_points, j_coefficients,
                               phi_evaluated, supersingular_census, velu_polynomial)
from ssmodpoly.quat import supersingular_class_number
from ssmodpoly.sieve import segmented_primes


def test_j_expansion_head():
    assert j_coefficients(6) == [1, 744, 196884, 21493760, 864299970, 20245856256]


def test_phi3_known_coefficients():
    phi = classical_modular_polynomial(3)
    assert phi.get((0, 0), 0) == 0
    assert phi[(3, 3)] == -1
    assert phi[(3, 2)] == 2232
    assert phi[(3, 1)] == -1069956
    assert phi[(3, 0)] == 36864000
    assert phi[(2, 2)] == 2587918086
    assert phi[(2, 1)] == 8900222976000
    assert phi[(2, 0)] == 452984832000000
    assert phi[(1, 1)] == -770845966336000000
    assert phi[(1, 0)] == 1855425871872000000000


@pytest.mark.parametrize("p", [101, 131, 199])
def test_census_fp_part_matches_point_counts(p):
    F = quad_extension(p)
    census = supersingular_census(p)
    by_count = set()
    for j in range(p):
        E = curve_from_j(F(j), F)
        A, B = F.parts(E.A)[0], F.parts(E.B)[0]
        if count_points(A, B, p) == p + 1:
            by_count.add(j)
    assert {F.parts(j)[0] for j in census if F.in_prime_field(j)} == by_count


def test_census_size_is_class_number():
    for p in segmented_primes(5, 400):
        assert len(supersingular_census(p)) == supersingular_class_number(p), p


@pytest.mark.parametrize("p", [101, 1009])
def test_velu_on_fp2_invariants(p):
    # for j outside F_p the Velu product is Phi_l(j, Y) over F_{p^2}
    F = quad_extension(p)
    phi = classical_modular_polynomial(2)
    for j in [j for j in supersingular_census(p) if not F.in_prime_field(j)][:3]:
        want = [F.ctx.zero()] * 4
        for (a, b), c in phi.items():
            want[b] += c * j ** a
        assert velu_polynomial(p, j, 2) == want


def test_phi_evaluated_reduces_integer_polynomial():
    phi = classical_modular_polynomial(5)
    for j in (0, 1, 1728, 99991):
        exact = [0] * 7
        for (a, b), c in phi.items():
            exact[b] += c * j ** a
        assert phi_evaluated(5, j, 10007) == [c % 10007 for c in exact]
