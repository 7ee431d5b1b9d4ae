"""Acceptance criteria, one test per criterion.

Each test records a PASS/FAIL line in REPORT; conftest prints them after the
run.  Run directly with ``python3 tests/test_acceptance.py``.

Criterion 8 is a timing study lasting hours; it is skipped unless
SSMODPOLY_SCALING=1 and only reports its slopes.
"""

import math
import os
import random
import sys
import time

import pytest

from ssmodpoly.arith import is_prime, quad_extension
from ssmodpoly.crt import crt_precompute, height_bound_bigchar, height_bound_biglevel
from ssmodpoly.deuring import endo_ring, order_to_j, orders_to_j_big
from ssmodpoly.ec import curve_from_j, is_supersingular_j, normalize_twist
from ssmodpoly.errors import SsmpError
from ssmodpoly.eval import (admissible_prime, modular_evaluation_big_char,
                            modular_evaluation_big_level, supersingular_evaluation)
from ssmodpoly.oracles import (classical_modular_polynomial, phi_evaluated, supersingular_census,
                               velu_neighbors, velu_polynomial)
from ssmodpoly.quat import enumerate_maximal_order_types, supersingular_class_number
from ssmodpoly.sieve import segmented_primes, select_primes_bigchar, select_primes_biglevel
from ssmodpoly.weber import random_level_structure, weber_from_level_structure, weber_invariant

pytestmark = pytest.mark.acceptance

REPORT = {8: "SKIP criterion 8: report-only timing study, not run (set SSMODPOLY_SCALING=1)"}
P20 = 1048583


def record(key, ok, detail):
    line = f"{'PASS' if ok else 'FAIL'} criterion {key}: {detail}"
    REPORT[key] = line
    print(line)
    return ok


def random_supersingular_fp(p, n, rng):
    out = []
    while len(out) < n:
        j = rng.randrange(p)
        if is_supersingular_j(j, p):
            out.append(j)
    return out


def test_criterion_1_big_char_exact():
    rng = random.Random(1)
    bad, n = [], 0
    # the oracle polynomial itself against Velu enumeration for l = 2, 3
    for p in (1009, 10007):
        F = quad_extension(p)
        for ell in (2, 3):
            for j in random_supersingular_fp(p, 3, rng):
                v = velu_polynomial(p, F(j), ell)
                if [F.parts(c)[0] for c in v] != phi_evaluated(ell, j, p):
                    bad.append(("oracle", p, ell, j))
    t0 = time.time()
    for p in (1009, 10007, 2 ** 31 - 1):
        for ell in (2, 3, 5, 7, 11, 13):
            for _ in range(10):
                j = rng.randrange(p)
                n += 1
                if modular_evaluation_big_char(p, j, ell).coefficients != phi_evaluated(ell, j, p):
                    bad.append((p, ell, j))
    record(1, not bad, f"{n - len(bad)}/{n} big-characteristic evaluations exact "
                       f"({time.time() - t0:.0f}s)")
    assert not bad


def test_criterion_2_supersingular_vs_velu():
    bad, n = [], 0
    t0 = time.time()
    # p = 2, 3 have no Weierstrass short model and l = p is outside the domain
    for p in segmented_primes(5, 500):
        F = quad_extension(p)
        for j in range(p):
            if not is_supersingular_j(j, p):
                continue
            for ell in (2, 3, 5):
                if ell == p:
                    continue
                n += 1
                v = velu_polynomial(p, F(j), ell)
                if supersingular_evaluation(p, j, ell).coefficients != [F.parts(c)[0] for c in v] \
                        or any(F.parts(c)[1] for c in v):
                    bad.append((p, j, ell))
    record(2, not bad, f"{n - len(bad)}/{n} (p, j, l) match Velu ({time.time() - t0:.0f}s)")
    assert not bad


def test_criterion_3_cross_algorithm():
    p = 1009
    bad, n, ss = [], 0, 0
    t0 = time.time()
    for ell in (2, 3, 5):
        for j in range(51):
            a = modular_evaluation_big_char(p, j, ell).coefficients
            b = modular_evaluation_big_level(p, j, ell).coefficients
            n += 1
            if a != b:
                bad.append(("2/5", ell, j))
            if is_supersingular_j(j, p):
                ss += 1
                if supersingular_evaluation(p, j, ell).coefficients != a:
                    bad.append(("4", ell, j))
    record(3, not bad, f"{n} (l, j) pairs agree across both CRT routes, {ss} also via the "
                       f"supersingular route (no j <= 50 is supersingular mod {p}) "
                       f"({time.time() - t0:.0f}s)")
    assert not bad


def test_criterion_4_deuring_round_trip():
    p = P20
    F = quad_extension(p)
    js = random_supersingular_fp(p, 50, random.Random(4))
    ok = 0
    t0 = time.time()
    for j in js:
        O = endo_ring(p, j)
        ok += O.discriminant() == p and order_to_j(O) in (F(j), F.conj(F(j)))
    record(4, ok == 50, f"{ok}/50 round trips at p = {p} ({time.time() - t0:.0f}s)")
    assert ok == 50


CENSUS_PRIMES = (11, 13, 23, 101, 1009)


@pytest.mark.xfail(strict=True, reason="order types biject with Frobenius orbits of "
                                       "supersingular j, so p = 101 and 1009 give fewer types than h")
def test_criterion_5_type_count_is_class_number():
    rows = []
    for p in CENSUS_PRIMES:
        rows.append((p, len(enumerate_maximal_order_types(p)), supersingular_class_number(p)))
    ok = all(t == h for _, t, h in rows)
    record(5, ok, "types vs h: " + ", ".join(f"p={p} {t}/{h}" for p, t, h in rows)
           + "; types count Frobenius orbits {j, j^p}, census j-sets match (expected failure)")
    assert ok


def test_criterion_5_census_j_sets():
    # the part of the census that does hold: the j-set of the big table is
    # the full census, and the type count is the number of Frobenius orbits
    for p in CENSUS_PRIMES:
        F = quad_extension(p)
        census = supersingular_census(p)
        assert len(census) == supersingular_class_number(p)
        entries = orders_to_j_big(p)
        got = set()
        for e in entries:
            got.update((str(e.j), str(F.conj(e.j))))
        assert got == {str(j) for j in census}, p
        orbits = {min(str(j), str(F.conj(j))) for j in census}
        assert len(entries) == len(enumerate_maximal_order_types(p)) == len(orbits), p


def test_criterion_6_height_bound():
    rows = []
    for ell in (2, 3, 5):
        H = max(abs(c) for c in classical_modular_polynomial(ell).values())
        for p in (5, 1009, 2 ** 31 - 1, 2 ** 127 - 1):
            rows.append((ell, H.bit_length(), height_bound_bigchar(ell, p).exponent,
                         H < height_bound_bigchar(ell, p).value))
    ok = all(r[3] for r in rows)
    record(6, ok, ", ".join(f"l={l}: {hb} bits < {b}" for l, hb, b, _ in rows[::4]))
    assert ok


def random_supersingular_walk(p, rng, steps=40):
    """End of a random 2-isogeny walk from a random supersingular j in F_p."""
    F = quad_extension(p)
    j = F(random_supersingular_fp(p, 1, rng)[0])
    for _ in range(steps):
        j = rng.choice(sorted(velu_neighbors(p, j, 2, seed=rng.randrange(1 << 20)), key=str))
    return j


def test_criterion_7_weber():
    p = P20
    F = quad_extension(p)
    rng = random.Random(7)
    ok = fallback = restarts = outside = 0
    t0 = time.time()
    for _ in range(100):
        j = random_supersingular_walk(p, rng)
        outside += not F.in_prime_field(j)
        E = normalize_twist(curve_from_j(j, F))
        try:
            try:
                w = weber_from_level_structure(random_level_structure(E, rng))
            except SsmpError:
                restarts += 1
                w = weber_invariant(p, j, seed=rng.randrange(1 << 30))
        except (SsmpError, ArithmeticError):
            continue
        fallback += w.fallback
        ok += w.check()
    record(7, ok >= 99, f"{ok}/100 valid Weber invariants ({outside} with j outside F_p), "
                        f"{fallback} via the 16-isogeny fallback, {restarts} restarted "
                        f"({time.time() - t0:.0f}s)")
    assert ok >= 99


def _slope(xs, ys):
    lx, ly = [math.log(x) for x in xs], [math.log(y) for y in ys]
    mx, my = sum(lx) / len(lx), sum(ly) / len(ly)
    return sum((a - mx) * (b - my) for a, b in zip(lx, ly)) / sum((a - mx) ** 2 for a in lx)


@pytest.mark.skipif(os.environ.get("SSMODPOLY_SCALING") != "1",
                    reason="timing study of several hours; set SSMODPOLY_SCALING=1")
def test_criterion_8_scaling_report_only():
    p = 2 ** 31 - 1
    ells = [int(x) for x in os.environ.get("SSMODPOLY_SCALING_ELLS", "211,419,607,811,1019").split(",")]
    tc, tl = [], []
    for ell in ells:
        t0 = time.time()
        modular_evaluation_big_char(p, 12345, ell)
        tc.append(time.time() - t0)
        t0 = time.time()
        modular_evaluation_big_level(p, 5, ell)
        tl.append(time.time() - t0)
    sc, sl = _slope(ells, tc), _slope(ells, tl)
    ok = 2.3 <= sc <= 3.7 and 1.5 <= sl <= 2.7
    record(8, ok, f"slopes big-char {sc:.2f} (want 2.3..3.7), big-level {sl:.2f} (want 1.5..2.7) "
                  f"over l = {ells}; report only")


def test_criterion_9_crt():
    rng = random.Random(9)
    pool = segmented_primes(3, 20000).to_list()
    bad = 0
    for _ in range(10 ** 4):
        size = rng.randrange(1, 200)
        vec = [rng.randrange(-(1 << size), 1 << size) for _ in range(rng.randrange(1, 4))]
        need = 2 * max(abs(c) for c in vec) + 1
        moduli, M = [], 1
        while M <= need:
            q = rng.choice(pool)
            if q not in moduli:
                moduli.append(q)
                M *= q
        target = rng.choice((1009, 2 ** 31 - 1, 2 ** 61 - 1))
        acc = crt_precompute(moduli, target)
        for q in rng.sample(moduli, len(moduli)):
            acc.update(q, [c % q for c in vec])
        bad += acc.finalize() != [c % target for c in vec]
    sets = []
    for ell in (2, 3, 5, 7, 13, 31):
        for p in (1009, 2 ** 31 - 1):
            sets.append(select_primes_bigchar(ell, p, height_bound_bigchar(ell, p), admissible_prime))
        for j in (0, 5, 1728, 123456):
            sets.append(select_primes_biglevel(ell, j, height_bound_biglevel(ell, j), admissible_prime))
    minimal = 0
    for s in sets:
        prod = math.prod(s.primes)
        minimal += (prod == s.product >= s.bound and prod // s.primes[-1] < s.bound
                    and s.primes == sorted(s.primes) and all(is_prime(q) for q in s.primes))
    ok = bad == 0 and minimal == len(sets)
    record(9, ok, f"{10 ** 4 - bad}/10000 round trips exact, {minimal}/{len(sets)} prime sets minimal")
    assert ok


if __name__ == "__main__":
    code = pytest.main([__file__, "-v", "-p", "no:cacheprovider"])
    print()
    for key in sorted(REPORT):
        print(REPORT[key])
    sys.exit(code)
