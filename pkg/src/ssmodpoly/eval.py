"""Evaluation of Phi_l(j, Y) modulo a prime.

* ``special_supersingular_evaluation``: one CRT prime q.  The neighbour
  polynomials of l+2 supersingular j-invariants are contracted against the
  supplied powers x_i and the results interpolated in Y.
* ``modular_evaluation_big_char``: CRT over small primes q, each handled by
  the routine above.
* ``supersingular_evaluation``: j supersingular over F_p, neighbours from the
  endomorphism ring.
* ``modular_evaluation_big_level``: CRT over primes where j reduces to a
  supersingular invariant.
"""

import logging
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache

from .arith import is_prime, quad_extension
from .crt import (crt_precompute, height_bound_bigchar, height_bound_biglevel, lift_powers)
from .deuring import (endo_ring, j_of_ideal_class, orders_to_j_big, orders_to_j_small_set)
from .ec import is_supersingular_j
from .errors import (InsufficientClasses, KlptFailure, NotInPrimeField, NotSupersingular,
                     SearchExhausted, SsmpError, UnsupportedPrime)
from .poly import from_roots, interpolate, poly_ring
from .quat import choose_q, ideals_of_norm_ell, maximal_order_type, supersingular_class_number
from .sieve import CrtPrimeSet, select_primes_bigchar, select_primes_biglevel

log = logging.getLogger(__name__)

BIG_SET_FRACTION = 1 / 8
RETRYABLE = (KlptFailure, SearchExhausted)


@dataclass
class EvaluationResult:
    """Phi_l(j, Y) mod p; ``coefficients`` are ascending in Y."""

    p: int
    ell: int
    j: object
    coefficients: list

    def __post_init__(self):
        if len(self.coefficients) != self.ell + 2 or self.coefficients[-1] % self.p != 1:
            raise ValueError("evaluation result must be monic of degree l+1")

    def to_json(self):
        return {"p": str(self.p), "ell": str(self.ell), "j": str(self.j),
                "coefficients": [str(c) for c in self.coefficients]}

    @classmethod
    def from_json(cls, d):
        return cls(int(d["p"]), int(d["ell"]), d["j"], [int(c) for c in d["coefficients"]])

    def plain(self):
        return " ".join(str(c) for c in self.coefficients)


def _check_primes(p, ell):
    if not is_prime(p) or not is_prime(ell):
        raise ValueError("p and l must be prime")
    if p == ell:
        raise ValueError("l must differ from p")


def admissible_prime(q):
    """Primes where the standard order (and hence the Deuring machinery) is available."""
    if q < 5:
        return False
    try:
        choose_q(q)
    except UnsupportedPrime:
        return False
    return True


# per-prime kernel ---------------------------------------------------------------------

def type_neighbors(q, ell, entry, table):
    """The l+1 j-invariants l-isogenous to entry.j, with the exact Galois representative.

    Each neighbour's class is compared with the stored witness ideal of its
    type to choose between j and j^q.
    """
    F = quad_extension(q)
    W = entry.witness
    O = W.right_order()
    out = []
    for J in ideals_of_norm_ell(O, ell):
        e2 = table[maximal_order_type(J.right_order())]
        if F.in_prime_field(e2.j):
            out.append(e2.j)
        else:
            out.append(j_of_ideal_class(e2, W.multiply(J), F))
    return out


def interpolation_base(q, ell):
    """The first l+2 supersingular j in canonical type order, with their neighbours.

    A type defined over F_{q^2} only contributes j and then j^q.
    """
    F = quad_extension(q)
    table = {e.order_type: e for e in orders_to_j_big(q)}
    base = []
    for entry in sorted(table.values(), key=lambda e: e.order_type):
        nbrs = None
        for conj in (False, True):
            if conj and F.in_prime_field(entry.j):
                break
            if len(base) == ell + 2:
                return base
            if nbrs is None:
                nbrs = type_neighbors(q, ell, entry, table)
            if conj:
                base.append((F.conj(entry.j), [F.conj(x) for x in nbrs]))
            else:
                base.append((entry.j, nbrs))
    if len(base) < ell + 2:
        raise InsufficientClasses(f"only {len(base)} supersingular j-invariants mod {q}, need {ell + 2}")
    return base


@lru_cache(maxsize=4096)
def _neighbor_polynomials(q, ell):
    """[(j_0, coefficients of prod (X - j_k))] for the interpolation base."""
    F = quad_extension(q)
    R = poly_ring(F.ctx)
    out = []
    for j0, nbrs in interpolation_base(q, ell):
        f = from_roots(nbrs, R)
        out.append((j0, [f[i] for i in range(ell + 2)]))
    return tuple(out)


def special_supersingular_evaluation(q, ell, xs, cache=True):
    """sum a_{i,k} x_i Y^k mod q for Phi_l = sum a_{i,k} X^i Y^k (ascending in Y).

    ``xs`` holds x_0..x_{l+1}; a vector of length l+1 is padded with x_{l+1} = 0.
    """
    q, ell = int(q), int(ell)
    xs = [int(x) % q for x in xs]
    if len(xs) == ell + 1:
        xs.append(0)
    if len(xs) != ell + 2:
        raise ValueError(f"expected {ell + 2} values, got {len(xs)}")
    F = quad_extension(q)
    R = poly_ring(F.ctx)
    if not cache:
        _neighbor_polynomials.cache_clear()
    points = []
    for j0, c in _neighbor_polynomials(q, ell):
        y = F.ctx.zero()
        for ck, xk in zip(c, xs):
            if xk:
                y += ck * xk
        points.append((j0, y))
    P = interpolate(points, R)
    out = []
    for i in range(ell + 2):
        a = P[i]
        if not F.in_prime_field(a):
            raise ArithmeticError("interpolated polynomial is not defined over F_q")
        out.append(F.parts(a)[0])
    return out


def modular_evaluation_big_char(p, j, ell) -> EvaluationResult:
    p, ell = int(p), int(ell)
    _check_primes(p, ell)
    j = int(j) % p
    xs = [1] + lift_powers(j, ell, p)
    B = height_bound_bigchar(ell, p)
    bad = set()
    while True:
        primes = select_primes_bigchar(ell, p, B, admissible=lambda q: q not in bad and admissible_prime(q))
        acc = crt_precompute(primes, p)
        try:
            for q in primes.primes:
                acc.update(q, special_supersingular_evaluation(q, ell, [x % q for x in xs]))
            break
        except RETRYABLE as exc:
            log.warning("prime %s failed (%s); replacing it", q, exc)
            bad.add(q)
            _neighbor_polynomials.cache_clear()
    return EvaluationResult(p, ell, j, acc.finalize())


# supersingular route ---------------------------------------------------------------

@lru_cache(maxsize=4096)
def _endo_ring_cached(p, jkey):
    F = quad_extension(p)
    return endo_ring(p, F(jkey))


def _galois_multiset(entries, F):
    """Neighbour multiset from per-type j values for a curve over F_p."""
    counts = Counter()
    by_type = {}
    for e in entries:
        counts[e.order_type] += 1
        by_type[e.order_type] = e
    roots = []
    for t, n in counts.items():
        jt = by_type[t].j
        if F.in_prime_field(jt):
            roots.extend([jt] * n)
        else:
            if n % 2:
                raise ArithmeticError("odd multiplicity for a non-F_p type")
            roots.extend([jt] * (n // 2) + [F.conj(jt)] * (n // 2))
    return roots


def supersingular_neighbors(p, j, ell, big_fraction=BIG_SET_FRACTION, allow_fp2=False):
    p, ell = int(p), int(ell)
    F = quad_extension(p)
    jj = j if hasattr(j, "to_list") else F(int(j) % p)
    if not is_supersingular_j(jj, p):
        raise NotSupersingular(f"j is not supersingular mod {p}")
    h = supersingular_class_number(p)
    if not F.in_prime_field(jj):
        if not allow_fp2:
            raise NotInPrimeField("j lies outside F_p; pass allow_fp2 to use stored witness ideals")
        table = {e.order_type: e for e in orders_to_j_big(p)}
        for e in table.values():
            if e.j == jj:
                return type_neighbors(p, ell, e, table)
            if F.conj(e.j) == jj:
                return [F.conj(x) for x in type_neighbors(p, ell, e, table)]
        raise ArithmeticError("j missing from the supersingular table")
    O = _endo_ring_cached(p, F.parts(jj)[0])
    S = [J.right_order() for J in ideals_of_norm_ell(O, ell)]
    if ell + 1 > big_fraction * h:
        entries = orders_to_j_big(p, [maximal_order_type(o) for o in S])
    else:
        entries = orders_to_j_small_set(S)
    return _galois_multiset(entries, F)


def supersingular_evaluation(p, j, ell, big_fraction=BIG_SET_FRACTION, allow_fp2=False):
    """Phi_l(j, Y) for supersingular j; returns an EvaluationResult over F_p
    (or, with allow_fp2 and j outside F_p, coefficients as F_{p^2} elements)."""
    p, ell = int(p), int(ell)
    _check_primes(p, ell)
    F = quad_extension(p)
    R = poly_ring(F.ctx)
    roots = supersingular_neighbors(p, j, ell, big_fraction, allow_fp2)
    f = from_roots(roots, R)
    c = [f[i] for i in range(ell + 2)]
    if all(F.in_prime_field(a) for a in c):
        return EvaluationResult(p, ell, j, [F.parts(a)[0] for a in c])
    if not allow_fp2:
        raise ArithmeticError("neighbour polynomial of an F_p invariant is not Galois stable")
    return c


def modular_evaluation_big_level(p, j, ell, prime_set=None) -> EvaluationResult:
    p, ell = int(p), int(ell)
    _check_primes(p, ell)
    jbar = int(j) % p
    B = height_bound_biglevel(ell, jbar)
    if prime_set is None:
        prime_set = select_primes_biglevel(ell, jbar, B, admissible=admissible_prime)
    elif isinstance(prime_set, CrtPrimeSet) and prime_set.product < B.value:
        raise ValueError("cached prime set does not reach the height bound")
    primes = prime_set.primes if isinstance(prime_set, CrtPrimeSet) else list(prime_set)
    acc = crt_precompute(primes, p)
    for q in primes:
        res = supersingular_evaluation(q, jbar % q, ell)
        acc.update(q, res.coefficients)
    return EvaluationResult(p, ell, jbar, acc.finalize())


def prime_set_for(algorithm, p, j, ell):
    """The CRT prime set either CRT route would use."""
    if algorithm == "bigchar":
        return select_primes_bigchar(ell, p, height_bound_bigchar(ell, p), admissible=admissible_prime)
    jbar = int(j) % p
    return select_primes_biglevel(ell, jbar, height_bound_biglevel(ell, jbar), admissible=admissible_prime)


__all__ = [
    "EvaluationResult", "special_supersingular_evaluation", "modular_evaluation_big_char",
    "supersingular_evaluation", "modular_evaluation_big_level", "admissible_prime",
    "interpolation_base", "type_neighbors", "prime_set_for", "supersingular_neighbors",
    "SsmpError",
]
