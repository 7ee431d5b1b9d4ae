"""Segmented prime sieve and CRT prime selection.

Base primes are grown on demand by doubling, the way the big-level prime
search extends its table whenever the square of the largest base prime is
reached.  The supersingular filter first checks [q+1]P = O on random points
of the curve and its twist using plain integer arithmetic, which rejects
almost every ordinary reduction, and only then runs the volcano test.
"""

import math
import random
from bisect import bisect_right
from dataclasses import dataclass, field

from .arith import is_prime, legendre, sqrt_mod
from .ec import is_supersingular_j
from .errors import BadReduction, RangeTooLarge, StreamExhausted

MAX_BOUND = 1 << 50
BASE_LIMIT = 1 << 25
SEGMENT = 1 << 16


class _BasePrimes:
    """Primes up to ``limit``, extended by doubling up to BASE_LIMIT."""

    def __init__(self):
        self.limit = 1 << 12
        full = bytearray(b"\x01") * (self.limit + 1)
        full[0:2] = b"\x00\x00"
        for i in range(2, math.isqrt(self.limit) + 1):
            if full[i]:
                full[i * i::i] = bytes(len(range(i * i, self.limit + 1, i)))
        self.primes = [i for i in range(self.limit + 1) if full[i]]

    def upto(self, n):
        while self.limit < n and self.limit < BASE_LIMIT:
            hi = min(2 * self.limit, BASE_LIMIT)
            self.primes.extend(_sieve_segment(self.limit + 1, hi, self.primes))
            self.limit = hi
        return self.primes[:bisect_right(self.primes, n)]


_BASE = _BasePrimes()


def _sieve_segment(lo, hi, base):
    """Primes in [lo, hi] given all primes up to sqrt(hi) in ``base``."""
    lo = max(lo, 2)
    if hi < lo:
        return []
    n = hi - lo + 1
    buf = bytearray(b"\x01") * n
    r = math.isqrt(hi)
    for b in base:
        if b > r:
            break
        start = max(b * b, -(-lo // b) * b)
        if start > hi:
            continue
        buf[start - lo::b] = bytes(len(range(start - lo, n, b)))
    return [lo + i for i in range(n) if buf[i]]


class PrimeStream:
    """The primes in [L, R], produced one segment at a time."""

    def __init__(self, L, R, segment=SEGMENT):
        if R > MAX_BOUND:
            raise RangeTooLarge(f"upper bound {R} exceeds 2^50")
        self.L = max(int(L), 2)
        self.R = int(R)
        self.segment = max(1, int(segment))

    def segments(self):
        lo = self.L
        while lo <= self.R:
            hi = min(lo + self.segment - 1, self.R)
            base = _BASE.upto(math.isqrt(hi))
            yield _sieve_segment(lo, hi, base)
            lo = hi + 1

    def __iter__(self):
        for seg in self.segments():
            yield from seg

    def to_list(self):
        return list(self)


def segmented_primes(L, R, segment=SEGMENT) -> PrimeStream:
    if L < 2:
        L = 2
    return PrimeStream(L, R, segment)


@dataclass
class CrtPrimeSet:
    primes: list
    product: int
    bound: int
    meta: dict = field(default_factory=dict)

    def is_minimal(self):
        if self.product < self.bound:
            return False
        return self.product // self.primes[-1] < self.bound if self.primes else self.bound <= 1

    def to_json(self):
        return {"primes": [str(q) for q in self.primes], "bound": str(self.bound), "meta": self.meta}

    @classmethod
    def from_json(cls, d):
        primes = [int(q) for q in d["primes"]]
        return cls(primes, math.prod(primes), int(d["bound"]), dict(d.get("meta", {})))


def _as_bound(B):
    return B.value if hasattr(B, "value") else int(B)


def select_primes_bigchar(ell, p, B, admissible=None) -> CrtPrimeSet:
    """Odd primes from 12(ell+2)+1 upwards until their product reaches B."""
    B = _as_bound(B)
    q = 12 * (ell + 2) + 1
    P, out = 1, []
    while P < B:
        if is_prime(q) and (admissible is None or admissible(q)):
            P *= q
            out.append(q)
        q += 2
    return CrtPrimeSet(out, P, B, {"algorithm": "bigchar", "ell": ell})


# supersingular reduction --------------------------------------------------------

def _model(jq, q):
    """(A, B) of the canonical short Weierstrass model with j-invariant jq mod q."""
    jq %= q
    if jq == 0:
        return 0, 1
    if jq == 1728 % q:
        return 1, 0
    k = jq * pow(1728 - jq, -1, q) % q
    return 3 * k % q, 2 * k % q


def _ec_add(P, Q, A, q):
    if P is None:
        return Q
    if Q is None:
        return P
    x1, y1 = P
    x2, y2 = Q
    if x1 == x2:
        if (y1 + y2) % q == 0:
            return None
        lam = (3 * x1 * x1 + A) * pow(2 * y1, -1, q) % q
    else:
        lam = (y2 - y1) * pow(x2 - x1, -1, q) % q
    x3 = (lam * lam - x1 - x2) % q
    return x3, (lam * (x1 - x3) - y1) % q


def _ec_mul(P, n, A, q):
    R = None
    while n:
        if n & 1:
            R = _ec_add(R, P, A, q)
        P = _ec_add(P, P, A, q)
        n >>= 1
    return R


def _random_point(A, B, q, rng, twist):
    """Random point on y^2 = x^3 + A x + B, or on its quadratic twist.

    Returns (point, A') where A' is the linear coefficient of the curve used.
    For the twist, x with f(x) a nonresidue d gives the point (x d, d^2) on
    y^2 = x^3 + A d^2 x + B d^3.
    """
    while True:
        x = rng.randrange(q)
        f = (x * x * x + A * x + B) % q
        if f == 0:
            continue
        square = legendre(f, q) == 1
        if square and not twist:
            return (x, sqrt_mod(f, q)), A
        if not square and twist:
            return (x * f % q, f * f % q), A * f * f % q


def _passes_order_filter(A, B, q, rng, trials=2):
    """[q+1]P = O on random points of E and of its twist."""
    for twist in (False, True):
        for _ in range(trials):
            P, At = _random_point(A, B, q, rng, twist)
            if _ec_mul(P, q + 1, At, q) is not None:
                return False
    return True


def supersingular_reduction_test(jbar, q, model=None, rng=None) -> bool:
    """Is the reduction mod q of a curve with j-invariant jbar supersingular?

    ``model`` may give explicit integer (A, B); by default the canonical model
    for jbar mod q is used, which is nonsingular for every q > 3.
    """
    q = int(q)
    if q <= 3:
        raise BadReduction(f"short Weierstrass models degenerate in characteristic {q}")
    A, B = model if model is not None else _model(int(jbar), q)
    A, B = A % q, B % q
    if (4 * A ** 3 + 27 * B ** 2) % q == 0:
        raise BadReduction(f"the model has bad reduction at {q}")
    jq = int(jbar) % q
    # congruence shortcuts for the CM j-invariants
    if jq == 0:
        return q % 3 == 2
    if jq == 1728 % q:
        return q % 4 == 3
    rng = rng or random.Random(q)
    if not _passes_order_filter(A, B, q, rng):
        return False
    return is_supersingular_j(jq, q)


def select_primes_biglevel(ell, jbar, B, admissible=None, max_q=MAX_BOUND) -> CrtPrimeSet:
    """Primes above ceil(log2 B) where jbar reduces to a supersingular j.

    Candidates are produced in segments of length Delta = ceil(log2 B).
    """
    B = _as_bound(B)
    delta = max(2, (B - 1).bit_length())
    P, out = 1, []
    n = delta + 1
    rng = random.Random(jbar * 31 + ell)
    while P < B:
        if n > max_q:
            raise StreamExhausted("prime search reached the 2^50 ceiling before the bound")
        hi = min(n + delta, max_q)
        base = _BASE.upto(math.isqrt(hi))
        for q in _sieve_segment(n, hi, base):
            if q <= 3:
                continue
            if admissible is not None and not admissible(q):
                continue
            if supersingular_reduction_test(jbar, q, rng=rng):
                P *= q
                out.append(q)
                if P >= B:
                    break
        n = hi + 1
    return CrtPrimeSet(out, P, B, {"algorithm": "biglevel", "ell": ell, "j": str(jbar)})
