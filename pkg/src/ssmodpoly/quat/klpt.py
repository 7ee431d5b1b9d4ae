"""Equivalent ideals of prime and of powersmooth norm for the standard order.

The powersmooth routine is the KLPT construction specialised to an order
containing Z<i, j> with i^2 = -q, j^2 = -p: represent N*m1 by an element
gamma, find mu in Z j + Z ji with gamma*mu in I, then lift mu by strong
approximation to an element of norm m2.  Both m1 and m2 are products of
allowed prime powers, so the resulting ideal has norm dividing m1*m2.
"""

import math
import random
from fractions import Fraction

import flint

from ..arith import is_prime, legendre, sqrt_mod
from ..errors import KlptFailure, SearchExhausted
from .algebra import Quaternion
from .lattice import QuatIdeal

RETRIES = 64
ESCALATIONS = 6
DEFAULT_BASE = 1 << 10


def equivalent_prime_ideal(I, max_bound_factor=1 << 20, avoid=()):
    """Equivalent left ideal of prime norm, from the shortest suitable element.

    Returns (J, alpha) with J = I conj(alpha) / N(I).
    """
    N = I.reduced_norm
    p = I.algebra.p
    scale = 4
    while scale <= max_bound_factor:
        bound = N * scale * max(1, math.isqrt(p))
        for val, alpha in I.short_elements(bound):
            n = val / N
            if n.denominator != 1:
                continue
            n = int(n)
            if n in avoid or n == p or not is_prime(n):
                continue
            J = _transport(I, alpha)
            return J, alpha
        scale *= 8
    raise SearchExhausted("no prime-norm equivalent ideal within the search radius")


def _transport(I, alpha):
    """I conj(alpha) / N(I), with alpha in I."""
    N = I.reduced_norm
    L = I.right_multiply(alpha.conjugate() / N)
    return QuatIdeal(L, I.left, alpha.reduced_norm() / N)


def cornacchia(q, r):
    """Some (a, b) with a^2 + q b^2 = r, or None.  r must be prime or 1."""
    if r == 1:
        return (1, 0)
    if r == q:
        return (0, 1)
    if r < 2 or not is_prime(r):
        return None
    if r == 2:
        return (1, 1) if q == 1 else None
    if legendre(-q % r, r) != 1:
        return None
    x = sqrt_mod(-q % r, r)
    if 2 * x < r:
        x = r - x
    a, b = r, x
    lim = math.isqrt(r)
    while b > lim:
        a, b = b, a % b
    rest = r - b * b
    if rest % q:
        return None
    c = rest // q
    s = math.isqrt(c)
    if s * s != c:
        return None
    return (b, s)


def _elem(A, a, b, c, d):
    """a + b i + j (c + d i) = a + b i + c j - d k."""
    return Quaternion(A, a, b, c, -d)


def represent_integer(A, M, rng, tries=2000):
    """gamma = a + b i + j(c + d i) with nrd(gamma) = M, or None."""
    p, q = A.p, A.q
    if M <= p:
        return None
    cmax = math.isqrt(M // p)
    for _ in range(tries):
        c = rng.randint(-cmax, cmax)
        room = M - p * c * c
        dmax = math.isqrt(max(0, room // (p * q)))
        d = rng.randint(-dmax, dmax)
        r = room - p * q * d * d
        if r <= 0:
            continue
        sol = cornacchia(q, r)
        if sol is None:
            continue
        a, b = sol
        return _elem(A, a, b, c, d)
    return None


def _nullspace_mod(rows, N):
    """A nonzero (x_0..x_{n-1}) with sum x_i rows[i] = 0 mod N, or None."""
    m = flint.nmod_mat([[int(rows[i][j]) % N for i in range(len(rows))]
                        for j in range(len(rows[0]))], N)
    X, nullity = m.nullspace()
    if nullity == 0:
        return None
    return [int(X[i, 0]) for i in range(len(rows))]


def _mu_for(I, gamma):
    """(C, D) with gamma * j(C + D i) in I, found modulo N(I)."""
    A = I.algebra
    N = int(I.reduced_norm)
    O = I.left
    v1 = O.coordinates(gamma * _elem(A, 0, 0, 1, 0))
    v2 = O.coordinates(gamma * _elem(A, 0, 0, 0, 1))
    span = [O.coordinates(b) for b in I.quaternions()]
    rows = [v1, v2] + span
    if any(c.denominator != 1 for r in rows for c in r):
        return None
    x = _nullspace_mod([[int(c) for c in r] for r in rows], N)
    if x is None:
        return None
    C, D = x[0] % N, x[1] % N
    if C == 0 and D == 0:
        return None
    return C, D


class _Pool:
    """Prime powers available for the output norm."""

    def __init__(self, p, N, base, allowed):
        self.powers = []
        ell = 2
        while ell <= base:
            if is_prime(ell) and ell != p and N % ell:
                e, pe = 0, 1
                while pe * ell <= base and (allowed is None or allowed(ell, e + 1)):
                    e += 1
                    pe *= ell
                if e:
                    self.powers.append((ell, pe))
            ell += 1

    def product(self, target, used, rng):
        """Product of unused prime powers exceeding target, chosen at random."""
        avail = [t for t in self.powers if t[0] not in used]
        rng.shuffle(avail)
        m, chosen = 1, []
        for ell, pe in avail:
            if m >= target:
                break
            m *= pe
            chosen.append(ell)
        if m < target:
            return None, ()
        return m, tuple(chosen)


def _strong_approx(A, N, C, D, m2, rng, max_points=4000):
    """mu' = lam j(C + D i) + N mu1 with nrd(mu') = m2, or None."""
    p, q = A.p, A.q
    K = (C * C + q * D * D) % N
    if K == 0:
        return None
    rhs = m2 * pow(p * K, -1, N) % N
    if legendre(rhs, N) != 1:
        return None
    lam = sqrt_mod(rhs, N)
    T = (m2 - p * lam * lam * (C * C + q * D * D))
    if T % N:
        return None
    s = (T // N) * pow(2 * p * lam, -1, N) % N
    # points (c, d) with C c + q D d = s (mod N)
    if C % N:
        Cinv = pow(C, -1, N)
        base_pt = (s * Cinv % N, 0)
        step = (-q * D * Cinv % N, 1)
    else:
        base_pt = (0, s * pow(q * D, -1, N) % N)
        step = (1, 0)
    # we need N^2 [(c + lam C/N)^2 + q (d + lam D/N)^2] <= m2 / p
    R2 = Fraction(m2, p * N * N)
    c0, d0 = Fraction(-lam * C, N), Fraction(-lam * D, N)
    count = 0
    cands = []
    if step == (1, 0):
        # d fixed mod N, c free
        dspan = math.isqrt(int(R2 / q)) + 1
        for k in range(-dspan // N - 2, dspan // N + 3):
            d = base_pt[1] + k * N
            left = R2 - q * (d - d0) ** 2
            if left < 0:
                continue
            w = math.isqrt(int(left)) + 1
            for c in range(math.floor(c0 - w), math.ceil(c0 + w) + 1):
                cands.append((c, d))
    else:
        dspan = math.isqrt(int(R2 / q)) + 1
        for d in range(math.floor(d0 - dspan), math.ceil(d0 + dspan) + 1):
            left = R2 - q * (d - d0) ** 2
            if left < 0:
                continue
            w = math.isqrt(int(left)) + 1
            cres = (base_pt[0] + step[0] * d) % N
            lo = math.floor(c0 - w)
            first = lo + ((cres - lo) % N)
            for c in range(first, math.ceil(c0 + w) + 1, N):
                cands.append((c, d))
            if len(cands) > 50 * max_points:
                break
    rng.shuffle(cands)
    for c, d in cands:
        count += 1
        if count > max_points:
            break
        u, v = lam * C + N * c, lam * D + N * d
        rest = m2 - p * (u * u + q * v * v)
        if rest < 0 or rest % (N * N):
            continue
        sol = cornacchia(q, rest // (N * N))
        if sol is None:
            continue
        a, b = sol
        return _elem(A, N * a, N * b, u, v)
    return None


def is_powersmooth(n, base):
    n = int(n)
    if n < 1:
        return False
    for f, e in flint.fmpz(n).factor():
        if int(f) ** e > base:
            return False
    return True


def klpt(I, smoothness_base=DEFAULT_BASE, allowed=None, seed=0, rng=None):
    """Equivalent left ideal of the standard order with powersmooth norm.

    ``allowed(ell, e)`` may further restrict which prime powers ell^e are
    usable.  The size of the norm targets grows after each block of RETRIES
    failed randomisations.
    """
    rng = rng or random.Random(seed)
    A = I.algebra
    p, q = A.p, A.q
    avoid = {2, q}
    L, _ = equivalent_prime_ideal(I, avoid=avoid)
    N = int(L.reduced_norm)
    pool = _Pool(p, N, smoothness_base, allowed)
    slack = 16 * max(4, p.bit_length()) ** 2
    for _ in range(ESCALATIONS):
        for _ in range(RETRIES):
            m1, used1 = pool.product(Fraction(p * slack, N), (), rng)
            if m1 is None:
                break
            gamma = represent_integer(A, N * m1, rng, tries=200)
            if gamma is None or not I.left.contains(gamma):
                continue
            CD = _mu_for(L, gamma)
            if CD is None:
                continue
            C, D = CD
            m2, used2 = pool.product(p * N ** 3 * slack, set(used1), rng)
            if m2 is None:
                break
            mu = _strong_approx(A, N, C, D, m2, rng)
            if mu is None:
                continue
            beta = gamma * mu
            if not L.contains(beta):
                continue
            J = _transport(L, beta).primitive()
            if is_powersmooth(J.reduced_norm, smoothness_base):
                return J
        slack *= 16
    raise KlptFailure("no powersmooth equivalent ideal within the retry budget")
