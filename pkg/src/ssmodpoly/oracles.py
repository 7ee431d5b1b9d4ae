"""Independent reference computations used by the tests and ``selftest``.

* ``classical_modular_polynomial``: the integer Phi_l from q-expansions of j,
  via power sums of the l+1 conjugates j(l tau), j((tau+k)/l) and Newton's
  identities.  No isogenies or quaternions are involved.
* ``velu_neighbors``: the l+1 neighbours of a supersingular j from explicit
  kernel subgroups in a torsion tower.
* ``supersingular_census``: supersingular j-invariants from the roots of the
  Legendre-form Hasse polynomial.
* ``count_points``: naive point count over F_p.
"""

from collections import Counter
from functools import lru_cache
import random

import flint

from .arith import build_tower, quad_extension
from .ec import (curve_from_j, isogeny_from_kernel_point, normalize_twist, torsion_basis,
                 torsion_degree)
from .poly import poly_ring


# q-expansions -----------------------------------------------------------------

def _series_inverse(f, n):
    """1/f mod q^n for f with constant term 1."""
    g = flint.fmpz_poly([1])
    k = 1
    while k < n:
        k = min(2 * k, n)
        e = f.mul_low(g, k)
        g = g.mul_low(flint.fmpz_poly([2]) - e, k)
    return g


@lru_cache(maxsize=4)
def _qj_series(n):
    """q*j(q) mod q^n as an fmpz_poly."""
    eta = [0] * n
    k = 0
    while True:
        hit = False
        for kk in ((k, -k) if k else (0,)):
            e = kk * (3 * kk - 1) // 2
            if e < n:
                eta[e] += -1 if kk % 2 else 1
                hit = True
        if not hit and k > 0:
            break
        k += 1
    eta = flint.fmpz_poly(eta)
    delta = eta.pow_trunc(24, n)
    sig = [0] * n
    for d in range(1, n):
        for m in range(d, n, d):
            sig[m] += d ** 3
    e4 = flint.fmpz_poly([1] + [240 * s for s in sig[1:]])
    return e4.pow_trunc(3, n).mul_low(_series_inverse(delta, n), n)


def j_coefficients(n):
    """[c(-1), c(0), ..., c(n-2)] for j(q) = sum c(m) q^m."""
    s = _qj_series(n)
    return [int(s[i]) for i in range(n)]


class _Laurent:
    """q^val * sum c_i q^i, exact for exponents below ``prec``.

    Terms past the end of ``c`` (but below ``prec``) are zero.
    """

    __slots__ = ("val", "c", "prec")

    def __init__(self, val, coeffs, prec):
        self.val = val
        self.prec = prec
        self.c = list(coeffs)[:max(0, prec - val)]

    def coeff(self, e):
        i = e - self.val
        return self.c[i] if 0 <= i < len(self.c) else 0

    def _top(self):
        return min(self.prec, self.val + len(self.c))

    def __mul__(self, other):
        val = self.val + other.val
        prec = min(self.prec + other.val, other.prec + self.val)
        n = max(0, min(prec - val, len(self.c) + len(other.c)))
        a, b = flint.fmpz_poly(self.c), flint.fmpz_poly(other.c)
        prod = a.mul_low(b, n) if n else flint.fmpz_poly([])
        return _Laurent(val, [int(prod[i]) for i in range(min(n, prod.length()))], prec)

    def combine(self, other, s=1):
        val = min(self.val, other.val)
        prec = min(self.prec, other.prec)
        top = min(prec, max(self._top(), other._top()))
        return _Laurent(val, [self.coeff(e) + s * other.coeff(e) for e in range(val, top)], prec)

    def scale(self, k):
        return _Laurent(self.val, [k * x for x in self.c], self.prec)

    def exact_div(self, k):
        out = []
        for x in self.c:
            if x % k:
                raise ArithmeticError("inexact division in Newton identities")
            out.append(x // k)
        return _Laurent(self.val, out, self.prec)


@lru_cache(maxsize=16)
def classical_modular_polynomial(ell):
    """Integer coefficients {(a, b): c} of Phi_l = sum c X^a Y^b."""
    L = ell
    P = (L + 1) * (L + 1) + 2              # absolute precision of power sums
    N = L * P + L + 4
    J = _qj_series(N)
    powers = [flint.fmpz_poly([1])]
    for m in range(1, L + 2):
        powers.append(powers[-1].mul_low(J, N))
    s = [None]
    for m in range(1, L + 2):
        Jm = powers[m]
        # j(q^L)^m = q^{-mL} J(q^L)^m
        inflated = [0] * (P + m * L + 1)
        for i in range(len(inflated)):
            if i % L == 0 and i // L < N:
                inflated[i] = int(Jm[i // L])
        first = _Laurent(-m * L, inflated, P)
        # sum_k j((tau + k)/L)^m = L * sum_t [x^{Lt}] j(x)^m q^t
        t0 = -(m // L)
        second = [L * int(Jm[L * t + m]) if L * t + m < N else 0 for t in range(t0, P)]
        s.append(first.combine(_Laurent(t0, second, P)))
    e = [_Laurent(0, [1], 10 ** 9)]
    for k in range(1, L + 2):
        acc = None
        for i in range(1, k + 1):
            term = e[k - i] * s[i]
            if i % 2 == 0:
                term = term.scale(-1)
            acc = term if acc is None else acc.combine(term)
        e.append(acc.exact_div(k))
    # j^d as Laurent series, exact through q^0
    jser = _Laurent(-1, [int(J[i]) for i in range(L + 3)], L + 2)
    jpow = [_Laurent(0, [1], 10 ** 9)]
    for d in range(1, L + 2):
        jpow.append(jpow[-1] * jser)
    coeffs = {}
    for k in range(0, L + 2):
        ek = e[k]
        if ek.prec < 1:
            raise ArithmeticError("insufficient q-expansion precision")
        poly = {}
        rem = ek
        for d in range(L + 1, 0, -1):
            c = rem.coeff(-d)
            if c:
                poly[d] = c
                rem = rem.combine(jpow[d].scale(c), -1)
        for ex in range(rem.val, 1):
            if ex < 0 and rem.coeff(ex):
                raise ArithmeticError("pole order exceeds l+1")
        if rem.coeff(0):
            poly[0] = rem.coeff(0)
        sign = -1 if k % 2 else 1
        for d, c in poly.items():
            coeffs[(L + 1 - k, d)] = sign * c
    return coeffs


def phi_evaluated(ell, j, p):
    """Coefficients (ascending in Y) of Phi_l(j, Y) mod p."""
    out = [0] * (ell + 2)
    for (a, b), c in classical_modular_polynomial(ell).items():
        out[b] = (out[b] + c * pow(j, a, p)) % p
    return out


def phi_contracted(ell, xs, p):
    """sum_{a,b} c_{a,b} x_a Y^b mod p for a vector x_0..x_{l+1}."""
    out = [0] * (ell + 2)
    for (a, b), c in classical_modular_polynomial(ell).items():
        if a < len(xs):
            out[b] = (out[b] + c * xs[a]) % p
    return out


def phi_integer_at(ell, jbar):
    """Coefficients of the integer polynomial Phi_l(jbar, Y)."""
    out = [0] * (ell + 2)
    for (a, b), c in classical_modular_polynomial(ell).items():
        out[b] += c * jbar ** a
    return out


# Velu enumeration ---------------------------------------------------------------

def velu_neighbors(p, j, ell, seed=5):
    """Multiset (Counter of F_{p^2} elements) of the j-invariants l-isogenous to j.

    j must be supersingular, since the torsion tower degree assumes
    Frobenius squared equals -p.
    """
    F = quad_extension(p)
    j = F.ctx(j) if not hasattr(j, "to_list") else j
    E = normalize_twist(curve_from_j(j, F))
    k = torsion_degree(p, ell)
    T = build_tower(p, k)
    C = E.over(T)
    P, Q = torsion_basis(E, ell, T, random.Random(seed))
    gens = [Q] + [C.add(P, C.mul(Q, t)) for t in range(ell)]
    out = Counter()
    for K in gens:
        out[isogeny_from_kernel_point(E, K, ell, T).codomain.j_invariant()] += 1
    return out


def velu_polynomial(p, j, ell):
    """prod (Y - j_i) over the Velu neighbours, ascending coefficients over F_{p^2}."""
    F = quad_extension(p)
    R = poly_ring(F.ctx)
    f = R([1])
    for r, m in velu_neighbors(p, j, ell).items():
        f *= R([-r, 1]) ** m
    return [f[i] for i in range(ell + 2)]


# census ---------------------------------------------------------------------------

def supersingular_census(p):
    """All supersingular j in F_{p^2}, from the Legendre-form Hasse polynomial."""
    F = quad_extension(p)
    R = poly_ring(F.ctx)
    m = (p - 1) // 2
    coeffs = []
    c = 1
    for i in range(m + 1):
        coeffs.append(F(c * c % p))
        c = c * (m - i) * pow(i + 1, -1, p) % p
    H = R(coeffs)
    js = set()
    for lam, _ in H.roots():
        num = 256 * (lam * lam - lam + 1) ** 3
        den = lam * lam * (lam - 1) ** 2
        js.add(num / den)
    return js


def count_points(A, B, p):
    """#E(F_p) for y^2 = x^3 + A x + B, by counting square classes."""
    squares = Counter((y * y) % p for y in range(p))
    return 1 + sum(squares[(x * x * x + A * x + B) % p] for x in range(p))
