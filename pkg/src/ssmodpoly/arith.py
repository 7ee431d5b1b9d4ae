"""Finite fields F_p, F_{p^2} and towers F_{p^{2k}}.

Field elements are python-flint ``fq_default`` values.  F_{p^2} is always
presented as F_p[w]/(w^2 - c) with c the smallest quadratic nonresidue, so
the generator w has trace zero.  A tower of degree 2k carries its own sparse
modulus, the image of w, and the matrix of the p-power Frobenius; ``lift``
and ``coerce`` move elements between F_{p^2} and the tower.
"""

import atexit
import gc
import random
from functools import lru_cache

import flint

from .errors import NotInImage, TowerConstructionFailed


# python-flint may free a field context before elements that still point at it
# when reference cycles are collected during interpreter shutdown.  Contexts
# are pinned here and the collector is frozen at exit so that never happens.
_PINNED_CONTEXTS = []
atexit.register(gc.freeze)


def _field_ctx(modulus):
    ctx = flint.fq_default_ctx(modulus=modulus)
    _PINNED_CONTEXTS.append(ctx)
    return ctx


def is_prime(n) -> bool:
    n = int(n)
    return n >= 2 and bool(flint.fmpz(n).is_prime())


def legendre(a, p) -> int:
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def sqrt_mod(a, p):
    """A square root of a mod the odd prime p, or None."""
    a %= p
    if a == 0:
        return 0
    if legendre(a, p) != 1:
        return None
    return int(flint.fmpz_mod_ctx(p)(a).sqrt())


def smallest_nonresidue(p) -> int:
    for c in range(2, 10_000):
        if legendre(c, p) == -1:
            return c
    raise TowerConstructionFailed(f"no nonresidue below 10000 modulo {p}; p is not prime")


def _poly_ctx(p):
    return flint.fmpz_mod_poly_ctx(p)


class QuadExtension:
    """F_{p^2} = F_p(w) with w^2 = omega_sq a nonresidue."""

    def __init__(self, p):
        p = int(p)
        if p < 5 or not is_prime(p):
            raise TowerConstructionFailed(f"{p} is not a prime > 3")
        self.p = p
        self.omega_sq = -1 % p if p % 4 == 3 else smallest_nonresidue(p)
        modulus = _poly_ctx(p)([-self.omega_sq, 0, 1])
        self.ctx = _field_ctx(modulus)
        self.omega = self.ctx.gen()

    def __repr__(self):
        return f"QuadExtension(p={self.p}, omega_sq={self.omega_sq})"

    def __call__(self, a, b=0):
        return self.ctx([int(a), int(b)])

    def parts(self, x):
        c = x.to_list()
        c += [0] * (2 - len(c))
        return int(c[0]), int(c[1])

    def conj(self, x):
        a, b = self.parts(x)
        return self(a, -b)

    def in_prime_field(self, x) -> bool:
        return self.parts(x)[1] == 0

    def random(self, rng):
        return self(rng.randrange(self.p), rng.randrange(self.p))

    def to_json(self, x):
        return [str(v) for v in self.parts(x)]

    def from_json(self, v):
        return self(int(v[0]), int(v[1]) if len(v) > 1 else 0)


@lru_cache(maxsize=4096)
def quad_extension(p) -> QuadExtension:
    return QuadExtension(p)


def _sparse_irreducible(p, n, rng):
    R = _poly_ctx(p)
    # trinomials first, then random sparse pentanomials
    for _ in range(4000):
        coeffs = [0] * (n + 1)
        coeffs[n] = 1
        coeffs[0] = rng.randrange(1, p)
        coeffs[rng.randrange(1, n)] = rng.randrange(1, p)
        f = R(coeffs)
        if f.is_irreducible():
            return coeffs
    for _ in range(4000):
        coeffs = [rng.randrange(p) for _ in range(n)] + [1]
        f = R(coeffs)
        if f.is_irreducible():
            return coeffs
    raise TowerConstructionFailed(f"no irreducible polynomial of degree {n} found mod {p}")


class FieldTower:
    """The extension F_{p^{2k}} together with the embedding of F_{p^2}."""

    def __init__(self, p, k, modulus=None):
        self.base = quad_extension(p)
        self.p = self.base.p
        self.k = int(k)
        if self.k < 1:
            raise ValueError("k must be positive")
        self.degree = 2 * self.k
        if self.k == 1 and modulus is None:
            self.modulus = [(-self.base.omega_sq) % p, 0, 1]
            self.ctx = self.base.ctx
            self.omega_image = self.ctx.gen()
        else:
            if modulus is None:
                modulus = _sparse_irreducible(p, self.degree, random.Random(p * 1000003 + k))
            self.modulus = [int(c) % p for c in modulus]
            self.ctx = _field_ctx(_poly_ctx(p)(self.modulus))
            r = self.ctx(self.base.omega_sq).sqrt()
            self.omega_image = min(r, -r, key=self._key)
        if self.omega_image ** 2 != self.ctx(self.base.omega_sq):
            raise TowerConstructionFailed("omega image is not a square root of omega_sq")
        self._omega_coeffs = self.vec(self.omega_image)
        self._omega_index = next(i for i in range(1, self.degree) if self._omega_coeffs[i])
        self._omega_inv = pow(self._omega_coeffs[self._omega_index], -1, self.p)
        self._mat_ctx = flint.fmpz_mod_ctx(self.p)
        self.frobenius_matrix = self._frobenius_matrix()
        self._frob_powers = {0: None, 1: self.frobenius_matrix}
        self._lift_cache = {}

    def __repr__(self):
        return f"FieldTower(p={self.p}, k={self.k})"

    def vec(self, a):
        c = [int(v) for v in a.to_list()]
        return c + [0] * (self.degree - len(c))

    def _key(self, a):
        return self.vec(a)[::-1]

    def elem(self, coeffs):
        return self.ctx([int(c) for c in coeffs])

    def random(self, rng):
        return self.ctx([rng.randrange(self.p) for _ in range(self.degree)])

    def _frobenius_matrix(self):
        z = self.ctx.gen()
        zp = z ** self.p
        cols = []
        cur = self.ctx.one()
        for _ in range(self.degree):
            cols.append(self.vec(cur))
            cur = cur * zp
        rows = [[cols[c][r] for c in range(self.degree)] for r in range(self.degree)]
        return flint.fmpz_mod_mat(rows, self._mat_ctx)

    def _frob_matrix_power(self, m):
        if m not in self._frob_powers:
            half = self._frob_matrix_power(m // 2)
            M = half * half
            if m % 2:
                M = M * self.frobenius_matrix
            self._frob_powers[m] = M
        return self._frob_powers[m]

    def frobenius(self, a, m=1):
        """a^(p^m), computed with the stored Frobenius matrix."""
        m %= self.degree
        if m == 0:
            return a
        M = self._frob_matrix_power(m)
        v = flint.fmpz_mod_mat([[c] for c in self.vec(a)], self._mat_ctx)
        w = M * v
        return self.ctx([int(w[i, 0]) for i in range(self.degree)])

    def lift(self, x):
        """Image of x = a + b*w in F_{p^2} inside the tower."""
        if self.k == 1 and self.ctx is self.base.ctx:
            return x
        a, b = self.base.parts(x)
        return self.ctx(a) + self.ctx(b) * self.omega_image

    def coerce(self, alpha):
        """Preimage in F_{p^2} of an element of the embedded subfield."""
        if self.k == 1 and self.ctx is self.base.ctx:
            return alpha
        c = self.vec(alpha)
        b = c[self._omega_index] * self._omega_inv % self.p
        if self.degree % self.p:
            a = int(alpha.trace()) * pow(self.degree, -1, self.p) % self.p
        else:
            a = (c[0] - b * self._omega_coeffs[0]) % self.p
        x = self.base(a, b)
        if self.lift(x) != alpha:
            raise NotInImage("element does not lie in the image of F_{p^2}")
        return x

    def in_image(self, alpha) -> bool:
        try:
            self.coerce(alpha)
        except NotInImage:
            return False
        return True

    def to_json(self):
        return {"p": str(self.p), "k": self.k, "modulus": [str(c) for c in self.modulus],
                "omega_image": [str(c) for c in self.vec(self.omega_image)]}


@lru_cache(maxsize=512)
def build_tower(p, k) -> FieldTower:
    return FieldTower(int(p), int(k))


def tower_from_json(d) -> FieldTower:
    t = FieldTower(int(d["p"]), int(d["k"]), modulus=[int(c) for c in d["modulus"]])
    if t.vec(t.omega_image) != [int(c) for c in d["omega_image"]]:
        t.omega_image = t.elem([int(c) for c in d["omega_image"]])
    return t


def lift(x, tower):
    return tower.lift(x)


def coerce(alpha, tower):
    return tower.coerce(alpha)


def frobenius(alpha, m, tower):
    return tower.frobenius(alpha, m)


def elem_to_json(tower, a):
    return [str(c) for c in tower.vec(a)]
