"""Full-rank lattices in H(-q, -p): orders, ideals and their arithmetic.

A lattice is stored as four integer rows (coordinates in 1, i, j, k) over a
common denominator, in Hermite normal form with the denominator as small as
possible.  Two lattices are equal exactly when these data agree.
"""

import itertools
import random
from fractions import Fraction
from math import gcd, isqrt

import flint

from ..arith import is_prime, legendre, sqrt_mod
from ..errors import UnsupportedPrime
from .algebra import Quaternion, bilinear4, mul4, norm4, quat_algebra
from .lll import lll_gram, short_vectors


def _content(rows, den):
    g = den
    for r in rows:
        for c in r:
            g = gcd(g, c)
            if g == 1:
                return 1
    return g


def _hnf_rows(rows):
    H = flint.fmpz_mat([list(r) for r in rows]).hnf()
    out = []
    for i in range(H.nrows()):
        r = tuple(int(H[i, j]) for j in range(4))
        if any(r):
            out.append(r)
    return out


def _rational_gcd(values):
    """gcd of a collection of rationals (nonnegative result)."""
    num, den = 0, 1
    for v in values:
        v = Fraction(v)
        # gcd(a/b, c/d) = gcd(ad, cb) / bd
        num, den = gcd(num * v.denominator, v.numerator * den), den * v.denominator
        g = gcd(num, den)
        if g:
            num, den = num // g, den // g
    return Fraction(num, den) if den else Fraction(0)


class QuatLattice:
    __slots__ = ("algebra", "basis", "den", "_inv", "_reduced", "_hash")

    def __init__(self, algebra, rows, den=1, canonical=False):
        self.algebra = algebra
        rows = [tuple(int(c) for c in r) for r in rows]
        den = int(den)
        if not canonical:
            if den < 0:
                rows, den = [tuple(-c for c in r) for r in rows], -den
            rows = _hnf_rows(rows)
            if len(rows) != 4:
                raise ValueError("lattice does not have full rank")
            g = _content(rows, den)
            if g > 1:
                rows = [tuple(c // g for c in r) for r in rows]
                den //= g
        self.basis = tuple(rows)
        self.den = den
        self._inv = None
        self._reduced = None
        self._hash = None

    # construction -----------------------------------------------------
    @classmethod
    def from_quaternions(cls, algebra, gens):
        gens = list(gens)
        D = 1
        for g in gens:
            D = D * g.d // gcd(D, g.d)
        rows = [tuple(c * (D // g.d) for c in g.coords) for g in gens]
        return cls(algebra, rows, D)

    def _same_kind(self, rows, den):
        return QuatLattice(self.algebra, rows, den)

    def quaternions(self):
        return [Quaternion(self.algebra, *r, self.den) for r in self.basis]

    def __eq__(self, other):
        return (isinstance(other, QuatLattice) and self.algebra == other.algebra
                and self.den == other.den and self.basis == other.basis)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.algebra.p, self.algebra.q, self.basis, self.den))
        return self._hash

    def __repr__(self):
        return f"{type(self).__name__}({list(map(list, self.basis))}, den={self.den})"

    def key(self):
        return (self.den, self.basis)

    # linear algebra -----------------------------------------------------
    def _inverse(self):
        if self._inv is None:
            self._inv = flint.fmpq_mat(flint.fmpz_mat([list(r) for r in self.basis])).inv()
        return self._inv

    def coordinates(self, alpha):
        """Coordinates of the quaternion alpha in this lattice's basis."""
        Minv = self._inverse()
        v = flint.fmpq_mat(1, 4, [flint.fmpq(c * self.den, alpha.d) for c in alpha.coords])
        w = v * Minv
        return [Fraction(int(w[0, i].p), int(w[0, i].q)) for i in range(4)]

    def contains(self, alpha):
        return all(c.denominator == 1 for c in self.coordinates(alpha))

    def element(self, coeffs):
        """The quaternion sum c_i b_i."""
        v = [sum(c * r[i] for c, r in zip(coeffs, self.basis)) for i in range(4)]
        return Quaternion(self.algebra, *v, self.den)

    def contains_lattice(self, other):
        return all(self.contains(b) for b in other.quaternions())

    def determinant(self):
        """Covolume in the 1, i, j, k coordinates (a positive rational)."""
        d = 1
        for i in range(4):
            d *= self.basis[i][i]
        return Fraction(abs(d), self.den ** 4)

    def index_in(self, other):
        """[other : self] for self contained in other."""
        r = self.determinant() / other.determinant()
        if r.denominator != 1:
            raise ValueError("lattice is not contained in the other lattice")
        return int(r)

    def gram(self):
        """Integer matrix G with v G v^t = 2 den^2 nrd(v) for coefficient vectors v."""
        A = self.algebra
        return [[bilinear4(a, b, A.q, A.p) for b in self.basis] for a in self.basis]

    def norm(self):
        """gcd of reduced norms of the lattice elements."""
        A = self.algebra
        vals = [norm4(r, A.q, A.p) for r in self.basis]
        B = self.basis
        vals += [bilinear4(B[a], B[b], A.q, A.p) for a in range(4) for b in range(a + 1, 4)]
        g = 0
        for v in vals:
            g = gcd(g, v)
        return Fraction(g, self.den ** 2)

    def reduced_basis(self):
        """LLL-reduced basis for the norm form: (transform, reduced gram)."""
        if self._reduced is None:
            self._reduced = lll_gram(self.gram())
        return self._reduced

    def reduced_elements(self):
        """The LLL-reduced basis as quaternions."""
        T, _ = self.reduced_basis()
        return [self.element(row) for row in T]

    def short_vectors(self, bound):
        """(reduced norm, coordinates in the LLL basis) for elements of norm <= bound."""
        _, H = self.reduced_basis()
        scale = 2 * self.den ** 2
        return [(Fraction(val, scale), v) for val, v in short_vectors(H, Fraction(bound) * scale)]

    def reduced_element(self, v):
        T, _ = self.reduced_basis()
        return self.element([sum(v[i] * T[i][j] for i in range(4)) for j in range(4)])

    def short_elements(self, bound):
        """Elements of reduced norm <= bound (one per +- pair), sorted by norm."""
        return [(val, self.reduced_element(v)) for val, v in self.short_vectors(bound)]

    def discriminant(self):
        """Reduced discriminant sqrt(|det trd(b_a conj b_b)|)."""
        G = flint.fmpz_mat(self.gram())
        det = Fraction(abs(int(G.det())), self.den ** 8)
        n, d = isqrt(det.numerator), isqrt(det.denominator)
        if n * n != det.numerator or d * d != det.denominator:
            return None
        return Fraction(n, d)

    # algebraic operations ----------------------------------------------------
    def scale(self, c):
        c = Fraction(c)
        return QuatLattice(self.algebra, [tuple(x * c.numerator for x in r) for r in self.basis],
                           self.den * c.denominator)

    def conjugate(self):
        return QuatLattice(self.algebra, [(r[0], -r[1], -r[2], -r[3]) for r in self.basis], self.den)

    def left_multiply(self, alpha):
        """alpha * L."""
        A = self.algebra
        rows = [mul4(alpha.coords, r, A.q, A.p) for r in self.basis]
        return QuatLattice(A, rows, self.den * alpha.d)

    def right_multiply(self, alpha):
        """L * alpha."""
        A = self.algebra
        rows = [mul4(r, alpha.coords, A.q, A.p) for r in self.basis]
        return QuatLattice(A, rows, self.den * alpha.d)

    def to_json(self):
        return {"p": str(self.algebra.p), "q": str(self.algebra.q),
                "basis": [[str(c) for c in r] for r in self.basis], "den": str(self.den)}


def lattice_from_json(d, cls=None):
    A = quat_algebra(int(d["p"]), int(d["q"]))
    L = QuatLattice(A, [[int(c) for c in r] for r in d["basis"]], int(d["den"]))
    if cls is QuatOrder:
        return QuatOrder(L)
    return L


def lattice_sum(L1, L2):
    D = L1.den * L2.den // gcd(L1.den, L2.den)
    rows = [tuple(c * (D // L1.den) for c in r) for r in L1.basis]
    rows += [tuple(c * (D // L2.den) for c in r) for r in L2.basis]
    return QuatLattice(L1.algebra, rows, D)


def lattice_product(L1, L2):
    A = L1.algebra
    rows = [mul4(a, b, A.q, A.p) for a in L1.basis for b in L2.basis]
    return QuatLattice(A, rows, L1.den * L2.den)


def dual(L):
    """{v : <v, w> in Z for w in L} for the coordinate dot product."""
    Minv = L._inverse().transpose()
    rows = []
    D = 1
    for i in range(4):
        for j in range(4):
            D = D * int(Minv[i, j].q) // gcd(D, int(Minv[i, j].q))
    for i in range(4):
        rows.append(tuple(int(Minv[i, j] * D) * L.den for j in range(4)))
    return QuatLattice(L.algebra, rows, D)


def lattice_intersection(L1, L2):
    return dual(lattice_sum(dual(L1), dual(L2)))


# orders ---------------------------------------------------------------------

class QuatOrder(QuatLattice):
    """A lattice that is a ring with 1."""

    __slots__ = ("_type", "_units")

    def __init__(self, lattice, check=False):
        super().__init__(lattice.algebra, lattice.basis, lattice.den, canonical=True)
        self._type = None
        self._units = None
        if check and not is_order(self):
            raise ValueError("lattice is not an order")

    def is_maximal(self):
        return self.discriminant() == self.algebra.p

    def unit_count(self):
        if self._units is None:
            self._units = 2 * len(self.short_elements(1))
        return self._units


def is_order(L):
    one = Quaternion(L.algebra, 1)
    if not L.contains(one):
        return False
    return L.contains_lattice(lattice_product(L, L))


def order_from_lattice(L):
    return QuatOrder(L, check=True)


def ring_closure(L, max_den=None):
    """The smallest ring containing L and 1, or None if its denominators exceed max_den."""
    cur = add_elements(L, [Quaternion(L.algebra, 1)])
    while True:
        nxt = lattice_sum(cur, lattice_product(cur, cur))
        if max_den is not None and nxt.den > max_den:
            return None
        if nxt == cur:
            return QuatOrder(cur)
        cur = nxt


def add_elements(L, elems):
    return QuatLattice.from_quaternions(L.algebra, L.quaternions() + list(elems))


def left_order(I):
    """{a : a I in I}, via I conj(I) / N(I)."""
    return QuatOrder(lattice_product(I, I.conjugate()).scale(1 / I.norm()))


def right_order(I):
    """{a : I a in I}, via conj(I) I / N(I)."""
    return QuatOrder(lattice_product(I.conjugate(), I).scale(1 / I.norm()))


def right_order_generic(L):
    """{a : L a in L} as an intersection of b^-1 L, without assuming invertibility."""
    result = None
    for b in L.quaternions():
        M = L.left_multiply(b.inverse())
        result = M if result is None else lattice_intersection(result, M)
    return QuatOrder(result)


def left_order_generic(L):
    result = None
    for b in L.quaternions():
        M = L.right_multiply(b.inverse())
        result = M if result is None else lattice_intersection(result, M)
    return QuatOrder(result)


# ideals ----------------------------------------------------------------------

class QuatIdeal(QuatLattice):
    """A lattice together with the order it is a left ideal of."""

    __slots__ = ("left", "_norm", "_right")

    def __init__(self, lattice, left, norm=None, right=None):
        super().__init__(lattice.algebra, lattice.basis, lattice.den, canonical=True)
        self.left = left
        self._norm = None if norm is None else Fraction(norm)
        self._right = right

    @property
    def reduced_norm(self):
        if self._norm is None:
            self._norm = QuatLattice.norm(self)
        return self._norm

    def right_order(self):
        if self._right is None:
            self._right = right_order(self)
        return self._right

    def conjugate_ideal(self):
        """conj(I) as a left ideal of the right order of I."""
        return QuatIdeal(self.conjugate(), self.right_order(), self.reduced_norm, self.left)

    def multiply(self, other):
        """I * J for J a left ideal of the right order of I."""
        L = lattice_product(self, other)
        return QuatIdeal(L, self.left, self.reduced_norm * other.reduced_norm, other._right)

    def right_scale(self, alpha):
        """I * alpha, a left ideal of the same order."""
        return QuatIdeal(self.right_multiply(alpha), self.left, self.reduced_norm * alpha.reduced_norm())

    def primitive(self):
        """Divide out the largest integer n with I in n O."""
        n = 0
        for r in self.basis:
            for c in r:
                n = gcd(n, c)
        # largest integer g with I / g inside the left order; g^2 divides N(I)
        N = self.reduced_norm
        m = gcd(n * self.left.den, N.numerator) if N.denominator == 1 else 0
        cand = [g for g in _divisors(m) if g > 1 and N.numerator % (g * g) == 0]
        best = 1
        for g in sorted(cand, reverse=True):
            if self.left.contains_lattice(self.scale(Fraction(1, g))):
                best = g
                break
        if best == 1:
            return self
        return QuatIdeal(self.scale(Fraction(1, best)), self.left, self.reduced_norm / best ** 2,
                         self._right)


def _divisors(n):
    n = abs(int(n))
    if n == 0:
        return []
    out = [1]
    for f, e in flint.fmpz(n).factor():
        f = int(f)
        out = [d * f ** k for d in out for k in range(e + 1)]
    return out


def ideal_from_generators(O, alpha, N):
    """O alpha + O N."""
    L = lattice_sum(O.right_multiply(alpha), O.scale(N))
    return QuatIdeal(L, O)


def unit_ideal(O):
    return QuatIdeal(O, O, 1, O)


def connecting_ideal(O1, O2):
    """An integral ideal with left order O1 and right order O2."""
    L = lattice_product(O1, O2)
    N = lattice_intersection(O1, O2).index_in(O1)
    I = QuatIdeal(L.scale(N), O1)
    return I.primitive()


def ideals_equivalent(I, J):
    """True iff J = I a for some a (both left ideals of the same order)."""
    target = I.reduced_norm * J.reduced_norm
    L = lattice_product(I.conjugate(), J)
    return any(v == target for v, _ in L.short_elements(target))


def equivalence_witness(I, J):
    """a with J = I a, or None."""
    target = I.reduced_norm * J.reduced_norm
    L = lattice_product(I.conjugate(), J)
    for v, g in L.short_elements(target):
        if v == target:
            return g / I.reduced_norm
    return None


def _char_irreducible(tr, n, ell):
    if ell == 2:
        return tr % 2 == 1 and n % 2 == 1
    return legendre(tr * tr - 4 * n, ell) == -1


def ideals_of_norm_ell(O, ell, rng=None):
    """The ell+1 left O-ideals of reduced norm ell, in canonical order."""
    ell = int(ell)
    rng = rng or random.Random(ell * 7919 + O.algebra.p)

    def rand_elt(bound):
        c = [rng.randrange(-bound, bound + 1) for _ in range(4)]
        return O.element(c), c

    bound = max(2, ell)
    while True:
        alpha, _ = rand_elt(bound)
        tr, n = alpha.reduced_trace(), alpha.reduced_norm()
        if tr.denominator == 1 and n.denominator == 1 and _char_irreducible(int(tr), int(n), ell):
            break
    a_norm = int(alpha.reduced_norm())
    while True:
        beta, _ = rand_elt(bound)
        b_norm = int(beta.reduced_norm())
        cross = int((beta * alpha.conjugate()).reduced_trace())
        # nrd(beta + t alpha) = b_norm + t cross + t^2 a_norm
        ts = []
        if ell == 2:
            ts = [t for t in (0, 1) if (b_norm + t * cross + t * t * a_norm) % 2 == 0]
        else:
            disc = (cross * cross - 4 * a_norm * b_norm) % ell
            s = sqrt_mod(disc, ell)
            if s is not None:
                inv = pow(2 * a_norm, -1, ell)
                ts = [(-cross + s) * inv % ell]
        found = None
        for t in ts:
            gamma = beta + alpha * t
            if not all(c.denominator == 1 and c.numerator % ell == 0
                       for c in O.coordinates(gamma)):
                found = gamma
                break
        if found is not None:
            gamma = found
            break
    ideals = [ideal_from_generators(O, gamma, ell)]
    for t in range(ell):
        ideals.append(ideal_from_generators(O, gamma * (alpha + t), ell))
    for I in ideals:
        I._norm = Fraction(ell)
    ideals.sort(key=lambda I: I.key())
    return ideals


# standard maximal orders -----------------------------------------------

CM_ODD_Q = (3, 7, 11, 19, 43, 67, 163)


def choose_q(p):
    """The q of the standard order: 1, 2 or an odd class-number-one value."""
    if p % 4 == 3:
        return 1
    if p % 8 == 5:
        return 2
    for q in CM_ODD_Q:
        if legendre(p, q) == -1:
            return q
    raise UnsupportedPrime(f"no class-number-one q with (p/q) = -1 for p = {p}")


def _maximalize(O):
    """Walk up to a maximal order containing O (deterministic choice)."""
    A = O.algebra
    while O.discriminant() != A.p:
        best = None
        for ell in (2, 3, 5, 7):
            if (O.discriminant() / A.p).numerator % ell:
                continue
            basis = O.quaternions()
            for coeffs in itertools.product(range(ell), repeat=4):
                if not any(coeffs):
                    continue
                v = sum((b * c for b, c in zip(basis, coeffs)), Quaternion(A, 0)) / ell
                if O.contains(v):
                    continue
                n, t = v.reduced_norm(), v.reduced_trace()
                if n.denominator != 1 or t.denominator != 1:
                    continue
                R = ring_closure(add_elements(O, [v]), max_den=O.den * ell ** 2)
                if R is None:
                    continue
                d = R.discriminant()
                if d is None or d.denominator != 1:
                    continue
                if best is None or (d, R.key()) < (best.discriminant(), best.key()):
                    best = R
            if best is not None:
                break
        if best is None:
            raise ValueError("could not enlarge the order")
        O = best
    return O


def _std_lattice(A, gens):
    return QuatOrder(QuatLattice.from_quaternions(A, gens))


def standard_maximal_order(p):
    """The maximal order O_0 with the special q for p."""
    p = int(p)
    if p <= 3 or not is_prime(p):
        raise UnsupportedPrime(f"{p} is not a prime > 3")
    q = choose_q(p)
    A = quat_algebra(p, q)
    if q == 1:
        gens = [A(1), A(0, 1), A(0, 1, 1, 0, 2), A(1, 0, 0, 1, 2)]
        O = _std_lattice(A, gens)
    elif q == 2:
        O = _maximalize(_std_lattice(A, [A(1), A(0, 1), A(0, 0, 1), A(0, 0, 0, 1)]))
    else:
        c = sqrt_mod(-p, q)
        c = min(c, q - c)
        gens = [A(1), A(1, 1, 0, 0, 2), A(0, 0, 1, 1, 2), A(0, c, 0, 1, q)]
        O = _std_lattice(A, gens)
    if not is_order(O) or O.discriminant() != p:
        raise UnsupportedPrime(f"standard order construction failed for p = {p}")
    return O
