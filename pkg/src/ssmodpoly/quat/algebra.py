"""Elements of the definite quaternion algebra H(-q, -p).

Basis 1, i, j, k with i^2 = -q, j^2 = -p, k = ij = -ji.  Integer coordinate
vectors are 4-tuples (t, x, y, z); a Quaternion carries a denominator too.
"""

from fractions import Fraction
from functools import lru_cache
from math import gcd


def mul4(a, b, q, p):
    """Product of coordinate vectors a, b (any ring of coefficients)."""
    t1, x1, y1, z1 = a
    t2, x2, y2, z2 = b
    return (
        t1 * t2 - q * x1 * x2 - p * y1 * y2 - q * p * z1 * z2,
        t1 * x2 + x1 * t2 + p * (y1 * z2 - z1 * y2),
        t1 * y2 + y1 * t2 + q * (z1 * x2 - x1 * z2),
        t1 * z2 + z1 * t2 + x1 * y2 - y1 * x2,
    )


def norm4(a, q, p):
    t, x, y, z = a
    return t * t + q * x * x + p * y * y + q * p * z * z


def conj4(a):
    return (a[0], -a[1], -a[2], -a[3])


def bilinear4(a, b, q, p):
    """trd(a * conj(b))."""
    return 2 * (a[0] * b[0] + q * a[1] * b[1] + p * a[2] * b[2] + q * p * a[3] * b[3])


class QuatAlgebra:
    __slots__ = ("p", "q")

    def __init__(self, p, q):
        self.p = int(p)
        self.q = int(q)

    def __eq__(self, other):
        return isinstance(other, QuatAlgebra) and (self.p, self.q) == (other.p, other.q)

    def __hash__(self):
        return hash(("QuatAlgebra", self.p, self.q))

    def __repr__(self):
        return f"QuatAlgebra(p={self.p}, q={self.q})"

    def __call__(self, t=0, x=0, y=0, z=0, d=1):
        return Quaternion(self, t, x, y, z, d)

    def one(self):
        return Quaternion(self, 1, 0, 0, 0, 1)

    def gens(self):
        return (self(0, 1), self(0, 0, 1), self(0, 0, 0, 1))


@lru_cache(maxsize=None)
def quat_algebra(p, q) -> QuatAlgebra:
    return QuatAlgebra(p, q)


def _as_fraction_vector(v):
    return tuple(Fraction(c) for c in v)


class Quaternion:
    """(t + x i + y j + z k) / d, kept in lowest terms with d > 0."""

    __slots__ = ("algebra", "t", "x", "y", "z", "d")

    def __init__(self, algebra, t, x=0, y=0, z=0, d=1):
        t, x, y, z, d = int(t), int(x), int(y), int(z), int(d)
        if d == 0:
            raise ZeroDivisionError("quaternion denominator is zero")
        if d < 0:
            t, x, y, z, d = -t, -x, -y, -z, -d
        g = gcd(gcd(gcd(t, x), gcd(y, z)), d)
        if g > 1:
            t, x, y, z, d = t // g, x // g, y // g, z // g, d // g
        self.algebra = algebra
        self.t, self.x, self.y, self.z, self.d = t, x, y, z, d

    @classmethod
    def from_fractions(cls, algebra, coords):
        coords = _as_fraction_vector(coords)
        d = 1
        for c in coords:
            d = d * c.denominator // gcd(d, c.denominator)
        return cls(algebra, *(int(c * d) for c in coords), d)

    @property
    def coords(self):
        return (self.t, self.x, self.y, self.z)

    def fractions(self):
        return tuple(Fraction(c, self.d) for c in self.coords)

    def __repr__(self):
        return f"Quaternion({self.t}, {self.x}, {self.y}, {self.z}; d={self.d})"

    def __eq__(self, other):
        if isinstance(other, int):
            other = Quaternion(self.algebra, other)
        if not isinstance(other, Quaternion):
            return NotImplemented
        return self.coords == other.coords and self.d == other.d

    def __hash__(self):
        return hash((self.coords, self.d))

    def _coerce(self, other):
        if isinstance(other, Quaternion):
            return other
        if isinstance(other, Fraction):
            return Quaternion(self.algebra, other.numerator, 0, 0, 0, other.denominator)
        return Quaternion(self.algebra, int(other))

    def __add__(self, other):
        o = self._coerce(other)
        d = self.d * o.d
        return Quaternion(self.algebra, *(a * o.d + b * self.d for a, b in zip(self.coords, o.coords)), d)

    __radd__ = __add__

    def __neg__(self):
        return Quaternion(self.algebra, *(-c for c in self.coords), self.d)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        A = self.algebra
        return Quaternion(A, *mul4(self.coords, o.coords, A.q, A.p), self.d * o.d)

    def __rmul__(self, other):
        return self._coerce(other) * self

    def conjugate(self):
        return Quaternion(self.algebra, *conj4(self.coords), self.d)

    def reduced_norm(self):
        A = self.algebra
        return Fraction(norm4(self.coords, A.q, A.p), self.d * self.d)

    def reduced_trace(self):
        return Fraction(2 * self.t, self.d)

    def inverse(self):
        n = self.reduced_norm()
        if n == 0:
            raise ZeroDivisionError("zero quaternion has no inverse")
        c = self.conjugate()
        return Quaternion(self.algebra, *(v * n.denominator for v in c.coords), c.d * n.numerator)

    def __truediv__(self, other):
        if isinstance(other, Quaternion):
            return self * other.inverse()
        other = Fraction(other)
        return Quaternion(self.algebra, *(c * other.denominator for c in self.coords),
                          self.d * other.numerator)

    def is_integral_scalar(self):
        return self.d == 1 and self.x == self.y == self.z == 0


def nrd(a):
    return a.reduced_norm()


def trd(a):
    return a.reduced_trace()
