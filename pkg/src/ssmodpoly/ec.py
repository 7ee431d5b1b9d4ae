"""Short Weierstrass curves over F_{p^2}, points over towers, and isogenies.

A ``Curve`` holds y^2 = x^3 + Ax + B with A, B in F_{p^2}.  Points live over a
``FieldTower`` and are plain tuples ``(x, y)``; ``None`` is the identity.  The
arithmetic for a given curve and tower is bundled in ``CurveOver``.

Isogenies of odd prime degree are described by their kernel polynomial and
evaluated with Kohel's formula; 2-isogenies use Velu's formula directly.
"""

import random

from .arith import build_tower, quad_extension, sqrt_mod
from .errors import NotSplit, SingularCurve, TowerTooSmall, WrongOrder
from .poly import from_roots, poly_ring


class Curve:
    __slots__ = ("F", "A", "B", "_over")

    def __init__(self, F, A, B):
        self.F = F
        self.A = F.ctx(A) if not hasattr(A, "to_list") else A
        self.B = F.ctx(B) if not hasattr(B, "to_list") else B
        if 4 * self.A ** 3 + 27 * self.B ** 2 == 0:
            raise SingularCurve("4A^3 + 27B^2 = 0")
        self._over = {}

    @property
    def p(self):
        return self.F.p

    def __repr__(self):
        return f"Curve(p={self.p}, A={self.F.parts(self.A)}, B={self.F.parts(self.B)})"

    def __eq__(self, other):
        return isinstance(other, Curve) and self.p == other.p and self.A == other.A and self.B == other.B

    def __hash__(self):
        return hash((self.p, str(self.A), str(self.B)))

    def j_invariant(self):
        a3 = 4 * self.A ** 3
        return 1728 * a3 / (a3 + 27 * self.B ** 2)

    def over(self, tower):
        key = (tower.p, tower.k, id(tower))
        c = self._over.get(key)
        if c is None:
            c = CurveOver(self, tower)
            self._over[key] = c
        return c

    def is_over_prime_field(self):
        return self.F.in_prime_field(self.A) and self.F.in_prime_field(self.B)

    def twist(self, d):
        return Curve(self.F, self.A * d ** 2, self.B * d ** 3)

    def to_json(self):
        return {"p": str(self.p), "A": self.F.to_json(self.A), "B": self.F.to_json(self.B)}


def curve_from_json(d):
    F = quad_extension(int(d["p"]))
    return Curve(F, F.from_json(d["A"]), F.from_json(d["B"]))


def j_invariant(E):
    return E.j_invariant()


def curve_from_j(j, F):
    """A curve with j-invariant j; fixed models at j = 0 and j = 1728."""
    j = F.ctx(j) if not hasattr(j, "to_list") else j
    if j == 0:
        return Curve(F, 0, 1)
    if j == 1728:
        return Curve(F, 1, 0)
    k = j * (1728 - j)
    return Curve(F, 3 * k, 2 * k * (1728 - j))


class CurveOver:
    """Affine group law of a curve over a tower."""

    def __init__(self, curve, tower):
        self.curve = curve
        self.tower = tower
        self.A = tower.lift(curve.A)
        self.B = tower.lift(curve.B)
        self.ctx = tower.ctx

    def is_on(self, P):
        if P is None:
            return True
        x, y = P
        return y * y == (x * x + self.A) * x + self.B

    def neg(self, P):
        return None if P is None else (P[0], -P[1])

    def add(self, P, Q):
        if P is None:
            return Q
        if Q is None:
            return P
        x1, y1 = P
        x2, y2 = Q
        if x1 == x2:
            if y1 == -y2:
                return None
            lam = (3 * x1 * x1 + self.A) / (2 * y1)
        else:
            lam = (y2 - y1) / (x2 - x1)
        x3 = lam * lam - x1 - x2
        return (x3, lam * (x1 - x3) - y1)

    def dbl(self, P):
        if P is None or P[1] == 0:
            return None
        x1, y1 = P
        lam = (3 * x1 * x1 + self.A) / (2 * y1)
        x3 = lam * lam - 2 * x1
        return (x3, lam * (x1 - x3) - y1)

    def sub(self, P, Q):
        return self.add(P, self.neg(Q))

    def mul(self, P, n):
        n = int(n)
        if n < 0:
            return self.mul(self.neg(P), -n)
        R = None
        for bit in bin(n)[2:] if n else "":
            R = self.dbl(R)
            if bit == "1":
                R = self.add(R, P)
        return R

    def lincomb(self, a, P, b, Q):
        return self.add(self.mul(P, a), self.mul(Q, b))

    def random_point(self, rng):
        while True:
            x = self.tower.random(rng)
            rhs = (x * x + self.A) * x + self.B
            if rhs == 0:
                continue
            if rhs.is_square():
                y = rhs.sqrt()
                if rng.randrange(2):
                    y = -y
                return (x, y)

    def frobenius(self, P, m=1):
        """(x, y) -> (x^(p^m), y^(p^m)); an endomorphism when the curve is over F_p."""
        if P is None:
            return None
        return (self.tower.frobenius(P[0], m), self.tower.frobenius(P[1], m))

    def order_divides(self, P, n):
        return self.mul(P, n) is None


def group_exponent(p, k):
    """E(F_{p^{2k}}) = E[M] with M = p^k - (-1)^k whenever Frobenius_{p^2} = -p."""
    return p ** k - (-1) ** k


def multiplicative_order(a, n):
    a %= n
    if a == 0:
        raise ValueError("not a unit")
    k, x = 1, a
    while x != 1:
        x = x * a % n
        k += 1
    return k


def torsion_degree(p, N):
    """Smallest k with E[N] rational over F_{p^{2k}} for curves with pi^2 = -p."""
    return multiplicative_order(-p, N) if N > 2 else 1


# -- pairings --------------------------------------------------------------

def _miller(C, P, Q, n):
    """Miller function f_{n,P} evaluated at Q (Q outside <P>)."""
    xq, yq = Q
    T = P
    f = C.ctx.one()
    for bit in bin(n)[3:]:
        xt, yt = T
        if yt == 0:
            f = f * f * (xq - xt)
            T = None
        else:
            lam = (3 * xt * xt + C.A) / (2 * yt)
            T2 = C.dbl(T)
            num = yq - yt - lam * (xq - xt)
            den = (xq - T2[0]) if T2 is not None else C.ctx.one()
            f = f * f * num / den
            T = T2
        if bit == "1":
            if T is None:
                T = P
                continue
            xt, yt = T
            if xt == P[0]:
                f = f * (xq - xt)
                T = C.add(T, P)
                if T is not None:
                    raise ZeroDivisionError
            else:
                lam = (P[1] - yt) / (P[0] - xt)
                T2 = C.add(T, P)
                num = yq - yt - lam * (xq - xt)
                den = (xq - T2[0]) if T2 is not None else C.ctx.one()
                f = f * num / den
                T = T2
    return f


def weil_pairing(C, P, Q, n):
    """e_n(P, Q); returns 1 for linearly dependent inputs."""
    if P is None or Q is None:
        return C.ctx.one()
    # e_n(P, Q) = e_m(P, (n/m) Q) when P has order m dividing n
    m = _order_dividing(C, P, n)
    if m < n:
        return weil_pairing(C, P, C.mul(Q, n // m), m) if m > 1 else C.ctx.one()
    m = _order_dividing(C, Q, n)
    if m < n:
        return 1 / weil_pairing(C, Q, C.mul(P, n // m), m) if m > 1 else C.ctx.one()
    try:
        fp = _miller(C, P, Q, n)
        fq = _miller(C, Q, P, n)
        if fp == 0 or fq == 0:
            return C.ctx.one()
        e = fp / fq
    except ZeroDivisionError:
        return C.ctx.one()
    return -e if n % 2 else e


def _order_dividing(C, P, n):
    """Order of a point P known to satisfy [n]P = O."""
    m = n
    for ell in _prime_factors(n):
        while m % ell == 0 and C.mul(P, m // ell) is None:
            m //= ell
    return m


def _prime_factors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _exact_order_prime_power(C, P, ell, e):
    """Largest t <= e with [ell^(t-1)]P != O, i.e. the order of P is ell^t."""
    t = 0
    Q = P
    while Q is not None:
        Q = C.mul(Q, ell)
        t += 1
    return t


def prime_power(N):
    for ell in range(2, int(N) + 1):
        if N % ell == 0:
            e = 0
            while N % ell == 0:
                N //= ell
                e += 1
            if N != 1:
                raise ValueError("not a prime power")
            return ell, e
    raise ValueError("N must exceed 1")


def torsion_basis(E, N, tower, rng=None):
    """A basis (P, Q) of E[N] over the tower, N a prime power coprime to p."""
    rng = rng or random.Random(0)
    p = tower.p
    ell, e = prime_power(N)
    if ell == p:
        raise ValueError("N must be coprime to p")
    M = group_exponent(p, tower.k)
    if M % N:
        raise TowerTooSmall(f"E[{N}] is not rational over F_(p^{2 * tower.k})")
    v = 0
    while M % ell ** (v + 1) == 0:
        v += 1
    cof = M // ell ** v
    C = E.over(tower)

    def sample():
        for _ in range(200):
            R = C.mul(C.random_point(rng), cof)
            if R is None:
                continue
            t = _exact_order_prime_power(C, R, ell, v)
            if t >= e:
                return C.mul(R, ell ** (t - e))
        raise TowerTooSmall("could not find a point of order N; the pi^2 = -p model is required")

    P = sample()
    one = C.ctx.one()
    for _ in range(200):
        Q = sample()
        w = weil_pairing(C, P, Q, N)
        if w ** (N // ell) != one:
            return P, Q
    raise TowerTooSmall("no independent second basis point found")


def discrete_log_basis(C, P, Q, R, N, zeta=None, table=None):
    """(a, b) with R = aP + bQ, for a basis (P, Q) of E[N] (N small)."""
    if zeta is None:
        zeta = weil_pairing(C, P, Q, N)
    if table is None:
        table = pairing_log_table(zeta, N)
    a = table[_elem_key(weil_pairing(C, R, Q, N))]
    b = table[_elem_key(weil_pairing(C, P, R, N))]
    return a, b


def _elem_key(x):
    return tuple(int(c) for c in x.to_list())


def pairing_log_table(zeta, N):
    table = {}
    cur = zeta.parent().one() if hasattr(zeta, "parent") else zeta ** 0
    for a in range(N):
        table[_elem_key(cur)] = a
        cur = cur * zeta
    return table


# -- isogenies ----------------------------------------------------------------

def _power_sums(h, d):
    """p1, p2, p3 of the roots of the monic degree-d polynomial h."""
    c = list(h.coeffs())
    zero = c[0] * 0

    def coef(i):
        return c[i] if 0 <= i < len(c) else zero

    e1 = -coef(d - 1) if d >= 1 else zero
    e2 = coef(d - 2) if d >= 2 else zero
    e3 = -coef(d - 3) if d >= 3 else zero
    p1 = e1
    p2 = e1 * e1 - 2 * e2
    p3 = e1 ** 3 - 3 * e1 * e2 + 3 * e3
    return p1, p2, p3


class Isogeny:
    """Separable isogeny of prime degree defined over F_{p^2}."""

    def __init__(self, domain, degree, kernel_poly):
        self.domain = domain
        self.degree = int(degree)
        self.kernel_poly = kernel_poly.monic()
        F = domain.F
        R = poly_ring(F.ctx)
        A, B = domain.A, domain.B
        h = self.kernel_poly
        x = R.gen()
        if self.degree == 2:
            if h.degree() != 1:
                raise WrongOrder("a 2-isogeny needs a linear kernel polynomial")
            x0 = -h.coeffs()[0]
            v = 3 * x0 * x0 + A
            self.codomain = Curve(F, A - 5 * v, B - 7 * x0 * v)
            # X = (x(x - x0) + v)/(x - x0), Y = y((x - x0)^2 - v)/(x - x0)^2
            self._num = x * h + R([v])
            self._h = h
            self._ynum = h * h - R([v])
            self._two = True
        else:
            d = (self.degree - 1) // 2
            if h.degree() != d:
                raise WrongOrder(f"kernel polynomial of degree {h.degree()} for an isogeny of degree {self.degree}")
            p1, p2, p3 = _power_sums(h, d)
            t = 6 * p2 + 2 * A * d
            w = 10 * p3 + 6 * A * p1 + 4 * B * d
            self.codomain = Curve(F, A - 5 * t, B - 7 * w)
            f = R([B, A, 0, 1])
            h1 = h.derivative()
            h2 = h1.derivative()
            N = R([-2 * p1, self.degree]) * h * h - R([2 * A, 0, 6]) * h1 * h + 4 * f * (h1 * h1 - h * h2)
            self._num = N
            self._h = h
            self._ynum = N.derivative() * h - 2 * N * h1
            self._two = False
        self._lifted = {}

    def __repr__(self):
        return f"Isogeny(degree={self.degree}, codomain={self.codomain})"

    def _polys(self, tower):
        key = id(tower)
        polys = self._lifted.get(key)
        if polys is None:
            R = poly_ring(tower.ctx)
            polys = tuple(R([tower.lift(c) for c in f.coeffs()]) for f in (self._num, self._h, self._ynum))
            self._lifted[key] = (tower, polys)
        else:
            polys = polys[1]
        return polys

    def x_map(self, x, tower):
        num, h, _ = self._polys(tower)
        hx = h(x)
        if hx == 0:
            return None
        if self._two:
            return num(x) / hx
        return num(x) / (hx * hx)

    def __call__(self, P, tower):
        return evaluate_isogeny(self, P, tower)


def evaluate_isogeny(phi, P, tower):
    if P is None:
        return None
    num, h, ynum = phi._polys(tower)
    x, y = P
    hx = h(x)
    if hx == 0:
        return None
    if phi._two:
        return (num(x) / hx, y * ynum(x) / (hx * hx))
    hx2 = hx * hx
    return (num(x) / hx2, y * ynum(x) / (hx2 * hx))


def kernel_polynomial_from_point(E, R, ell, tower):
    """Kernel polynomial over F_{p^2} of <R>, R of odd prime order ell in E(tower).

    The x-coordinates of [1]R..[(ell-1)/2]R are the roots; their Galois orbit
    under Frobenius consists of multiples of R because pi^2 = -p, so the
    product has coefficients in F_{p^2} and is coerced back.
    """
    C = E.over(tower)
    d = (ell - 1) // 2
    xs = []
    Q = R
    for i in range(d):
        if Q is None:
            raise WrongOrder(f"kernel point has order {i + 1}, expected {ell}")
        xs.append(Q[0])
        Q = C.add(Q, R)
    # Q = [d+1]R = -[d]R
    if Q is None or Q[0] != xs[-1] or C.add(Q, C.mul(R, d)) is not None:
        raise WrongOrder(f"kernel point does not have order {ell}")
    h = from_roots(xs, poly_ring(tower.ctx))
    RF = poly_ring(E.F.ctx)
    return RF([tower.coerce(c) for c in h.coeffs()])


def isogeny_from_kernel_point(E, R, ell, tower):
    ell = int(ell)
    if R is None:
        raise WrongOrder("identity is not a kernel generator")
    if ell == 2:
        if R[1] != 0:
            raise WrongOrder("2-isogeny kernel point must have y = 0")
        x0 = tower.coerce(R[0])
        RF = poly_ring(E.F.ctx)
        return Isogeny(E, 2, RF([-x0, 1]))
    return Isogeny(E, ell, kernel_polynomial_from_point(E, R, ell, tower))


def isogeny_chain(E, K, ell, e, tower, push=()):
    """Isogeny with cyclic kernel <K> of order ell^e, as e prime steps.

    Returns the codomain, the list of steps and the images of the points in
    ``push`` (each a (point, tower) pair).
    """
    steps = []
    cur = E
    pushed = list(push)
    for i in range(e, 0, -1):
        C = cur.over(tower)
        Ki = C.mul(K, ell ** (i - 1))
        phi = isogeny_from_kernel_point(cur, Ki, ell, tower)
        steps.append(phi)
        if i > 1:
            K = evaluate_isogeny(phi, K, tower)
        pushed = [(evaluate_isogeny(phi, P, t), t) for P, t in pushed]
        cur = phi.codomain
    return cur, steps, [P for P, _ in pushed]


# -- twists and supersingularity -----------------------------------------------

def has_frobenius_minus_p(E, rng=None, trials=4):
    """True when the p^2-Frobenius acts as -p, i.e. E(F_{p^2}) = E[p+1]."""
    rng = rng or random.Random(1)
    C = E.over(build_tower(E.p, 1))
    for _ in range(trials):
        if C.mul(C.random_point(rng), E.p + 1) is not None:
            return False
    return True


def normalize_twist(E, rng=None):
    """Return E or its quadratic twist over F_{p^2}, whichever has pi^2 = -p."""
    if has_frobenius_minus_p(E, rng):
        return E
    F = E.F
    rng = rng or random.Random(2)
    while True:
        d = F.random(rng)
        if d != 0 and not d.is_square():
            break
    Et = E.twist(d)
    if not has_frobenius_minus_p(Et, rng):
        raise TowerTooSmall("neither twist has pi^2 = -p; the curve is not supersingular")
    return Et


PHI2 = {(3, 0): 1, (0, 3): 1, (2, 2): -1, (2, 1): 1488, (1, 2): 1488, (2, 0): -162000, (0, 2): -162000,
        (1, 1): 40773375, (1, 0): 8748000000, (0, 1): 8748000000, (0, 0): -157464000000000}


def phi2_at(j, R):
    """Phi_2(j, Y) as a polynomial in Y over the ring R (coefficients from j's field)."""
    c = [j * 0] * 4
    for (a, b), v in PHI2.items():
        c[b] += v * j ** a
    return R(c)


def is_supersingular_j(j, p):
    """Volcano test on the 2-isogeny graph for j in F_p (or F_{p^2}).

    Supersingular j have all three 2-neighbours in F_{p^2}, and so does every
    vertex reached from them.  An ordinary j either lacks three neighbours or
    one of three non-backtracking walks hits the volcano floor, where the
    remaining quadratic does not split, within log2(p) + 1 steps.
    """
    F = quad_extension(p)
    j = F.ctx(j) if not hasattr(j, "to_list") else j
    R = poly_ring(F.ctx)
    starts = []
    for r, m in phi2_at(j, R).roots():
        starts.extend([r] * m)
    if len(starts) < 3:
        return False
    steps = p.bit_length() + 1
    for nxt in starts:
        prev, cur = j, nxt
        for _ in range(steps):
            q, rem = divmod(phi2_at(cur, R), R([-prev, 1]))
            if not rem.is_zero():
                return False
            c0, b = list(q.coeffs())[:2]
            disc = b * b - 4 * c0
            if not disc.is_square():
                return False
            prev, cur = cur, (disc.sqrt() - b) / 2
    return True


def is_supersingular(E):
    return is_supersingular_j(E.j_invariant(), E.p)


def two_torsion_rank(E):
    """Number of F_p-rational roots of x^3 + Ax + B for E over F_p (1 or 3, or 0)."""
    R = poly_ring(E.F.ctx)
    f = R([E.B, E.A, 0, 1])
    return sum(1 for r, _ in f.roots() if E.F.in_prime_field(r))


# -- class group action ------------------------------------------------------

def split_eigenvalue(p, ell):
    """Canonical square root of -p mod ell (the smaller representative)."""
    r = sqrt_mod(-p, ell)
    if r is None or r == 0:
        raise NotSplit(f"{ell} is not split in Q(sqrt(-{p}))")
    return min(r, ell - r)


def group_action_step(E, ell, sign, rng=None):
    """The curve l^sign * E for l = (ell, pi - lambda), E supersingular over F_p."""
    rng = rng or random.Random(3)
    p = E.p
    if ell == 2 or ell == p:
        raise NotSplit("ell must be an odd prime different from p")
    lam = split_eigenvalue(p, ell)
    mu = lam if sign > 0 else (-lam) % ell
    k = torsion_degree(p, ell)
    tower = build_tower(p, k)
    C = E.over(tower)
    M = group_exponent(p, k)
    cof = M
    while cof % ell == 0:
        cof //= ell
    for _ in range(200):
        P = C.mul(C.random_point(rng), cof)
        if P is None:
            continue
        while True:
            P2 = C.mul(P, ell)
            if P2 is None:
                break
            P = P2
        K = C.add(C.frobenius(P), C.mul(P, mu))
        if K is None:
            continue
        phi = isogeny_from_kernel_point(E, K, ell, tower)
        return phi.codomain
    raise NotSplit("failed to find an eigenvector for Frobenius")
