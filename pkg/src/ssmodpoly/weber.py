"""Weber f-invariants of supersingular curves from a level structure of order 48.

The 3-part gives gamma_2, a cube root of j, from the x-coordinates of E[3].
The 16-part gives t = f^3: two cyclic subgroups G_1, G_2 of order 16 with
trivial intersection determine a point of X_s(16), found through the two
X_0(16) points (E, G_k) and the eliminants P12, P23, and then pushed to the
level-16 curve by ``phi``.  Finally f is the common root of X^3 - t and
X^24 - gamma_2 X^8 - 16.

Polynomials in X, Y are dicts {(deg_X, deg_Y): coefficient}; univariate
ones are ascending coefficient lists.
"""

import random
from dataclasses import dataclass, field
from functools import lru_cache

from .arith import build_tower, quad_extension
from .ec import curve_from_j, isogeny_chain, normalize_twist, torsion_basis, torsion_degree
from .errors import (DegenerateDenominator, FallbackFailed, GcdDegreeNotOne, GcdNotDegreeOne,
                     SsmpError)
from .poly import poly_ring

# X_0(16) -> X(1) x X(1), x -> (G0/H0, I0/J0)
G0 = [1152921504606846976, 6917529027641081856, 19887895954468110336, 36461142583191535616,
      47841738841556779008, 47787695646028333056, 37724965228622381056, 24114242729778610176,
      12682896313210109952, 5546125766502121472, 2028993128165277696, 622699889175822336,
      160256972254347264, 34465746750799872, 6152208865296384, 901713888280576,
      106811460943872, 9993958981632, 714316447744, 37065719808, 1285091328, 25587712,
      213504, 768, 1]
H0 = [0] * 16 + [4096, 8192, 7168, 3584, 1104, 208, 22, 1]
I0 = [4096, 393216, 13664256, 204701696, 1285091328, 4633214976, 11161194496, 19519451136,
      26077016832, 27518124032, 23468814336, 16434548736, 9552059904, 4639475712, 1889647104,
      645654016, 184560432, 43863552, 8577664, 1358208, 169968, 16192, 1104, 48, 1]
J0 = [0, 512, 1408, 1664, 1104, 448, 112, 16, 1]

# X_s(16): FS = 0, with the projections GS/HS and IS/JS to X_0(16)
GS = {(7, 11): -16, (7, 3): -1, (6, 10): 16, (6, 2): 1, (5, 9): -16, (5, 1): -1, (4, 8): 16,
      (4, 0): 1}
HS = {(0, 12): 4}
IS = {(7, 32): -65536, (7, 28): 24576, (7, 24): -12288, (7, 20): 3200, (7, 16): -736,
      (7, 12): 120, (7, 8): -14, (7, 4): 1, (6, 32): 65536, (6, 28): -16384, (6, 24): 9216,
      (6, 20): -1792, (6, 16): 384, (6, 12): -48, (6, 8): 4, (5, 32): -65536, (5, 28): 8192,
      (5, 24): -7168, (5, 20): 768, (5, 16): -192, (5, 12): 16, (4, 32): 65536, (4, 24): 6144,
      (4, 16): 128, (3, 32): -65536, (3, 28): 57344, (3, 24): -30720, (3, 20): 11648,
      (3, 16): -3328, (3, 12): 728, (3, 8): -120, (3, 4): 14, (3, 0): -1, (2, 32): 65536,
      (2, 28): -49152, (2, 24): 23552, (2, 20): -7936, (2, 16): 1984, (2, 12): -368,
      (2, 8): 48, (2, 4): -4, (1, 32): -65536, (1, 28): 40960, (1, 24): -17408, (1, 20): 5120,
      (1, 16): -1088, (1, 12): 160, (1, 8): -16, (0, 32): 65536, (0, 28): -32768,
      (0, 24): 12288, (0, 20): -3072, (0, 16): 512, (0, 12): -64}
JS = {(0, 16): 8, (0, 8): 1}
# both projections of a point on FS = 0 land on the same X_0(16) pair
FS = {(8, 12): 16, (8, 4): 1, (4, 8): -16, (4, 0): -1, (0, 12): -16}

# X_s(16) -> level 16 curve, value f^3
PHI_NUM = {(6, 12): -16, (6, 4): -1, (2, 16): 64, (2, 8): 20, (2, 0): 1}
PHI_DEN = {(0, 15): 32, (0, 7): 4}

MAX_RESTARTS = 16


@lru_cache(maxsize=1)
def _data():
    from . import _weber_data
    return _weber_data


# small evaluation helpers ---------------------------------------------------------------

def _ev(c, x):
    r = x * 0
    for a in reversed(c):
        r = r * x + a
    return r


def _ev2(d, x, y):
    return sum((c * x ** i * y ** k for (i, k), c in d.items()), x * 0)


def _in_x(d, y, R):
    """The polynomial d(X, y)."""
    deg = max(i for i, _ in d)
    c = [y * 0] * (deg + 1)
    for (i, k), v in d.items():
        c[i] += v * y ** k
    return R(c)


def _roots(f):
    return [r for r, _ in f.roots()] if f.degree() > 0 else []


def psi(f, j):
    """(f^24 - 16)^3 - j f^24."""
    f24 = f ** 24
    return (f24 - 16) ** 3 - j * f24


# level 3 ---------------------------------------------------------------------------

def three_torsion_x(E):
    """The four roots of 3x^4 + 6Ax^2 + 12Bx - A^2 in F_{p^2}."""
    R = poly_ring(E.F.ctx)
    xs = _roots(R([-E.A ** 2, 12 * E.B, 6 * E.A, 0, 3]))
    if len(xs) != 4:
        raise SsmpError("3-torsion x-coordinates are not all in F_{p^2}")
    return xs


def gamma2_from_three_torsion(A, xs, j=None):
    """-48A / (2A - 3(x1 x2 + x3 x4)); checked against j when given."""
    x1, x2, x3, x4 = xs
    den = 2 * A - 3 * (x1 * x2 + x3 * x4)
    if den == 0:
        raise DegenerateDenominator("2A - 3(x1 x2 + x3 x4) vanishes")
    g = -48 * A / den
    if j is not None and g ** 3 != j:
        raise ArithmeticError("gamma_2^3 differs from j")
    return g


def gamma2_candidates(E):
    """The values for the three pairings of the 3-torsion x-coordinates."""
    x1, x2, x3, x4 = three_torsion_x(E)
    j = E.j_invariant()
    return [gamma2_from_three_torsion(E.A, o, j)
            for o in ((x1, x2, x3, x4), (x1, x3, x2, x4), (x1, x4, x3, x2))]


# level 16 --------------------------------------------------------------------------

def x0_16_points(j, jk, R):
    """Roots of gcd(G0 - j H0, I0 - jk J0): points of X_0(16) over (j, jk)."""
    zero = j * 0
    g = R([zero + a for a in G0]) - R([zero + a for a in H0]) * j
    h = R([zero + a for a in I0]) - R([zero + a for a in J0]) * jk
    return _roots(g.gcd(h))


def chain_t_values(x):
    """t_0..t_3 at x: the X_0(2) points of the four 2-steps of the 16-isogeny."""
    return [_ev(n, x) / _ev(d, x) for n, d in _data().CHAIN]


def x0_2_parameter(phi):
    """t with j = (t+16)^3/t and j' = (t+256)^3/t^2 for a 2-isogeny phi.

    Moving the kernel point to 0 gives y^2 = x(x^2 + a x + b), and then
    t = 16 (a^2 - 4b) / b.
    """
    E = phi.domain
    x0 = -phi.kernel_poly.coeffs()[0]
    a = 3 * x0
    b = 3 * x0 * x0 + E.A
    return 16 * (a * a - 4 * b) / b


def chain_parameters(E, K, tower):
    """(j-invariants E_0..E_4, X_0(2) parameters of the four steps) for E -> E/<K>."""
    _, steps, _ = isogeny_chain(E, K, 2, 4, tower)
    js = [E.j_invariant()] + [s.codomain.j_invariant() for s in steps]
    return js, [x0_2_parameter(s) for s in steps]


def chain_j_invariants(E, K, tower):
    """j of E = E_0 -> E_1 -> ... -> E_4 = E/<K>, K of order 16."""
    return chain_parameters(E, K, tower)[0]


def _chain_matches(x, ts):
    try:
        return chain_t_values(x) == ts
    except ZeroDivisionError:
        return False


def fallback_candidates(E, K, tower):
    """Points of X_0(16) over (j(E), j(E/<K>)) whose X_0(2) images match the 2-isogeny chain."""
    R = poly_ring(E.F.ctx)
    js, ts = chain_parameters(E, K, tower)
    return [x for x in x0_16_points(js[0], js[4], R) if _chain_matches(x, ts)]


def sixteen_isogeny_fallback(E, G1, G2, tower):
    """X_0(16) coordinates of (E, <G1>) and (E, <G2>) when (j, j_k) has several.

    The 16-isogeny is split into four 2-isogenies; a candidate is kept only
    if its four images on X_0(2) are the points of those steps.
    """
    out = []
    for K in (G1, G2):
        cands = fallback_candidates(E, K, tower)
        if len(cands) != 1:
            raise FallbackFailed(f"{len(cands)} X_0(16) points match the 2-isogeny chain")
        out.append(cands[0])
    return tuple(out)


def _alpha(j, jk, R):
    xs = x0_16_points(j, jk, R)
    if len(xs) != 1:
        raise GcdDegreeNotOne(f"{len(xs)} points of X_0(16) lie over (j, j_k)")
    return xs[0]


def _specialise(d, a, b=None):
    """sum over Y-degrees of the coefficient polynomials evaluated at (a, b)."""
    zero = a * 0
    deg = max(k[0] for k in d)
    c = [zero] * (deg + 1)
    apow, bpow = {}, {}
    for key, v in d.items():
        ey, ea = key[0], key[1]
        term = apow.setdefault(ea, a ** ea)
        if b is not None:
            eb = key[2]
            term = term * bpow.setdefault(eb, b ** eb)
        c[ey] += v * term
    return c


def _cube_candidates(y, a1, a2, R):
    """phi(x, y) over the common roots x of f1, f2, f3 at Y = y."""
    values = []
    den_y = _ev2(PHI_DEN, a1 * 0 + 1, y)
    if den_y == 0:
        return values
    for r in _roots(_in_x(FS, y, R)):
        if _ev2(GS, r, y) - a1 * _ev2(HS, r, y) != 0:
            continue
        if _ev2(IS, r, y) - a2 * _ev2(JS, r, y) != 0:
            continue
        v = _ev2(PHI_NUM, r, y) / den_y
        if v not in values:
            values.append(v)
    return values


def get_weber_cube(p, j, j1, j2, alphas=None, strict=True):
    """f^3 for the level-16 structure with j(E/G1) = j1 and j(E/G2) = j2, or None.

    ``alphas`` supplies the two X_0(16) coordinates directly (for instance
    from ``sixteen_isogeny_fallback``).  With strict=False a gcd of degree
    above one is accepted and the first root giving a solution is used; this
    only matters for curves with extra automorphisms.
    """
    F = quad_extension(p)
    R = poly_ring(F.ctx)
    j, j1, j2 = (F.ctx(v) if not hasattr(v, "to_list") else v for v in (j, j1, j2))
    a1, a2 = alphas if alphas is not None else (_alpha(j, j1, R), _alpha(j, j2, R))
    h1 = R(_specialise(_data().P12, a1))
    h2 = R(_specialise(_data().P23, a1, a2))
    g = h1.gcd(h2)
    if g.degree() != 1 and (strict or g.degree() < 1):
        raise GcdDegreeNotOne(f"gcd of the eliminants has degree {g.degree()}")
    for y in sorted(_roots(g), key=str):
        values = _cube_candidates(y, a1, a2, R)
        if len(values) == 1:
            return values[0]
    return None


# level 48 --------------------------------------------------------------------------

@dataclass
class LevelStructure48:
    curve: object
    xs: tuple                   # ordered 3-torsion x-coordinates
    G1: object                  # generators of the order-16 subgroups, in ``tower``
    G2: object
    tower: object = field(repr=False)


@dataclass
class WeberInvariant:
    f: object
    j: object
    gamma2: object
    t: object
    fallback: bool = False
    ambiguous: bool = False

    def check(self):
        return psi(self.f, self.j) == 0


def random_level_structure(E, rng=None):
    """Random ordering of E[3] and a random pair of complementary cyclic subgroups of E[16]."""
    rng = rng or random.Random(0)
    tower = build_tower(E.p, torsion_degree(E.p, 16))
    C = E.over(tower)
    P, Q = torsion_basis(E, 16, tower, rng)
    while True:
        a, b, c, d = (rng.randrange(16) for _ in range(4))
        if (a * d - b * c) % 2:
            break
    xs = three_torsion_x(E)
    rng.shuffle(xs)
    return LevelStructure48(E, tuple(xs), C.lincomb(a, P, b, Q), C.lincomb(c, P, d, Q), tower)


def weber_from_level_structure(L: LevelStructure48, strict=True) -> WeberInvariant:
    E = L.curve
    F = E.F
    R = poly_ring(F.ctx)
    j = E.j_invariant()
    gamma2 = gamma2_from_three_torsion(E.A, L.xs, j)
    js1 = chain_j_invariants(E, L.G1, L.tower)
    js2 = chain_j_invariants(E, L.G2, L.tower)
    fallback = False
    try:
        alphas = [(_alpha(j, js1[4], R), _alpha(j, js2[4], R))]
    except GcdDegreeNotOne:
        fallback = True
        if strict:
            alphas = [sixteen_isogeny_fallback(E, L.G1, L.G2, L.tower)]
        else:
            # tiny p: the chain may not pin down a single point, try them in order
            c1 = sorted(fallback_candidates(E, L.G1, L.tower), key=str)
            c2 = sorted(fallback_candidates(E, L.G2, L.tower), key=str)
            alphas = [(a1, a2) for a1 in c1 for a2 in c2]
    t = None
    for pair in alphas:
        t = get_weber_cube(E.p, j, js1[4], js2[4], pair, strict=strict)
        if t is not None:
            break
    if t is None:
        raise GcdDegreeNotOne("no point of X_s(16) satisfies all three equations")
    one = F.ctx.one()
    g = R([-t, 0, 0, one]).gcd(R([-16 * one] + [0] * 7 + [-gamma2] + [0] * 15 + [one]))
    if g.degree() == 1:
        c = g.coeffs()
        f = -c[0] / c[1]
    elif strict or g.degree() < 1:
        raise GcdNotDegreeOne(f"final gcd has degree {g.degree()}")
    else:
        # gamma_2 = 0: every cube root of t qualifies
        roots = sorted(_roots(g), key=str)
        if not roots:
            raise GcdNotDegreeOne("final gcd has no root in F_{p^2}")
        f = roots[0]
    w = WeberInvariant(f, j, gamma2, t, fallback, not strict)
    if not w.check():
        raise ArithmeticError("Weber invariant fails (f^24 - 16)^3 = j f^24")
    return w


def weber_invariant(p, j, seed=0, max_restarts=MAX_RESTARTS):
    """A Weber invariant over a supersingular j, retrying with new level structures.

    If every restart meets an eliminant gcd of degree above one (j = 0 and
    j = 1728 do this), a last non-strict attempt is made and the result is
    flagged ``ambiguous``.
    """
    F = quad_extension(p)
    j = F.ctx(j) if not hasattr(j, "to_list") else j
    E = normalize_twist(curve_from_j(j, F))
    rng = random.Random(seed)
    err = None
    for _ in range(max_restarts):
        try:
            return weber_from_level_structure(random_level_structure(E, rng))
        except (GcdDegreeNotOne, GcdNotDegreeOne, FallbackFailed, DegenerateDenominator) as exc:
            err = exc
    for _ in range(max_restarts):
        try:
            return weber_from_level_structure(random_level_structure(E, rng), strict=False)
        except (GcdDegreeNotOne, GcdNotDegreeOne, FallbackFailed, DegenerateDenominator) as exc:
            err = exc
    raise err
