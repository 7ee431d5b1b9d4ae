"""Effective Deuring correspondence between maximal orders and j-invariants.

The anchor is a CM starting curve E_0 over F_p together with an explicit
isomorphism End(E_0) = O_0: i acts as a CM endomorphism iota and j as the
p-power Frobenius.  Left O_0-ideals become isogenies through their kernels
E_0[I], read off from the action of O_0 on torsion subgroups.
"""

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .arith import build_tower, is_prime, legendre, quad_extension
from .poly import poly_ring
from .ec import (
    curve_from_j, discrete_log_basis, evaluate_isogeny, group_action_step,
    isogeny_chain, isogeny_from_kernel_point, is_supersingular_j, pairing_log_table,
    split_eigenvalue, torsion_basis, torsion_degree, two_torsion_rank, weil_pairing,
)
from .errors import (
    KlptFailure, NotSupersingular, SearchBudgetExceeded, SearchExhausted,
    StartingCurveUnavailable,
)
from .quat import (
    QuatIdeal, Quaternion, connecting_ideal, enumerate_type_records, ideal_from_generators,
    ideals_equivalent, maximal_order_type, standard_maximal_order, unit_ideal,
)

CM_J = {1: 1728, 2: 8000, 3: 0, 7: -3375, 11: -32768, 19: -884736, 43: -884736000,
        67: -147197952000, 163: -262537412640768000}

MAX_TORSION_DEGREE = 40
MAX_SMOOTH_PRIME = 150


def factor_small(n, bound=None):
    """Trial-division factorisation; returns (factors dict, cofactor)."""
    n = int(n)
    out = {}
    d = 2
    while d * d <= n and (bound is None or d <= bound):
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1 and (bound is None or n <= bound):
        out[n] = out.get(n, 0) + 1
        n = 1
    return out, n


def valuation(n, ell):
    v = 0
    while n % ell == 0:
        n //= ell
        v += 1
    return v


def _mat_mul(A, B, N):
    return ((A[0][0] * B[0][0] + A[0][1] * B[1][0]) % N, (A[0][0] * B[0][1] + A[0][1] * B[1][1]) % N), \
           ((A[1][0] * B[0][0] + A[1][1] * B[1][0]) % N, (A[1][0] * B[0][1] + A[1][1] * B[1][1]) % N)


@dataclass
class _Torsion:
    ell: int
    f: int
    N: int
    tower: object
    C: object
    P: object
    Q: object
    mats: dict


class StartingCurve:
    """E_0 over F_p with End(E_0) identified with the standard order O_0."""

    def __init__(self, p, seed=0):
        self.p = p = int(p)
        self.O0 = standard_maximal_order(p)
        self.q = self.O0.algebra.q
        self.F = quad_extension(p)
        self.rng = random.Random(seed * 1000003 + p)
        self._torsion = {}
        base = curve_from_j(self.F(CM_J[self.q] % p), self.F)
        if not is_supersingular_j(base.j_invariant(), p):
            raise StartingCurveUnavailable(f"CM curve for q = {self.q} is not supersingular mod {p}")
        d = self.F(_nonresidue(p))
        candidates = [base] if self.q in (1, 3) else [base, base.twist(d)]
        for E in candidates:
            self.curve = E
            self._torsion = {}
            self._setup_iota()
            if self._embedding_valid():
                break
        else:
            raise StartingCurveUnavailable(f"no twist realises the standard order for p = {p}")

    # endomorphisms ---------------------------------------------------------
    def _setup_iota(self):
        F, q = self.F, self.q
        if q == 1:
            self._sqrt_m1 = F.ctx(-1).sqrt()
            self._iota = self._iota_1728
        elif q == 3:
            s = F.ctx(-3).sqrt()
            self._zeta = (s - 1) / 2
            self._iota = self._iota_0
        else:
            self._phi, self._u2, self._u3 = self._find_cm_isogeny()
            self._iota = self._iota_isogeny

    def _iota_1728(self, P, tower):
        if P is None:
            return None
        return (-P[0], P[1] * tower.lift(self._sqrt_m1))

    def _iota_0(self, P, tower):
        if P is None:
            return None
        C = self.curve.over(tower)
        rho = (P[0] * tower.lift(self._zeta), P[1])
        return C.add(C.dbl(rho), P)

    def _psi(self, P, tower):
        R = evaluate_isogeny(self._phi, P, tower)
        if R is None:
            return None
        return (R[0] * tower.lift(self._u2), R[1] * tower.lift(self._u3))

    def _iota_isogeny(self, P, tower):
        R = self._psi(P, tower)
        if self.q == 2:
            return R
        C = self.curve.over(tower)
        return C.sub(C.dbl(R), P)

    def _find_cm_isogeny(self):
        """An endomorphism psi of degree 2 (q = 2) or (q+1)/4 with the right minimal polynomial."""
        E, q, p = self.curve, self.q, self.p
        deg = 2 if q == 2 else (q + 1) // 4
        k = torsion_degree(p, deg)
        tower = build_tower(p, k)
        C = E.over(tower)
        P, Q = torsion_basis(E, deg, tower, self.rng)
        gens = [Q] + [C.add(P, C.mul(Q, t)) for t in range(deg)]
        jE = E.j_invariant()
        base = build_tower(p, 1)
        Cb = E.over(base)
        tests = [Cb.random_point(self.rng) for _ in range(3)]
        for K in gens:
            phi = isogeny_from_kernel_point(E, K, deg, tower)
            Ec = phi.codomain
            if Ec.j_invariant() != jE:
                continue
            for uu in _scalings(E, Ec):
                self._phi, self._u2, self._u3 = phi, uu * uu, uu ** 3
                ok = True
                for T in tests:
                    a = self._psi(T, base)
                    b = self._psi(a, base)
                    if q == 2:
                        ok = Cb.add(b, Cb.mul(T, 2)) is None
                    else:
                        ok = Cb.add(Cb.sub(b, a), Cb.mul(T, deg)) is None
                    if not ok:
                        break
                if ok:
                    return phi, uu * uu, uu ** 3
        raise StartingCurveUnavailable(f"no CM endomorphism of degree {deg} found")

    def iota(self, P, tower):
        return self._iota(P, tower)

    def frob(self, P, tower):
        return self.curve.over(tower).frobenius(P, 1)

    def apply(self, coords, P, tower):
        """(t + x iota + y pi + z iota pi)(P) for integer coords."""
        C = self.curve.over(tower)
        t, x, y, z = coords
        fP = self.frob(P, tower)
        out = C.mul(P, t)
        out = C.add(out, C.mul(self.iota(P, tower), x))
        out = C.add(out, C.mul(fP, y))
        out = C.add(out, C.mul(self.iota(fP, tower), z))
        return out

    # torsion action --------------------------------------------------------
    def torsion(self, ell, f):
        key = (ell, f)
        data = self._torsion.get(key)
        if data is None:
            N = ell ** f
            tower = build_tower(self.p, torsion_degree(self.p, N))
            C = self.curve.over(tower)
            P, Q = torsion_basis(self.curve, N, tower, self.rng)
            zeta = weil_pairing(C, P, Q, N)
            table = pairing_log_table(zeta, N)

            def mat(fn):
                a = discrete_log_basis(C, P, Q, fn(P), N, zeta, table)
                b = discrete_log_basis(C, P, Q, fn(Q), N, zeta, table)
                return ((a[0], b[0]), (a[1], b[1]))

            Mi = mat(lambda R: self.iota(R, tower))
            Mj = mat(lambda R: self.frob(R, tower))
            Mk = _mat_mul(Mi, Mj, N)
            data = _Torsion(ell, f, N, tower, C, P, Q, {"i": Mi, "j": Mj, "k": Mk})
            self._torsion[key] = data
        return data

    def numerator_matrix(self, coords, data):
        N = data.N
        t, x, y, z = coords
        Mi, Mj, Mk = data.mats["i"], data.mats["j"], data.mats["k"]
        return tuple(tuple((t * (r == c) + x * Mi[r][c] + y * Mj[r][c] + z * Mk[r][c]) % N
                           for c in range(2)) for r in range(2))

    def element_matrix(self, alpha, ell, e):
        """Matrix of alpha on E_0[ell^e] and the basis it refers to."""
        v = valuation(alpha.d, ell)
        data = self.torsion(ell, e + v)
        M = self.numerator_matrix(alpha.coords, data)
        lv = ell ** v
        Ne = ell ** e
        if any(M[r][c] % lv for r in range(2) for c in range(2)):
            raise ValueError("element does not act integrally on this torsion")
        dinv = pow(alpha.d // lv, -1, Ne)
        Me = tuple(tuple((M[r][c] // lv) * dinv % Ne for c in range(2)) for r in range(2))
        C = data.C
        return Me, (C.mul(data.P, lv), C.mul(data.Q, lv)), data.tower

    def _embedding_valid(self):
        try:
            for b in self.O0.quaternions():
                for r in factor_small(b.d)[0]:
                    v = valuation(b.d, r)
                    data = self.torsion(r, v)
                    M = self.numerator_matrix(b.coords, data)
                    if any(M[a][c] % (r ** v) for a in range(2) for c in range(2)):
                        return False
        except Exception:
            return False
        return True

    def j_invariant(self):
        return self.curve.j_invariant()


def _scalings(E, Ec):
    """All u with (x, y) -> (u^2 x, u^3 y) an isomorphism Ec -> E."""
    R = poly_ring(E.F.ctx)
    if E.A == 0:
        u2s = [r for r, _ in R([-(E.B / Ec.B), 0, 0, 1]).roots()]
    elif E.B == 0:
        u2s = [r for r, _ in R([-(E.A / Ec.A), 0, 1]).roots()]
    else:
        u2s = [(E.B * Ec.A) / (Ec.B * E.A)]
    out = []
    for u2 in u2s:
        if u2.is_square():
            u = u2.sqrt()
            out.extend([u, -u])
    return out


def _nonresidue(p):
    for c in range(2, p):
        if legendre(c, p) == -1:
            return c
    raise ValueError("no nonresidue")


@lru_cache(maxsize=1024)
def starting_curve(p, seed=0):
    return StartingCurve(p, seed)


# ideals to isogenies --------------------------------------------------------

def _local_generator(I, ell, rng):
    """alpha in I with ell not dividing nrd(alpha)/N(I)."""
    N = int(I.reduced_norm)
    red = I.reduced_elements()
    cands = list(red)
    cands += [a + b for a in red for b in red if a is not b]
    cands += [a - b for a in red for b in red if a is not b]
    for g in cands:
        if (int(g.reduced_norm()) // N) % ell:
            return g
    for _ in range(2000):
        c = [rng.randrange(-ell - 2, ell + 3) for _ in range(4)]
        g = sum((x * b for x, b in zip(c, red)), Quaternion(I.algebra, 0))
        n = g.reduced_norm()
        if n and (int(n) // N) % ell:
            return g
    raise SearchExhausted("no local generator found")


def ideal_kernel(sc, I, ell, e, rng=None):
    """Generator of E_0[I] intersected with E_0[ell^e] (cyclic of order ell^e)."""
    rng = rng or random.Random(ell)
    alpha = _local_generator(I, ell, rng)
    M, (P, Q), tower = sc.element_matrix(alpha, ell, e)
    Ne = ell ** e
    cols = [(M[1][1] % Ne, -M[1][0] % Ne), (-M[0][1] % Ne, M[0][0] % Ne)]
    for a, b in cols:
        if a % ell or b % ell:
            C = sc.curve.over(tower)
            K = C.lincomb(a, P, b, Q)
            return K, tower
    raise ValueError("ideal is not cyclic at this prime")


def ideal_to_isogeny(sc, I, rng=None):
    """Codomain of the isogeny E_0 -> E_0 / E_0[I] for a cyclic integral ideal I."""
    N = I.reduced_norm
    if N.denominator != 1:
        raise ValueError("ideal is not integral")
    N = int(N)
    if N == 1:
        return sc.curve
    facs, rest = factor_small(N)
    if rest != 1 or sc.p in facs:
        raise ValueError("ideal norm must be coprime to p")
    kernels = []
    for ell in sorted(facs):
        K, tower = ideal_kernel(sc, I, ell, facs[ell], rng)
        kernels.append((ell, facs[ell], K, tower))
    cur = sc.curve
    for idx, (ell, e, K, tower) in enumerate(kernels):
        rest_pts = [(K2, t2) for _, _, K2, t2 in kernels[idx + 1:]]
        cur, _, pushed = isogeny_chain(cur, K, ell, e, tower, push=rest_pts)
        for m, P2 in enumerate(pushed):
            l2, e2, _, t2 = kernels[idx + 1 + m]
            kernels[idx + 1 + m] = (l2, e2, P2, t2)
    return cur


# smooth equivalent ideals --------------------------------------------------------

@lru_cache(maxsize=1 << 16)
def prime_power_cost(p, q, ell, e):
    """Rough cost of an ell^e-isogeny walk from E_0, or None if too expensive."""
    if ell == p or ell > MAX_SMOOTH_PRIME:
        return None
    v = valuation(4 * q, ell) if ell in (2, q) else 0
    k = torsion_degree(p, ell ** (e + v))
    if k > MAX_TORSION_DEGREE:
        return None
    return e * ell * k * k + ell ** (e + v)


@lru_cache(maxsize=1 << 16)
def norm_cost(p, q, n):
    facs, rest = factor_small(n, MAX_SMOOTH_PRIME)
    if rest != 1:
        return None
    total = 0
    for ell, e in facs.items():
        c = prime_power_cost(p, q, ell, e)
        if c is None:
            return None
        total += c
    return total


def smooth_equivalent_ideal(I, q=None, max_candidates=4000):
    """An equivalent left ideal of cheap smooth norm, found among short elements of I.

    For alpha in I, the ideal I conj(alpha) / N(I) is equivalent to I with norm
    nrd(alpha) / N(I).  Short elements are enumerated by increasing norm and
    the cheapest admissible norm is kept.
    """
    p = I.algebra.p
    q = I.algebra.q if q is None else q
    N = I.reduced_norm
    scale = 4
    best = None
    while scale <= 1 << 16:
        bound = N * scale * max(1, int(p ** 0.5))
        vecs = I.short_vectors(bound)
        for val, v in vecs:
            n = val / N
            if n.denominator != 1:
                continue
            c = norm_cost(p, q, int(n))
            if c is not None and (best is None or c < best[0]):
                best = (c, v)
        if best is not None or len(vecs) > max_candidates:
            break
        scale *= 4
    if best is None:
        raise SearchExhausted("no smooth equivalent ideal among short elements")
    alpha = I.reduced_element(best[1])
    J = I.right_scale(alpha.conjugate() / N)
    J = QuatIdeal(J, I.left, alpha.reduced_norm() / N, I._right)
    return J.primitive()


def equivalent_smooth_ideal(I):
    """Smooth equivalent ideal: short-vector search first, KLPT as fallback."""
    try:
        return smooth_equivalent_ideal(I)
    except SearchExhausted:
        from .quat.klpt import klpt
        return klpt(I)


def ideal_to_j(sc, I):
    J = equivalent_smooth_ideal(I)
    return ideal_to_isogeny(sc, J).j_invariant()


# orders to j ---------------------------------------------------------------------

def order_to_j(O, sc=None):
    """j-invariant (up to Galois conjugacy) of a curve with End = O."""
    p = O.algebra.p
    sc = sc or starting_curve(p)
    if O == sc.O0:
        return sc.j_invariant()
    I = connecting_ideal(sc.O0, O)
    return ideal_to_j(sc, I)


@dataclass
class JTableEntry:
    order_type: object
    j: object
    witness: object
    fp: bool = False

    def to_json(self, F):
        return {"type": self.order_type.to_json(), "j": F.to_json(self.j),
                "witness": self.witness.to_json(), "fp": self.fp}


def orders_to_j_small_set(S, sc=None):
    """One entry per input order; repeated types are computed once."""
    out = []
    cache = {}
    for O in S:
        t = maximal_order_type(O)
        if t not in cache:
            p = O.algebra.p
            s = sc or starting_curve(p)
            err = None
            for attempt in range(3):
                try:
                    I = connecting_ideal(s.O0, O) if O != s.O0 else unit_ideal(s.O0)
                    j = s.j_invariant() if O == s.O0 else ideal_to_j(s, I)
                    break
                except (SearchExhausted, KlptFailure) as exc:
                    err = exc
            else:
                raise err
            cache[t] = JTableEntry(t, j, I, s.F.in_prime_field(j))
        out.append(cache[t])
    return out


@lru_cache(maxsize=4096)
def _j_table(p):
    sc = starting_curve(p)
    entries = {}
    for rec in enumerate_type_records(p):
        if rec.witness.reduced_norm == 1:
            j = sc.j_invariant()
        else:
            j = ideal_to_j(sc, rec.witness)
        entries[rec.order_type] = JTableEntry(rec.order_type, j, rec.witness, rec.fp)
    return entries


def orders_to_j_big(p, S=None):
    """Entries for the requested types (all types when S is None)."""
    table = _j_table(int(p))
    if S is None:
        return sorted(table.values(), key=lambda e: e.order_type)
    return [table[t] for t in S]


def j_of_ideal_class(entry, I, F):
    """Resolve j versus j^p for a left O_0-ideal I of the entry's type."""
    if entry.fp:
        return entry.j
    if ideals_equivalent(I, entry.witness):
        return entry.j
    return F.conj(entry.j)


# endomorphism rings --------------------------------------------------------

def _hensel_sqrt(p, ell, e, r):
    """Lift r with r^2 = -p mod ell to a root mod ell^e."""
    mod = ell
    for _ in range(1, e):
        mod *= ell
        r = (r - (r * r + p) * pow(2 * r, -1, mod)) % mod
    return r


def _fp_isomorphic(E1, E2):
    """For curves over F_p with the same j: isomorphic over F_p (not a twist)?"""
    F = E1.F
    p = F.p
    if E1.B == 0:
        r = F.parts(E2.A / E1.A)[0]
        return legendre(r, p) == 1
    if E1.A == 0:
        r = F.parts(E2.B / E1.B)[0]
        return legendre(r, p) == 1
    u2 = (E1.A * E2.B) / (E2.A * E1.B)
    return legendre(F.parts(u2)[0], p) == 1


def split_primes(p, count):
    out = []
    ell = 3
    while len(out) < count:
        if ell != p and is_prime(ell) and legendre(-p % ell, ell) == 1:
            out.append(ell)
        ell += 2
    out.sort(key=lambda l: (l * torsion_degree(p, l), l))
    return out


def _class_ideal(O, exps, primes, p):
    """O N + O (j - mu) for the class-group element with the given exponents."""
    A = O.algebra
    N = 1
    mu, mod = 0, 1
    for ell, c in zip(primes, exps):
        if c == 0:
            continue
        lam = split_eigenvalue(p, ell)
        r = lam if c > 0 else (-lam) % ell
        m = ell ** abs(c)
        r = _hensel_sqrt(p, ell, abs(c), r)
        # CRT
        mu = mu + mod * ((r - mu) * pow(mod, -1, m) % m)
        mod *= m
        N *= m
    if N == 1:
        return unit_ideal(O)
    alpha = Quaternion(A, -mu, 0, 1, 0)
    I = ideal_from_generators(O, alpha, N)
    I._norm = Fraction(N)
    return I


def endo_ring(p, j, seed=0, max_set=200000, return_ideal=False):
    """A maximal order isomorphic to End(E) for supersingular j in F_p."""
    p = int(p)
    F = quad_extension(p)
    j = F(j) if not hasattr(j, "to_list") else j
    if not F.in_prime_field(j):
        raise NotSupersingular("endo_ring needs j in F_p")
    if not is_supersingular_j(j, p):
        raise NotSupersingular(f"j = {F.parts(j)[0]} is not supersingular mod {p}")
    sc = starting_curve(p)
    O0 = sc.O0
    E = curve_from_j(j, F)
    E0 = sc.curve
    prefix = unit_ideal(O0)
    if p % 4 == 3 and two_torsion_rank(E) == 3 and two_torsion_rank(E0) != 3:
        # move the starting curve up to the surface
        tower = build_tower(p, 1)
        roots = [r for r in _two_torsion_x(E0) if F.in_prime_field(r)]
        phi = isogeny_from_kernel_point(E0, (tower.lift(roots[0]), tower.ctx.zero()), 2, tower)
        E0 = phi.codomain
        prefix = ideal_from_generators(O0, Quaternion(O0.algebra, -1, 0, 1, 0), 2)
        prefix._norm = Fraction(2)
    rng = random.Random(seed * 7 + p)
    nprimes = max(4, p.bit_length())
    primes = split_primes(p, nprimes)
    zero = (0,) * len(primes)
    side0 = {F.parts(E0.j_invariant())[0]: (E0, zero)}
    side1 = {F.parts(E.j_invariant())[0]: (E, zero)}

    def collide():
        for key in side1:
            if key in side0:
                C0, a = side0[key]
                C1, b = side1[key]
                if _fp_isomorphic(C0, C1):
                    return tuple(x - y for x, y in zip(a, b))
                return tuple(x + y for x, y in zip(a, b))
        return None

    def expand(side, idx, sign_filter=None):
        new = {}
        for key, (C, vec) in list(side.items()):
            for s in (1, -1):
                if sign_filter is not None and vec[idx] != s * sign_filter:
                    continue
                if sign_filter is None and vec[idx] != 0:
                    continue
                C2 = group_action_step(C, primes[idx], s, rng)
                v2 = list(vec)
                v2[idx] += s
                k2 = F.parts(C2.j_invariant())[0]
                if k2 not in side and k2 not in new:
                    new[k2] = (C2, tuple(v2))
        side.update(new)

    exps = collide()
    schedule = [(i, 0) for i in range(len(primes))]
    rounds = 0
    while exps is None:
        if rounds < len(schedule):
            idx, level = schedule[rounds]
        else:
            r = rounds - len(schedule)
            idx = r % len(primes)
            level = 1 + r // len(primes)
        rounds += 1
        if level == 0:
            expand(side0, idx)
            expand(side1, idx)
        else:
            expand(side0, idx, level)
            expand(side1, idx, level)
        if len(side0) + len(side1) > max_set:
            raise SearchBudgetExceeded("meet-in-the-middle sets exceeded the budget")
        exps = collide()
    Oprime = prefix.right_order() if prefix.reduced_norm != 1 else O0
    J = _class_ideal(Oprime, exps, primes, p)
    if prefix.reduced_norm != 1:
        I = prefix.multiply(J) if J.reduced_norm != 1 else prefix
    else:
        I = J
    O = I.right_order()
    if return_ideal:
        return O, I
    return O


def _two_torsion_x(E):
    R = poly_ring(E.F.ctx)
    return [r for r, _ in R([E.B, E.A, 0, 1]).roots()]
