"""Canonical isomorphism invariants of maximal orders and type enumeration.

The invariant of an order O is the isometry class of its Gross lattice
{2x - trd(x) : x in O}, a positive ternary lattice.  It is encoded by the
three successive minima together with the lexicographically smallest Gram
matrix over all bases realising those minima.
"""

from collections import deque
from dataclasses import dataclass
from fractions import Fraction

import flint

from .lattice import ideals_of_norm_ell, standard_maximal_order, unit_ideal
from .lll import det3, lll_gram, short_vectors


@dataclass(frozen=True, order=True)
class OrderType:
    minima: tuple
    gram: tuple

    def to_bytes(self):
        return ",".join(str(v) for v in self.minima + self.gram).encode()

    def to_json(self):
        return {"minima": [str(v) for v in self.minima], "gram": [str(v) for v in self.gram]}

    @classmethod
    def from_json(cls, d):
        return cls(tuple(int(v) for v in d["minima"]), tuple(int(v) for v in d["gram"]))


def gross_lattice(O):
    """Basis (3 integer vectors in i, j, k coordinates, common denominator) and Gram."""
    A = O.algebra
    vecs = [[2 * r[1], 2 * r[2], 2 * r[3]] for r in O.basis]
    H = flint.fmpz_mat(vecs).hnf()
    rows = [tuple(int(H[i, j]) for j in range(3)) for i in range(H.nrows())]
    rows = [r for r in rows if any(r)]
    den2 = O.den * O.den
    G = []
    for a in rows:
        row = []
        for b in rows:
            v = 2 * (A.q * a[0] * b[0] + A.p * a[1] * b[1] + A.q * A.p * a[2] * b[2])
            if v % den2:
                raise ValueError("Gross lattice Gram is not integral")
            row.append(v // den2)
        G.append(row)
    return rows, G


def _canonical_form(G):
    """(minima, gram) canonical under GL3(Z) for the ternary Gram G (v G v = 2 nrd)."""
    T, H = lll_gram(G)
    bound = max(H[i][i] for i in range(3))
    vecs = short_vectors(H, bound)
    # successive minima
    chosen, minima = [], []
    for val, v in vecs:
        trial = chosen + [v]
        if _independent(trial):
            chosen.append(v)
            minima.append(val)
            if len(chosen) == 3:
                break
    by_norm = {}
    for val, v in vecs:
        by_norm.setdefault(val, []).append(v)
    S = [by_norm[m] for m in minima]

    def ip(u, w):
        return sum(H[i][j] * u[i] * w[j] for i in range(3) for j in range(3))

    best = None
    for v1 in S[0]:
        for v2 in S[1]:
            if v2 == v1:
                continue
            for s2 in (1, -1):
                w2 = tuple(s2 * c for c in v2)
                g12 = ip(v1, w2)
                if best is not None and g12 > best[0]:
                    continue
                for v3 in S[2]:
                    if v3 == v1 or v3 == v2:
                        continue
                    if abs(det3([v1, v2, v3])) != 1:
                        continue
                    for s3 in (1, -1):
                        w3 = tuple(s3 * c for c in v3)
                        key = (g12, ip(v1, w3), ip(w2, w3))
                        if best is None or key < best:
                            best = key
    return tuple(minima), best


def _independent(vs):
    if len(vs) == 1:
        return any(vs[0])
    if len(vs) == 2:
        a, b = vs
        return any(a[i] * b[j] - a[j] * b[i] for i in range(3) for j in range(i + 1, 3))
    return det3(vs) != 0


def maximal_order_type(O):
    if getattr(O, "_type", None) is None:
        _, G = gross_lattice(O)
        minima, gram = _canonical_form(G)
        t = OrderType(tuple(m // 2 for m in minima), gram)
        try:
            O._type = t
        except AttributeError:
            pass
        return t
    return O._type


def types_equal(t1, t2):
    return t1 == t2


def is_fp_type(O):
    """True iff O contains a square root of -p (the curve is defined over F_p)."""
    A = O.algebra
    p = A.p
    rows, G = gross_lattice(O)
    T, H = lll_gram(G)
    for val, v in short_vectors(H, 8 * p):
        n = Fraction(val, 2)
        if n == p:
            return True
        if n == 4 * p:
            coeffs = [sum(v[i] * T[i][j] for i in range(3)) for j in range(3)]
            x = [sum(c * r[k] for c, r in zip(coeffs, rows)) for k in range(3)]
            from .algebra import Quaternion
            if O.contains(Quaternion(A, 0, x[0], x[1], x[2], 2 * O.den)):
                return True
    return False


def supersingular_class_number(p):
    """Number of supersingular j-invariants in characteristic p."""
    p = int(p)
    return p // 12 + {1: 0, 5: 1, 7: 1, 11: 2}[p % 12]


def eichler_mass(p):
    return Fraction(p - 1, 24)


def order_mass(O):
    """Contribution of this type to the ideal-class mass: classes / #units."""
    classes = 1 if is_fp_type(O) else 2
    return Fraction(classes, O.unit_count())


@dataclass
class TypeRecord:
    order_type: OrderType
    order: object
    witness: object
    fp: bool


def enumerate_type_records(p, ells=(2, 3), max_orders=None):
    """All maximal order types, each with an ideal from the standard order."""
    O0 = standard_maximal_order(p)
    target = eichler_mass(p)
    t0 = maximal_order_type(O0)
    records = {t0: TypeRecord(t0, O0, unit_ideal(O0), is_fp_type(O0))}
    mass = order_mass(O0)
    for ell in ells:
        if mass == target:
            break
        if p == ell:
            continue
        queue = deque(r for r in records.values())
        while queue and mass < target:
            rec = queue.popleft()
            for J in ideals_of_norm_ell(rec.order, ell):
                O = J.right_order()
                t = maximal_order_type(O)
                if t in records:
                    continue
                I = rec.witness.multiply(J)
                I._right = O
                r = TypeRecord(t, O, I, is_fp_type(O))
                records[t] = r
                mass += order_mass(O)
                queue.append(r)
                if mass >= target:
                    break
    if mass != target:
        raise ValueError(f"type enumeration stopped at mass {mass} != {target}")
    return sorted(records.values(), key=lambda r: r.order_type)


def enumerate_maximal_order_types(p):
    """One (type, order) pair per isomorphism class of maximal orders."""
    return [(r.order_type, r.order) for r in enumerate_type_records(p)]


def type_number(p):
    return len(enumerate_type_records(p))
