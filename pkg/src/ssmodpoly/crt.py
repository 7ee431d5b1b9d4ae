"""Height bounds and explicit CRT reconstruction modulo a target prime.

The accumulator keeps, per coefficient, a running sum modulo p and a
fixed-point sum of the fractions t_i / q_i.  The fractional sum decides the
multiple of M = prod q_i to subtract, so the reconstructed integer never has
to be formed.
"""

import json
import math
from dataclasses import dataclass

from .errors import AmbiguousLift, IncompleteUpdateSet, ModulusReuse, UnknownModulus

GUARD_BITS = 96


@dataclass(frozen=True)
class HeightBound:
    """B = 2^exponent."""

    exponent: int

    @property
    def value(self):
        return 1 << self.exponent


def _ceil_log2(n):
    """Smallest e with 2^e >= n, for a positive integer n."""
    return (int(n) - 1).bit_length()


def height_bound_bigchar(ell, p) -> HeightBound:
    """ceil(6 l log l + 18 l + log p + log(l + 2)), all logs base 2."""
    n = ell ** (6 * ell) * 2 ** (18 * ell) * int(p) * (ell + 2)
    return HeightBound(_ceil_log2(n))


def height_bound_biglevel(ell, jbar) -> HeightBound:
    """ceil(6 l log l + 18 l + (l + 1) log j + log(l + 2)); j below 2 counts as 2."""
    jbar = max(int(jbar), 2)
    n = ell ** (6 * ell) * 2 ** (18 * ell) * jbar ** (ell + 1) * (ell + 2)
    return HeightBound(_ceil_log2(n))


def lift_powers(j, ell, p):
    """(j^i mod p) for i = 1..ell+1, as integers in [0, p-1]."""
    j = int(j) % p
    out, x = [], 1
    for _ in range(ell + 1):
        x = x * j % p
        out.append(x)
    return out


class CrtAccumulator:
    """Streaming CRT for a vector of integers, finalized modulo p.

    ``lift`` is "symmetric" (integers in (-M/2, M/2]) or "nonnegative"
    (integers in [0, M)).
    """

    def __init__(self, moduli, p, length=None, lift="symmetric"):
        moduli = [int(q) for q in moduli]
        if len(set(moduli)) != len(moduli):
            raise ModulusReuse("repeated modulus in the CRT set")
        if lift not in ("symmetric", "nonnegative"):
            raise ValueError(f"unknown lift {lift!r}")
        self.moduli = moduli
        self.p = int(p)
        self.lift = lift
        self.length = length
        self.shift = GUARD_BITS + len(moduli).bit_length()
        M = math.prod(moduli)
        self.M_mod_p = M % self.p
        # per modulus: (M/q)^{-1} mod q and (M/q) mod p
        self._consts = {}
        for q in moduli:
            Mq = M // q
            self._consts[q] = (pow(Mq % q, -1, q) if q > 1 else 0, Mq % self.p)
        self.used = set()
        self.sum_p = None
        self.sum_frac = None

    def update(self, q, residues):
        q = int(q)
        if q not in self._consts:
            raise UnknownModulus(f"{q} is not in the modulus set")
        if q in self.used:
            raise ModulusReuse(f"modulus {q} was already used")
        residues = [int(r) for r in residues]
        if self.length is None:
            self.length = len(residues)
        if len(residues) != self.length:
            raise ValueError("residue vectors must all have the same length")
        if self.sum_p is None:
            self.sum_p = [0] * self.length
            self.sum_frac = [0] * self.length
        a, Mq_p = self._consts[q]
        for k, c in enumerate(residues):
            t = c * a % q
            self.sum_p[k] = (self.sum_p[k] + t * Mq_p) % self.p
            self.sum_frac[k] += (t << self.shift) // q
        self.used.add(q)

    def finalize(self):
        missing = set(self.moduli) - self.used
        if missing:
            raise IncompleteUpdateSet(f"{len(missing)} moduli never updated")
        if self.sum_p is None:
            return []
        n = len(self.moduli)
        one = 1 << self.shift
        half = one >> 1
        out = []
        for s_p, x_lo in zip(self.sum_p, self.sum_frac):
            # the true fraction lies in [x_lo, x_lo + n) / 2^shift
            x_hi = x_lo + n
            if self.lift == "symmetric":
                r_lo = -((half - x_lo) // one)       # ceil((x - 1/2))
                r_hi = -((half - x_hi) // one)
            else:
                r_lo = x_lo // one
                r_hi = x_hi // one
            if r_lo != r_hi:
                raise AmbiguousLift("value too close to the edge of the lift range")
            out.append((s_p - r_lo * self.M_mod_p) % self.p)
        return out

    def checkpoint(self):
        return json.dumps({
            "p": str(self.p), "moduli": [str(q) for q in self.moduli], "lift": self.lift,
            "used": sorted(str(q) for q in self.used),
            "sum_p": None if self.sum_p is None else [str(v) for v in self.sum_p],
            "sum_frac": None if self.sum_frac is None else [str(v) for v in self.sum_frac],
        })

    @classmethod
    def restore(cls, text):
        d = json.loads(text)
        acc = cls([int(q) for q in d["moduli"]], int(d["p"]), lift=d["lift"])
        acc.used = {int(q) for q in d["used"]}
        if d["sum_p"] is not None:
            acc.sum_p = [int(v) for v in d["sum_p"]]
            acc.sum_frac = [int(v) for v in d["sum_frac"]]
            acc.length = len(acc.sum_p)
        return acc


def crt_precompute(moduli, p, lift="symmetric") -> CrtAccumulator:
    if hasattr(moduli, "primes"):
        moduli = moduli.primes
    return CrtAccumulator(moduli, p, lift=lift)


def crt_update(acc, q, residues):
    acc.update(q, residues)


def crt_finalize(acc):
    return acc.finalize()
