"""Integral LLL on Gram matrices and short-vector enumeration.

Everything here works on a positive definite integer Gram matrix, which is
how the norm forms of quaternion lattices arrive.  The LLL variant is the
all-integer one (subdeterminants d_i and scaled coefficients lambda_ij), so
no rational arithmetic is needed.
"""

from fractions import Fraction
import math

DELTA = Fraction(99, 100)


def _round_div(a, b):
    """Nearest integer to a/b for b > 0."""
    return (2 * a + b) // (2 * b)


def lll_gram(G, delta=DELTA):
    """LLL-reduce the basis with Gram matrix G.

    Returns (T, H) where the rows of T express the reduced basis in the input
    basis and H = T G T^t is the reduced Gram matrix.
    """
    n = len(G)
    G = [list(map(int, row)) for row in G]
    T = [[int(i == j) for j in range(n)] for i in range(n)]
    if n <= 1:
        return T, G
    a, b = delta.numerator, delta.denominator
    d = [0] * (n + 1)
    d[0] = 1
    lam = [[0] * n for _ in range(n)]

    def sub_row(k, l, q):
        # b_k <- b_k - q b_l
        for i in range(n):
            T[k][i] -= q * T[l][i]
        Gkl, Gll, Gkk = G[k][l], G[l][l], G[k][k]
        for i in range(n):
            G[k][i] -= q * G[l][i]
        G[k][k] = Gkk - 2 * q * Gkl + q * q * Gll
        for i in range(n):
            G[i][k] = G[k][i]

    def red(k, l):
        if 2 * abs(lam[k][l]) > d[l + 1]:
            q = _round_div(lam[k][l], d[l + 1])
            sub_row(k, l, q)
            lam[k][l] -= q * d[l + 1]
            for i in range(l):
                lam[k][i] -= q * lam[l][i]

    def swap(k, kmax):
        T[k], T[k - 1] = T[k - 1], T[k]
        G[k], G[k - 1] = G[k - 1], G[k]
        for row in G:
            row[k], row[k - 1] = row[k - 1], row[k]
        for j in range(k - 1):
            lam[k][j], lam[k - 1][j] = lam[k - 1][j], lam[k][j]
        L = lam[k][k - 1]
        B = (d[k - 1] * d[k + 1] + L * L) // d[k]
        for i in range(k + 1, kmax + 1):
            t = lam[i][k]
            lam[i][k] = (d[k + 1] * lam[i][k - 1] - L * t) // d[k]
            lam[i][k - 1] = (B * t + L * lam[i][k]) // d[k + 1]
        d[k] = B

    d[1] = G[0][0]
    if d[1] <= 0:
        raise ValueError("Gram matrix is not positive definite")
    k, kmax = 1, 0
    while k < n:
        if k > kmax:
            kmax = k
            for j in range(k + 1):
                u = G[k][j]
                for i in range(j):
                    u = (d[i + 1] * u - lam[k][i] * lam[j][i]) // d[i]
                if j < k:
                    lam[k][j] = u
                else:
                    d[k + 1] = u
                    if u <= 0:
                        raise ValueError("Gram matrix is not positive definite")
        red(k, k - 1)
        L = lam[k][k - 1]
        if b * d[k + 1] * d[k - 1] < a * d[k] * d[k] - b * L * L:
            swap(k, kmax)
            k = max(1, k - 1)
        else:
            for l in range(k - 2, -1, -1):
                red(k, l)
            k += 1
    return T, G


def quad_form(G, v):
    n = len(G)
    return sum(G[i][j] * v[i] * v[j] for i in range(n) for j in range(n))


def short_vectors(G, bound):
    """All nonzero integer vectors v (up to sign) with v G v^t <= bound.

    G should be LLL-reduced for efficiency; results are exact.
    """
    n = len(G)
    bound = Fraction(bound)
    if bound <= 0:
        return []
    Q = [[float(G[i][j]) for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            Q[j][i] = Q[i][j]
            Q[i][j] = Q[i][j] / Q[i][i]
        for k in range(i + 1, n):
            for l in range(k, n):
                Q[k][l] -= Q[k][i] * Q[i][l]
    slack = float(bound) * (1 + 1e-9) + 1e-6
    out = []
    x = [0] * n

    def rec(i, remaining):
        c = -sum(Q[i][j] * x[j] for j in range(i + 1, n))
        r = math.sqrt(max(remaining, 0.0) / Q[i][i])
        lo, hi = math.ceil(c - r - 1e-9), math.floor(c + r + 1e-9)
        for xi in range(lo, hi + 1):
            x[i] = xi
            rem = remaining - Q[i][i] * (xi - c) ** 2
            if rem < -1e-9 * max(1.0, abs(slack)):
                continue
            if i == 0:
                if any(x):
                    out.append(tuple(x))
            else:
                rec(i - 1, rem)
        x[i] = 0

    rec(n - 1, slack)
    res = []
    for v in out:
        val = quad_form(G, v)
        if val <= bound:
            # keep one of +-v: first nonzero coordinate positive
            first = next(c for c in v if c)
            if first > 0:
                res.append((val, v))
    res.sort()
    return res


def successive_minima(G):
    """Successive minima of the lattice with Gram matrix G, with witnesses.

    Returns (minima, vectors, T, H, short) where vectors are coordinates in
    the reduced basis given by the rows of T, H is the reduced Gram matrix
    and short lists every vector up to the largest minimum.
    """
    n = len(G)
    T, H = lll_gram(G)
    bound = max(H[i][i] for i in range(n))
    vecs = short_vectors(H, bound)
    chosen = []
    minima = []
    for val, v in vecs:
        if _rank(chosen + [v]) > len(chosen):
            chosen.append(v)
            minima.append(val)
            if len(chosen) == n:
                break
    return minima, chosen, T, H, vecs


def _rank(rows):
    if not rows:
        return 0
    M = [[Fraction(c) for c in r] for r in rows]
    rank = 0
    ncols = len(M[0])
    for col in range(ncols):
        piv = next((r for r in range(rank, len(M)) if M[r][col] != 0), None)
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        for r in range(len(M)):
            if r != rank and M[r][col] != 0:
                f = M[r][col] / M[rank][col]
                M[r] = [a - f * b for a, b in zip(M[r], M[rank])]
        rank += 1
    return rank


def det3(M):
    return (M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1])
            - M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0])
            + M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0]))
