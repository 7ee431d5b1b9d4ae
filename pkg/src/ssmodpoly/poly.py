"""Dense univariate polynomials over finite fields.

Polynomials are python-flint ``fq_default_poly`` values over a field context
(either F_{p^2} or a tower).  This module adds the tree-based algorithms used
by the evaluation pipeline: building from roots, multipoint evaluation and
interpolation, plus canonical root ordering.
"""

from functools import lru_cache

import flint

from .errors import DuplicateAbscissa

INTERPOLATION_THRESHOLD = 32


@lru_cache(maxsize=1024)
def poly_ring(field_ctx):
    return flint.fq_default_poly_ctx(field_ctx)


def product_tree(xs, R):
    """Levels of the subproduct tree, leaves first."""
    level = [R([-x, 1]) for x in xs]
    tree = [level]
    while len(level) > 1:
        nxt = [level[i] * level[i + 1] for i in range(0, len(level) - 1, 2)]
        if len(level) % 2:
            nxt.append(level[-1])
        level = nxt
        tree.append(level)
    return tree


def from_roots(roots, R):
    """prod (Y - r) over the given roots, by a balanced product tree."""
    roots = list(roots)
    if not roots:
        return R.one()
    level = [R([-r, 1]) for r in roots]
    while len(level) > 1:
        nxt = [level[i] * level[i + 1] for i in range(0, len(level) - 1, 2)]
        if len(level) % 2:
            nxt.append(level[-1])
        level = nxt
    return level[0]


def _remainders(f, tree):
    """Values of f at all leaves of the tree, via the remainder tree."""
    rems = [f % tree[-1][0]]
    for depth in range(len(tree) - 2, -1, -1):
        level = tree[depth]
        new = []
        # children of node i at the level above are 2i and 2i+1 (when present)
        for i, r in enumerate(rems):
            for c in (2 * i, 2 * i + 1):
                if c < len(level):
                    new.append(r % level[c])
        rems = new
    return [r.constant_coefficient() for r in rems]


def evaluate_many(f, xs, R):
    xs = list(xs)
    if not xs:
        return []
    if len(xs) < INTERPOLATION_THRESHOLD:
        return [f(x) for x in xs]
    return _remainders(f, product_tree(xs, R))


def _lagrange(xs, ys, R):
    n = len(xs)
    result = R.zero()
    full = from_roots(xs, R)
    for i in range(n):
        num = full // R([-xs[i], 1])
        result += num * (ys[i] / num(xs[i]))
    return result


def interpolate(points, R, threshold=None):
    """The polynomial of degree < n through the n given points."""
    points = list(points)
    if not points:
        return R.zero()
    xs = [x for x, _ in points]
    ys = [y for _, y in points]
    if len({tuple(x.to_list()) for x in xs}) != len(xs):
        raise DuplicateAbscissa("interpolation abscissae must be distinct")
    if threshold is None:
        threshold = INTERPOLATION_THRESHOLD
    if len(points) <= threshold:
        return _lagrange(xs, ys, R)
    tree = product_tree(xs, R)
    m = tree[-1][0]
    weights = _remainders(m.derivative(), tree)
    level = [R([y / w]) for y, w in zip(ys, weights)]
    for depth in range(len(tree) - 1):
        mods = tree[depth]
        nxt = []
        for i in range(0, len(level) - 1, 2):
            nxt.append(level[i] * mods[i + 1] + level[i + 1] * mods[i])
        if len(level) % 2:
            nxt.append(level[-1])
        level = nxt
    return level[0]


def gcd(f, g):
    if f.is_zero() and g.is_zero():
        return f
    if g.is_zero():
        return f.monic()
    if f.is_zero():
        return g.monic()
    return f.gcd(g).monic()


def root_key(x):
    return tuple(int(c) for c in x.to_list())


def roots(f):
    """Distinct roots of f in its coefficient field, canonically ordered."""
    if f.is_zero():
        raise ValueError("the zero polynomial has no finite root set")
    return sorted((r for r, _ in f.roots()), key=root_key)


def coeffs(f, n=None):
    c = list(f.coeffs())
    if n is not None:
        c += [f.context().base_field().zero()] * (n - len(c))
    return c
