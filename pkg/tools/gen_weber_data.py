"""Regenerate src/ssmodpoly/_weber_data.py from the modular-curve maps in weber.py.

Outputs:
  P12[(ey, ea)]       16 R12 / (Y^108 (16Y^8+1)^7), R12 = res_X(f1, f2)
  P23[(ey, ea, eb)]   16 R23 / (Y^77 (16Y^8+1)^7),  R23 = res_X(f2, f3)
  CHAIN               four maps X_0(16) -> X_0(2) as (numerator, denominator)

with f1 = F_s, f2 = G_s - a H_s, f3 = I_s - b J_s.  Every division is checked
to be exact; a remainder aborts the run.

Usage: python3 tools/gen_weber_data.py [output path]
"""

import sys
from pathlib import Path

import flint

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))
from ssmodpoly import weber  # noqa: E402

OUT = Path(__file__).resolve().parents[1] / "src" / "ssmodpoly" / "_weber_data.py"


def _mpoly(ctx, terms, names):
    gens = dict(zip(ctx.names(), ctx.gens()))
    out = ctx.from_dict({})
    for exps, c in terms.items():
        m = ctx.from_dict({(0,) * ctx.nvars(): c})
        for name, e in zip(names, exps):
            m *= gens[name] ** e
        out += m
    return out


def _exact_div(a, b, what):
    q, r = divmod(a, b)
    if r != 0:
        raise SystemExit(f"{what}: division leaves a remainder")
    return q


def resultants():
    ctx = flint.fmpz_mpoly_ctx.get(("X", "Y", "a", "b"), "lex")
    X, Y, a, b = ctx.gens()
    xy = ("X", "Y")
    f1 = _mpoly(ctx, weber.FS, xy)
    f2 = _mpoly(ctx, weber.GS, xy) - a * _mpoly(ctx, weber.HS, xy)
    f3 = _mpoly(ctx, weber.IS, xy) - b * _mpoly(ctx, weber.JS, xy)
    spur = (16 * Y ** 8 + 1) ** 7
    p12 = _exact_div(16 * f1.resultant(f2, "X"), Y ** 108 * spur, "P12")
    p23 = _exact_div(16 * f2.resultant(f3, "X"), Y ** 77 * spur, "P23")
    d12 = {(e[1], e[2]): int(c) for e, c in p12.to_dict().items()}
    d23 = {(e[1], e[2], e[3]): int(c) for e, c in p23.to_dict().items()}
    return d12, d23


def _reduce(n, d):
    g = n.gcd(d)
    n, d = n // g, d // g
    if d.leading_coefficient() < 0:
        n, d = -n, -d
    return n, d


def chain_maps():
    """t_0..t_3 with (t_i + 16)^3 / t_i = j(E_i) and (t_i + 256)^3 / t_i^2 = j(E_{i+1})."""
    P = flint.fmpz_poly
    ctx = flint.fmpz_mpoly_ctx.get(("x", "t"), "lex")
    x, t = ctx.gens()

    def up(f):
        return sum((int(c) * x ** i for i, c in enumerate(f.coeffs())), ctx.from_dict({}))

    def linear_roots(F):
        out = []
        for f, _ in F.factor()[1]:
            if f.degrees()[1] != 1:
                continue
            lead, const = P([0]), P([0])
            for (i, k), c in f.to_dict().items():
                if k == 1:
                    lead += int(c) * P([0, 1]) ** i
                else:
                    const += int(c) * P([0, 1]) ** i
            out.append(_reduce(-const, lead))
        return out

    G0, H0, I0, J0 = (P(c) for c in (weber.G0, weber.H0, weber.I0, weber.J0))
    target = _reduce(I0, J0)

    def forward(tt):
        n, d = tt
        jn, jd = _reduce((n + 256 * d) ** 3, n * n * d)
        back = _reduce(4096 * d, n)
        return [c for c in linear_roots((t + 16) ** 3 * up(jd) - t * up(jn)) if c != back]

    def search(chain):
        if len(chain) == 4:
            n, d = chain[-1]
            return [chain] if _reduce((n + 256 * d) ** 3, n * n * d) == target else []
        found = []
        for c in forward(chain[-1]):
            found += search(chain + [c])
        return found

    starts = linear_roots((t + 16) ** 3 * up(H0) - t * up(G0))
    chains = [c for s in starts for c in search([s])]
    if len(chains) != 1:
        raise SystemExit(f"expected one chain of X_0(2) maps, found {len(chains)}")
    return [([int(c) for c in n.coeffs()], [int(c) for c in d.coeffs()]) for n, d in chains[0]]


def render(d12, d23, chain):
    lines = ['"""Generated by tools/gen_weber_data.py; do not edit."""', ""]
    lines.append("P12 = {")
    for k in sorted(d12):
        lines.append(f"    {k}: {d12[k]},")
    lines.append("}")
    lines.append("")
    lines.append("P23 = {")
    for k in sorted(d23):
        lines.append(f"    {k}: {d23[k]},")
    lines.append("}")
    lines.append("")
    lines.append("CHAIN = [")
    for n, d in chain:
        lines.append(f"    ({n}, {d}),")
    lines.append("]")
    return "\n".join(lines) + "\n"


def main(argv):
    out = Path(argv[1]) if len(argv) > 1 else OUT
    d12, d23 = resultants()
    text = render(d12, d23, chain_maps())
    out.write_text(text)
    print(f"wrote {out}: {len(d12)} + {len(d23)} terms")


if __name__ == "__main__":
    main(sys.argv)
