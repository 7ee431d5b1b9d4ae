"""Command-line front end.

Exit status: 0 on success, 2 for usage errors, 1 for computation errors
(stderr then starts with the error class name).
"""

import argparse
import hashlib
import json
import logging
import os
import random
import sys
from pathlib import Path

from . import eval as ev
from .arith import is_prime, quad_extension
from .deuring import endo_ring, order_to_j
from .errors import SsmpError
from .quat import QuatOrder, lattice_from_json, maximal_order_type
from .sieve import CrtPrimeSet, segmented_primes, supersingular_reduction_test

log = logging.getLogger("ssmodpoly")


class UsageError(Exception):
    pass


# config ---------------------------------------------------------------------------

def _int(text, name):
    try:
        return int(text, 10)
    except (TypeError, ValueError):
        raise UsageError(f"{name} must be a decimal integer, got {text!r}")


def _prime(text, name):
    v = _int(text, name)
    if not is_prime(v):
        raise UsageError(f"{name} = {v} is not prime")
    return v


def _check_p_ell_j(args):
    p = _prime(args.p, "p")
    ell = _prime(args.ell, "ell")
    if ell == p:
        raise UsageError("ell must differ from p")
    j = _int(args.j, "j")
    if not 0 <= j < p:
        raise UsageError("j must satisfy 0 <= j < p")
    return p, ell, j


def _field_element(text, p):
    """'a' or 'a,b' for a + b*omega in F_{p^2}."""
    F = quad_extension(p)
    parts = text.split(",")
    if len(parts) > 2:
        raise UsageError(f"cannot parse {text!r} as an element of F_p^2")
    vals = [_int(v, "j") for v in parts]
    if any(not 0 <= v < p for v in vals):
        raise UsageError("coordinates of j must lie in [0, p)")
    return F(*vals)


def _cache_dir(args):
    d = args.cache_dir or os.environ.get("SSMODPOLY_CACHE") or Path.home() / ".cache" / "ssmodpoly"
    return Path(d)


def _cache_key(algorithm, **params):
    blob = json.dumps({"algorithm": algorithm, **{k: str(v) for k, v in params.items()}},
                      sort_keys=True)
    return hashlib.sha256(blob.encode()).hexdigest()


def cached_prime_set(args, algorithm, p, j, ell):
    if args.no_cache:
        return ev.prime_set_for(algorithm, p, j, ell)
    key = _cache_key(algorithm, p=p if algorithm == "bigchar" else "", j=j if algorithm == "biglevel" else "",
                     ell=ell)
    path = _cache_dir(args) / f"primes-{key}.json"
    if path.exists():
        log.info("prime set cache hit: %s", path)
        return CrtPrimeSet.from_json(json.loads(path.read_text()))
    log.info("prime set cache miss: %s", path)
    ps = ev.prime_set_for(algorithm, p, j, ell)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(json.dumps(ps.to_json(), sort_keys=True))
    except OSError as exc:
        log.warning("could not write cache file %s: %s", path, exc)
    return ps


# output ---------------------------------------------------------------------------

def _emit(args, obj, plain):
    if args.format == "json":
        print(json.dumps(obj, sort_keys=True))
    else:
        print(plain)


def _emit_result(args, res):
    _emit(args, res.to_json(), res.plain())


# subcommands ----------------------------------------------------------------------

def cmd_eval_bigchar(args):
    p, ell, j = _check_p_ell_j(args)
    _emit_result(args, ev.modular_evaluation_big_char(p, j, ell))


def cmd_eval_biglevel(args):
    p, ell, j = _check_p_ell_j(args)
    ps = cached_prime_set(args, "biglevel", p, j, ell)
    _emit_result(args, ev.modular_evaluation_big_level(p, j, ell, prime_set=ps))


def cmd_eval_supersingular(args):
    p = _prime(args.p, "p")
    ell = _prime(args.ell, "ell")
    if ell == p:
        raise UsageError("ell must differ from p")
    F = quad_extension(p)
    j = _field_element(args.j, p)
    if F.in_prime_field(j):
        _emit_result(args, ev.supersingular_evaluation(p, F.parts(j)[0], ell))
        return
    coeffs = ev.supersingular_evaluation(p, j, ell, allow_fp2=True)
    if isinstance(coeffs, ev.EvaluationResult):
        _emit_result(args, coeffs)
        return
    obj = {"p": str(p), "ell": str(ell), "j": F.to_json(j),
           "coefficients": [F.to_json(c) for c in coeffs]}
    _emit(args, obj, " ".join(",".join(F.to_json(c)) for c in coeffs))


def cmd_endring(args):
    p = _prime(args.p, "p")
    j = _int(args.j, "j")
    if not 0 <= j < p:
        raise UsageError("j must satisfy 0 <= j < p")
    O = endo_ring(p, j, seed=args.seed)
    obj = {"order": O.to_json(), "discriminant": str(O.discriminant()),
           "type": maximal_order_type(O).to_json()}
    _emit(args, obj, json.dumps(O.to_json()["basis"]) + f" / {O.den}")


def cmd_order_to_j(args):
    try:
        data = json.loads(Path(args.order).read_text() if os.path.exists(args.order) else args.order)
    except (OSError, ValueError) as exc:
        raise UsageError(f"cannot read order: {exc}")
    if "order" in data:
        data = data["order"]
    O = lattice_from_json(data, QuatOrder)
    p = O.algebra.p
    F = quad_extension(p)
    j = order_to_j(O)
    conj = F.conj(j)
    obj = {"p": str(p), "j": F.to_json(j), "j_conjugate": F.to_json(conj)}
    _emit(args, obj, ",".join(F.to_json(j)) + " " + ",".join(F.to_json(conj)))


def cmd_sieve(args):
    lo = _int(args.lo, "--from")
    hi = _int(args.hi, "--to")
    if hi < lo:
        raise UsageError("--to must not be below --from")
    primes = segmented_primes(lo, hi)
    if args.supersingular_j is not None:
        j = _int(args.supersingular_j, "--supersingular-j")
        rng = random.Random(args.seed)
        primes = [q for q in primes if q > 3 and supersingular_reduction_test(j, q, rng=rng)]
    out = [str(q) for q in primes]
    _emit(args, out, " ".join(out))


def cmd_weber(args):
    from .weber import gamma2_candidates, psi, weber_invariant
    from .ec import curve_from_j, is_supersingular_j, normalize_twist
    from .errors import NotSupersingular
    p = _prime(args.p, "p")
    F = quad_extension(p)
    j = _field_element(args.j, p)
    if not is_supersingular_j(j, p):
        raise NotSupersingular(f"j is not supersingular mod {p}")
    E = normalize_twist(curve_from_j(j, F))
    w = weber_invariant(p, j, seed=args.seed)
    gam = gamma2_candidates(E)
    obj = {
        "p": str(p), "j": F.to_json(j),
        "gamma2": [F.to_json(g) for g in gam],
        "f3": F.to_json(w.t), "f": F.to_json(w.f),
        "checks": {"gamma2_cubed_is_j": all(g ** 3 == j for g in gam),
                   "f_cubed_is_t": w.f ** 3 == w.t,
                   "psi_vanishes": psi(w.f, j) == 0},
        "fallback": w.fallback,
        "ambiguous": w.ambiguous,
    }
    _emit(args, obj, ",".join(F.to_json(w.f)))


def cmd_selftest(args):
    from .oracles import phi_evaluated, velu_polynomial
    from .ec import is_supersingular_j
    rng = random.Random(args.seed)
    failures = 0

    def report(name, ok):
        nonlocal failures
        failures += not ok
        print(f"{'PASS' if ok else 'FAIL'} {name}")

    for ell in (2, 3, 5):
        j = rng.randrange(1009)
        r = ev.modular_evaluation_big_char(1009, j, ell)
        report(f"bigchar p=1009 ell={ell} j={j}", r.coefficients == phi_evaluated(ell, j, 1009))
    for p in (101, 103):
        F = quad_extension(p)
        js = [j for j in range(p) if is_supersingular_j(j, p)]
        for ell in (2, 3):
            j = rng.choice(js)
            r = ev.supersingular_evaluation(p, j, ell)
            v = [F.parts(c)[0] for c in velu_polynomial(p, j, ell)]
            report(f"supersingular p={p} ell={ell} j={j}", r.coefficients == v)
    for ell in (2, 3):
        r = ev.modular_evaluation_big_level(1009, 5, ell)
        report(f"biglevel p=1009 ell={ell} j=5", r.coefficients == phi_evaluated(ell, 5, 1009))
    return 1 if failures else 0


# parser ---------------------------------------------------------------------------

def _global_flags(suppress):
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    g = argparse.ArgumentParser(add_help=False)
    g.add_argument("--seed", type=int, default=d(0), help="seed for every randomised step")
    g.add_argument("--threads", type=int, default=d(None),
                   help="worker cap (computation currently runs in one thread)")
    g.add_argument("--format", choices=("json", "plain"), default=d("json"))
    g.add_argument("--cache-dir", default=d(None))
    g.add_argument("--no-cache", action="store_true", default=d(False))
    g.add_argument("-v", "--verbose", action="count", default=d(0))
    return g


def build_parser():
    # global flags are accepted before or after the subcommand
    common = _global_flags(suppress=True)
    parser = argparse.ArgumentParser(prog="ssmodpoly", parents=[_global_flags(suppress=False)],
                                     description="Modular polynomial evaluation via supersingular curves")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_text, *fields):
        sp = sub.add_parser(name, parents=[common], help=help_text)
        for flag, kw in fields:
            sp.add_argument(flag, **kw)
        sp.set_defaults(func=fn)
        return sp

    pej = [("--p", {"required": True}), ("--ell", {"required": True}), ("--j", {"required": True})]
    add("eval-bigchar", cmd_eval_bigchar, "Phi_l(j, Y) mod p by CRT over small primes", *pej)
    add("eval-biglevel", cmd_eval_biglevel, "Phi_l(j, Y) mod p by CRT over supersingular reductions", *pej)
    add("eval-supersingular", cmd_eval_supersingular,
        "Phi_l(j, Y) mod p for supersingular j (j = 'a' or 'a,b')", *pej)
    add("endring", cmd_endring, "maximal order of End(E) for supersingular j in F_p",
        ("--p", {"required": True}), ("--j", {"required": True}))
    add("order-to-j", cmd_order_to_j, "j-invariant of a maximal order given as JSON",
        ("--order", {"required": True, "help": "JSON text or file, as printed by endring"}))
    add("sieve", cmd_sieve, "primes in a range",
        ("--from", {"dest": "lo", "required": True}), ("--to", {"dest": "hi", "required": True}),
        ("--supersingular-j", {"default": None}))
    add("weber", cmd_weber, "a Weber invariant over a supersingular j",
        ("--p", {"required": True}), ("--j", {"required": True}))
    add("selftest", cmd_selftest, "small oracle comparisons")
    return parser


def run(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.WARNING - 10 * min(args.verbose, 2), stream=sys.stderr,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        status = args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except SsmpError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except (ValueError, ArithmeticError) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    return status or 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
