"""Command-line entry point.

One subcommand per module; stdout carries exactly one JSON document on
success and diagnostics go to stderr.  Exit codes: 0 success, 1 usage,
2 domain or validation error, 3 budget exceeded.  Identical argv and seed
give byte-identical stdout.
"""

from __future__ import annotations

import argparse
import sys

from . import __version__, jsonio
from .cyclic import Tensor, cyclic_shift, is_multivariate_cyclic
from .errors import DomainError, IdealLatError, ParseError, ResourceError
from .groebner import buchberger, short_reduce
from .hardness import (
    expansion_factor,
    gaussian_width,
    incspp_via_collisions,
    max_coefficient,
    max_substitution,
    norm_mod,
    spp_bruteforce,
    variety_cyclotomic,
)
from .hashing import collision_oracle, digest, encode_bytes, find_collision_bruteforce, keygen, validate, verify_collision
from .lattice import IntegerLattice, ideal_to_lattice, minima_bruteforce
from .poly import format_monomial, format_polynomial, parse_polynomial
from .quotient import build_quotient, coordinates


class _Usage(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _Usage(message)


def _int_list(text):
    return tuple(int(x) for x in text.split(","))


def _budget(text):
    return int(float(text))


def _build_parser():
    top = _Parser(prog="ideallat", description=__doc__)
    top.add_argument("--version", action="version", version="ideallat %s" % __version__)
    sub = top.add_subparsers(dest="command", required=True)

    g = sub.add_parser("groebner", help="strong Groebner basis of an ideal")
    g.add_argument("--ideal", required=True)
    g.add_argument("--order", default="lex")
    g.add_argument("--short", action="store_true", help="emit the short reduced basis")
    g.add_argument("--budget", type=_budget, default=10**6)

    q = sub.add_parser("quotient", help="module structure of the quotient ring")
    qsub = q.add_subparsers(dest="verb", required=True)
    qi = qsub.add_parser("info")
    qi.add_argument("--ideal", required=True)
    qi.add_argument("--order", default="lex")
    qp = qsub.add_parser("phi")
    qp.add_argument("--ideal", required=True)
    qp.add_argument("--order", default="lex")
    qp.add_argument("--poly", required=True)

    l = sub.add_parser("lattice", help="lattice extraction and successive minima")
    lsub = l.add_subparsers(dest="verb", required=True)
    le = lsub.add_parser("extract")
    le.add_argument("--ideal", required=True)
    le.add_argument("--order", default="lex")
    le.add_argument("--A", required=True, dest="a_gens")
    lm = lsub.add_parser("minima")
    lm.add_argument("--lattice", required=True)
    lm.add_argument("--k", type=int, required=True)
    lm.add_argument("--box", type=int, default=None)
    lm.add_argument("--budget", type=_budget, default=2_000_000)
    lm.add_argument("--threads", type=int, default=1)

    c = sub.add_parser("cyclic", help="tensor shifts and shift-closure checks")
    csub = c.add_subparsers(dest="verb", required=True)
    cc = csub.add_parser("check")
    cc.add_argument("--lattice", required=True)
    cc.add_argument("--shape", type=_int_list, required=True)
    cs = csub.add_parser("shift")
    cs.add_argument("--tensor", required=True)
    cs.add_argument("--axis", type=int, required=True)

    h = sub.add_parser("hardness", help="norms, expansion factor and oracles")
    hsub = h.add_subparsers(dest="verb", required=True)
    he = hsub.add_parser("expansion")
    he.add_argument("--ideal", required=True)
    he.add_argument("--order", default="lex")
    he.add_argument("--k", type=_int_list, required=True)
    he.add_argument("--samples", type=int, default=10000)
    he.add_argument("--seed", type=int, required=True)
    he.add_argument("--coeff-bound", type=int, default=1)
    hs = hsub.add_parser("spp")
    hs.add_argument("--ideal", required=True)
    hs.add_argument("--order", default="lex")
    hs.add_argument("--A", required=True, dest="a_gens")
    hs.add_argument("--gamma", type=float, default=1)
    hs.add_argument("--box", type=int, default=None)
    hs.add_argument("--budget", type=_budget, default=2_000_000)
    hm = hsub.add_parser("maxsub")
    hm.add_argument("--r", type=_int_list, required=True)
    hm.add_argument("--poly", required=True)
    ha = hsub.add_parser("algo1")
    ha.add_argument("--params", required=True)
    ha.add_argument("--seed", type=int, required=True)
    ha.add_argument("--budget", type=_budget, default=10**6)

    hh = sub.add_parser("hash", help="the collision-resistant hash family")
    hhsub = hh.add_subparsers(dest="verb", required=True)
    hk = hhsub.add_parser("keygen")
    hk.add_argument("--params", required=True)
    hk.add_argument("--seed", type=int, required=True)
    hk.add_argument("-o", "--out", default=None)
    hk.add_argument("--strict", action="store_true")
    hd = hhsub.add_parser("digest")
    hd.add_argument("--key", required=True)
    hd.add_argument("--in", required=True, dest="infile")
    hc = hhsub.add_parser("collide")
    hc.add_argument("--key", required=True)
    hc.add_argument("--budget", type=_budget, default=10**6)
    return top


def _load_ideal(path, order_text):
    ideal = jsonio.ideal_from_obj(jsonio.load_json(path))
    order = jsonio.order_from_str(order_text)
    return ideal, order


def _load_a_gens(path, nvars, modulus):
    obj = jsonio.load_json(path)
    if isinstance(obj, dict):
        obj = obj.get("generators", obj)
    if not isinstance(obj, list):
        raise ParseError("expected a list of polynomials for --A")
    return [jsonio.poly_from_obj(g, nvars, modulus) for g in obj]


def _cmd_groebner(args):
    ideal, order = _load_ideal(args.ideal, args.order)
    gb = buchberger(ideal, order, pair_budget=args.budget)
    if args.short:
        gb = short_reduce(gb)
    return {
        "order": jsonio.order_to_str(order),
        "elements": [format_polynomial(g) for g in gb.elements],
        "monic": gb.is_monic,
    }


def _cmd_quotient(args):
    ideal, order = _load_ideal(args.ideal, args.order)
    q = build_quotient(ideal, order)
    if args.verb == "info":
        return {
            "N": jsonio.int_str(q.N),
            "free": q.free,
            "basis": [format_monomial(e, q.nvars) for e in q.basis],
            "monic": q.gb.is_monic,
        }
    f = parse_polynomial(args.poly, ideal.nvars, ideal.modulus)
    return {"vector": [jsonio.int_str(x) for x in coordinates(f, q)]}


def _cmd_lattice(args):
    if args.verb == "extract":
        ideal, order = _load_ideal(args.ideal, args.order)
        q = build_quotient(ideal, order)
        gens = _load_a_gens(args.a_gens, ideal.nvars, ideal.modulus)
        lat = ideal_to_lattice(q, gens)
        return {"hnf": jsonio.matrix_to_obj(lat.hnf), "rank": jsonio.int_str(lat.rank)}
    rows = jsonio.matrix_from_obj(jsonio.load_json(args.lattice))
    lat = IntegerLattice(rows)
    report = minima_bruteforce(
        lat, args.k, box=args.box, budget=args.budget, threads=args.threads
    )
    return {
        "lambdas": [jsonio.int_str(v) for v in report.lambdas],
        "witnesses": jsonio.matrix_to_obj(report.witnesses),
        "search_bound": jsonio.int_str(report.search_bound),
    }


def _cmd_cyclic(args):
    if args.verb == "check":
        rows = jsonio.matrix_from_obj(jsonio.load_json(args.lattice))
        size = 1
        for r in args.shape:
            size *= r
        lat = IntegerLattice(rows) if rows else IntegerLattice([], ambient_dim=size)
        return {"cyclic": is_multivariate_cyclic(lat, args.shape)}
    obj = jsonio.load_json(args.tensor)
    try:
        shape = tuple(int(x) for x in obj["shape"])
        data = tuple(int(x) for x in obj["data"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError("malformed tensor object: %s" % exc) from exc
    out = cyclic_shift(Tensor(shape=shape, data=data), args.axis)
    return {
        "shape": list(out.shape),
        "data": [jsonio.int_str(x) for x in out.data],
    }


def _cmd_hardness(args):
    if args.verb == "expansion":
        ideal, order = _load_ideal(args.ideal, args.order)
        q = build_quotient(ideal, order)
        report = expansion_factor(
            q,
            args.k,
            samples=args.samples,
            rng_seed=args.seed,
            coeff_bound=args.coeff_bound,
        )
        return {
            "k": list(report.k_tuple),
            "estimate_num": jsonio.int_str(report.estimate.numerator),
            "estimate_den": jsonio.int_str(report.estimate.denominator),
            "estimate": jsonio.real_str(report.estimate),
            "witness": format_polynomial(report.witness),
            "theorem_bound": jsonio.int_str(report.theorem_bound),
            "k_measured": jsonio.int_str(report.k_measured),
            "samples": jsonio.int_str(report.samples),
            "exhaustive": report.exhaustive,
        }
    if args.verb == "spp":
        ideal, order = _load_ideal(args.ideal, args.order)
        q = build_quotient(ideal, order)
        gens = _load_a_gens(args.a_gens, ideal.nvars, ideal.modulus)
        g = spp_bruteforce(q, gens, gamma=args.gamma, box=args.box, budget=args.budget)
        return {"element": format_polynomial(g), "norm": jsonio.int_str(norm_mod(g, q))}
    if args.verb == "maxsub":
        ctx = variety_cyclotomic(args.r)
        f = parse_polynomial(args.poly, len(args.r))
        return {
            "maxsub": jsonio.real_str(max_substitution(f, ctx)),
            "maxcoeff": jsonio.int_str(max_coefficient(f, ctx)),
            "N": jsonio.int_str(ctx.N),
            "t": jsonio.real_str(ctx.t),
        }
    return _cmd_algo1(args)


def _cmd_algo1(args):
    obj = jsonio.load_json(args.params)
    try:
        ideal = jsonio.ideal_from_obj(obj["ideal"])
        order = jsonio.order_from_str(obj.get("order", "lex"))
        p = int(obj["p"])
        d = int(obj["d"])
        m = int(obj["m"])
        eta = float(obj["eta"])
        g_obj = obj["g"]
        a_objs = obj["A"]
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError("malformed algo1 parameter object: %s" % exc) from exc
    q = build_quotient(ideal, order)
    gens = [jsonio.poly_from_obj(o, ideal.nvars, ideal.modulus) for o in a_objs]
    g = jsonio.poly_from_obj(g_obj, ideal.nvars, ideal.modulus)
    from .hashing import HashKey, HashParams

    params = HashParams(p=p, ideal=ideal, order=order, d=d, m=m, eta=eta)
    key = HashKey(params=params, a=())
    oracle_fn = collision_oracle(key, budget=args.budget)
    h = incspp_via_collisions(q, gens, g, oracle_fn, args.seed, p, d, m, eta)
    return {
        "h": format_polynomial(h),
        "h_norm": jsonio.int_str(norm_mod(h, q)),
        "g_norm": jsonio.int_str(norm_mod(g, q)),
        "member": True,
        "gaussian_width": jsonio.real_str(gaussian_width(g, q.N, d, m, eta)),
    }


def _cmd_hash(args):
    if args.verb == "keygen":
        params = jsonio.params_from_obj(jsonio.load_json(args.params))
        validate(params, strict=args.strict)
        key = keygen(params, args.seed)
        obj = jsonio.key_to_obj(key)
        if args.out:
            with open(args.out, "w") as fh:
                fh.write(jsonio.dumps(obj))
                fh.write("\n")
        return obj
    key = jsonio.key_from_obj(jsonio.load_json(args.key))
    if args.verb == "digest":
        with open(args.infile, "rb") as fh:
            data = fh.read()
        q = key.ring()
        tup = encode_bytes(data, key.params, q)
        out = digest(key, tup)
        return {
            "digest": format_polynomial(out),
            "vector": [jsonio.int_str(x) for x in coordinates(out, q)],
        }
    alpha, beta = find_collision_bruteforce(key, budget=args.budget)
    return {
        "alpha": [format_polynomial(f) for f in alpha],
        "beta": [format_polynomial(f) for f in beta],
        "valid": verify_collision(key, alpha, beta),
    }


_HANDLERS = {
    "groebner": _cmd_groebner,
    "quotient": _cmd_quotient,
    "lattice": _cmd_lattice,
    "cyclic": _cmd_cyclic,
    "hardness": _cmd_hardness,
    "hash": _cmd_hash,
}


def main(argv=None):
    argv = list(sys.argv[1:] if argv is None else argv)
    # bare `quotient --ideal ...` means `quotient info`
    if argv and argv[0] == "quotient" and (len(argv) == 1 or argv[1].startswith("-")):
        if "--help" not in argv and "-h" not in argv:
            argv.insert(1, "info")
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _Usage as exc:
        print("usage error: %s" % exc, file=sys.stderr)
        return 1
    try:
        result = _HANDLERS[args.command](args)
    except ResourceError as exc:
        print("resource error: %s" % exc, file=sys.stderr)
        return 3
    except (DomainError, ParseError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except IdealLatError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    print(jsonio.dumps(result))
    return 0


if __name__ == "__main__":
    sys.exit(main())
