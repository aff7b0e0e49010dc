"""Command line front end.

Exit codes: 0 success / all checks pass, 1 a verification failed, 2 usage error.
"""
import argparse
import json
import sys
from fractions import Fraction

import numpy as np

from . import bundles, exact, strata, verify


class UsageError(Exception):
    pass


def _slope(text):
    try:
        return exact.parse_slope(text)
    except (ValueError, ZeroDivisionError) as e:
        raise UsageError(f"bad slope {text!r}: {e}")


def _type(text):
    """Parse 'deg,rank' or 'deg,rank:x,y' into an IndecType."""
    if text is None:
        raise UsageError("missing bundle type argument (--a/--b)")
    try:
        head, _, pt = text.partition(":")
        n, k = (int(t) for t in head.split(","))
        if pt:
            x, y = (Fraction(t) for t in pt.split(","))
            return bundles.IndecType(n, k, bundles.CurvePoint(x, y))
        return bundles.IndecType(n, k)
    except (ValueError, TypeError) as e:
        raise UsageError(f"bad bundle type {text!r}: {e}")


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True)


def cmd_cfrac(args):
    s = _slope(args.slope)
    try:
        terms = exact.to_cfrac(s)
    except ValueError as e:
        raise UsageError(str(e))
    return _dump({"terms": terms}) + "\n", 0


def cmd_strata(args):
    if args.pair:
        a, b = (_slope(t) for t in args.pair)
        root = strata.SlopeSeq([a, b])
    else:
        root = strata.SlopeSeq(_slope(t) for t in args.seq.split(","))
    P = strata.reachable_poset(root)
    if args.format == "dot":
        return strata.to_dot(P), 0
    return P.to_json() + "\n", 0


def cmd_enumerate(args):
    try:
        seqs = strata.admissible_sequences(args.degree, args.rank)
    except ValueError as e:
        raise UsageError(str(e))
    ordered = sorted(seqs, key=strata.seq_key)
    return _dump({"degree": args.degree, "rank": args.rank,
                  "sequences": [s.to_json() for s in ordered]}) + "\n", 0


def cmd_bundle(args):
    op = args.op
    try:
        if op == "hom":
            val = {"hom": bundles.hom_dim(_type(args.a), _type(args.b))}
        elif op == "ext":
            val = {"ext": bundles.ext_dim(args.i, _type(args.a), _type(args.b)), "i": args.i}
        elif op == "dual":
            val = bundles.dual(_type(args.a)).to_json()
        elif op == "fm":
            val = bundles.fourier_mukai(_type(args.a)).to_json()
        elif op == "stable":
            if not args.sum:
                raise UsageError("stable needs --sum TYPE [TYPE ...]")
            B = bundles.BundleSum(_type(t) for t in args.sum)
            val = {"sum": B.to_json(), "semistable": bundles.is_semistable(B),
                   "stable": bundles.is_stable(B)}
        else:
            raise UsageError(f"unknown bundle op {op}")
    except bundles.UncoveredCase as e:
        raise UsageError(str(e))
    except ValueError as e:
        raise UsageError(str(e))
    return _dump(val) + "\n", 0


def cmd_verify(args):
    rng = np.random.default_rng(args.seed)
    om = args.omega
    chk = args.check
    n, k = args.n, args.k
    if chk == "flatness":
        recs = verify.run_flatness(n, k, rng, om)
    elif chk == "heisenberg":
        recs = verify.run_heisenberg(n, k, rng, om)
    elif chk == "functional":
        recs = verify.run_functional(n, rng, om, args.samples)
    elif chk == "center":
        recs = verify.run_center(n, rng, om)
    elif chk == "t3":
        recs = verify.run_t3(rng, om)
    elif chk == "poisson":
        recs = verify.run_poisson(n, k, rng, om, h=args.h)
    elif chk == "shuffle-assoc":
        recs = verify.run_shuffle_assoc(n, rng, om, args.samples)
    elif chk == "serre-zero":
        recs = verify.run_serre_zero(rng)
    else:
        raise UsageError(f"unknown check {chk}")
    recs = sorted(recs, key=lambda r: (r["case"], r["check"]))
    doc = {"check": chk, "seed": args.seed, "omega": [om.real, om.imag], "results": recs}
    code = 0 if all(r["pass"] for r in recs) else 1
    return json.dumps(doc, sort_keys=True, indent=1) + "\n", code


def _complex(text):
    try:
        return complex(text.replace("i", "j"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad complex number {text!r}")


def build_parser():
    ap = argparse.ArgumentParser(prog="ellalg", description=__doc__)
    ap.add_argument("-o", "--output", help="write output here instead of stdout")
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("cfrac", help="negative continued fraction of a slope > 1")
    p.add_argument("slope")
    p.set_defaults(func=cmd_cfrac)

    p = sub.add_parser("strata", help="degeneration poset from a root sequence")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--pair", nargs=2, metavar="S")
    g.add_argument("--seq", metavar="S,S,...")
    p.add_argument("--format", choices=["dot", "json"], default="json")
    p.set_defaults(func=cmd_strata)

    p = sub.add_parser("enumerate", help="sequences below {0, n/k} via the inequality system")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--rank", type=int, required=True)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("bundle", help="discrete bundle calculus")
    p.add_argument("op", choices=["hom", "ext", "dual", "fm", "stable"])
    p.add_argument("--a", help="type 'deg,rank[:x,y]'")
    p.add_argument("--b", help="type 'deg,rank[:x,y]'")
    p.add_argument("--i", type=int, default=1, choices=[0, 1])
    p.add_argument("--sum", nargs="+", metavar="TYPE")
    p.set_defaults(func=cmd_bundle)

    p = sub.add_parser("verify", help="numerical checks")
    p.add_argument("check", choices=["flatness", "heisenberg", "functional", "center", "t3",
                                      "poisson", "shuffle-assoc", "serre-zero"])
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--omega", type=_complex, default=1j)
    p.add_argument("--h", type=float, default=1e-3)
    p.add_argument("--samples", type=int, default=20)
    p.set_defaults(func=cmd_verify)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return int(e.code) if e.code is not None else 0
    if getattr(args, "omega", 1j).imag <= 0:
        print("error: omega needs positive imaginary part", file=sys.stderr)
        return 2
    try:
        text, code = args.func(args)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
