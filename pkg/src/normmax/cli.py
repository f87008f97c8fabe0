"""Command-line front end. Prints one JSON report; exit 0 = ok/YES, 1 = NO, 2 = error."""
from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from fractions import Fraction

from .errors import NormmaxError
from .rational import fmt_rational, parse_rational

EXIT_YES, EXIT_NO, EXIT_ERROR = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(json.dumps({"error": message, "kind": "usage"}), file=sys.stderr)
        sys.exit(EXIT_ERROR)


def _rat(text):
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive_int(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _read(path, digests):
    with open(path, "rb") as fh:
        data = fh.read()
    digests[path] = hashlib.sha256(data).hexdigest()
    return data.decode()


def _vector(x):
    return [fmt_rational(c) for c in x]


def _load_poly(path, digests, kind=None):
    from .polytope import HPolytope, VPolytope, parse_polytope

    P = parse_polytope(_read(path, digests))
    want = {"H": HPolytope, "V": VPolytope}.get(kind)
    if want is not None and not isinstance(P, want):
        raise NormmaxError(f"{path}: expected an {kind}-polytope")
    return P


def cmd_normmax(args, digests):
    from .solvers import exact_normmax, normmax1

    P = _load_poly(args.poly, digests, "H")
    if args.method == "l1":
        if args.p != 1:
            raise NormmaxError("--method l1 answers p = 1 only")
        res = normmax1(P, cap=args.cap)
    else:
        res = exact_normmax(P, args.p, cap=args.cap)
    out = {"value": fmt_rational(res.value), "witness": _vector(res.witness), "method": res.method}
    if args.gamma is not None:
        out["gamma"] = fmt_rational(args.gamma)
        out["decision"] = res.value >= args.gamma
    return out


def cmd_approx(args, digests):
    from .ballapprox import beta_approx_normmax
    from .rational import pnorm_pow

    P = _load_poly(args.poly, digests, "H")
    res = beta_approx_normmax(P, args.p, args.beta, max_facets=args.max_facets)
    return {
        "witness": _vector(res.witness),
        "value": fmt_rational(pnorm_pow(res.witness, args.p)),
        "guarantee": fmt_rational(res.guarantee),
        "upper_bound": fmt_rational(res.upper_bound),
        "facets": res.facets,
    }


def cmd_reduce(args, digests):
    from .gadget import build_gadget, decide_clique_via_normmax, parse_dimacs
    from .polytope import write_polytope

    G = parse_dimacs(_read(args.graph, digests))
    inst = build_gadget(G, args.k, args.p)
    write_polytope(inst.polytope, args.out)
    sidecar = inst.sidecar()
    side_path = args.out + ".json"
    with open(side_path, "w") as fh:
        json.dump(sidecar, fh, indent=2)
        fh.write("\n")
    out = {"out": args.out, "sidecar": side_path, **sidecar}
    if args.decide:
        out["decision"] = decide_clique_via_normmax(inst, cap=args.cap)
    return out


def cmd_radii(args, digests):
    from .radii import INNER, radius_h, radius_v

    if args.which in INNER:
        P = _load_poly(args.poly, digests, "V")
        r = radius_v(P, args.p, args.which, cap=args.cap)
        out = {"polar_value": fmt_rational(r.v), "value": fmt_rational(r.power)}
        if args.gamma is not None:
            out["gamma"] = fmt_rational(args.gamma)
            out["decision"] = r.decide(args.gamma)
        return out
    P = _load_poly(args.poly, digests, "H")
    value = radius_h(P, args.p, args.which, cap=args.cap)
    out = {"value": fmt_rational(value)}
    if args.gamma is not None:
        out["gamma"] = fmt_rational(args.gamma)
        out["decision"] = value >= args.gamma
    return out


def cmd_parmax(args, digests):
    from .solvers import parmax

    V = _load_poly(args.vectors, digests, "V")
    res = parmax(V.points, args.mode, args.p, cap=args.cap)
    return {"value": fmt_rational(res.value), "witness": _vector(res.witness), "method": res.method}


def cmd_verify(args, digests):
    if args.what == "gadget-bounds":
        from .gadget import verify_gadget_bounds

        rep = verify_gadget_bounds(args.n, args.p, args.k)
        return {
            "n": rep.n,
            "p": rep.p,
            "k": rep.k,
            "U": fmt_rational(rep.U),
            "eps_bar": fmt_rational(rep.eps_bar),
            "checks": rep.checks,
            "decision": rep.ok,
        }
    from .ballapprox import build_ball_approx, check_outer_containment, verify_inner_containment

    if args.beta is None:
        raise NormmaxError("--what ball needs --beta")
    d = args.d if args.d is not None else args.n
    B = build_ball_approx(args.p, args.beta, d, max_facets=args.max_facets)
    inner = verify_inner_containment(B)
    outer = check_outer_containment(B)
    return {
        "d": d,
        "p": args.p,
        "beta": args.beta,
        "m": B.m,
        "facets": B.facet_count,
        "inner": inner,
        "outer": outer.ok,
        "outer_mode": outer.mode,
        "decision": inner and outer.ok,
    }


def build_parser():
    parser = _Parser(prog="normmax", description=__doc__)
    parser.add_argument("--cap", type=_positive_int, default=None, help="dimension cap for enumeration")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("normmax", help="exact max ||x||_p^p over an H-polytope")
    s.add_argument("--poly", required=True)
    s.add_argument("--p", type=_positive_int, required=True)
    s.add_argument("--gamma", type=_rat)
    s.add_argument("--method", choices=("exact", "l1"), default="exact")
    s.set_defaults(func=cmd_normmax)

    s = sub.add_parser("approx", help="beta-approximate norm maximum")
    s.add_argument("--poly", required=True)
    s.add_argument("--p", type=_positive_int, required=True)
    s.add_argument("--beta", type=_positive_int, required=True)
    s.add_argument("--max-facets", type=_positive_int)
    s.set_defaults(func=cmd_approx)

    s = sub.add_parser("reduce", help="Clique gadget from a DIMACS graph")
    s.add_argument("--graph", required=True)
    s.add_argument("--k", type=_positive_int, required=True)
    s.add_argument("--p", type=_positive_int, required=True)
    s.add_argument("--out", required=True)
    s.add_argument("--decide", action="store_true")
    s.set_defaults(func=cmd_reduce)

    s = sub.add_parser("radii", help="radii of 0-symmetric polytopes (p-th powers)")
    s.add_argument("--poly", required=True)
    s.add_argument("--p", type=_positive_int, required=True)
    s.add_argument("--which", choices=("circumradius", "diameter", "inradius", "width"), required=True)
    s.add_argument("--gamma", type=_rat)
    s.set_defaults(func=cmd_radii)

    s = sub.add_parser("parmax", help="norm maximum over a parallelotope")
    s.add_argument("--vectors", required=True, help="generators in the V file format")
    s.add_argument("--mode", choices=("01", "sym"), required=True)
    s.add_argument("--p", type=_positive_int, required=True)
    s.set_defaults(func=cmd_parmax)

    s = sub.add_parser("verify", help="gadget bound checks or ball containment")
    s.add_argument("--what", choices=("gadget-bounds", "ball"), required=True)
    s.add_argument("--n", type=_positive_int, required=True, help="polygon n, or the dimension for --what ball")
    s.add_argument("--p", type=_positive_int, required=True)
    s.add_argument("--k", type=_positive_int, default=2)
    s.add_argument("--d", type=_positive_int)
    s.add_argument("--beta", type=_positive_int)
    s.add_argument("--max-facets", type=_positive_int)
    s.set_defaults(func=cmd_verify)
    return parser


def run_cli(argv=None):
    """Returns ``(exit_code, report)``; the report is what gets printed."""
    args = build_parser().parse_args(argv)
    digests = {}
    start = time.perf_counter_ns()
    try:
        result = args.func(args, digests)
    except (NormmaxError, ValueError, OSError) as exc:
        return EXIT_ERROR, {"command": args.command, "error": str(exc), "kind": type(exc).__name__}
    report = {
        "command": args.command,
        "inputs": digests,
        **result,
        "seconds": fmt_rational(Fraction(time.perf_counter_ns() - start, 10**9)),
    }
    if result.get("decision") is False:
        return EXIT_NO, report
    return EXIT_YES, report


def main(argv=None):
    code, report = run_cli(argv)
    stream = sys.stderr if code == EXIT_ERROR else sys.stdout
    print(json.dumps(report, indent=2), file=stream)
    return code


if __name__ == "__main__":
    sys.exit(main())
