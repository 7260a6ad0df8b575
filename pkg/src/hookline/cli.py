"""Command-line entry point: ``hookline <subcommand> ...``.

Exit status: 0 success, 1 verification failure, 2 invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import harness, polynomials as poly
from .errors import HooklineError, ParseError
from .paths import parse_path
from .partitions import BoxSpec, parse_partition
from .perm_core import (
    PermClass, avoids_321, descent_profile, enumerate_class, is_involution,
    is_member, left_to_right_minima, parse_permutation,
)
from .render import RenderSpec, render
from .tableaux import parse_tableau, rs_correspondence

EXIT_OK, EXIT_FAIL, EXIT_INVALID = 0, 1, 2


def _set_arg(text: str) -> frozenset[int]:
    text = text.strip().strip("{}")
    try:
        return frozenset(int(t) for t in text.replace(",", " ").split())
    except ValueError:
        raise ParseError(f"bad index set {text!r}") from None


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False)


def cmd_stats(args) -> int:
    perm = parse_permutation(args.perm)
    prof = descent_profile(perm)
    P, Q = rs_correspondence(perm)
    info = {
        "permutation": list(perm.entries),
        "n": perm.n,
        "descent_set": sorted(prof.descent_set),
        "ascent_set": sorted(prof.ascent_set),
        "des": prof.des,
        "maj": prof.maj,
        "comaj": prof.comaj,
        "involution": is_involution(perm),
        "avoids_321": avoids_321(perm),
        "left_to_right_minima": sorted(left_to_right_minima(perm)),
        "rs_insertion": str(P),
        "rs_recording": str(Q),
        "classes": [c.value for c in PermClass if is_member(c, perm)],
    }
    if args.format == "json":
        print(_dump(info))
    else:
        for key, value in info.items():
            print(f"{key:>22}: {value}")
    return EXIT_OK


def cmd_map(args) -> int:
    trace = harness.map_chain(args.perm, args.chain.split(","))
    if args.format == "json":
        print(_dump([s.to_json() for s in trace]))
    else:
        for s in trace:
            print(f"{s.name:>8}: {s.value}    {s.statistic} = {sorted(s.stat_value)}")
    return EXIT_OK


def cmd_enumerate(args) -> int:
    cls = PermClass.parse(args.cls)
    if args.stat is None:
        members = [list(p.entries) for p in enumerate_class(cls, args.n, args.backend)]
        if args.format == "json":
            print(_dump({"class": cls.value, "n": args.n, "count": len(members), "members": members}))
        elif args.format == "csv":
            print("permutation")
            for m in members:
                print(" ".join(map(str, m)))
        else:
            for m in members:
                print(" ".join(map(str, m)))
            print(f"# {len(members)} members of {cls.value}, n={args.n}")
        return EXIT_OK
    table = harness.distribution(cls, args.n, args.stat, args.backend)
    if args.format == "json":
        print(_dump({"class": cls.value, "n": args.n, "statistic": args.stat, **table.to_json()}))
    elif args.format == "csv":
        sys.stdout.write(table.to_csv())
    else:
        print(table.format_text())
    return EXIT_OK


POLY_IDS = (
    "qbinom", "catalan", "des-count", "joint", "maj", "fib-maj", "fib-des",
    "double213-claim", "double213-enum", "superset-count", "exact-count",
    "a-poly", "descent-set", "specialize-a", "limit-joint", "limit-hd",
)


def _need(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise ParseError(f"--id {args.id} needs " + ", ".join(f"--{m}" for m in missing))


def _poly_value(args):
    pid = args.id
    if pid == "qbinom":
        _need(args, "n", "j")
        return poly.q_binomial(args.n, args.j)
    if pid == "catalan":
        _need(args, "n")
        return poly.catalan(args.n)
    if pid == "des-count":
        _need(args, "n", "k")
        return poly.des_count_formula(args.n, args.k)
    if pid == "joint":
        _need(args, "n", "k")
        return poly.joint_des_maj(args.n, args.k)
    if pid == "maj":
        _need(args, "n")
        return poly.maj_poly(args.cls or "i321", args.n, args.stat or "maj")
    if pid == "fib-maj":
        _need(args, "n")
        return poly.fibonacci_maj(args.n)
    if pid == "fib-des":
        _need(args, "n")
        return poly.fibonacci_des_counts(args.n)
    if pid == "double213-claim":
        _need(args, "n")
        return poly.double213_claim(args.n)
    if pid == "double213-enum":
        _need(args, "n")
        return poly.double213_enumerated(args.n)
    if pid == "superset-count":
        _need(args, "n", "set")
        return poly.superset_count(args.n, _set_arg(args.set))
    if pid == "exact-count":
        _need(args, "n", "set")
        return poly.exact_descent_count(args.n, _set_arg(args.set))
    if pid == "a-poly":
        _need(args, "n")
        return poly.a_poly(args.n, args.m if args.m is not None else args.n, args.method)
    if pid == "descent-set":
        _need(args, "n")
        return poly.descent_set_poly(args.cls or "s321", args.n)
    if pid == "specialize-a":
        _need(args, "n")
        return poly.specialize(poly.a_poly(args.n, args.n, args.method))
    if pid == "limit-joint":
        _need(args, "k", "order")
        return poly.limit_series("joint_k", args.k, args.order)
    if pid == "limit-hd":
        _need(args, "k", "order")
        return poly.limit_series("hd_multivariate", args.k, args.order)
    raise ParseError(f"unknown polynomial id {pid!r}")


def cmd_poly(args) -> int:
    value = _poly_value(args)
    if args.format == "json":
        if isinstance(value, (poly.QPoly, poly.SubsetPoly)):
            print(_dump(value.to_json()))
        else:
            print(_dump(value))
    else:
        print(value)
    return EXIT_OK


def cmd_verify(args) -> int:
    report = harness.verify(args.suite, args.max_n, args.jobs)
    if args.format == "json":
        print(_dump(report.to_json()))
    else:
        print(report.format_text(verbose=args.verbose))
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_render(args) -> int:
    spec = RenderSpec(args.object, args.format, not args.no_peaks, not args.no_hooks, not args.no_outline)
    box = None
    if args.object == "path":
        obj = parse_path(args.value)
    elif args.object == "partition":
        obj = parse_partition(args.value)
        box = BoxSpec(args.box) if args.box is not None else None
    elif args.object == "tableau":
        obj = parse_tableau(args.value)
    else:
        obj = harness.map_chain(args.value, args.chain.split(","))
    sys.stdout.write(render(spec, obj, box).rstrip("\n") + "\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hookline",
        description="Descent statistics on 321-avoiding involutions, lattice paths and hook decompositions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("stats", help="descent statistics and class memberships of a permutation")
    p.add_argument("perm", help='one-line notation, e.g. "3 4 1 2" or 3,4,1,2')
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("map", help="push a permutation through a chain of bijections")
    p.add_argument("perm")
    p.add_argument("--chain", default="rho,xi,psi-inv", help="comma list of: " + ", ".join(harness.CHAIN_STAGES))
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_map)

    p = sub.add_parser("enumerate", help="list a permutation class or tabulate a statistic over it")
    p.add_argument("--class", dest="cls", required=True, help=", ".join(c.value for c in PermClass))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--stat", choices=harness.STATISTICS)
    p.add_argument("--backend", choices=("structural", "brute"), default="structural")
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("poly", help="evaluate a closed form, recurrence or enumerated polynomial")
    p.add_argument("--id", required=True, choices=POLY_IDS)
    for name in ("n", "j", "k", "m", "order"):
        p.add_argument(f"--{name}", type=int)
    p.add_argument("--set", help='index set such as "1,3"')
    p.add_argument("--class", dest="cls")
    p.add_argument("--stat", choices=("maj", "comaj"))
    p.add_argument("--method", choices=("recurrence", "direct"), default="recurrence")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--suite", default="all", help="all, " + ", ".join(harness.SUITES))
    p.add_argument("--max-n", dest="max_n", type=int, default=None)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--verbose", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("render", help="draw a path, partition, tableau or bijection trace")
    p.add_argument("--object", required=True, choices=("path", "partition", "tableau", "permutation-chain"))
    p.add_argument("value", help="path word, partition parts, tableau rows or permutation")
    p.add_argument("--box", type=int, help="box index n for partitions (B_n)")
    p.add_argument("--chain", default="rho,xi,psi-inv")
    p.add_argument("--format", choices=("ascii", "svg"), default="ascii")
    p.add_argument("--no-peaks", action="store_true")
    p.add_argument("--no-hooks", action="store_true")
    p.add_argument("--no-outline", action="store_true")
    p.set_defaults(func=cmd_render)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except HooklineError as exc:
        print(f"hookline: error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
