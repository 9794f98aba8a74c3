"""Command-line entry point.

Commands: branch, tau, qdim, fuse, smatrix, cc, etale, mirror, verify.
Weight literals are comma-separated components in square brackets, for
example [1,0,0,1,1,0]; partition literals use parentheses, (3,1).

Exit status: 0 on success or a fully verified sweep, 1 when a verification
finds a counterexample, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

import mpmath

from . import branching, fusion, qdim, smatrix, verify
from .partitions import Partition, ascii_diagram_pair, parse_partition
from .weights import LevelWeight, parse_weight, tau

PRECISION_ENV = "LEVELRANK_PRECISION"


def _default_precision() -> int:
    raw = os.environ.get(PRECISION_ENV)
    if raw:
        try:
            return max(32, int(raw))
        except ValueError:
            pass
    return 128


def _emit(payload: dict, args) -> None:
    text = json.dumps(payload, indent=2, sort_keys=True)
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    if getattr(args, "json", False) and not getattr(args, "out", None):
        print(text)


def _cmd_branch(args) -> int:
    table = branching.branch(args.n, args.m, args.i)
    payload = table.to_json()
    if args.json or args.out:
        _emit(payload, args)
    if args.young:
        for a, b in table.pairs:
            print(ascii_diagram_pair(a.to_partition(), b.to_partition()))
            print()
    elif not args.json:
        print(f"class {table.i} of rank {args.n} level {args.m} "
              f"restricts to {len(table)} summands:")
        for a, b in table.pairs:
            print(f"  {a} x {b}    "
                  f"({tuple(a.to_partition().parts)} x {tuple(b.to_partition().parts)})")
    return 0


def _cmd_tau(args) -> int:
    a = parse_weight(args.weight)
    if a.rank != args.n or a.level != args.m:
        raise ValueError(f"{a} is not a rank-{args.n} level-{args.m} weight")
    image = tau(a, args.i)
    if args.json or args.out:
        _emit({"input": list(a.components), "i": args.i,
               "image": list(image.components)}, args)
    if not args.json:
        print(image)
    return 0


def _cmd_qdim(args) -> int:
    if args.partition:
        lam = parse_partition(args.partition)
    else:
        if not args.weight:
            raise ValueError("give a weight literal or --partition")
        w = parse_weight(args.weight)
        if w.rank != args.n or w.level != args.m:
            raise ValueError(f"{w} is not a rank-{args.n} level-{args.m} weight")
        lam = w.to_partition()
    product = qdim.qdim_product_string(lam, args.n)
    if args.precision < 32:
        raise ValueError("precision must be at least 32 bits")
    if args.backend == "float":
        with mpmath.workprec(args.precision):
            value = qdim.qdim_partition(lam, args.n, args.m, backend="float")
            numeric = mpmath.nstr(value, 20)
        exact_json = None
    else:
        exact = qdim.qdim_partition(lam, args.n, args.m)
        numeric = mpmath.nstr(exact.embed_real(30), 20)
        exact_json = exact.to_json()
    if args.json or args.out:
        _emit({"partition": list(lam.parts), "n": args.n, "m": args.m,
               "product": product, "value": numeric, "exact": exact_json}, args)
    if not args.json:
        print(f"qdim{tuple(lam.parts)} = {product} = {numeric}")
    return 0


def _cmd_fuse(args) -> int:
    a = parse_weight(args.a)
    b = parse_weight(args.b)
    for w in (a, b):
        if w.rank != args.n or w.level != args.m:
            raise ValueError(f"{w} is not a rank-{args.n} level-{args.m} weight")
    dec = fusion.fuse(a, b)
    if args.json or args.out:
        _emit({"a": list(a.components), "b": list(b.components),
               "result": dec.to_json()}, args)
    if not args.json:
        print(dec)
    return 0


def _cmd_smatrix(args) -> int:
    data = smatrix.s_matrix(args.n, args.m, precision_bits=args.precision)
    payload = data.to_json()
    payload["unitarity_residual"] = mpmath.nstr(data.unitarity_residual(), 5)
    _emit(payload, args)
    if not args.json and not args.out:
        print(json.dumps(payload, indent=2, sort_keys=True))
    return 0


def _cmd_cc(args) -> int:
    ambient, pair = smatrix.central_charge(args.n, args.m, args.k)
    equal = ambient == pair
    if args.json or args.out:
        _emit({"n": args.n, "m": args.m, "k": args.k, "ambient": str(ambient),
               "pair": str(pair), "equal": equal}, args)
    if not args.json:
        rel = "=" if equal else "!="
        print(f"ambient {ambient} {rel} pair {pair}")
    return 0


def _cmd_etale(args) -> int:
    args.i = 0
    return _cmd_branch(args)


def _cmd_mirror(args) -> int:
    summands = [parse_weight(tok) for tok in args.weights]
    out = branching.mirror_transport(summands)
    conditions = branching.etale_necessary_conditions(out)
    if args.json or args.out:
        _emit({"input": [list(w.components) for w in summands],
               "transported": [list(w.components) for w in out],
               "conditions": conditions}, args)
    if not args.json:
        for w in out:
            print(w)
        print("necessary conditions:", conditions)
    return 0


def _cmd_verify(args) -> int:
    names = verify.default_suite_names() if args.suite == "all" else [args.suite]
    results = verify.run_suites(
        names, bound=args.bound, jobs=args.jobs, precision_bits=args.precision
    )
    failures = [r for r in results if not r.passed]
    for r in results:
        print(r.line())
    print(f"{len(results) - len(failures)}/{len(results)} checks passed")
    if args.json or args.out:
        _emit({"results": [r.__dict__ for r in results],
               "passed": not failures}, args)
    return 1 if failures else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="levelrank",
        description="Exact branching tables, affine fusion and quantum dimensions "
                    "for the rank/level duality of the special linear series.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, precision=False):
        p.add_argument("--json", action="store_true", help="emit JSON on stdout")
        p.add_argument("--out", metavar="FILE", help="write the JSON report to FILE")
        if precision:
            p.add_argument("--precision", type=int, default=_default_precision(),
                           help="binary precision in bits (default 128, env "
                                f"{PRECISION_ENV})")

    p = sub.add_parser("branch", help="branching table of one level-1 class")
    p.add_argument("n", type=int)
    p.add_argument("m", type=int)
    p.add_argument("i", type=int)
    p.add_argument("--young", action="store_true", help="render diagram pairs")
    common(p)
    p.set_defaults(func=_cmd_branch)

    p = sub.add_parser("tau", help="duality image of one weight")
    p.add_argument("n", type=int)
    p.add_argument("m", type=int)
    p.add_argument("i", type=int)
    p.add_argument("weight", help="weight literal, e.g. [4,6]")
    common(p)
    p.set_defaults(func=_cmd_tau)

    p = sub.add_parser("qdim", help="quantum dimension of a weight or partition")
    p.add_argument("n", type=int)
    p.add_argument("m", type=int)
    p.add_argument("weight", nargs="?", help="weight literal, e.g. [1,1,0]")
    p.add_argument("--partition", help="partition literal, e.g. (4,3,1)")
    p.add_argument("--backend", choices=("exact", "float"), default="exact")
    common(p, precision=True)
    p.set_defaults(func=_cmd_qdim)

    p = sub.add_parser("fuse", help="fusion product of two weights")
    p.add_argument("n", type=int)
    p.add_argument("m", type=int)
    p.add_argument("a", help="weight literal")
    p.add_argument("b", help="weight literal")
    common(p)
    p.set_defaults(func=_cmd_fuse)

    p = sub.add_parser("smatrix", help="modular S-matrix as JSON")
    p.add_argument("n", type=int)
    p.add_argument("m", type=int)
    common(p, precision=True)
    p.set_defaults(func=_cmd_smatrix)

    p = sub.add_parser("cc", help="central charges of the level-k embedding")
    p.add_argument("n", type=int)
    p.add_argument("m", type=int)
    p.add_argument("k", type=int, nargs="?", default=1)
    common(p)
    p.set_defaults(func=_cmd_cc)

    p = sub.add_parser("etale", help="the degree-zero algebra object (branch i=0)")
    p.add_argument("n", type=int)
    p.add_argument("m", type=int)
    p.add_argument("--young", action="store_true")
    common(p)
    p.set_defaults(func=_cmd_etale)

    p = sub.add_parser("mirror", help="transport algebra summands across the duality")
    p.add_argument("n", type=int)
    p.add_argument("m", type=int)
    p.add_argument("weights", nargs="+", help="weight literals, vacuum included")
    common(p)
    p.set_defaults(func=_cmd_mirror)

    p = sub.add_parser("verify", help="run a named verification suite (or 'all')")
    p.add_argument("suite", choices=sorted(verify.SUITES) + ["all"])
    p.add_argument("--bound", type=int, default=None,
                   help="sweep bound for rank and level (suite defaults otherwise)")
    p.add_argument("--jobs", type=int, default=1, help="parallel sweep degree")
    common(p, precision=True)
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, KeyError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
