"""Command-line entry point: ``chowbso <command> ...``.

Commands::

    verify       --n K | --upto K            run the exact checks for rank K (or 2..K)
    table        --max-n K                   the Euler coefficient d_n next to |W(D_n)|
    pushforward  --n K --poly S              torus-level flag pushforward of S
    chern        --rep std|lambda:k|dplus --n K [--in-generators]
    normal-form  --ring chow|cohomology --n K --expr S

``--format tsv|json`` applies to ``verify`` and ``table``. ``--e2-sign``
picks the sign convention for ``e^2`` and ``y^2``.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import repweights as rw
from . import ringpres as rp
from . import weylflag as wf
from .expr import ParseError
from .polyarith import parse_poly
from .verify import MAX_VERIFY_N, verify


class CliError(Exception):
    pass


def _rank(args, lo, hi, what):
    if not lo <= args.n <= hi:
        raise CliError(f"{what}: n={args.n} outside {lo}..{hi}")
    return args.n


def cmd_verify(args, out):
    if args.n is not None:
        ranks = [args.n]
    else:
        ranks = list(range(2, args.upto + 1))
    for n in ranks:
        if not 2 <= n <= MAX_VERIFY_N:
            raise CliError(f"verify: n={n} outside 2..{MAX_VERIFY_N} (D_1 is degenerate)")
    if not ranks:
        raise CliError("verify: empty rank range")
    code = 0
    if args.format == "tsv":
        print("n\tcheck\tstatus\twitness", file=out)
    for n in ranks:
        report = verify(n, args.e2_sign)
        code = max(code, report.exit_code)
        if args.format == "json":
            print(json.dumps(report.to_json(), sort_keys=False), file=out)
        else:
            for c in report.checks:
                print(f"{n}\t{c.name}\t{c.status}\t{c.witness}", file=out)
    return code


def table_rows(max_n: int) -> list[dict]:
    rows = []
    for n in range(2, max_n + 1):
        order = wf.weyl_order(n)
        rows.append(
            {
                "n": n,
                "d": rw.euler_coefficient_product(n),
                "closed": rw.euler_coefficient_closed(n),
                "weyl_order": order,
                "weyl_over_n": order // n,
            }
        )
    return rows


def cmd_table(args, out):
    if not 2 <= args.max_n <= rw.MAX_PRODUCT_N:
        raise CliError(f"table: max-n={args.max_n} outside 2..{rw.MAX_PRODUCT_N}")
    rows = table_rows(args.max_n)
    if args.format == "json":
        print(json.dumps({"rows": rows}), file=out)
    else:
        cols = ["n", "d", "closed", "weyl_order", "weyl_over_n"]
        print("\t".join(cols), file=out)
        for row in rows:
            print("\t".join(str(row[c]) for c in cols), file=out)
    return 0


def cmd_pushforward(args, out):
    n = _rank(args, 2, wf.MAX_ENUM_N, "pushforward")
    text = args.poly if args.poly is not None else args.poly_pos
    if text is None:
        raise CliError("pushforward: no polynomial given")
    f = parse_poly(text, n)
    print(wf.pushforward_flag(f, n).value, file=out)
    return 0


def _weights(rep: str, n: int) -> rw.WeightSystem:
    if rep == "std":
        return rw.weights_standard(n)
    if rep == "dplus":
        return rw.weights_dplus_extreme(n)
    if rep.startswith("lambda:"):
        try:
            k = int(rep.split(":", 1)[1])
        except ValueError:
            raise CliError(f"chern: bad exterior power in {rep!r}") from None
        return rw.weights_lambda(n, k)
    raise CliError(f"chern: unknown representation {rep!r}")


def cmd_chern(args, out):
    n = _rank(args, 1, rw.MAX_PRODUCT_N, "chern")
    c = rw.total_chern(_weights(args.rep, n))
    if args.in_generators:
        if n < 2:
            raise CliError("chern: --in-generators needs n >= 2")
        if not wf.is_invariant(c, n):
            raise CliError("chern: total Chern class is not W(D_n)-invariant")
        print(rp.express_in_generators(c, n, args.e2_sign), file=out)
    else:
        print(c, file=out)
    return 0


def cmd_normal_form(args, out):
    n = _rank(args, 2, 64, "normal-form")
    ring = rp.chow_ring(n, args.e2_sign) if args.ring == "chow" else rp.cohomology_ring(n, args.e2_sign)
    text = args.expr if args.expr is not None else args.expr_pos
    if text is None:
        raise CliError("normal-form: no expression given")
    print(ring.parse(text), file=out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--e2-sign",
        choices=rp.CONVENTIONS,
        default=argparse.SUPPRESS,
        help="sign convention for e^2 and y^2 (default: consistent)",
    )
    parser = argparse.ArgumentParser(prog="chowbso", description=__doc__.splitlines()[0], parents=[common])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", parents=[common], help="run the exact verification checks")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--n", type=int)
    group.add_argument("--upto", type=int)
    p.add_argument("--format", choices=("tsv", "json"), default="tsv")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", parents=[common], help="tabulate d_n against |W(D_n)|")
    p.add_argument("--max-n", type=int, default=10)
    p.add_argument("--format", choices=("tsv", "json"), default="tsv")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("pushforward", parents=[common], help="push a torus polynomial along the flag bundle")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--poly")
    p.add_argument("poly_pos", nargs="?", metavar="POLY")
    p.set_defaults(func=cmd_pushforward)

    p = sub.add_parser("chern", parents=[common], help="total Chern class of a representation")
    p.add_argument("--rep", required=True, help="std, lambda:k or dplus")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--in-generators", action="store_true")
    p.set_defaults(func=cmd_chern)

    p = sub.add_parser("normal-form", parents=[common], help="canonical form in a presented ring")
    p.add_argument("--ring", choices=("chow", "cohomology"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--expr")
    p.add_argument("expr_pos", nargs="?", metavar="EXPR")
    p.set_defaults(func=cmd_normal_form)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    if not hasattr(args, "e2_sign"):
        args.e2_sign = "consistent"
    try:
        return args.func(args, out)
    except (CliError, ParseError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
