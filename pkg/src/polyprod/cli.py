"""Command-line front end.

Exit codes: 0 success, 1 polytope invalid, 2 parse error, 3 formula method
requested on a non-family expression, 4 budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import groups, poset
from .autom import aut_order, closure, described_generators
from .errors import (
    BudgetExceeded,
    ClosureBudgetExceeded,
    ParseError,
    SearchBudgetExceeded,
)
from .expr import eval_expr, expr_to_family, parse_expr
from .family import aut_descriptor, enumerate_family, node_to_json
from .structure import prism_decompose, pyramid_decompose
from .verify import verify_polytope

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_PARSE = 2
EXIT_NOT_FAMILY = 3
EXIT_BUDGET = 4


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polyprod",
        description="Build abstract polytopes from construction expressions, "
        "verify the polytope axioms and compute automorphism groups.",
    )
    parser.add_argument("--max-elements", type=int, default=1000)
    parser.add_argument("--max-closure", type=int, default=1_000_000)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="emit the face lattice")
    p.add_argument("expr")
    p.add_argument("--out", choices=["json", "dot"], default="json")
    p.add_argument("-o", "--output", help="output file (default stdout)")

    p = sub.add_parser("verify", help="run the axiom checker")
    p.add_argument("expr", nargs="?")
    p.add_argument("--json", dest="json_file", help="read the poset from a JSON file")

    p = sub.add_parser("aut", help="compute the automorphism group")
    p.add_argument("expr")
    p.add_argument("--method", choices=["formula", "brute", "generators"])

    p = sub.add_parser("decompose", help="factor off a pyramid apex or prism edge")
    p.add_argument("expr")
    p.add_argument("--as", dest="shape", choices=["pyramid", "prism"], required=True)

    p = sub.add_parser("family", help="list family nodes at a given depth")
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--json", action="store_true")
    return parser


def _cmd_build(args) -> int:
    P = eval_expr(parse_expr(args.expr), max_elements=args.max_elements)
    if args.out == "json":
        text = json.dumps(poset.to_json(P), indent=2)
    else:
        text = poset.to_dot(P)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return EXIT_OK


def _cmd_verify(args) -> int:
    if args.json_file:
        with open(args.json_file) as fh:
            P = poset.from_json(json.load(fh), check=False)
    elif args.expr:
        P = eval_expr(parse_expr(args.expr), max_elements=args.max_elements, check=False)
    else:
        print("verify needs an expression or --json FILE", file=sys.stderr)
        return EXIT_PARSE
    report = verify_polytope(P)
    print(json.dumps(report.to_json(), indent=2))
    return EXIT_OK if report.is_polytope else EXIT_INVALID


def _cmd_aut(args) -> int:
    ast = parse_expr(args.expr)
    node = expr_to_family(ast, max_elements=args.max_elements)
    method = args.method
    if method is None:
        method = "formula" if node is not None else "brute"
        if node is None:
            print(
                "note: expression is not family-shaped, falling back to brute force",
                file=sys.stderr,
            )
    if method in ("formula", "generators") and node is None:
        print(
            f"method {method!r} needs a family-shaped expression "
            "(I followed by *pt and xI steps)",
            file=sys.stderr,
        )
        return EXIT_NOT_FAMILY
    if method == "formula":
        descriptor = aut_descriptor(node)
        print(f"descriptor: {groups.render(descriptor)}")
        print(f"order: {groups.order(descriptor)}")
    elif method == "generators":
        gens = described_generators(node)
        print(f"generators: {len(gens)}")
        print(f"order: {closure(gens, max_size=args.max_closure)}")
    else:
        P = eval_expr(ast, max_elements=args.max_elements)
        print(f"order: {aut_order(P, max_elements=args.max_elements)}")
    return EXIT_OK


def _cmd_decompose(args) -> int:
    P = eval_expr(parse_expr(args.expr), max_elements=args.max_elements)
    oracle = pyramid_decompose if args.shape == "pyramid" else prism_decompose
    Q = oracle(P, max_elements=args.max_elements)
    if Q is None:
        print("none")
    else:
        print(json.dumps(poset.to_json(Q), indent=2))
    return EXIT_OK


def _cmd_family(args) -> int:
    nodes = enumerate_family(args.steps, max_elements=args.max_elements)
    if args.json:
        print(json.dumps([node_to_json(n) for n in nodes], indent=2))
    else:
        for n in nodes:
            d = aut_descriptor(n)
            path = ",".join(n.path) if n.path else "(root)"
            print(
                f"path={path} k={n.k} prod={n.prod} "
                f"aut={groups.render(d)} order={groups.order(d)}"
            )
    return EXIT_OK


_COMMANDS = {
    "build": _cmd_build,
    "verify": _cmd_verify,
    "aut": _cmd_aut,
    "decompose": _cmd_decompose,
    "family": _cmd_family,
}


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (BudgetExceeded, SearchBudgetExceeded, ClosureBudgetExceeded) as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
