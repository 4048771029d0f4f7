"""Command-line drivers for the verification sweeps and table reproduction.

Exit codes: 0 when every check passes, 1 on a verification failure, 2 on a
usage or input error.  Reports are deterministic for fixed inputs and flags;
JSON carries every rational as a string.
"""

from __future__ import annotations

import argparse
import json
import sys

from .complexes import (
    ComplexFormatError,
    check_whitney_conditions,
    cup,
    global_cochain_records,
    load_complex,
    load_global_cochain,
)
from .contraction import check_contraction
from .transfer import (
    SimplexContraction,
    check_a_infinity,
    check_c_infinity,
    check_morphism,
    check_unital,
    interval_product_table,
    p_polynomial_sequence,
)
from .trees import enumerate_trees, tree_to_text
from .rationals import rational_str

PASS = 0
FAIL = 1
USAGE = 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="simplicial-transfer",
        description="exact verification of the transferred cochain products",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("contraction", help="run the contraction identity battery")
    p.add_argument("--dim", type=int, default=2)
    p.add_argument("--max-poly-degree", type=int, default=4)
    p.add_argument("--format", choices=("json", "text"), default="text")

    p = sub.add_parser("trees", help="enumerate planar trees")
    p.add_argument("--leaves", type=int, required=True)
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--format", choices=("json", "text"), default="text")

    p = sub.add_parser("interval", help="products of t and dt on the interval")
    p.add_argument("--max-arity", type=int, default=4)
    p.add_argument("--format", choices=("json", "text"), default="text")

    p = sub.add_parser("verify", help="structure, morphism, shuffle, unit batteries")
    p.add_argument("--dim", type=int, default=2)
    p.add_argument("--max-arity", type=int, default=4)
    p.add_argument("--break-signs", action="store_true", help="drop the slotwise signs to demonstrate a failing battery")
    p.add_argument("--format", choices=("json", "text"), default="text")

    p = sub.add_parser("complex", help="operations on a simplicial complex file")
    p.add_argument("--file", required=True)
    p.add_argument("--format", choices=("json", "text"), default="text")
    op = p.add_subparsers(dest="operation", required=True)
    cup_p = op.add_parser("cup", help="product of two cochain files")
    cup_p.add_argument("--a", required=True)
    cup_p.add_argument("--b", required=True)
    op.add_parser("whitney-check", help="product condition battery")

    return parser


def _emit(report, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(report.to_json_dict(), indent=2, sort_keys=True))
    else:
        print(report.to_text())


def _read(path: str) -> str:
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def cmd_contraction(args, parser) -> int:
    if args.dim < 0 or args.max_poly_degree < 1:
        parser.error("need --dim >= 0 and --max-poly-degree >= 1")
    report = check_contraction(args.dim, args.max_poly_degree)
    _emit(report, args.format)
    return PASS if report.all_passed else FAIL


def cmd_trees(args, parser) -> int:
    if args.leaves < 1:
        parser.error("need --leaves >= 1")
    trees = enumerate_trees(args.leaves)
    if args.count_only:
        print(len(trees))
        return PASS
    encodings = [tree_to_text(t) for t in trees]
    if args.format == "json":
        print(json.dumps({"leaves": args.leaves, "count": len(trees), "trees": encodings}, indent=2))
    else:
        for line in encodings:
            print(line)
    return PASS


def cmd_interval(args, parser) -> int:
    if args.max_arity < 2:
        parser.error("need --max-arity >= 2")
    table = interval_product_table(args.max_arity)
    polys = p_polynomial_sequence(max(2, args.max_arity - 1))
    ok = (
        table.all_passed
        and polys.matches_closed_form()
        and polys.integral_identities()
    )
    if args.format == "json":
        payload = table.to_json_dict()
        payload["recursion_polynomials"] = [repr(p) for p in polys.polys]
        payload["recursion_matches_closed_form"] = polys.matches_closed_form()
        payload["signed_integrals"] = [rational_str(b) for b in polys.integrals]
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(table.to_text())
        print()
        print("recursion polynomials match the Bernoulli closed form:", polys.matches_closed_form())
        print("signed integrals:", ", ".join(rational_str(b) for b in polys.integrals))
    return PASS if ok else FAIL


def cmd_verify(args, parser) -> int:
    if args.dim < 0 or args.max_arity < 1:
        parser.error("need --dim >= 0 and --max-arity >= 1")
    bundle = SimplexContraction(args.dim, koszul_signs=not args.break_signs)
    reports = [
        check_a_infinity(bundle, args.max_arity),
        check_morphism(bundle, args.max_arity),
        check_c_infinity(bundle, args.max_arity),
        check_unital(bundle, args.max_arity),
    ]
    ok = all(r.all_passed for r in reports)
    if args.format == "json":
        print(
            json.dumps(
                {"all_passed": ok, "reports": [r.to_json_dict() for r in reports]},
                indent=2,
                sort_keys=True,
            )
        )
    else:
        for r in reports:
            print(r.to_text())
            print()
        print("overall:", "pass" if ok else "FAIL")
    return PASS if ok else FAIL


def cmd_complex(args, parser) -> int:
    try:
        complex_ = load_complex(_read(args.file))
    except OSError as exc:
        print(f"cannot read complex file: {exc}", file=sys.stderr)
        return USAGE
    except ComplexFormatError as exc:
        print(f"bad complex file: {exc}", file=sys.stderr)
        return USAGE

    if args.operation == "cup":
        try:
            a = load_global_cochain(_read(args.a), complex_)
            b = load_global_cochain(_read(args.b), complex_)
        except OSError as exc:
            print(f"cannot read cochain file: {exc}", file=sys.stderr)
            return USAGE
        except (ComplexFormatError, ValueError) as exc:
            print(f"bad cochain file: {exc}", file=sys.stderr)
            return USAGE
        result = cup(a, b)
        if args.format == "json":
            print(json.dumps(global_cochain_records(result), indent=2))
        else:
            for entry in global_cochain_records(result)["entries"]:
                print(f"simplex={entry['simplex']} coeff={entry['coeff']}")
            if not result:
                print("0")
        return PASS

    report = check_whitney_conditions(complex_)
    _emit(report, args.format)
    return PASS if report.all_passed else FAIL


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "contraction": cmd_contraction,
        "trees": cmd_trees,
        "interval": cmd_interval,
        "verify": cmd_verify,
        "complex": cmd_complex,
    }
    return handlers[args.command](args, parser)


if __name__ == "__main__":
    raise SystemExit(main())
