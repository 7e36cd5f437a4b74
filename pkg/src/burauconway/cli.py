"""Command-line front end.

Exit codes: 0 success, 1 negative split4 verdict (or a failed verify-paper
item), 2 usage or data error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .braidword import BraidError, BraidWord, concat, mirror_star, parse_braid, power
from .burau import BurauError, alexander_of_closure
from .conway import ConwayError, conway_of_closure
from .polyring import PolyError, parse_intpoly
from .scan import ScanConfig, TheoremViolation, format_csv, format_jsonl, scan
from .splitmod4 import SplitError, split_mod4, theorem11_report
from .verify import run_verify_paper

DATA_ERRORS = (BraidError, BurauError, ConwayError, PolyError, SplitError, ValueError, ArithmeticError)


def _word(args) -> BraidWord:
    w = parse_braid(" ".join(args.word), args.strands)
    if getattr(args, "ww", False):
        w = concat(w, mirror_star(w))
    return power(w, getattr(args, "power", 1))


def _add_word_args(p: argparse.ArgumentParser, with_power: bool = True) -> None:
    p.add_argument("--strands", "-n", type=int, required=True, help="number of strands")
    p.add_argument("word", nargs="+", help='signed generator indices, e.g. "1 1 -2" (or 1 1 -2)')
    if with_power:
        p.add_argument("--power", "-k", type=int, default=1, help="close up the k-th power of the word")
        p.add_argument("--ww", action="store_true", help="use w w* in place of w before taking the power")


def cmd_alex(args) -> int:
    print(alexander_of_closure(_word(args)))
    return 0


def cmd_conway(args) -> int:
    c = conway_of_closure(_word(args))
    if args.json:
        print(json.dumps({"conway": list(c.coeffs)}))
    else:
        print(c)
    return 0


def cmd_split4(args) -> int:
    if args.braid:
        if args.strands is None:
            raise ValueError("--braid needs --strands")
        w = parse_braid(" ".join(args.input), args.strands)
        if args.ww:
            w = concat(w, mirror_star(w))
        c = conway_of_closure(power(w, args.power))
    else:
        c = parse_intpoly(" ".join(args.input))
    witness = split_mod4(c)
    report = None
    if c.is_even() and c[0] % 2 == 1:
        report = theorem11_report(c)
    out = {
        "poly": str(c),
        "splits_mod4": witness is not None,
        "witness": str(witness.f) if witness else None,
        "witness_product_mod4": str(witness.product()) if witness else None,
    }
    if report is not None:
        out["conditions"] = {
            "square_in_z4_z2": report.cond_square,
            "congruence": report.cond_congruence,
            "split": report.cond_split,
        }
    if args.json:
        print(json.dumps(out))
    else:
        print(f"C(z) = {out['poly']}")
        if witness:
            print(f"splits mod 4: yes, f = {witness.f}")
            print(f"f(z)f(-z) mod 4 = {out['witness_product_mod4']}")
        else:
            print("splits mod 4: no")
        if report is not None:
            print(f"C(z)C(iz)C(z^2) square in Z4[z^2]: {report.cond_square}")
            print(f"C(z)C(iz) = C(z^2) mod 4: {report.cond_congruence}")
            print(f"C(z) = f(z)f(-z) mod 4: {report.cond_split}")
    return 0 if witness else 1


def _length_range(text: str) -> tuple[int, int]:
    if ":" in text:
        lo, hi = text.split(":", 1)
        return int(lo), int(hi)
    return int(text), int(text)


def cmd_scan(args) -> int:
    lo, hi = _length_range(args.length)
    config = ScanConfig(
        strands=args.strands, length_min=lo, length_max=hi, power_k=args.power,
        sample_count=args.count, seed=args.seed, workers=args.workers,
    )
    extra = tuple(parse_braid(text, args.strands) for text in args.word or ())
    try:
        records = scan(config, extra)
    except TheoremViolation as exc:
        print(f"THEOREM VIOLATION: {exc}", file=sys.stderr)
        return 2
    text = format_jsonl(config, records)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            fh.write(format_csv(records))
    if args.plot:
        from .plotting import lead_histogram

        lead_histogram(records, args.plot,
                       title=f"(ww*)^{config.power_k}, {config.strands} strands, seed {config.seed}")
    return 0


def cmd_verify(args) -> int:
    results = run_verify_paper()
    for r in results:
        print(r.line())
    failed = sum(not r.passed for r in results)
    print(f"{len(results) - failed}/{len(results)} checks passed")
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="burauconway",
        description="Conway polynomials of braid closures and the mod-4 splitting test.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("alex", help="balanced Alexander polynomial of a braid closure")
    _add_word_args(p)
    p.set_defaults(func=cmd_alex)

    p = sub.add_parser("conway", help="Conway polynomial of a braid closure")
    _add_word_args(p)
    p.add_argument("--json", action="store_true", help="print the coefficient list as JSON")
    p.set_defaults(func=cmd_conway)

    p = sub.add_parser("split4", help="decide C(z) = f(z)f(-z) mod 4")
    p.add_argument("input", nargs="+", help='polynomial such as "1 + 3*z^2 + 8*z^4", or a braid word with --braid')
    p.add_argument("--braid", action="store_true", help="treat the input as a braid word")
    p.add_argument("--strands", "-n", type=int)
    p.add_argument("--power", "-k", type=int, default=1)
    p.add_argument("--ww", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_split4)

    p = sub.add_parser("scan", help="random search over (ww*)^k closures")
    p.add_argument("--strands", "-n", type=int, default=5)
    p.add_argument("--length", "-L", default="8:14", help="word length L or range LO:HI")
    p.add_argument("--power", "-k", type=int, default=2)
    p.add_argument("--count", "-c", type=int, default=100)
    p.add_argument("--seed", "-s", type=int, default=0)
    p.add_argument("--workers", "-w", type=int, default=1)
    p.add_argument("--word", action="append", help="extra word to evaluate first (repeatable)")
    p.add_argument("--output", "-o", help="write JSON lines here instead of stdout")
    p.add_argument("--csv", help="also write a CSV table")
    p.add_argument("--plot", help="also render a leading-coefficient histogram (png, pdf, svg)")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("verify-paper", help="recompute every published example")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DATA_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
