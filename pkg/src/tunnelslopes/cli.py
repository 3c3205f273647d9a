"""Batch command line for the slope calculators.

Payload lines are stable and prompt-free: exact rational rendering, one
result per line. Errors go to stderr and exit nonzero. Arguments may be
wrapped in parentheses, so `convert "(59/35)"` works as written.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .convert import convert_range, st_convert
from .oracle import selfcheck
from .rationals import parse_rational, render
from .tunnels import (
    Target,
    TunnelKind,
    TunnelParams,
    linking_number,
    mirror,
    parse,
    serialize,
    to_export,
    validate,
)
from .twobridge import make_form, normalize_input, two_bridge_slopes


def _strip_parens(text: str) -> str:
    t = text.strip()
    while len(t) >= 2 and t.startswith("(") and t.endswith(")"):
        t = t[1:-1].strip()
    return t


def _parse_two_bridge(text: str):
    if "/" in text:
        b_text, a_text = text.split("/", 1)
        return int(b_text.strip()), int(a_text.strip())
    return int(text), 1


def _slopes_line(t: TunnelParams) -> str:
    return ", ".join([str(t.m0)] + [render(m) for m in t.slopes])


def cmd_convert(args: argparse.Namespace) -> int:
    x = parse_rational(_strip_parens(args.value))
    print(render(st_convert(x)))
    return 0


def cmd_convert_range(args: argparse.Namespace) -> int:
    for left, right in convert_range(args.p, args.q_lo, args.q_hi):
        print(f"{render(left)}, {render(right)}")
    return 0


def cmd_slopes(args: argparse.Namespace) -> int:
    b, a = _parse_two_bridge(_strip_parens(args.value))
    forms = normalize_input(b, a) if args.both else [make_form(b, a)]
    for form in forms:
        print(_slopes_line(two_bridge_slopes(form)))
    return 0


def _classification_line(t: TunnelParams) -> str:
    cls = validate(t)
    line = cls.kind.value
    if cls.kind is TunnelKind.SIMPLE_LINK and t.m0.value == Fraction(1, 2):
        line += " (Hopf link)"
    if cls.target is Target.LINK:
        line += f", linking number {linking_number(t)}"
    if t.slopes and t.slopes[-1] == 0:
        line += " (final slope 0: accepted syntactically)"
    return line


def cmd_classify(args: argparse.Namespace) -> int:
    t = parse(args.params)
    if args.json:
        print(json.dumps(to_export(t)))
        return 0
    print(_classification_line(t))
    return 0


def cmd_mirror(args: argparse.Namespace) -> int:
    t = parse(args.params)
    validate(t)
    mirrored = mirror(t)
    if args.json:
        print(json.dumps(to_export(mirrored)))
        return 0
    print(serialize(mirrored))
    return 0


def cmd_link(args: argparse.Namespace) -> int:
    t = parse(args.params)
    number = linking_number(t)
    if args.json:
        print(json.dumps(to_export(t)))
        return 0
    print(number)
    return 0


def cmd_selfcheck(args: argparse.Namespace) -> int:
    reports = selfcheck()
    for report in reports:
        print(report.summary())
    if all(r.ok for r in reports):
        print("selfcheck: ok")
        return 0
    print("selfcheck: FAIL")
    return 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tunnelslopes",
        description="Exact slope invariants of tunnel-number-one knot and link tunnels.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("convert", help="convert a slope invariant of a knot tunnel")
    p.add_argument("value", help="rational with odd numerator, e.g. 55 or (59/35)")
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("convert-range", help="convert every odd q/p in a range of q")
    p.add_argument("p", type=int)
    p.add_argument("q_lo", type=int)
    p.add_argument("q_hi", type=int)
    p.set_defaults(func=cmd_convert_range)

    p = sub.add_parser("slopes", help="cabling slopes of a 2-bridge knot tunnel")
    p.add_argument("value", help="invariant b/a with b odd and |b/a| > 1, e.g. (33/19)")
    p.add_argument(
        "--both",
        action="store_true",
        help="normalize a mod b and print the sequence for both admissible residues",
    )
    p.set_defaults(func=cmd_slopes)

    for name, func, help_text in (
        ("classify", cmd_classify, "validate and classify a cabling-parameter tuple"),
        ("mirror", cmd_mirror, "negate every slope of a tuple"),
        ("link", cmd_link, "linking number of a link tunnel tuple"),
    ):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("params", help="tuple text, e.g. '[ 1/3 ], 3, 5/3 ; 0'")
        p.add_argument("--json", action="store_true", help="emit the JSON export instead")
        p.set_defaults(func=func)

    p = sub.add_parser("selfcheck", help="run the built-in certification oracles")
    p.set_defaults(func=cmd_selfcheck)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
