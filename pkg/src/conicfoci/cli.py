"""``conicfoci`` command line.

Exit codes: 0 ok, 1 not an ellipse / check failed, 2 parse error,
3 usage error, 4 file I/O failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import geometry, oracle
from .core import GeneralConic, classify, discriminants, normalize_sign
from .equation_io import format_equation, parse_equation, parse_number
from .errors import ConicError, InvalidConic, InvalidGeometry, ParseError
from .render import render_svg
from .report import build_report, format_text
from .shapes import Point

EXIT_OK = 0
EXIT_NOT_ELLIPSE = 1
EXIT_PARSE = 2
EXIT_USAGE = 3
EXIT_IO = 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _numbers(text: str, count: int, what: str) -> list[float]:
    parts = text.split(",")
    if len(parts) != count:
        raise UsageError(f"{what} needs {count} comma-separated numbers, got {len(parts)}")
    return [parse_number(p) for p in parts]


def _number(text: str) -> float:
    return parse_number(text)


def _read_conic(args) -> GeneralConic:
    if (args.equation is None) == (args.coeffs is None):
        raise UsageError("give either an equation or --coeffs A,B,C,D,E,F")
    if args.coeffs is not None:
        try:
            return GeneralConic(*_numbers(args.coeffs, 6, "--coeffs"))
        except InvalidConic as exc:
            raise ParseError(str(exc)) from None
    return parse_equation(args.equation)


def _add_input(p: argparse.ArgumentParser):
    p.add_argument("equation", nargs="?", help='equation in x and y, e.g. "x^2 + 4y^2 = 4"')
    p.add_argument("--coeffs", metavar="A,B,C,D,E,F", help="the six general-form coefficients")


def cmd_analyze(args) -> int:
    g = _read_conic(args)
    report = build_report(g, args.precision)
    if args.json:
        print(json.dumps(report, indent=2))
    else:
        print(format_text(report, args.precision))
    return EXIT_OK if classify(g).is_ellipse else EXIT_NOT_ELLIPSE


def cmd_classify(args) -> int:
    g = _read_conic(args)
    cls = classify(g)
    if args.json:
        d = discriminants(normalize_sign(g))
        print(json.dumps({
            "classification": cls.kind.value,
            "detail": cls.detail,
            "discriminants": {"Delta": d.Delta, "delta": d.delta, "r": d.r, "mu": d.mu},
        }, indent=2))
    else:
        print(f"{cls.kind.value}: {cls.detail}")
    return EXIT_OK


def cmd_synthesize(args) -> int:
    x0, y0 = _numbers(args.center, 2, "--center")
    try:
        g = geometry.synthesize(Point(x0, y0), args.semi_major, args.semi_minor, args.theta)
    except InvalidGeometry as exc:
        print(f"invalid geometry: {exc}", file=sys.stderr)
        return EXIT_USAGE
    text = format_equation(g, args.precision)
    if args.json:
        print(json.dumps({"coefficients": list(g.as_tuple()), "equation": text}, indent=2))
    else:
        print(text)
    return EXIT_OK


def cmd_check(args) -> int:
    g = _read_conic(args)
    cls = classify(g)
    if not cls.is_ellipse:
        print(f"not an ellipse ({cls.kind.value}: {cls.detail})")
        return EXIT_NOT_ELLIPSE
    closed = geometry.analyze(g)
    try:
        reference = oracle.oracle_geometry(g)
    except ConicError as exc:
        print(f"FAIL oracle: {exc}")
        return EXIT_NOT_ELLIPSE
    bad = oracle.compare_geometry(closed, reference, args.tol)
    residual = oracle.focal_sum_residual(closed, g, args.samples)
    if bad:
        print(f"FAIL closed form and eigen reduction disagree on: {', '.join(bad)}")
        return EXIT_NOT_ELLIPSE
    if residual > args.tol:
        print(f"FAIL focal-sum residual {residual:.3e} exceeds {args.tol:g}")
        return EXIT_NOT_ELLIPSE
    print(f"OK (max residual {residual:.3e})")
    return EXIT_OK


def cmd_render(args) -> int:
    g = _read_conic(args)
    cls = classify(g)
    if not cls.is_ellipse:
        print(f"not an ellipse ({cls.kind.value}: {cls.detail})", file=sys.stderr)
        return EXIT_NOT_ELLIPSE
    w, h = _numbers(args.size, 2, "--size")
    if not (w > 0 and h > 0):
        raise UsageError("--size needs positive width and height")
    if args.margin < 0:
        raise UsageError("--margin must be nonnegative")
    svg = render_svg(geometry.analyze(g), (int(w), int(h)), args.margin)
    try:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(svg)
    except OSError as exc:
        print(f"cannot write {args.output}: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="conicfoci", description="Ellipse geometry from general-form conic equations.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("analyze", help="center, axes, rotation and foci of an ellipse")
    _add_input(p)
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="JSON report")
    fmt.add_argument("--text", dest="json", action="store_false", help="text report (default)")
    p.add_argument("--precision", type=int, default=12, choices=range(1, 18), metavar="N",
                   help="significant digits, 1..17 (default 12)")
    p.set_defaults(func=cmd_analyze, json=False)

    p = sub.add_parser("classify", help="conic type from the discriminants")
    _add_input(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("synthesize", help="general-form equation from center, axes and angle")
    p.add_argument("--center", required=True, metavar="X,Y")
    p.add_argument("--semi-major", required=True, type=_number, metavar="A")
    p.add_argument("--semi-minor", required=True, type=_number, metavar="B")
    p.add_argument("--theta", type=_number, metavar="RADIANS", help="rotation angle in [0, pi); omit for a circle")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--equation", dest="json", action="store_false", help="print the equation (default)")
    fmt.add_argument("--json", action="store_true", help="print coefficients and equation as JSON")
    p.add_argument("--precision", type=int, default=17, choices=range(1, 18), metavar="N",
                   help="significant digits, 1..17 (default 17)")
    p.set_defaults(func=cmd_synthesize, json=False)

    p = sub.add_parser("check", help="compare the closed form against an eigen-based reduction")
    _add_input(p)
    p.add_argument("--samples", type=int, default=64, metavar="N")
    p.add_argument("--tol", type=float, default=1e-8, metavar="T")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("render", help="write an SVG drawing")
    _add_input(p)
    p.add_argument("-o", "--output", required=True, metavar="FILE.svg")
    p.add_argument("--size", default="800,600", metavar="W,H")
    p.add_argument("--margin", type=float, default=10.0, metavar="PCT")
    p.set_defaults(func=cmd_render)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "samples", 4) < 4:
        parser.error("--samples must be at least 4")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"conicfoci: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ParseError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
