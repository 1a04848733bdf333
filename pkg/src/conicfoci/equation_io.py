"""Text front-end: parse ``4x^2 + 2xy + 6y^2 - 6x + 10y = 1`` and format back.

Grammar::

    equation := poly "=" poly
    poly     := [sign] term { sign term }
    term     := number [["*"] var] | var
    var      := monom { ["*"] monom }
    monom    := ("x" | "y") ["^" ("1" | "2")]
    number   := decimal | decimal "/" decimal

Whitespace between tokens is ignored, ``x²`` is accepted for ``x^2`` and
decimals may carry an exponent (``1.5e-07``) so formatted output parses back.
"""

from __future__ import annotations

import re
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction

from .core import GeneralConic
from .errors import DegreeError, EmptyEquation, InvalidConic, ParseError

__all__ = ["ParsedTerm", "format_equation", "format_number", "parse_equation", "parse_number"]

_DECIMAL = re.compile(r"(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?")
_MAX_EXPONENT = 1000
_SUPERSCRIPTS = {"¹": 1, "²": 2, "³": 3}

# (x_power, y_power) -> coefficient name
_SLOTS = {(2, 0): "A", (1, 1): "B", (0, 2): "C", (1, 0): "D", (0, 1): "E", (0, 0): "F"}


@dataclass(frozen=True)
class ParsedTerm:
    coefficient: float
    x_power: int
    y_power: int

    def __post_init__(self):
        if self.x_power + self.y_power > 2:
            raise DegreeError(f"degree {self.x_power + self.y_power} term")


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    # -- lexing helpers -------------------------------------------------

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def error(self, expected: str, cls=ParseError):
        self.skip_ws()
        if self.pos < len(self.text):
            found = f"found {self.text[self.pos]!r}"
        else:
            found = "found end of input"
        raise cls(f"expected {expected}, {found}", column=self.pos + 1, text=self.text)

    # -- grammar --------------------------------------------------------

    def equation(self) -> list[ParsedTerm]:
        left = self.poly()
        if self.peek() != "=":
            self.error("sign or '='" if left else "term")
        self.pos += 1
        right = self.poly()
        if self.peek():
            self.error("sign or end of input")
        return left + [ParsedTerm(-t.coefficient, t.x_power, t.y_power) for t in right]

    def poly(self) -> list[ParsedTerm]:
        terms = []
        sign = self.sign(optional=True)
        terms.append(self.term(sign))
        while self.peek() in ("+", "-"):
            sign = self.sign(optional=False)
            terms.append(self.term(sign))
        return terms

    def sign(self, optional: bool) -> float:
        ch = self.peek()
        if ch == "+":
            self.pos += 1
            return 1.0
        if ch == "-":
            self.pos += 1
            return -1.0
        if not optional:
            self.error("'+' or '-'")
        return 1.0

    def term(self, sign: float) -> ParsedTerm:
        ch = self.peek()
        start = self.pos
        if ch in ("x", "y"):
            xp, yp = self.var(start)
            return ParsedTerm(sign, xp, yp)
        if ch.isdigit() or ch == ".":
            value = self.number()
            ch = self.peek()
            if ch == "*":
                self.pos += 1
                if self.peek() not in ("x", "y"):
                    self.error("'x' or 'y'")
                ch = "x"
            if ch in ("x", "y"):
                xp, yp = self.var(start)
                return ParsedTerm(sign * value, xp, yp)
            return ParsedTerm(sign * value, 0, 0)
        self.error("number, 'x' or 'y'")

    def number(self) -> float:
        self.skip_ws()
        start = self.pos
        value = self.decimal()
        if self.peek() == "/":
            self.pos += 1
            self.skip_ws()
            slash = self.pos
            denominator = self.decimal()
            if denominator == 0:
                raise ParseError("expected nonzero denominator", column=slash + 1, text=self.text)
            value /= denominator
        try:
            return float(value)
        except OverflowError:
            raise ParseError("expected a number within floating-point range", column=start + 1, text=self.text) from None

    def decimal(self) -> Fraction:
        self.skip_ws()
        m = _DECIMAL.match(self.text, self.pos)
        if not m:
            self.error("number")
        _, _, exponent = m.group().lower().partition("e")
        # Refuse before Fraction builds a 10**huge integer.
        if exponent and abs(int(exponent)) > _MAX_EXPONENT:
            raise ParseError("expected a decimal exponent of at most 1000 in magnitude", column=self.pos + 1, text=self.text)
        self.pos = m.end()
        return Fraction(m.group())

    def var(self, term_start: int) -> tuple[int, int]:
        powers = {"x": 0, "y": 0}
        while True:
            name, power = self.monom()
            powers[name] += power
            if powers["x"] + powers["y"] > 2:
                raise DegreeError(
                    "term of degree at most 2 (the equation must be quadratic)",
                    column=term_start + 1,
                    text=self.text,
                )
            ch = self.peek()
            if ch == "*":
                self.pos += 1
                if self.peek() not in ("x", "y"):
                    self.error("'x' or 'y'")
            elif ch not in ("x", "y"):
                return powers["x"], powers["y"]

    def monom(self) -> tuple[str, int]:
        name = self.peek()
        self.pos += 1
        if self.pos < len(self.text) and self.text[self.pos] in _SUPERSCRIPTS:
            power = _SUPERSCRIPTS[self.text[self.pos]]
            self.pos += 1
        elif self.peek() == "^":
            self.pos += 1
            self.skip_ws()
            m = re.compile(r"\d+").match(self.text, self.pos)
            if not m:
                self.error("'1' or '2'")
            power = int(m.group())
            if power == 0:
                self.error("'1' or '2'")
            self.pos = m.end()
        else:
            power = 1
        if power > 2:
            raise DegreeError(
                "exponent at most 2 (the equation must be quadratic)",
                column=self.pos,
                text=self.text,
            )
        return name, power


def parse_terms(text: str) -> list[ParsedTerm]:
    """Terms of ``left - right``, in input order, not yet collected."""
    if not text.strip():
        raise EmptyEquation("empty equation")
    return _Parser(text).equation()


def parse_equation(text: str) -> GeneralConic:
    """Parse an equation in ``x`` and ``y`` into its six coefficients.

    >>> parse_equation("x^2 + y^2 = 1")
    GeneralConic(A=1.0, B=0.0, C=1.0, D=0.0, E=0.0, F=-1.0)
    """
    sums = defaultdict(float)
    for t in parse_terms(text):
        sums[_SLOTS[(t.x_power, t.y_power)]] += t.coefficient
    try:
        return GeneralConic(*(sums[k] for k in "ABCDEF"))
    except InvalidConic as exc:
        raise DegreeError(str(exc), text=text) from None


def parse_number(text: str) -> float:
    """One number in the equation grammar (decimal or ``p/q``), optionally signed."""
    p = _Parser(text)
    sign = p.sign(optional=True)
    if not p.peek():
        p.error("number")
    value = p.number()
    if p.peek():
        p.error("end of number")
    return sign * value


def format_number(value: float, precision: int = 17) -> str:
    """Shortest decimal that reads back as ``value``, capped at ``precision`` digits."""
    if value == 0:
        return "0"
    for digits in range(1, precision + 1):
        s = f"{value:.{digits}g}"
        if float(s) == value:
            break
    mantissa, _, exponent = s.partition("e")
    if exponent:
        exp = int(exponent)
        # Stay positional for moderate magnitudes: 100 rather than 1e+02.
        if 0 <= exp < 16 or -5 < exp < 0:
            s = f"{float(s):.{max(digits - exp - 1, 0)}f}"
        else:
            s = f"{mantissa}e{exp:+03d}"
    return s


def format_equation(g: GeneralConic, precision: int = 17) -> str:
    """Canonical text ``A x^2 + B xy + C y^2 + D x + E y + F = 0``.

    Zero terms are dropped and unit coefficients left implicit. With
    ``precision=17`` the text parses back to exactly ``g``.
    """
    if not 1 <= precision <= 17:
        raise ValueError(f"precision must be in [1, 17], got {precision}")
    parts = []
    for value, var in zip(g.as_tuple(), ("x^2", "xy", "y^2", "x", "y", "")):
        if value == 0:
            continue
        mag = format_number(abs(value), precision)
        if var and mag == "1":
            mag = ""
        if parts:
            parts.append("- " if value < 0 else "+ ")
        elif value < 0:
            parts.append("-")
        parts.append(f"{mag}{var} ")
    return "".join(parts) + "= 0"
