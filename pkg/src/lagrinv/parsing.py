"""Text syntax for polynomial series input.

Grammar (whitespace is ignored)::

    expr     := ['+'|'-'] term (('+'|'-') term)*
    term     := rational ['*' 'z' ['^' uint]] | 'z' ['^' uint]
    rational := uint ['/' uint]
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from fractions import Fraction

from .exactnum import format_rational
from .series import Series

log = logging.getLogger(__name__)

_TOKEN_RE = re.compile(r"\s*(?:(\d+)|(.))")


class SeriesSyntaxError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        super().__init__(f"{message} at position {pos}: {text!r}")
        self.text = text
        self.pos = pos


class NegativePowerError(SeriesSyntaxError):
    pass


@dataclass(frozen=True)
class SeriesExpr:
    """Normalized sum of ``coefficient * z**power`` terms, one per power."""

    terms: tuple[tuple[Fraction, int], ...]

    def to_series(self, precision: int) -> Series:
        if precision < 0:
            raise ValueError("precision must be nonnegative")
        coeffs = [Fraction(0)] * (precision + 1)
        for c, p in self.terms:
            if p > precision:
                log.warning("dropping term of degree %d beyond precision %d", p, precision)
                continue
            coeffs[p] += c
        return Series(coeffs)


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens: list[tuple[str, str, int]] = []
        for m in _TOKEN_RE.finditer(text):
            if m.group(1) is not None:
                self.tokens.append(("int", m.group(1), m.start(1)))
            elif m.group(2) is not None:
                self.tokens.append((m.group(2), m.group(2), m.start(2)))
        self.i = 0

    def peek(self) -> str | None:
        return self.tokens[self.i][0] if self.i < len(self.tokens) else None

    def pos(self) -> int:
        return self.tokens[self.i][2] if self.i < len(self.tokens) else len(self.text)

    def error(self, message: str, cls=SeriesSyntaxError):
        raise cls(message, self.text, self.pos())

    def take(self, kind: str) -> str:
        if self.peek() != kind:
            found = "end of input" if self.peek() is None else repr(self.tokens[self.i][1])
            self.error(f"expected {kind!r}, found {found}")
        value = self.tokens[self.i][1]
        self.i += 1
        return value

    def expr(self) -> list[tuple[Fraction, int]]:
        if not self.tokens:
            self.error("empty expression")
        terms = []
        sign = 1
        if self.peek() in ("+", "-"):
            sign = -1 if self.take(self.peek()) == "-" else 1
        while True:
            c, p = self.term()
            terms.append((sign * c, p))
            op = self.peek()
            if op is None:
                return terms
            if op not in ("+", "-"):
                self.error(f"unexpected {self.tokens[self.i][1]!r}")
            self.take(op)
            sign = -1 if op == "-" else 1

    def term(self) -> tuple[Fraction, int]:
        if self.peek() == "z":
            return Fraction(1), self.power()
        if self.peek() != "int":
            self.error("expected a coefficient or 'z'")
        num = int(self.take("int"))
        den = 1
        if self.peek() == "/":
            self.take("/")
            den = int(self.take("int"))
            if den == 0:
                self.i -= 1
                self.error("zero denominator")
        c = Fraction(num, den)
        if self.peek() == "*":
            self.take("*")
            return c, self.power()
        return c, 0

    def power(self) -> int:
        self.take("z")
        if self.peek() != "^":
            return 1
        self.take("^")
        if self.peek() == "-":
            self.error("negative powers are not allowed", NegativePowerError)
        return int(self.take("int"))


def parse_expr(text: str) -> SeriesExpr:
    raw = _Parser(text).expr()
    merged: dict[int, Fraction] = {}
    for c, p in raw:
        merged[p] = merged.get(p, Fraction(0)) + c
    return SeriesExpr(tuple((c, p) for p, c in sorted(merged.items())))


def parse_series(text: str, precision: int) -> Series:
    """Parse ``text`` into a series of the given precision.

    Terms above ``precision`` are dropped with a logged warning.
    """
    return parse_expr(text).to_series(precision)


def render_series(s: Series) -> str:
    """Expression text that :func:`parse_series` reads back to ``s``."""
    parts = []
    for p, c in enumerate(s.coeffs):
        if c == 0:
            continue
        mag = format_rational(abs(c))
        if p == 0:
            body = mag
        else:
            z = "z" if p == 1 else f"z^{p}"
            body = z if mag == "1" else f"{mag}*{z}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"{'+' if c > 0 else '-'} {body}")
    return " ".join(parts) if parts else "0"
