"""A small expression reader for printed formulas.

Accepts integers, identifiers, + - * / ^, parentheses and implicit
multiplication (``3 c2^2 u``, ``c2(87 c4^2 - 43 c8)``).  Nothing is passed
to ``eval``; identifiers are resolved through a caller-supplied mapping.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Callable, Mapping


class ParseError(ValueError):
    pass


def tokenize(text: str) -> list[tuple[str, str]]:
    out = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = re.match(r"\d+", text[pos:])
        if m:
            out.append(("num", m.group()))
            pos += m.end()
            continue
        m = re.match(r"c\d+|[A-Za-z_][A-Za-z_0-9]*", text[pos:])
        if m:
            # "c4c6" reads as two identifiers because c\d+ is tried first
            out.append(("id", m.group()))
            pos += m.end()
            continue
        ch = text[pos]
        if ch not in "+-*/^()":
            raise ParseError(f"unexpected character {ch!r} at {pos}")
        out.append(("op", ch))
        pos += 1
    return out


class _Reader:
    def __init__(self, tokens, lookup: Callable[[str], object]):
        self.toks = tokens
        self.i = 0
        self.lookup = lookup

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else ("end", "")

    def take(self, kind=None, value=None):
        tok = self.peek()
        if kind and tok[0] != kind or value and tok[1] != value:
            raise ParseError(f"expected {value or kind}, got {tok[1]!r}")
        self.i += 1
        return tok

    def expr(self):
        val = self.term()
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            rhs = self.term()
            val = val + rhs if op == "+" else val - rhs
        return val

    def _starts_factor(self):
        kind, v = self.peek()
        return kind in ("num", "id") or (kind, v) == ("op", "(")

    def term(self):
        val = self.unary()
        while True:
            kind, v = self.peek()
            if (kind, v) == ("op", "*"):
                self.take()
                val = val * self.unary()
            elif (kind, v) == ("op", "/"):
                self.take()
                den = self.unary()
                if not isinstance(den, (int, Fraction)):
                    raise ParseError("division only by numbers")
                val = val / Fraction(den) if not isinstance(val, (int, Fraction)) else Fraction(val) / den
            elif self._starts_factor():
                val = val * self.power()
            else:
                return val

    def unary(self):
        if self.peek() == ("op", "-"):
            self.take()
            return -self.unary()
        if self.peek() == ("op", "+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            exp = int(self.take("num")[1])
            return base**exp
        return base

    def atom(self):
        kind, v = self.peek()
        if kind == "num":
            self.take()
            return Fraction(int(v))
        if kind == "id":
            self.take()
            return self.lookup(v)
        if (kind, v) == ("op", "("):
            self.take()
            val = self.expr()
            self.take("op", ")")
            return val
        raise ParseError(f"unexpected token {v!r}")


def parse_expression(text: str, symbols: Mapping[str, object] | Callable[[str], object]):
    lookup = symbols.__getitem__ if isinstance(symbols, Mapping) else symbols
    reader = _Reader(tokenize(text), lookup)
    val = reader.expr()
    if reader.peek()[0] != "end":
        raise ParseError(f"trailing input at token {reader.peek()[1]!r}")
    return val
