"""Parser for algebra expressions and Laurent literals.

Grammar (whitespace is insignificant, ``*`` between atoms may be omitted)::

    element := ['+'|'-'] term (('+'|'-') term)*
    term    := power ('*'? power)*
    power   := atom ['^' signed-int]
    atom    := int | 'q' | 'qhat' | 'X[' int ',' int ']' | '[' idxset '|' idxset ']' | '(' element ')'

Negative powers are allowed only on units +-q^k.
"""

from __future__ import annotations

import re
from typing import List, Optional, Tuple

from .algebra import AlgebraElement
from .indexsets import parse_index_set
from .laurent import LaurentPoly, Q, qhat
from .minors import quantum_minor

__all__ = ["ParseError", "parse_expression", "parse_laurent", "parse_minor"]


class ParseError(ValueError):
    def __init__(self, message: str, pos: int, src: str):
        super().__init__(f"{message} at position {pos}: {src!r}")
        self.pos = pos
        self.src = src


_TOKEN = re.compile(
    r"\s*(?:(?P<int>\d+)|(?P<qhat>qhat)|(?P<q>q)|(?P<x>X\[)|(?P<minor>\[[^\]]*\])|(?P<op>[-+*^()]))"
)


class _Lexer:
    def __init__(self, src: str):
        self.src = src
        self.tokens: List[Tuple[str, str, int]] = []
        pos = 0
        while pos < len(src):
            if src[pos:].strip() == "":
                break
            m = _TOKEN.match(src, pos)
            if not m:
                start = pos + (len(src[pos:]) - len(src[pos:].lstrip()))
                raise ParseError(f"unexpected character {src[start]!r}", start, src)
            kind = m.lastgroup
            text = m.group(kind)
            start = m.start(kind)
            if kind == "x":
                close = src.find("]", m.end())
                if close < 0:
                    raise ParseError("unterminated generator", start, src)
                text = src[m.end():close]
                pos = close + 1
            else:
                pos = m.end()
            self.tokens.append((kind, text, start))
        self.i = 0

    def peek(self) -> Optional[Tuple[str, str, int]]:
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def next(self) -> Tuple[str, str, int]:
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of input", len(self.src), self.src)
        self.i += 1
        return tok

    def at_op(self, *ops: str) -> bool:
        tok = self.peek()
        return tok is not None and tok[0] == "op" and tok[1] in ops


class _Parser:
    def __init__(self, src: str, n: int):
        self.lex = _Lexer(src)
        self.src = src
        self.n = n

    def fail(self, message: str, pos: int):
        raise ParseError(message, pos, self.src)

    def parse(self) -> AlgebraElement:
        if not self.lex.tokens:
            self.fail("empty expression", 0)
        value = self.element()
        tok = self.lex.peek()
        if tok is not None:
            self.fail(f"unexpected {tok[1]!r}", tok[2])
        return value

    def element(self) -> AlgebraElement:
        sign = 1
        if self.lex.at_op("+", "-"):
            sign = -1 if self.lex.next()[1] == "-" else 1
        value = self.term()
        if sign < 0:
            value = -value
        while self.lex.at_op("+", "-"):
            op = self.lex.next()[1]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def _starts_atom(self) -> bool:
        tok = self.lex.peek()
        if tok is None:
            return False
        return tok[0] != "op" or tok[1] == "("

    def term(self) -> AlgebraElement:
        value = self.power()
        while True:
            if self.lex.at_op("*"):
                self.lex.next()
                value = value * self.power()
            elif self._starts_atom():
                value = value * self.power()
            else:
                return value

    def power(self) -> AlgebraElement:
        base = self.atom()
        if not self.lex.at_op("^"):
            return base
        tok = self.lex.next()
        sign = 1
        if self.lex.at_op("-", "+"):
            sign = -1 if self.lex.next()[1] == "-" else 1
        kind, text, pos = self.lex.next()
        if kind != "int":
            self.fail("exponent must be an integer", pos)
        k = sign * int(text)
        if k >= 0:
            result = AlgebraElement.one(self.n)
            for _ in range(k):
                result = result * base
            return result
        terms = base.terms
        if set(terms) != {()}:
            self.fail("negative powers need a scalar base", tok[2])
        c = terms[()]
        if not c.is_unit():
            self.fail("negative powers need a unit +-q^k", tok[2])
        return AlgebraElement.scalar(self.n, c ** k)

    def atom(self) -> AlgebraElement:
        kind, text, pos = self.lex.next()
        n = self.n
        if kind == "int":
            return AlgebraElement.scalar(n, int(text))
        if kind == "q":
            return AlgebraElement.scalar(n, Q)
        if kind == "qhat":
            return AlgebraElement.scalar(n, qhat())
        if kind == "x":
            parts = text.split(",")
            try:
                i, j = (int(p) for p in parts)
            except ValueError:
                self.fail(f"bad generator X[{text}]", pos)
            if not (1 <= i <= n and 1 <= j <= n):
                self.fail(f"generator X[{i},{j}] outside 1..{n}", pos)
            return AlgebraElement.generator(n, i, j)
        if kind == "minor":
            try:
                rows, cols = parse_minor(text, n)
            except ValueError as exc:
                self.fail(str(exc), pos)
            return quantum_minor(rows, cols, n)
        if kind == "op" and text == "(":
            value = self.element()
            if not self.lex.at_op(")"):
                tok = self.lex.peek()
                self.fail("expected ')'", tok[2] if tok else len(self.src))
            self.lex.next()
            return value
        self.fail(f"unexpected {text!r}", pos)


def parse_minor(text: str, n: int):
    """``[2,3|1,2]`` or ``[23|12]`` (also without brackets) -> (rows, cols)."""
    body = text.strip()
    if body.startswith("[") and body.endswith("]"):
        body = body[1:-1]
    if body.count("|") != 1:
        raise ValueError(f"minor literal {text!r} needs exactly one '|'")
    r, c = body.split("|")
    rows, cols = parse_index_set(r, n), parse_index_set(c, n)
    if len(rows) != len(cols) or not rows:
        raise ValueError(f"minor literal {text!r} needs nonempty row and column sets of equal size")
    return rows, cols


def parse_expression(src: str, n: int) -> AlgebraElement:
    """Parse and normalize an element of O_q(M_n)."""
    if n < 1:
        raise ValueError("ambient size n must be >= 1")
    return _Parser(src, n).parse()


def parse_laurent(src: str) -> LaurentPoly:
    """Parse a Laurent polynomial literal such as ``q^2 - 2 + q^-2``."""
    value = _Parser(src, 1).parse()
    terms = value.terms
    if any(w for w in terms):
        raise ParseError("generators are not allowed in a Laurent literal", 0, src)
    return terms.get((), LaurentPoly())
