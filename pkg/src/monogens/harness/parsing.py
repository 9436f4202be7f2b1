"""Text form of monomial ideals.

Grammar (whitespace is ignored)::

    ideal    := monomial ("," monomial)*
    monomial := factor ("*" factor)* | "1"
    factor   := var ("^" uint)?
    var      := "x" | "y" | "z" | "t" | "x" uint

x, y, z, t are aliases of x1, x2, x3, x4.  The text "0" is the zero ideal.
"""
from __future__ import annotations

import warnings

from ..core import MonomialIdeal, minimalize, zero_ideal
from ..errors import InputError, ParseError

ALIASES = {"x": 1, "y": 2, "z": 3, "t": 4}


class RedundantGeneratorWarning(UserWarning):
    pass


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self._skip()

    def _skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self) -> str:
        ch = self.peek()
        self.pos += 1
        self._skip()
        return ch

    def uint(self) -> int:
        start = self.pos
        if self.peek() == "-":
            raise ParseError("negative exponent", self.text, self.pos)
        digits = ""
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            digits += self.text[self.pos]
            self.pos += 1
        if not digits:
            raise ParseError("expected an unsigned integer", self.text, start)
        self._skip()
        return int(digits)

    def error(self, message: str):
        raise ParseError(message, self.text, self.pos)


def _parse_monomial(sc: _Scanner) -> dict[int, int]:
    if sc.peek() == "1":
        sc.take()
        return {}
    exps: dict[int, int] = {}
    while True:
        ch = sc.peek()
        if ch not in ALIASES:
            sc.error(f"expected a variable, found {ch!r}" if ch else "unexpected end of input")
        start = sc.pos
        sc.pos += 1
        if ch == "x" and sc.peek().isdigit():
            index = int(_digits(sc))
            if index < 1:
                raise ParseError("variable indices start at 1", sc.text, start)
        else:
            index = ALIASES[ch]
        sc._skip()
        e = 1
        if sc.peek() == "^":
            sc.take()
            e = sc.uint()
        exps[index] = exps.get(index, 0) + e
        if sc.peek() != "*":
            return exps
        sc.take()


def _digits(sc: _Scanner) -> str:
    out = ""
    while sc.pos < len(sc.text) and sc.text[sc.pos].isdigit():
        out += sc.text[sc.pos]
        sc.pos += 1
    return out


def parse_ideal(text: str, arity: int | None = None) -> MonomialIdeal:
    """Parse ``text`` into a minimalized ideal.

    The arity is the largest variable index used unless given; redundant
    generators are dropped with a :class:`RedundantGeneratorWarning`.
    """
    if text.strip() == "0":
        if arity is None:
            raise InputError("the zero ideal needs an explicit arity")
        return zero_ideal(arity)
    sc = _Scanner(text)
    monos = [_parse_monomial(sc)]
    while sc.peek() == ",":
        sc.take()
        monos.append(_parse_monomial(sc))
    if sc.peek():
        sc.error(f"unexpected {sc.peek()!r}")
    used = max((max(m) for m in monos if m), default=1)
    if arity is None:
        arity = used
    elif used > arity:
        raise InputError(f"variable x{used} used but arity is {arity}")
    if arity < 1:
        raise InputError("arity must be positive")
    rows = [tuple(m.get(i + 1, 0) for i in range(arity)) for m in monos]
    I = minimalize(rows, arity=arity)
    if len(I.gens) < len(rows):
        warnings.warn(f"{len(rows) - len(I.gens)} redundant generator(s) dropped from {text!r}",
                      RedundantGeneratorWarning, stacklevel=2)
    return I


def format_ideal(I: MonomialIdeal) -> str:
    """Inverse of :func:`parse_ideal` for ideals of arity <= 4.

    Larger arities use x1, x2, ... which parse back the same way.
    """
    return str(I)


def ideal_from_rows(rows, arity: int | None = None) -> MonomialIdeal:
    """Rebuild an ideal from its serialized exponent rows."""
    rows = [tuple(int(e) for e in r) for r in rows]
    return minimalize(rows, arity=arity, allow_zero=arity is not None)
