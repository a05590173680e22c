"""Text specs for numbers on the command line.

Grammar::

    rat:P/Q | rat:P
    sqrt:D               positive square root of an integer
    cbrt:M               real cube root of an integer
    root:c_d,...,c_0:lo:hi
    golden               (1 + sqrt 5) / 2
"""
from __future__ import annotations

import re
from fractions import Fraction

from .algebraic import (
    AlgebraicNumber,
    DomainError,
    RationalNumber,
    make_rational,
    make_root,
    nth_root,
)

__all__ = ["ParseError", "parse_number_spec", "format_number_spec"]

_INT = r"[+-]?\d+"
_RAT = rf"{_INT}(?:/\d+)?"


class ParseError(ValueError):
    """Malformed number spec text."""


def _fraction(text: str) -> Fraction:
    if not re.fullmatch(_RAT, text):
        raise ParseError(f"not a rational: {text!r}")
    num, _, den = text.partition("/")
    if den and int(den) == 0:
        raise DomainError("zero denominator")
    return Fraction(int(num), int(den) if den else 1)


def parse_number_spec(text: str) -> AlgebraicNumber:
    text = text.strip()
    if text == "golden":
        return make_root([1, -1, -1], 1, 2)
    kind, sep, body = text.partition(":")
    if not sep:
        raise ParseError(f"missing ':' in number spec {text!r}")
    if kind == "rat":
        f = _fraction(body)
        return make_rational(f.numerator, f.denominator)
    if kind in ("sqrt", "cbrt"):
        if not re.fullmatch(_INT, body):
            raise ParseError(f"{kind} needs an integer, got {body!r}")
        v = int(body)
        if kind == "sqrt":
            if v < 1:
                raise DomainError(f"sqrt of non-positive integer {v}")
            return nth_root(v, 2)
        if v == 0:
            return RationalNumber(Fraction(0))
        root = nth_root(abs(v), 3)
        if v > 0:
            return root
        # odd root of a negative integer: negate the polynomial's variable
        if isinstance(root, RationalNumber):
            return RationalNumber(-root.value)
        return make_root([1, 0, 0, -v], -root.hi, -root.lo)
    if kind == "root":
        parts = body.split(":")
        if len(parts) != 3:
            raise ParseError("root spec needs coefficients:lo:hi")
        coeffs_text, lo, hi = parts
        coeffs = coeffs_text.split(",")
        if len(coeffs) < 2 or not all(re.fullmatch(_INT, c.strip()) for c in coeffs):
            raise ParseError(f"bad coefficient list {coeffs_text!r}")
        return make_root([int(c) for c in coeffs], _fraction(lo), _fraction(hi))
    raise ParseError(f"unknown number kind {kind!r}")


def format_number_spec(x: AlgebraicNumber) -> str:
    """Canonical spec text; parsing it gives back an equal value."""
    if isinstance(x, RationalNumber):
        v = x.value
        return f"rat:{v.numerator}/{v.denominator}"
    coeffs = ",".join(str(c) for c in x.poly.coeffs)
    return f"root:{coeffs}:{x.lo}:{x.hi}"
