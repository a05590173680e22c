"""Exact real algebraic numbers: a reduced rational, or the unique root of a
square-free integer polynomial inside a rational isolating interval.

Everything here is exact. Intervals are open and their endpoints are never
roots, so a sign test at any interior rational decides which side of it the
root lies on.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

__all__ = [
    "DomainError",
    "IntPolynomial",
    "RationalNumber",
    "RootNumber",
    "AlgebraicNumber",
    "make_rational",
    "make_root",
    "nth_root",
    "refine",
    "floor_of",
    "moebius_step",
    "gauss_step",
    "reciprocal_scale",
    "affine_image",
    "compare",
    "same_number",
    "sturm_count",
]


class DomainError(ValueError):
    """An input outside the mathematical domain of an operation."""


def _sign(v) -> int:
    return (v > 0) - (v < 0)


# ---------------------------------------------------------------------------
# Polynomials


@dataclass(frozen=True)
class IntPolynomial:
    """Primitive integer polynomial with positive leading coefficient.

    ``coeffs`` lists coefficients highest degree first.
    """

    coeffs: tuple[int, ...]

    def __post_init__(self):
        c = self.coeffs
        if len(c) < 2:
            raise DomainError("polynomial must have degree >= 1")
        if c[0] <= 0:
            raise DomainError("leading coefficient must be positive")
        if math.gcd(*c) != 1:
            raise DomainError("polynomial must be primitive")

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int]) -> "IntPolynomial":
        """Normalize arbitrary integer coefficients (highest first)."""
        c = _normalize(coeffs)
        if len(c) < 2:
            raise DomainError("polynomial is constant after normalization")
        return cls(c)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def sign_at(self, x: Fraction) -> int:
        return _sign(_eval_homogeneous(self.coeffs, x.numerator, x.denominator))

    def __call__(self, x) -> Fraction:
        x = Fraction(x)
        return Fraction(_eval_homogeneous(self.coeffs, x.numerator, x.denominator),
                        x.denominator ** self.degree)

    def derivative(self) -> tuple[int, ...]:
        d = self.degree
        return tuple(c * (d - i) for i, c in enumerate(self.coeffs[:-1]))

    def is_squarefree(self) -> bool:
        return len(_poly_gcd(self.coeffs, self.derivative())) == 1

    def __str__(self) -> str:
        return _format_poly(self.coeffs)


def _strip(c: Sequence) -> list:
    c = list(c)
    i = 0
    while i < len(c) - 1 and c[i] == 0:
        i += 1
    return c[i:]


def _normalize(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = _strip([int(v) for v in coeffs])
    if not c or (len(c) == 1 and c[0] == 0):
        return (0,)
    g = math.gcd(*c)
    if c[0] < 0:
        g = -g
    return tuple(v // g for v in c)


def _eval_homogeneous(coeffs: Sequence[int], a: int, b: int) -> int:
    """b**d * P(a/b) for b > 0, by Horner in homogeneous form."""
    acc = coeffs[0]
    bp = 1
    for c in coeffs[1:]:
        bp *= b
        acc = acc * a + c * bp
    return acc


def _format_poly(coeffs: Sequence[int]) -> str:
    d = len(coeffs) - 1
    terms = []
    for i, c in enumerate(coeffs):
        if c == 0:
            continue
        e = d - i
        mag = abs(c)
        body = "" if (mag == 1 and e > 0) else str(mag)
        if e >= 1:
            body += "x" if e == 1 else f"x^{e}"
        sign = "-" if c < 0 else "+"
        terms.append((sign, body))
    if not terms:
        return "0"
    head_sign, head = terms[0]
    out = ("-" if head_sign == "-" else "") + head
    for s, t in terms[1:]:
        out += f" {s} {t}"
    return out


def _rat_divmod(a: Sequence[Fraction], b: Sequence[Fraction]):
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    while len(a) >= len(b) and any(a):
        f = a[0] / b[0]
        shift = len(a) - len(b)
        q[len(q) - 1 - shift] = f
        for i, bc in enumerate(b):
            a[i] -= f * bc
        a.pop(0)
    return q, _strip(a) if a else [Fraction(0)]


def _primitive(c: Sequence[Fraction]) -> tuple[int, ...]:
    lcm = 1
    for v in c:
        lcm = lcm * Fraction(v).denominator // math.gcd(lcm, Fraction(v).denominator)
    return _normalize(int(v * lcm) for v in c)


def _poly_gcd(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    """Primitive gcd over the rationals; ``(1,)`` when coprime."""
    x = [Fraction(v) for v in _strip(a)]
    y = [Fraction(v) for v in _strip(b)]
    if not any(y):
        return _primitive(x)
    while any(y):
        _, r = _rat_divmod(x, y)
        x, y = y, r
    g = _primitive(x)
    return (1,) if len(g) == 1 else g


def _exact_quotient(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    q, r = _rat_divmod([Fraction(v) for v in a], [Fraction(v) for v in b])
    assert not any(r), "inexact polynomial division"
    return _primitive(q)


def _taylor_shift(coeffs: Sequence[int], b: int) -> list[int]:
    """Coefficients of P(x + b), highest first."""
    c = list(coeffs)
    n = len(c)
    for i in range(n - 1):
        for j in range(1, n - i):
            c[j] += b * c[j - 1]
    return c


def _sturm_chain(coeffs: Sequence[int]) -> list[list[Fraction]]:
    p0 = [Fraction(v) for v in coeffs]
    d = len(coeffs) - 1
    p1 = [Fraction(v * (d - i)) for i, v in enumerate(coeffs[:-1])]
    chain = [p0, p1]
    while len(chain[-1]) > 1:
        _, r = _rat_divmod(chain[-2], chain[-1])
        if not any(r):
            break
        chain.append([-v for v in r])
    return chain


def _variations(chain, x: Fraction) -> int:
    signs = []
    for p in chain:
        s = _sign(_eval_homogeneous(p, x.numerator, x.denominator))
        if s:
            signs.append(s)
    return sum(1 for u, v in zip(signs, signs[1:]) if u != v)


def sturm_count(poly: IntPolynomial | Sequence[int], lo, hi) -> int:
    """Number of distinct real roots in the half-open interval (lo, hi]."""
    coeffs = poly.coeffs if isinstance(poly, IntPolynomial) else tuple(poly)
    chain = _sturm_chain(coeffs)
    return _variations(chain, Fraction(lo)) - _variations(chain, Fraction(hi))


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    i = 1
    while i * i <= n:
        if n % i == 0:
            small.append(i)
            if i * i != n:
                large.append(n // i)
        i += 1
    return small + large[::-1]


def _rational_roots(coeffs: Sequence[int]) -> list[Fraction]:
    c = list(coeffs)
    roots = []
    while len(c) > 1 and c[-1] == 0:
        roots.append(Fraction(0))
        c.pop()
    if len(c) < 2:
        return roots
    for q in _divisors(c[0]):
        for p in _divisors(c[-1]):
            for cand in (Fraction(p, q), Fraction(-p, q)):
                if cand not in roots and _eval_homogeneous(c, cand.numerator, cand.denominator) == 0:
                    roots.append(cand)
    return roots


# ---------------------------------------------------------------------------
# Numbers


@dataclass(frozen=True)
class RationalNumber:
    value: Fraction

    def __str__(self) -> str:
        return str(self.value)


@dataclass(frozen=True)
class RootNumber:
    """The unique root of ``poly`` in the open interval (lo, hi)."""

    poly: IntPolynomial
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if not self.lo < self.hi:
            raise DomainError("isolating interval needs lo < hi")

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def __str__(self) -> str:
        return f"root of {self.poly} in ({self.lo}, {self.hi})"

    def __float__(self) -> float:
        x = refine(self, Fraction(1, 2**60))
        return float((x.lo + x.hi) / 2)


AlgebraicNumber = Union[RationalNumber, RootNumber]


def make_rational(num: int, den: int = 1) -> RationalNumber:
    if den == 0:
        raise DomainError("zero denominator")
    return RationalNumber(Fraction(num, den))


def make_root(poly, lo, hi) -> AlgebraicNumber:
    """Build the real root of ``poly`` in (lo, hi), stripping rational roots.

    ``poly`` may be an :class:`IntPolynomial` or a coefficient sequence
    (highest first). Returns a :class:`RationalNumber` when the root in the
    interval is rational.
    """
    lo, hi = Fraction(lo), Fraction(hi)
    if not lo < hi:
        raise DomainError("isolating interval needs lo < hi")
    coeffs = poly.coeffs if isinstance(poly, IntPolynomial) else _normalize(poly)
    if len(coeffs) < 2:
        raise DomainError("polynomial must be nonconstant")
    if len(_poly_gcd(coeffs, IntPolynomial(coeffs).derivative())) > 1:
        raise DomainError(f"polynomial {_format_poly(coeffs)} is not square-free")
    for end in (lo, hi):
        if _eval_homogeneous(coeffs, end.numerator, end.denominator) == 0:
            raise DomainError(f"interval endpoint {end} is a root")

    inside = None
    rest = coeffs
    for r in _rational_roots(coeffs):
        rest = _exact_quotient(rest, (r.denominator, -r.numerator))
        if lo < r < hi:
            inside = r
    n_irr = 0 if len(rest) < 2 else sturm_count(rest, lo, hi)
    total = n_irr + (inside is not None)
    if total != 1:
        raise DomainError(f"interval ({lo}, {hi}) holds {total} roots, expected 1")
    if inside is not None:
        return RationalNumber(inside)
    return RootNumber(IntPolynomial(rest), lo, hi)


def nth_root(m: int, n: int) -> AlgebraicNumber:
    """The positive real n-th root of a positive integer m."""
    if m <= 0 or n < 1:
        raise DomainError("nth_root needs m >= 1 and n >= 1")
    a = _integer_nth_root(m, n)
    if a**n == m:
        return RationalNumber(Fraction(a))
    return make_root([1] + [0] * (n - 1) + [-m], a, a + 1)


def _integer_nth_root(m: int, n: int) -> int:
    lo, hi = 0, 1
    while hi**n <= m:
        hi *= 2
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if mid**n <= m:
            lo = mid
        else:
            hi = mid
    return lo


def _root_side(x: RootNumber, r: Fraction) -> int:
    """Sign of (root - r) for lo < r < hi."""
    s = x.poly.sign_at(r)
    if s == 0:
        # Irrational roots only: rational roots were stripped on construction.
        raise AssertionError("rational point is a root of an irrational-root polynomial")
    return -1 if s == x.poly.sign_at(x.hi) else 1


def _split(x: RootNumber, r: Fraction) -> RootNumber:
    if _root_side(x, r) > 0:
        return RootNumber(x.poly, r, x.hi)
    return RootNumber(x.poly, x.lo, r)


def refine(x: AlgebraicNumber, width) -> AlgebraicNumber:
    """Bisect the isolating interval until its width is at most ``width``."""
    width = Fraction(width)
    if width <= 0:
        raise DomainError("width must be positive")
    if isinstance(x, RationalNumber):
        return x
    poly, lo, hi = x.poly, x.lo, x.hi
    s_hi = poly.sign_at(hi)
    while hi - lo > width:
        mid = (lo + hi) / 2
        if poly.sign_at(mid) == s_hi:
            hi = mid
        else:
            lo = mid
    if lo == x.lo and hi == x.hi:
        return x
    return RootNumber(poly, lo, hi)


def _floor_refined(x: RootNumber) -> tuple[int, RootNumber]:
    """Floor of the root plus an interval narrowed to lie in [floor, floor+1]."""
    while True:
        a = math.floor(x.lo) + 1          # smallest integer > lo
        b = math.ceil(x.hi) - 1           # largest integer < hi
        if a > b:
            f = math.floor(x.lo)
            return f, x
        x = _split(x, Fraction((a + b) // 2))


def floor_of(x: AlgebraicNumber) -> int:
    if isinstance(x, RationalNumber):
        return math.floor(x.value)
    return _floor_refined(x)[0]


def moebius_step(x: AlgebraicNumber, b: int) -> RootNumber:
    """The complete-quotient step 1/(x - b), where b is the floor of x."""
    if isinstance(x, RationalNumber):
        raise DomainError("moebius_step needs an irrational input")
    f, x = _floor_refined(x)
    if f != b:
        raise DomainError(f"{b} is not the floor of the input (floor is {f})")
    return _invert_fraction_part(x, b)


def _invert_fraction_part(x: RootNumber, b: int) -> RootNumber:
    poly, lo, hi = x.poly, x.lo, x.hi
    s_hi = poly.sign_at(hi)
    while lo <= b:
        mid = (lo + hi) / 2
        if poly.sign_at(mid) == s_hi:
            hi = mid
        else:
            lo = mid
    shifted = _taylor_shift(poly.coeffs, b)
    return RootNumber(IntPolynomial.from_coeffs(reversed(shifted)), 1 / (hi - b), 1 / (lo - b))


def gauss_step(x: RootNumber) -> tuple[int, RootNumber]:
    """Partial quotient and next complete quotient in one pass."""
    b, x = _floor_refined(x)
    return b, _invert_fraction_part(x, b)


def reciprocal_scale(x: AlgebraicNumber, m: int) -> AlgebraicNumber:
    """The number m / x for positive x and integer m >= 1."""
    if m < 1:
        raise DomainError("scale must be a positive integer")
    if compare(x, Fraction(0)) <= 0:
        raise DomainError("reciprocal_scale needs a positive input")
    if isinstance(x, RationalNumber):
        return RationalNumber(m / x.value)
    poly, lo, hi = x.poly, x.lo, x.hi
    if lo <= 0:
        s_hi = poly.sign_at(hi)
        while lo <= 0:
            mid = (lo + hi) / 2
            if poly.sign_at(mid) == s_hi:
                hi = mid
            else:
                lo = mid
    d = poly.degree
    c = poly.coeffs
    scaled = [c[d - j] * m**j for j in range(d + 1)]
    return RootNumber(IntPolynomial.from_coeffs(scaled), m / hi, m / lo)


def affine_image(x: AlgebraicNumber, a: int, c: int, e: int) -> AlgebraicNumber:
    """The number (a*x + c) / e for integers a, e > 0."""
    if a <= 0 or e <= 0:
        raise DomainError("affine_image needs a > 0 and e > 0")
    if isinstance(x, RationalNumber):
        return RationalNumber((a * x.value + c) / e)
    # y = (a x + c)/e  <=>  x = (e y - c)/a;  a^d P((e y - c)/a) by Horner.
    acc = [x.poly.coeffs[0]]
    ap = 1
    for coef in x.poly.coeffs[1:]:
        ap *= a
        nxt = [0] * (len(acc) + 1)
        for i, v in enumerate(acc):
            nxt[i] += v * e
            nxt[i + 1] -= v * c
        nxt[-1] += coef * ap
        acc = nxt
    return RootNumber(IntPolynomial.from_coeffs(acc), (a * x.lo + c) / e, (a * x.hi + c) / e)


def compare(x: AlgebraicNumber, r) -> int:
    """Exact sign of x - r."""
    r = Fraction(r)
    if isinstance(x, RationalNumber):
        return _sign(x.value - r)
    if r <= x.lo:
        return 1
    if r >= x.hi:
        return -1
    return _root_side(x, r)


def same_number(x: AlgebraicNumber, y: AlgebraicNumber) -> bool:
    """Whether two representations denote the same real number."""
    if isinstance(x, RationalNumber) or isinstance(y, RationalNumber):
        if isinstance(x, RationalNumber) and isinstance(y, RationalNumber):
            return x.value == y.value
        # Root values are irrational by construction.
        return False
    lo, hi = max(x.lo, y.lo), min(x.hi, y.hi)
    if lo >= hi:
        return False
    if x.poly == y.poly:
        g = x.poly.coeffs
    else:
        g = _poly_gcd(x.poly.coeffs, y.poly.coeffs)
        if len(g) < 2:
            return False
    if _eval_homogeneous(g, lo.numerator, lo.denominator) == 0:
        return False
    return sturm_count(g, lo, hi) == 1
