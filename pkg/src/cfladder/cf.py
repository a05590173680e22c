"""Regular continued-fraction expansion with exact convergent tables."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .algebraic import (
    AlgebraicNumber,
    DomainError,
    RationalNumber,
    RootNumber,
    compare,
    gauss_step,
)

__all__ = ["Expansion", "IdentityReport", "StepCheck", "expand", "convergent",
           "complete_quotient", "continued_fraction_value", "verify_identities"]


@dataclass(frozen=True)
class Expansion:
    """Partial quotients b_0..b_N of ``number`` with their convergents.

    ``convergents[i]`` holds (p_{i-1}, q_{i-1}), so index 0 is the seed
    (1, 0). ``complete_quotients[i]`` is the complete quotient of index i+1.
    """

    number: AlgebraicNumber
    quotients: tuple[int, ...]
    convergents: tuple[tuple[int, int], ...]
    complete_quotients: tuple[AlgebraicNumber, ...]
    terminated: bool

    @property
    def last_index(self) -> int:
        return len(self.quotients) - 1

    def __len__(self) -> int:
        return len(self.quotients)


def expand(x: AlgebraicNumber, max_terms: int) -> Expansion:
    if max_terms < 1:
        raise DomainError("max_terms must be at least 1")
    if compare(x, 0) <= 0:
        raise DomainError("expansion needs a positive number")

    quotients: list[int] = []
    tails: list[AlgebraicNumber] = []
    terminated = False
    if isinstance(x, RationalNumber):
        a, b = x.value.numerator, x.value.denominator
        while len(quotients) < max_terms:
            q, rem = divmod(a, b)
            quotients.append(q)
            if rem == 0:
                terminated = True
                break
            a, b = b, rem
            if len(quotients) < max_terms:
                tails.append(RationalNumber(Fraction(a, b)))
    else:
        cur: RootNumber = x
        while True:
            b, nxt = gauss_step(cur)
            quotients.append(b)
            if len(quotients) == max_terms:
                break
            tails.append(nxt)
            cur = nxt

    p0, q0, p1, q1 = 0, 1, 1, 0
    table = [(1, 0)]
    for b in quotients:
        p0, q0, p1, q1 = p1, q1, b * p1 + p0, b * q1 + q0
        table.append((p1, q1))
    return Expansion(x, tuple(quotients), tuple(table), tuple(tails), terminated)


def convergent(exp: Expansion, n: int) -> tuple[int, int]:
    """(p_n, q_n) for -1 <= n <= last index."""
    if not -1 <= n <= exp.last_index:
        raise IndexError(f"convergent index {n} outside -1..{exp.last_index}")
    return exp.convergents[n + 1]


def complete_quotient(exp: Expansion, n: int) -> AlgebraicNumber:
    """The complete quotient of index n (index 0 is the number itself)."""
    if n == 0:
        return exp.number
    if not 1 <= n <= len(exp.complete_quotients):
        raise IndexError(f"complete quotient index {n} not stored")
    return exp.complete_quotients[n - 1]


@dataclass(frozen=True)
class StepCheck:
    """Outcome of the classical identities at one index.

    ``None`` means the check does not apply at that index.
    """

    n: int
    determinant: bool
    side: bool | None = None
    delta_bounds: bool | None = None
    relative_error_decreasing: bool | None = None

    @property
    def ok(self) -> bool:
        return all(v is not False for v in
                   (self.determinant, self.side, self.delta_bounds,
                    self.relative_error_decreasing))


@dataclass(frozen=True)
class IdentityReport:
    steps: tuple[StepCheck, ...]
    complete_quotients_above_one: bool
    exact_terminal: bool | None = None
    failures: tuple[int, ...] = field(default=())

    @property
    def ok(self) -> bool:
        return (all(s.ok for s in self.steps) and self.complete_quotients_above_one
                and self.exact_terminal is not False)


def _delta_bounds(x: AlgebraicNumber, n: int, p: int, q: int, b_next: int,
                  closed_upper: bool) -> bool:
    # |p/q - x| * q^2 strictly between 1/(b+2) and 1/b, on the known side of x.
    direction = 1 if n % 2 == 0 else -1     # x lies above even convergents
    base = Fraction(p, q)
    near = base + direction * Fraction(1, (b_next + 2) * q * q)
    far = base + direction * Fraction(1, b_next * q * q)
    beyond_near = compare(x, near) == direction
    c_far = compare(x, far)
    within_far = c_far == -direction or (closed_upper and c_far == 0)
    return beyond_near and within_far


def _relative_error_drop(x: AlgebraicNumber, n: int, prev: tuple[int, int],
                         cur: tuple[int, int]) -> bool:
    """|1 - x q_n/p_n| < |1 - x q_{n-1}/p_{n-1}|, decided exactly."""
    (pa, qa), (pb, qb) = prev, cur
    if isinstance(x, RationalNumber):
        v = x.value
        return abs(1 - v * qb / pb) < abs(1 - v * qa / pa)
    # With alternating residual signs the inequality collapses to one side test:
    # sign(p_n - q_n x) * (2 p_{n-1} p_n - (p_{n-1} q_n + p_n q_{n-1}) x) < 0.
    s_cur = -1 if n % 2 == 0 else 1
    pivot = Fraction(2 * pa * pb, pa * qb + pb * qa)
    # sign(2 pa pb - denom * x) = -compare(x, pivot)
    return s_cur * -compare(x, pivot) < 0


def verify_identities(exp: Expansion) -> IdentityReport:
    """Check the classical convergent identities at every applicable index."""
    x = exp.number
    N = exp.last_index
    rational = isinstance(x, RationalNumber)
    steps = []
    for n in range(0, N + 1):
        p, q = convergent(exp, n)
        pp, qp = convergent(exp, n - 1)
        det = p * qp - pp * q == (-1) ** (n - 1)

        # For a terminated rational the last convergent is the number itself.
        last_exact = rational and exp.terminated and n == N
        side = None
        if not last_exact:
            side = compare(x, Fraction(p, q)) == (1 if n % 2 == 0 else -1)

        delta = None
        if n < N:
            closed = rational and exp.terminated and n == N - 1
            delta = _delta_bounds(x, n, p, q, exp.quotients[n + 1], closed)

        rel = None
        if n >= 1 and pp > 0:
            rel = _relative_error_drop(x, n, (pp, qp), (p, q))
        steps.append(StepCheck(n, det, side, delta, rel))

    above_one = all(compare(t, 1) > 0 for t in exp.complete_quotients)
    exact_terminal = None
    if exp.terminated:
        p, q = convergent(exp, N)
        exact_terminal = Fraction(p, q) == x.value
    failures = tuple(s.n for s in steps if not s.ok)
    return IdentityReport(tuple(steps), above_one, exact_terminal, failures)


def continued_fraction_value(quotients) -> Fraction:
    """Evaluate a finite regular continued fraction exactly."""
    it = reversed(list(quotients))
    v = Fraction(next(it))
    for b in it:
        v = b + 1 / v
    return v
