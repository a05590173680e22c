"""Ladders of a pair (xi, m/xi): connections between convergents whose
product is exactly m, and exact checks of their structure.

Index convention: a connection (n, k) joins the convergent p_{n-1}/q_{n-1}
and quotient b_n of xi with P_{k-1}/Q_{k-1} and B_k of eta. Indices start
at 1 and run up to the last partial quotient stored in each expansion.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, replace
from fractions import Fraction

from .algebraic import (
    DomainError,
    RationalNumber,
    affine_image,
    compare,
    reciprocal_scale,
    refine,
    same_number,
)
from .cf import Expansion, complete_quotient, convergent

__all__ = [
    "Connection",
    "Ladder",
    "ConnectionVerdict",
    "CoverageEntry",
    "LadderReport",
    "build_ladder",
    "connection_details",
    "verify_ladder",
    "conjugate_residual",
    "ResidualVerdict",
    "offset_series",
    "maximal_runs",
    "is_prime",
]


@dataclass(frozen=True)
class Connection:
    n: int
    k: int
    r: int
    s: int
    t: int | Fraction
    value: int
    lower: int
    upper: int


@dataclass(frozen=True)
class Ladder:
    m: int
    exp_xi: Expansion
    exp_eta: Expansion
    connections: tuple[Connection, ...]

    def __len__(self) -> int:
        return len(self.connections)


def _reduced(a: int, b: int) -> tuple[int, int]:
    g = math.gcd(a, b)
    return a // g, b // g


def _exact_div(a: int, b: int) -> int | Fraction:
    f = Fraction(a, b)
    return f.numerator if f.denominator == 1 else f


def _materialize(exp_xi: Expansion, exp_eta: Expansion, m: int, n: int, k: int) -> Connection:
    p1, q1 = convergent(exp_xi, n - 1)
    p2, q2 = convergent(exp_xi, n - 2)
    P1, Q1 = convergent(exp_eta, k - 1)
    P2, Q2 = convergent(exp_eta, k - 2)
    r, s = _exact_div(p1, Q1), _exact_div(P1, q1)
    if isinstance(r, Fraction) or isinstance(s, Fraction):
        raise AssertionError(f"non-integral factor pair at ({n}, {k})")
    t = _exact_div(P2 - r * q2, q1)
    b, B = exp_xi.quotients[n], exp_eta.quotients[k]
    return Connection(n, k, r, s, t, r * b - s * B, -2 * r + 2, 2 * s - 2)


def connection_pairs(exp_xi: Expansion, exp_eta: Expansion, m: int) -> list[tuple[int, int]]:
    """All (n, k) whose convergent product equals m, by reduced-fraction lookup."""
    table = {}
    for k in range(1, exp_eta.last_index + 1):
        table[convergent(exp_eta, k - 1)] = k
    pairs = []
    for n in range(1, exp_xi.last_index + 1):
        p, q = convergent(exp_xi, n - 1)
        if p == 0:
            continue
        k = table.get(_reduced(m * q, p))
        if k is not None:
            pairs.append((n, k))
    return pairs


def build_ladder(exp_xi: Expansion, exp_eta: Expansion, m: int) -> Ladder:
    if m < 1:
        raise DomainError("m must be a positive integer")
    if not same_number(reciprocal_scale(exp_xi.number, m), exp_eta.number):
        raise DomainError(f"the two numbers do not multiply to {m}")
    conns = tuple(_materialize(exp_xi, exp_eta, m, n, k)
                  for n, k in connection_pairs(exp_xi, exp_eta, m))
    return Ladder(m, exp_xi, exp_eta, conns)


def connection_details(ladder: Ladder, index: int) -> Connection:
    """The connection at 0-based position ``index`` in n order."""
    if not 0 <= index < len(ladder.connections):
        raise IndexError(f"connection {index} out of range")
    return ladder.connections[index]


def offset_series(ladder: Ladder) -> list[tuple[int, int]]:
    """(i, n_i - k_i) for the i-th connection, i starting at 1."""
    return [(i, c.n - c.k) for i, c in enumerate(ladder.connections, start=1)]


def maximal_runs(connections) -> list[list[int]]:
    """Positions grouped into maximal blocks consecutive in both n and k."""
    runs: list[list[int]] = []
    for i, c in enumerate(connections):
        if runs:
            prev = connections[runs[-1][-1]]
            if c.n == prev.n + 1 and c.k == prev.k + 1:
                runs[-1].append(i)
                continue
        runs.append([i])
    return runs


def is_prime(m: int) -> bool:
    if m < 2:
        return False
    return all(m % d for d in range(2, math.isqrt(m) + 1))


# ---------------------------------------------------------------------------
# Verification


@dataclass(frozen=True)
class ConnectionVerdict:
    index: int
    n: int
    k: int
    consistent: bool        # stored fields match a fresh recomputation
    product: bool           # p_{n-1} P_{k-1} == m q_{n-1} Q_{k-1}
    bounds: bool            # lower <= value <= upper
    t_integral: bool
    t_forms_agree: bool     # both closed forms of t give the same integer
    t_bounds: bool          # -r + 1 <= t <= s - 1
    t_identity: bool        # r * xi_n - s * eta_k == t exactly
    parity: bool            # n + k odd
    prime_factors: bool | None = None   # {r, s} == {1, m} and quotient dominance

    @property
    def ok(self) -> bool:
        return all(v is not False for v in (
            self.consistent, self.product, self.bounds, self.t_integral,
            self.t_forms_agree, self.t_bounds, self.t_identity, self.parity,
            self.prime_factors))


@dataclass(frozen=True)
class CoverageEntry:
    n: int
    b_n: int
    status: str             # "connected", "beyond_range" or "missing"


@dataclass(frozen=True)
class RunVerdict:
    positions: tuple[int, ...]
    swap: bool              # (r, s) -> (s, r) between neighbours
    middle_zero: bool       # interior rungs have value 0
    t_zero: bool            # every rung with a predecessor in the run has t == 0

    @property
    def ok(self) -> bool:
        return self.swap and self.middle_zero and self.t_zero


@dataclass(frozen=True)
class LadderReport:
    connections: tuple[ConnectionVerdict, ...]
    non_crossing: bool
    runs: tuple[RunVerdict, ...]
    eta_below_m: bool
    coverage: tuple[CoverageEntry, ...]
    prime_m: bool

    @property
    def violations(self) -> list[str]:
        out = [f"connection {v.index} ({v.n},{v.k})" for v in self.connections if not v.ok]
        if not self.non_crossing:
            out.append("connections cross")
        out += [f"run at positions {r.positions[0]}..{r.positions[-1]}"
                for r in self.runs if not r.ok]
        out += [f"large quotient b_{c.n}={c.b_n} unconnected"
                for c in self.coverage if c.status == "missing"]
        return out

    @property
    def ok(self) -> bool:
        return not self.violations


def _t_identity(ladder: Ladder, c: Connection) -> bool:
    if isinstance(c.t, Fraction):
        return False
    xi_n = complete_quotient(ladder.exp_xi, c.n) if c.n <= len(ladder.exp_xi.complete_quotients) else None
    eta_k = complete_quotient(ladder.exp_eta, c.k) if c.k <= len(ladder.exp_eta.complete_quotients) else None
    if xi_n is None or eta_k is None:
        return True     # complete quotient past a rational's end; nothing to compare
    # eta_k == (r * xi_n - t) / s
    return same_number(affine_image(xi_n, c.r, -c.t, c.s), eta_k)


def _verdict(ladder: Ladder, index: int, prime: bool) -> ConnectionVerdict:
    c = ladder.connections[index]
    m, ex, ee = ladder.m, ladder.exp_xi, ladder.exp_eta
    fresh = _materialize(ex, ee, m, c.n, c.k)
    p1, q1 = convergent(ex, c.n - 1)
    p2, _ = convergent(ex, c.n - 2)
    P1, Q1 = convergent(ee, c.k - 1)
    _, Q2 = convergent(ee, c.k - 2)
    t_int = not isinstance(c.t, Fraction)
    alt_t = Fraction(m * Q2 - c.r * p2, p1)
    prime_ok = None
    if prime:
        b, B = ex.quotients[c.n], ee.quotients[c.k]
        if c.r == 1 and c.s == m:
            prime_ok = b >= m * B
        elif c.r == m and c.s == 1:
            prime_ok = B >= m * b
        else:
            prime_ok = False
    return ConnectionVerdict(
        index=index, n=c.n, k=c.k,
        consistent=fresh == c,
        product=p1 * P1 == m * q1 * Q1,
        bounds=c.lower <= c.value <= c.upper and c.lower == -2 * c.r + 2 and c.upper == 2 * c.s - 2,
        t_integral=t_int,
        t_forms_agree=t_int and alt_t == c.t,
        t_bounds=-c.r + 1 <= c.t <= c.s - 1,
        t_identity=_t_identity(ladder, c),
        parity=(c.n + c.k) % 2 == 1,
        prime_factors=prime_ok,
    )


def _run_verdict(conns, positions) -> RunVerdict:
    rungs = [conns[i] for i in positions]
    swap = all(b.r == a.s and b.s == a.r for a, b in zip(rungs, rungs[1:]))
    middle = all(c.value == 0 for c in rungs[1:-1])
    t_zero = all(c.t == 0 for c in rungs[1:])
    return RunVerdict(tuple(positions), swap, middle, t_zero)


def _coverage(ladder: Ladder) -> tuple[CoverageEntry, ...]:
    m, ex, ee = ladder.m, ladder.exp_xi, ladder.exp_eta
    connected = {c.n for c in ladder.connections}
    _, Q_last = convergent(ee, ee.last_index - 1)
    out = []
    for n in range(1, ex.last_index + 1):
        b = ex.quotients[n]
        if b < 2 * m + 1:
            continue
        p, q = convergent(ex, n - 1)
        if n in connected:
            status = "connected"
        elif p > 0 and _reduced(m * q, p)[1] > Q_last:
            # the matching convergent of eta lies past the computed table
            status = "beyond_range"
        else:
            status = "missing"
        out.append(CoverageEntry(n, b, status))
    return tuple(out)


def verify_ladder(ladder: Ladder) -> LadderReport:
    conns = ladder.connections
    prime = is_prime(ladder.m)
    verdicts = tuple(_verdict(ladder, i, prime) for i in range(len(conns)))
    non_crossing = all(a.n < b.n and a.k < b.k for a, b in zip(conns, conns[1:]))
    runs = tuple(_run_verdict(conns, r) for r in maximal_runs(conns))
    below = compare(ladder.exp_eta.number, ladder.m) < 0
    coverage = _coverage(ladder) if below else ()
    return LadderReport(verdicts, non_crossing, runs, below, coverage, prime)


# ---------------------------------------------------------------------------
# Conjugate residual


@dataclass(frozen=True)
class ResidualVerdict:
    n: int
    p: int
    q: int
    xi_side: int            # sign(p/q - xi)
    eta_side: int           # sign(m q/p - eta)
    magnitude_consistent: bool

    @property
    def ok(self) -> bool:
        return self.xi_side != 0 and self.eta_side == -self.xi_side and self.magnitude_consistent


def _bounds(x, width: Fraction) -> tuple[Fraction, Fraction]:
    if isinstance(x, RationalNumber):
        return x.value, x.value
    x = refine(x, width)
    return x.lo, x.hi


def _mul_iv(a, b):
    prods = [a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1]]
    return min(prods), max(prods)


def _abs_iv(a):
    lo, hi = a
    if lo >= 0:
        return a
    if hi <= 0:
        return -hi, -lo
    return Fraction(0), max(-lo, hi)


def conjugate_residual(ladder: Ladder, n: int, width: Fraction = Fraction(1, 2**64)) -> ResidualVerdict:
    """Mirror relation between the residuals of p/q against xi and m q/p
    against eta, for the convergent p/q = p_{n-1}/q_{n-1}.

    Signs are decided exactly. The magnitude relation
    |(m q/p - eta) p^2| = (p/q) eta |p/q - xi| q^2 holds only in the limit of
    exact reals, so it is checked as interval overlap after refining both
    numbers to ``width``.
    """
    m = ladder.m
    p, q = convergent(ladder.exp_xi, n - 1)
    if p == 0:
        raise DomainError("conjugate residual needs a nonzero numerator")
    xi, eta = ladder.exp_xi.number, ladder.exp_eta.number
    xi_side = -compare(xi, Fraction(p, q))
    eta_side = -compare(eta, Fraction(m * q, p))

    xl, xh = _bounds(xi, width)
    el, eh = _bounds(eta, width)
    lhs = _abs_iv((m * q * p - eh * p * p, m * q * p - el * p * p))
    rhs = _mul_iv((Fraction(p * q) * el, Fraction(p * q) * eh),
                  _abs_iv((Fraction(p, q) - xh, Fraction(p, q) - xl)))
    overlap = lhs[0] <= rhs[1] and rhs[0] <= lhs[1]
    return ResidualVerdict(n, p, q, xi_side, eta_side, overlap)


def corrupt(ladder: Ladder, index: int, **changes) -> Ladder:
    """Copy of ``ladder`` with one connection's fields overwritten (fault injection)."""
    conns = list(ladder.connections)
    conns[index] = replace(conns[index], **changes)
    return replace(ladder, connections=tuple(conns))
