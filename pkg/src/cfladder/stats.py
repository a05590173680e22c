"""Partial-quotient histograms against the Kuzmin law.

Floating point is used here and nowhere in the exact core.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .cf import Expansion

__all__ = ["KuzminReport", "kuzmin_expected", "kuzmin_tail", "kuzmin_report", "TAIL"]

TAIL = "tail"
DEFAULT_CAP = 100


def kuzmin_expected(k: int) -> float:
    """Limiting probability that a partial quotient equals k."""
    if k < 1:
        raise ValueError("k must be a positive integer")
    return math.log2((k + 1) ** 2 / (k * (k + 2)))


def kuzmin_tail(cap: int) -> float:
    """Probability mass of quotients above ``cap`` (telescoped exactly)."""
    return math.log2((cap + 2) / (cap + 1))


@dataclass(frozen=True)
class KuzminReport:
    sample_size: int
    counts: dict            # k -> occurrences, plus TAIL
    empirical: dict
    expected: dict
    max_abs_deviation: float
    largest_quotient: tuple[int, int]   # (n, b_n)
    cap: int = DEFAULT_CAP

    def rows(self):
        """(k, count, empirical, expected, deviation) in bucket order."""
        for k in list(range(1, self.cap + 1)) + [TAIL]:
            yield (k, self.counts[k], self.empirical[k], self.expected[k],
                   self.empirical[k] - self.expected[k])


def kuzmin_report(exp: Expansion, skip_first: int = 1, cap: int = DEFAULT_CAP) -> KuzminReport:
    sample = exp.quotients[skip_first:]
    if not sample:
        raise ValueError("no partial quotients left after skipping")
    counts = {k: 0 for k in range(1, cap + 1)}
    counts[TAIL] = 0
    for b in sample:
        counts[b if 1 <= b <= cap else TAIL] += 1
    size = len(sample)
    empirical = {k: c / size for k, c in counts.items()}
    expected = {k: kuzmin_expected(k) for k in range(1, cap + 1)}
    expected[TAIL] = kuzmin_tail(cap)
    dev = max(abs(empirical[k] - expected[k]) for k in counts)
    big = max(range(len(sample)), key=lambda i: (sample[i], -i))
    return KuzminReport(size, counts, empirical, expected, dev,
                        (big + skip_first, sample[big]), cap)
