from dataclasses import replace
from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cfladder.algebraic import DomainError, compare, make_rational, make_root, nth_root
from cfladder.cf import (
    complete_quotient,
    continued_fraction_value,
    convergent,
    expand,
    verify_identities,
)
from conftest import BATTERY_XI, expansion
from oracles import BATTERY_POLYS, cf_of_root, euclid_quotients

GOLDEN = make_root([1, -1, -1], 1, 2)
CBRT2 = nth_root(2, 3)


def test_expand_examples():
    assert expand(GOLDEN, 10).quotients == (1,) * 10
    r = expand(make_rational(355, 113), 10)
    assert r.quotients == (3, 7, 16) and r.terminated
    assert expand(CBRT2, 12).quotients == (1, 3, 1, 5, 1, 1, 4, 1, 1, 8, 1, 14)
    assert expand(nth_root(2, 2), 5).quotients == (1, 2, 2, 2, 2)


def test_expand_rejects_nonpositive():
    with pytest.raises(DomainError):
        expand(make_rational(-1, 2), 4)
    with pytest.raises(DomainError):
        expand(CBRT2, 0)


def test_expand_truncated_rational_is_not_terminated():
    r = expand(make_rational(355, 113), 2)
    assert r.quotients == (3, 7) and not r.terminated


def test_b0_zero_allowed():
    e = expand(make_root([2, 0, -1], 0, 1), 5)     # 1 / sqrt 2
    assert e.quotients == (0, 1, 2, 2, 2)


def test_convergent_examples():
    e = expand(CBRT2, 12)
    assert convergent(e, 1) == (4, 3)
    assert convergent(e, 3) == (29, 23)
    assert convergent(e, -1) == (1, 0)
    assert convergent(expand(GOLDEN, 10), 4) == (8, 5)
    with pytest.raises(IndexError):
        convergent(e, 12)
    with pytest.raises(IndexError):
        convergent(e, -2)


def test_complete_quotients_stored():
    e = expand(CBRT2, 6)
    assert len(e.complete_quotients) == 5
    assert complete_quotient(e, 0) is CBRT2
    assert complete_quotient(e, 1).poly.coeffs == (1, -3, -3, -1)


def test_identities_cbrt2():
    report = verify_identities(expand(CBRT2, 20))
    assert report.ok and not report.failures


def test_identities_golden_delta_window():
    e = expand(GOLDEN, 30)
    report = verify_identities(e)
    assert report.ok
    assert all(s.delta_bounds for s in report.steps[:-1])


def test_identities_rational():
    e = expand(make_rational(355, 113), 10)
    report = verify_identities(e)
    assert all(s.determinant for s in report.steps)
    assert report.exact_terminal
    assert report.ok


def test_identities_detect_a_bad_quotient():
    # Tamper b_1 and rebuild a consistent table: only the number disagrees now.
    e = expand(CBRT2, 10)
    fake = expand(make_rational(*_value_of((1, 4) + e.quotients[2:])), 10)
    assert not verify_identities(replace(fake, number=CBRT2, terminated=False)).ok


def _value_of(quotients):
    v = continued_fraction_value(quotients)
    return v.numerator, v.denominator


@pytest.mark.parametrize("spec", sorted(BATTERY_POLYS))
def test_expansion_matches_oracle(spec):
    coeffs, lo, hi = BATTERY_POLYS[spec]
    assert list(expansion(spec, 60).quotients) == cf_of_root(coeffs, lo, hi, 60)


def test_best_approximations_are_convergents():
    # Every p/q with q <= 50 and |p/q - cbrt2| q^2 < 1/2 is a convergent.
    table = set(expansion("cbrt:2", 40).convergents)
    hits = 0
    for q in range(1, 51):
        for p in range(q, 2 * q + 1):
            if gcd(p, q) != 1:
                continue
            e = Fraction(1, 2 * q * q)
            c = Fraction(p, q)
            if (c - e) ** 3 < 2 < (c + e) ** 3:
                hits += 1
                assert (p, q) in table
    assert hits >= 4


@pytest.mark.parametrize("spec", BATTERY_XI)
def test_structural_invariants(spec):
    e = expansion(spec, 201)
    assert all(b >= 1 for b in e.quotients[1:])
    assert all(gcd(p, q) == 1 for p, q in e.convergents)
    for n, (p, q) in enumerate(e.convergents[1:]):
        assert compare(e.number, Fraction(p, q)) == (1 if n % 2 == 0 else -1)
    assert all(compare(t, 1) == 1 for t in e.complete_quotients)


@given(st.integers(1, 10**9), st.integers(1, 10**6))
def test_rational_expansion_is_euclid(a, b):
    e = expand(make_rational(a, b), 100)
    g = gcd(a, b)
    assert list(e.quotients) == euclid_quotients(a // g, b // g, 100)
    assert e.terminated
    assert len(e.quotients) == 1 or e.quotients[-1] >= 2
    assert continued_fraction_value(e.quotients) == Fraction(a, b)
    assert verify_identities(e).ok


@given(st.integers(2, 500).filter(lambda m: round(m ** (1 / 3)) ** 3 != m), st.integers(5, 40))
def test_determinant_identity_property(m, terms):
    e = expand(nth_root(m, 3), terms)
    for n in range(terms):
        (p, q), (pp, qp) = convergent(e, n), convergent(e, n - 1)
        assert p * qp - pp * q == (-1) ** (n - 1)
