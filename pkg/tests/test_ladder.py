from fractions import Fraction

import pytest

from cfladder.algebraic import DomainError, make_rational
from cfladder.cf import expand
from cfladder.ladder import (
    build_ladder,
    conjugate_residual,
    connection_details,
    corrupt,
    is_prime,
    maximal_runs,
    offset_series,
    verify_ladder,
)
from conftest import BATTERY_M, BATTERY_XI, eta_expansion, expansion, ladder
from oracles import brute_force_connections


def test_golden_shift_ladder():
    lad = ladder("golden", 1, 10)
    assert [(c.n, c.k) for c in lad.connections] == [(n, n + 1) for n in range(1, 10)]
    assert all((c.r, c.s, c.t, c.value) == (1, 1, 0, 0) for c in lad.connections)
    report = verify_ladder(lad)
    assert report.ok
    assert len(report.runs) == 1


def test_cbrt2_prefix_connections():
    lad = ladder("cbrt:2", 2, 8)
    got = {(c.n, c.k): (c.r, c.s, c.t, c.value) for c in lad.connections}
    assert got[(2, 3)] == (2, 1, 0, 0)
    assert got[(3, 4)] == (1, 2, 0, 1)
    assert got[(5, 6)] == (2, 1, -1, -1)


def test_connection_details_bounds():
    lad = ladder("cbrt:2", 2, 8)
    c = next(c for c in lad.connections if (c.n, c.k) == (3, 4))
    assert (c.lower, c.upper) == (0, 2)
    assert connection_details(lad, 0) is lad.connections[0]
    with pytest.raises(IndexError):
        connection_details(lad, len(lad.connections))


def test_offset_series():
    assert offset_series(ladder("golden", 1, 10)) == [(i, -1) for i in range(1, 10)]
    assert offset_series(ladder("cbrt:2", 2, 8))[:3] == [(1, -1), (2, -1), (3, -1)]


def test_build_ladder_rejects_wrong_product():
    with pytest.raises(DomainError):
        build_ladder(expansion("cbrt:2", 10), eta_expansion("cbrt:2", 2, 10), 3)
    with pytest.raises(DomainError):
        build_ladder(expansion("cbrt:2", 10), eta_expansion("cbrt:2", 2, 10), 0)


@pytest.mark.parametrize("field", ["value", "t", "r"])
def test_fault_injection_flags_exactly_one_connection(field):
    lad = ladder("cbrt:2", 2, 60)
    i = 4
    c = lad.connections[i]
    bad = corrupt(lad, i, **{field: getattr(c, field) + 1})
    report = verify_ladder(bad)
    flagged = [v.index for v in report.connections if not v.ok]
    assert flagged == [i]
    assert not report.connections[i].consistent
    assert not report.ok


def test_fault_injection_value_breaks_bounds():
    lad = ladder("cbrt:2", 2, 60)
    c = lad.connections[1]                      # value 0 at the upper bound 0
    report = verify_ladder(corrupt(lad, 1, value=c.value + 1))
    assert not report.connections[1].bounds


def test_symmetry_transposes_connections():
    for spec, m in [("cbrt:2", 2), ("cbrt:6", 6), ("sqrt:3", 5)]:
        ex, ee = expansion(spec, 80), eta_expansion(spec, m, 80)
        fwd = build_ladder(ex, ee, m)
        back = build_ladder(ee, ex, m)
        assert {(c.k, c.n, c.s, c.r) for c in fwd.connections} == \
            {(c.n, c.k, c.r, c.s) for c in back.connections}


@pytest.mark.parametrize("spec", BATTERY_XI)
@pytest.mark.parametrize("m", BATTERY_M)
def test_lookup_matches_brute_force_small(spec, m):
    lad = ladder(spec, m, 30)
    brute = brute_force_connections(lad.exp_xi.quotients, lad.exp_eta.quotients, m)
    assert {(c.n, c.k) for c in lad.connections} == brute


def test_conjugate_residual_examples():
    lad = ladder("cbrt:2", 2, 8)
    v = conjugate_residual(lad, 2)              # p/q = 4/3
    assert (v.p, v.q, v.xi_side, v.eta_side) == (4, 3, 1, -1) and v.ok
    v = conjugate_residual(lad, 1)              # p/q = 1/1
    assert (v.p, v.q, v.xi_side, v.eta_side) == (1, 1, -1, 1) and v.ok
    sq = ladder("sqrt:2", 2, 8)
    v = conjugate_residual(sq, 2)               # p/q = 3/2, 2 * 2/3 = 4/3
    assert (v.p, v.q, v.xi_side, v.eta_side) == (3, 2, 1, -1) and v.ok


def test_conjugate_residual_rejects_zero_numerator():
    lad = build_ladder(eta_expansion("cbrt:2", 1, 6), expansion("cbrt:2", 6), 1)
    with pytest.raises(DomainError):
        conjugate_residual(lad, 1)


@pytest.mark.parametrize("spec", BATTERY_XI)
@pytest.mark.parametrize("m", (1, 2, 6))
def test_conjugate_residual_across_ladder(spec, m):
    lad = ladder(spec, m, 40)
    assert all(conjugate_residual(lad, n).ok for n in range(1, 41)
               if lad.exp_xi.convergents[n][0] > 0)


def test_runs_and_primes():
    lad = ladder("cbrt:2", 2, 60)
    runs = maximal_runs(lad.connections)
    assert sum(len(r) for r in runs) == len(lad.connections)
    assert runs[0] == [0, 1, 2]                 # (1,2) (2,3) (3,4)
    assert [is_prime(v) for v in (1, 2, 3, 4, 5, 6, 10)] == [False, True, True, False, True, False, False]


def test_large_quotient_coverage_report():
    report = verify_ladder(ladder("cbrt:2", 2, 200))
    assert report.eta_below_m
    assert report.coverage and all(c.b_n >= 5 for c in report.coverage)
    assert {c.status for c in report.coverage} <= {"connected", "beyond_range"}


def test_rational_pair_ladder():
    # xi = 7/5, eta = 10/7 for m = 2
    a = expand(make_rational(7, 5), 10)
    b = expand(make_rational(10, 7), 10)
    lad = build_ladder(a, b, 2)
    brute = brute_force_connections(a.quotients, b.quotients, 2)
    assert {(c.n, c.k) for c in lad.connections} == brute
    assert verify_ladder(lad).ok


def test_t_is_integral_and_bounded():
    for c in ladder("cbrt:6", 6, 120).connections:
        assert not isinstance(c.t, Fraction)
        assert -c.r + 1 <= c.t <= c.s - 1


def test_thousand_term_ladder(cbrt2_ladder_1000):
    lad = cbrt2_ladder_1000
    series = offset_series(lad)
    assert len(series) == 665
    assert series[-1] == (665, 5)               # last rung (1000, 995)
    assert verify_ladder(lad).ok
