from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from ssc_llc.catalog import enumerate_ssc
from ssc_llc.characters import LocalField
from ssc_llc.fdc import (
    artin_consistency, expected, fdc_rhs, formal_degree, obstruction, solve_constraints,
)
from ssc_llc.llc import llc


def test_rhs_examples():
    assert fdc_rhs("SO_odd", 2, 3, 0)["value"] == 3**6
    assert fdc_rhs("SO_even", 2, 2, 1)["value"] == 16
    assert fdc_rhs("SO_even", 2, 3, 2)["value"] == 3**4


@pytest.mark.parametrize("family,q,r,artin", [("SO_odd", 3, 0, 12), ("SO_even", 2, 1, 8), ("SO_even", 3, 2, 8)])
def test_solver_examples(family, q, r, artin):
    report = solve_constraints(family, 2, q)
    assert [(s.r, s.poles, s.artin) for s in report.solutions] == [(r, (), artin)]
    assert not report.truncated


def test_formal_degree_examples():
    assert formal_degree("SO_odd", 2, 3) == (Fraction(1), 6)
    assert formal_degree("SO_even", 3, 2) == (Fraction(1), 9)
    assert formal_degree("SO_even", 2, 3) == (Fraction(1, 2), 4)


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 9])
def test_unique_solution_grid(q):
    for family in ("SO_odd", "SO_even"):
        for n in range(2 if family == "SO_even" else 1, 7):
            sols = solve_constraints(family, n, q).solutions
            r, artin = expected(family, n, q)
            assert [(s.r, s.poles, s.artin) for s in sols] == [(r, (), artin)]
            want = 2 * (n * n + n) if family == "SO_odd" else 2 * n * n
            assert artin == want


@given(st.sampled_from([2, 3, 4, 5, 7, 9]), st.lists(st.integers(1, 12), min_size=1, max_size=4),
       st.integers(0, 1))
def test_nonempty_poles_infeasible(q, poles, delta):
    w = obstruction(q, poles, delta)
    assert w["infeasible"] and w["prime_to_q"] > 4


@pytest.mark.parametrize("q", [2, 3, 5])
def test_artin_matches_swan(q):
    F = LocalField(*( (2, 1) if q == 2 else (q, 1)), D=1)
    for family in ("SO_odd", "SO_even"):
        for n in (2, 3):
            (sol,) = solve_constraints(family, n, q).solutions
            for g in enumerate_ssc(F, family, n)[:2]:
                assert artin_consistency(family, n, sol.artin, llc(F, g).swan_total)
