from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from ssc_llc.catalog import GLSSCParams, SOEvenParams, SOOddParams, enumerate_ssc, pi_prime
from ssc_llc.characters import PI, LocalField
from ssc_llc.gamma import (
    ak_case, ak_case_form, ak_closed_form, ak_data, ak_quadratics, gamma_ak_raw, gamma_gl,
    gamma_lift_quotient, gamma_so_even, gamma_so_odd,
)
from ssc_llc.laurent import LaurentRat, MonomialForm
from ssc_llc.local_factors import eps_abs_exponent, tate_gamma
from ssc_llc.scalars import q_power

FIELDS = {q: LocalField(*pf, D=1) for q, pf in {2: (2, 1), 3: (3, 1), 4: (2, 2), 5: (5, 1)}.items()}
F2, F3, F5 = FIELDS[2], FIELDS[3], FIELDS[5]


def sqrt_q_X(F, sign=1):
    return MonomialForm(q_power(F.cfg, 1) * sign, 1)


def test_gamma_gl_examples():
    g = GLSSCParams(3, 4, 0, 0, 0)
    assert gamma_gl(F3, g, F3.trivial()) == sqrt_q_X(F3)
    assert gamma_gl(F3, g, F3.char(0, Fraction(1, 2))) == sqrt_q_X(F3, -1)
    g = GLSSCParams(3, 3, 0, 0, Fraction(1, 2))
    with pytest.raises(ValueError):
        gamma_gl(F3, g, F3.trivial())
    for angle in (0, Fraction(1, 2)):
        tau = F3.char(1, angle)
        sign = 1 if angle == 0 else -1
        assert gamma_gl(F3, g, tau, strict=False) == sqrt_q_X(F3, -sign)


def test_gamma_so_odd_examples():
    assert gamma_so_odd(F3, SOOddParams(3, 2, 0, 1), F3.trivial()) == sqrt_q_X(F3)
    assert gamma_so_odd(F3, SOOddParams(3, 2, 0, -1), F3.char(0, Fraction(1, 2))) == sqrt_q_X(F3)


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_so_odd_matches_lift(q):
    F = FIELDS[q]
    for n in (1, 2, 3):
        for g in enumerate_ssc(F, "SO_odd", n):
            lift = GLSSCParams(q, 2 * n, 0, g.a_exp, Fraction(0) if g.zeta == 1 else Fraction(1, 2))
            for tau in F.tame_characters(4):
                assert gamma_so_odd(F, g, tau) == gamma_gl(F, lift, tau)


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_monomial_outputs_are_unitary(q):
    F = FIELDS[q]
    taus = F.tame_characters(8)
    for g in enumerate_ssc(F, "SO_odd", 2):
        for tau in taus:
            mono = gamma_so_odd(F, g, tau)
            assert mono.xpow == 1 and mono.coeff.norm2() == F.cfg.scalar(q)
    for g in [g for g in enumerate_ssc(F, "GL", 2, 4)]:
        from ssc_llc.catalog import is_self_dual

        if is_self_dual(F, g):
            for tau in taus:
                assert gamma_gl(F, g, tau).coeff.norm2() == F.cfg.scalar(q)


def test_gamma_so_even_p2_example():
    g = SOEvenParams(2, 2, 1, 0, 0, 1)
    expect = sqrt_q_X(F2).to_rat() * tate_gamma(F2, F2.trivial())
    assert gamma_so_even(F2, g, F2.trivial()) == expect


def test_gamma_so_even_q3_example():
    g = SOEvenParams(3, 2, 1, 0, 0, 1)
    phi2 = F3.char(1, Fraction(1, 2))  # the ramified solution, phi_2(pi) = -1
    gauss = F3.root(Fraction(1, 3)) - F3.root(Fraction(2, 3))
    head = LaurentRat.monomial(F3.cfg.scalar(3) / gauss, 1)
    expect = head * tate_gamma(F3, F3.trivial()) * tate_gamma(F3, phi2)
    assert gamma_so_even(F3, g, F3.trivial()) == expect


@pytest.mark.parametrize("q", [3, 5])
def test_so_even_swan_law(q):
    F = FIELDS[q]
    from ssc_llc.gamma import quadratic_constituents

    for g in enumerate_ssc(F, "SO_even", 2):
        phi1, phi2 = quadratic_constituents(F, g)
        for tau in F.tame_characters(4):
            rest = gamma_so_even(F, g, tau) / (tate_gamma(F, phi1 * tau) * tate_gamma(F, phi2 * tau))
            assert eps_abs_exponent(F, rest) == 1


def test_gamma_ak_raw_example():
    cfg = F3.cfg
    one, r = cfg.scalar(1), q_power(cfg, 1)
    g = SOEvenParams(3, 2, 1, 0, 0, 1)
    shifted = (LaurentRat.monomial(q_power(cfg, -3), -2) * LaurentRat.poly(cfg, {0: one, 2: cfg.scalar(-3)})
               / LaurentRat.poly(cfg, {0: one, -2: cfg.scalar(Fraction(-1, 9))}))
    bracket = (LaurentRat({2: r * 2}, {0: one, 2: cfg.scalar(-3)}) + LaurentRat.monomial(r, 1))
    assert gamma_ak_raw(F3, g, F3.trivial()) == shifted * bracket


def test_gamma_ak_raw_ramified_square():
    g = SOEvenParams(5, 2, 1, 0, 0, 1)
    tau = F5.char(1, Fraction(1, 3))
    raw = gamma_ak_raw(F5, g, tau)
    assert raw.is_monomial()
    assert raw.to_monomial().xpow == 1


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_raw_route_matches_closed_formula(q):
    F = FIELDS[q]
    for n in (2, 3):
        for g in enumerate_ssc(F, "SO_even", n):
            for tau in F.tame_characters(4):
                assert gamma_ak_raw(F, g, tau) == gamma_so_even(F, g, tau)


def test_lift_quotient_p2_example():
    g = SOEvenParams(2, 2, 1, 0, 0, 1)
    closed, case = gamma_lift_quotient(F2, g, F2.trivial())
    assert closed == sqrt_q_X(F2)


def test_lift_quotient_case_one_at_q5():
    g = SOEvenParams(5, 2, 1, 0, 0, 1)
    tau = F5.char(1, Fraction(1, 4))
    closed, case = gamma_lift_quotient(F5, g, tau)
    assert case == 1
    assert closed == ak_case_form(F5, g, tau, 1)


def test_lift_quotient_case_two_at_q3():
    for g in enumerate_ssc(F3, "SO_even", 2):
        data = ak_data(F3, g)
        pp = F3.unit(data.pi_prime_log) * PI
        tau1, tau2 = ak_quadratics(F3, g)
        for tau in (F3.trivial(), F3.char(0, Fraction(1, 2)), F3.char(0, Fraction(1, 4))):
            if not (tau * tau1).unramified:
                continue
            closed, case = gamma_lift_quotient(F3, g, tau)
            assert case == 2
            eps = q_power(F3.cfg, -1) * F3.gauss_sum(tau2.inverse())
            angle = tau.at(pp) + tau2.at(F3.minus_one)
            sign = g.xi * g.zeta
            assert closed == MonomialForm(F3.root(angle) * eps * q_power(F3.cfg, 1) * sign, 1)


@pytest.mark.parametrize("q", [3, 5])
def test_three_cases_merge(q):
    F = FIELDS[q]
    seen = set()
    for g in enumerate_ssc(F, "SO_even", 2):
        tau1, _ = ak_quadratics(F, g)
        for tau in F.tame_characters(4):
            case = ak_case(F, tau, tau1)
            seen.add(case)
            assert ak_case_form(F, g, tau, case) == ak_closed_form(F, g, tau)
    assert seen == ({1, 2, 3} if q == 5 else {2, 3})


@pytest.mark.parametrize("q", [2, 4])
def test_p2_structure(q):
    F = FIELDS[q]
    assert F.minus_one.ulog == 0
    for tau in F.tame_characters(8):
        assert tau.at(F.minus_one) == 0
    for g in enumerate_ssc(F, "SO_even", 2):
        assert ak_data(F, g).central_sign == 1


@given(st.sampled_from([3, 5]), st.integers(0, 3), st.integers(0, 7), st.sampled_from([1, -1]),
       st.sampled_from([1, -1]), st.integers(0, 1))
def test_lift_quotient_property(q, j, k, xi, zeta, kappa):
    F = FIELDS[q]
    g = SOEvenParams(q, 2, xi, kappa, j, zeta)
    tau = F.char(j + k, Fraction(k, 8))
    closed, case = gamma_lift_quotient(F, g, tau)
    assert closed.coeff.norm2() == F.cfg.scalar(q) and closed.xpow == 1
