from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from ssc_llc.fields import FiniteField
from ssc_llc.padic import EXACT, GaloisRing, IndeterminateError, PadicNum, identity, matrix_from_fractions

PREC = 10


def ring(p, f=1):
    return GaloisRing(FiniteField(p, f))


def vp(x: Fraction, p: int) -> int:
    v, num, den = 0, x.numerator, x.denominator
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v


def padic(R, x: Fraction) -> PadicNum:
    if x == 0:
        return PadicNum.exact_zero(R)
    return PadicNum.from_fraction(R, x.numerator, x.denominator, PREC)


def agrees(R, value: PadicNum, oracle: Fraction) -> bool:
    """value equals the rational oracle to every digit it claims to know."""
    if oracle == 0:
        return value.prec == 0
    if value.val != vp(oracle, R.p):
        return False
    return (value - padic(R, oracle)).valuation_at_least(value.absolute)


nonzero = st.fractions(max_denominator=50).filter(lambda x: x != 0 and abs(x) < 10**6)


def test_from_int_valuation():
    R = ring(3)
    x = PadicNum.from_int(R, 54, PREC)
    assert (x.val, x.unit, x.prec) == (3, (2,), PREC)
    assert PadicNum.exact_zero(R).val == EXACT


def test_fraction_inverse_example():
    R = ring(5)
    x = PadicNum.from_fraction(R, 1, 3, 4)
    # 3 * 417 = 1251 = 1 + 2 * 5^4
    assert x.unit == (417,) and x.val == 0


def test_cancellation_loses_precision():
    R = ring(2)
    x = PadicNum.from_int(R, 1, 4)
    y = PadicNum.from_int(R, 1 + 2**6, 8)
    d = x - y
    assert d.prec == 0 and d.val == 4
    with pytest.raises(IndeterminateError):
        d.valuation_at_least(5)
    assert d.valuation_at_least(3)
    with pytest.raises(IndeterminateError):
        d.inverse()


@pytest.mark.parametrize("p", [2, 3, 5])
@given(x=nonzero, y=nonzero)
def test_field_operations_match_rationals(p, x, y):
    R = ring(p)
    a, b = padic(R, x), padic(R, y)
    assert agrees(R, a * b, x * y)
    assert agrees(R, a / b, x / y)
    assert (a - a).prec == 0
    s = a + b
    if s.prec:
        assert agrees(R, s, x + y)
    elif x + y:
        # precision ran out: the true sum must be at least that divisible
        assert vp(x + y, p) >= s.val


@given(x=nonzero)
def test_residue_and_unit(x):
    R = ring(3)
    a = padic(R, x)
    assert a.is_unit() == (vp(x, 3) == 0)
    if vp(x, 3) == 0:
        assert a.residue() == x.numerator * pow(x.denominator, -1, 3) % 3


@pytest.mark.parametrize("p,f", [(2, 2), (3, 2), (2, 3)])
def test_teichmuller_is_a_root_of_unity(p, f):
    R = ring(p, f)
    q = p**f
    for r in range(1, q):
        t = PadicNum.teichmuller(R, r, PREC)
        power = PadicNum(R, 0, R.power(t.unit, q, PREC), PREC)
        assert power.congruent(t, PREC)
        assert t.residue() == r


def test_ring_inverse_unramified_extension():
    R = ring(3, 2)
    for r in range(1, 9):
        x = PadicNum(R, 0, R.lift(r), PREC)
        y = x.inverse()
        assert (x * y).congruent(PadicNum.from_int(R, 1, PREC), PREC)


def test_matrix_product_and_identity():
    R = ring(3)
    m = matrix_from_fractions(R, [[1, Fraction(1, 3)], [3, 2]], PREC)
    one = identity(R, 2, PREC)
    assert (m * one).congruent(m, PREC - 1)
    sq = m * m
    expected = matrix_from_fractions(R, [[2, 1], [9, 5]], PREC)
    assert sq.congruent(expected, PREC - 2)
    assert m.transpose()[0, 1].val == 1
