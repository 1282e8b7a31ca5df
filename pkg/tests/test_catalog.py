from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from ssc_llc.catalog import (
    GLSSCParams, SOEvenParams, SOOddParams, dict_convert, dict_export, enumerate_ssc,
    is_self_dual, theta_dual,
)
from ssc_llc.characters import PI, LocalField

F2 = LocalField(2, 1, D=1)
F3 = LocalField(3, 1, D=1)
F4 = LocalField(2, 2, D=1)
F5 = LocalField(5, 1, D=1)
F8 = LocalField(2, 3, D=1)
F9 = LocalField(3, 2, D=1)
ALL = [F2, F3, F4, F5, F8, F9]


def test_theta_dual_examples():
    g = GLSSCParams(3, 4, 0, 0, 0)
    assert theta_dual(F3, g) == g
    g = GLSSCParams(3, 3, 0, 0, 0)
    minus_one = F3.k.log[2]
    assert theta_dual(F3, g) == GLSSCParams(3, 3, 0, minus_one, 0)
    g = GLSSCParams(3, 2, 1, 0, Fraction(1, 4))
    assert theta_dual(F3, g) == g


def test_self_duality_examples():
    assert is_self_dual(F3, GLSSCParams(3, 2, 1, 0, Fraction(1, 4)))
    assert not is_self_dual(F3, GLSSCParams(3, 3, 0, 0, 0))
    for F in (F2, F4, F8):
        for N in (1, 2, 3, 4):
            for a in range(F.q - 1):
                assert is_self_dual(F, GLSSCParams(F.q, N, 0, a, 0))
                assert is_self_dual(F, GLSSCParams(F.q, N, 0, a, Fraction(1, 2)))
    assert not is_self_dual(F4, GLSSCParams(4, 2, 1, 0, 0))


@pytest.mark.parametrize("F", [F2, F4, F8])
def test_self_dual_set_at_p2(F):
    for N in (2, 3):
        found = {g for g in enumerate_ssc(F, "GL", N) if is_self_dual(F, g)}
        expect = {GLSSCParams(F.q, N, 0, a, z) for a in range(F.q - 1) for z in (0, Fraction(1, 2))}
        assert found == expect


@pytest.mark.parametrize("F", ALL)
def test_theta_dual_involution(F):
    for N in (2, 3):
        for g in enumerate_ssc(F, "GL", N):
            assert theta_dual(F, theta_dual(F, g)) == g


def test_odd_rank_self_dual_only_at_p2():
    for F in (F3, F5, F9):
        assert not any(is_self_dual(F, g) for g in enumerate_ssc(F, "GL", 3))


def test_enumeration_counts():
    assert len(enumerate_ssc(F3, "SO_odd", 2)) == 4
    assert len(enumerate_ssc(F3, "SO_even", 2)) == 16
    assert len(enumerate_ssc(F2, "SO_even", 2)) == 2
    for F in ALL:
        assert len(enumerate_ssc(F, "SO_odd", 3)) == 2 * (F.q - 1)
        expect = 2 * (F.q - 1) if F.p == 2 else 8 * (F.q - 1)
        params = enumerate_ssc(F, "SO_even", 3)
        assert len(params) == len(set(params)) == expect


def test_p2_normalization():
    assert SOEvenParams(4, 2, 1, 1, 0, 1).kappa == 0
    with pytest.raises(ValueError):
        SOEvenParams(2, 2, -1, 0, 0, 1)
    with pytest.raises(ValueError):
        SOOddParams(3, 2, 0, 2)
    with pytest.raises(ValueError):
        SOEvenParams(3, 1, 1, 0, 0, 1)


def test_dictionary_examples():
    omega = F3.char(1, Fraction(1, 2))
    g = dict_convert(F3, "AL16", {"N": 2, "pi_prime": 0, "zeta": Fraction(1, 4), "omega": omega})
    assert g == GLSSCParams(3, 2, 1, 0, Fraction(1, 4))
    g = dict_convert(F3, "Adr16", {"n": 2, "pi_prime": 0, "zeta": -1})
    assert g == SOOddParams(3, 2, F3.k.log[2], -1)
    for a in range(F5.q - 1):
        g = dict_convert(F5, "Oi19", {"n": 3, "a_exp": a, "zeta": 1})
        assert F5.k.exp[g.a_exp] == F5.k.mul(2, F5.k.exp[a])


def test_dictionary_errors():
    with pytest.raises(ValueError):
        dict_convert(F3, "nope", {})
    with pytest.raises(ValueError):
        dict_convert(F2, "Oi19", {"n": 2, "a_exp": 0, "zeta": 1})
    with pytest.raises(ValueError):
        dict_convert(F3, "AL16", {"N": 2, "pi_prime": 0, "zeta": Fraction(1, 8), "omega": F3.char(0)})


@pytest.mark.parametrize("F", ALL)
def test_dictionary_round_trips(F):
    for n in (2, 3):
        for g in enumerate_ssc(F, "SO_odd", n):
            assert dict_convert(F, "Adr16", dict_export(F, "Adr16", g)) == g
            if F.p != 2:
                assert dict_convert(F, "Oi19", dict_export(F, "Oi19", g)) == g
        for g in enumerate_ssc(F, "SO_even", n):
            assert dict_convert(F, "AK21", dict_export(F, "AK21", g)) == g
    for g in enumerate_ssc(F, "GL", 2, zeta_order=4):
        assert dict_convert(F, "AL16", dict_export(F, "AL16", g)) == g


@given(st.sampled_from(ALL), st.integers(1, 5), st.integers(0, 50), st.integers(0, 50),
       st.fractions(min_value=0, max_value=1, max_denominator=8))
def test_al16_export_constraint(F, N, w, a, zeta):
    g = GLSSCParams(F.q, N, w, a, zeta)
    data = dict_export(F, "AL16", g)
    assert data["omega"].at(F.unit(data["pi_prime"]) * PI) == (N * g.zeta) % 1


def test_json_shapes():
    assert SOOddParams(3, 2, 1, -1).to_json() == {"family": "SO_odd", "n_or_N": 2, "a_exp": 1, "zeta": -1}
    assert GLSSCParams(3, 4, 1, 1, Fraction(3, 4)).to_json()["zeta"] == {"order": 4, "exponent": 3}
