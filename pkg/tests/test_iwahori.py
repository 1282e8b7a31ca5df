import random

import pytest
from hypothesis import given, settings, strategies as st

from ssc_llc.catalog import GLSSCParams, SOOddParams
from ssc_llc.iwahori import (
    DEFAULT_SEED, IndeterminateError, MembershipError, Setting, affine_generic_char, affine_quotient,
    affine_simple_positions, bt_conjugate, element_orders, is_orthogonal, membership, missing_positions,
    phi_gl, phi_so_odd, quotient_positions, root_element, run_suite, sample, shape, valuation_table,
)
from ssc_llc.padic import PadicNum


def table(text: str) -> list[list[str]]:
    return [row.split("|") for row in text.strip().splitlines()]


# transcriptions of the standard matrix pictures, n small
GL4_I_PLUS = table("""
1+p|O|O|O
p|1+p|O|O
p|p|1+p|O
p|p|p|1+p
""")
GL4_I_PLUS_PLUS = table("""
1+p|p|O|O
p|1+p|p|O
p|p|1+p|p
p^2|p|p|1+p
""")
SO5_I_P2 = table("""
O|O|O|1/2 O|1/2 O
p|O|O|1/2 O|1/2 O
2p|2p|O|O|O
2p|2p|2p|O|O
2p|2p|2p|p|O
""")
SO5_I_P3 = table("""
O|O|O|O|O
p|O|O|O|O
p|p|O|O|O
p|p|p|O|O
p|p|p|p|O
""")
SO5_BT_I_P2 = table("""
O|O|2O|O|O
p|O|2O|O|O
p|p|O|O|O
p|p|2p|O|O
p|p|2p|p|O
""")
SO6_I = table("""
O|O|O|O|O|O
p|O|O|O|O|O
p|p|O|O|O|O
p|p|O|O|O|O
p|p|p|p|O|O
p|p|p|p|p|O
""")


@pytest.mark.parametrize("family,n,p,level,coords,expected", [
    ("GL", 4, 3, "I+", "std", GL4_I_PLUS),
    ("GL", 4, 3, "I++", "std", GL4_I_PLUS_PLUS),
    ("SO_odd", 2, 2, "I", "std", SO5_I_P2),
    ("SO_odd", 2, 3, "I", "std", SO5_I_P3),
    ("SO_odd", 2, 2, "I", "bt", SO5_BT_I_P2),
    ("SO_even", 3, 3, "I", "std", SO6_I),
    ("SO_even", 3, 2, "I", "std", SO6_I),
])
def test_displayed_shapes(family, n, p, level, coords, expected):
    assert shape(family, n, p, level, coords, displayed=True).pattern() == expected


def test_gl_has_no_antidiagonal_adjustment():
    for level in ("I", "I+", "I++"):
        assert shape("GL", 3, 3, level).pattern() == shape("GL", 3, 3, level, displayed=True).pattern()


@pytest.mark.parametrize("family,n", [("SO_odd", 2), ("SO_odd", 3), ("SO_even", 2), ("SO_even", 3)])
@pytest.mark.parametrize("p", [2, 3])
@pytest.mark.parametrize("level", ["I", "I+"])
def test_sharp_bounds_only_tighten_the_antidiagonal(family, n, p, level):
    sharp = shape(family, n, p, level).bounds
    shown = shape(family, n, p, level, displayed=True).bounds
    N = len(sharp)
    for r in range(N):
        for s in range(N):
            if r + s == N - 1 and r != s:
                assert sharp[r][s] >= shown[r][s]
            else:
                assert sharp[r][s] == shown[r][s]


def test_frozen_sharp_tables():
    assert shape("SO_odd", 2, 2, "I").pattern()[4][0] == "2p^2"
    assert shape("SO_odd", 2, 2, "I+", coords="bt").pattern()[4][0] == "p^2"
    assert shape("SO_even", 2, 3, "I+").pattern() == table("""
1+p|O|O|O
p|1+p|p|O
p|p|1+p|O
p^2|p|p|1+p
""")
    assert shape("GL", 3, 3, "I++").pattern() == table("""
1+p|p|O
p|1+p|p
p^2|p|1+p
""")


@settings(max_examples=15)
@given(seed=st.integers(0, 10**6), family_n=st.sampled_from([("SO_odd", 2), ("SO_even", 2), ("SO_even", 3)]),
       p=st.sampled_from([2, 3]))
def test_displayed_and_sharp_agree_on_the_group(seed, family_n, p):
    family, n = family_n
    S = Setting(p)
    rng = random.Random(seed)
    g = sample(S, family, n, rng)
    assert is_orthogonal(S, g, family, n)
    phi = phi_so_odd(S, n, 0) if family == "SO_odd" else None
    for x in [g] + ([phi * g] if phi else []):
        for level in ("I", "I+"):
            assert membership(S, x, level, family, n) == membership(S, x, level, family, n, displayed=True)


def test_identity_is_trivial_everywhere():
    S = Setting(3)
    one = S.identity(3)
    assert membership(S, one, "I++", "GL", 3)
    assert affine_quotient(S, one, "GL", 3) == (0, 0, 0)
    assert affine_generic_char(S, GLSSCParams(3, 3, 0, 0, 0), one) == S.F.cfg.scalar(1)


def test_root_element_reads_off_residue():
    S = Setting(3)
    g = root_element(S, "GL", 3, 0, 1, S.num(5))
    assert affine_quotient(S, g, "GL", 3) == (2, 0, 0)
    corner = root_element(S, "GL", 3, 2, 0, S.num(3 * 4))
    assert affine_quotient(S, corner, "GL", 3) == (0, 0, 1)


def test_so_odd_corner_divides_by_two_varpi():
    S = Setting(3)
    x = S.num(2 * 3 * 2)
    g = root_element(S, "SO_odd", 2, 3, 0, x)
    assert is_orthogonal(S, g, "SO_odd", 2)
    assert affine_quotient(S, g, "SO_odd", 2) == (0, 0, 2)


def test_phi_so_odd_valuations():
    S = Setting(3)
    phi = phi_so_odd(S, 2, 0)
    vals = valuation_table(phi)
    assert vals[0][4] == -1 and vals[4][0] == 1
    assert [vals[i][i] for i in (1, 2, 3)] == [0, 0, 0]
    assert is_orthogonal(S, phi, "SO_odd", 2)
    assert not membership(S, phi, "I+", "SO_odd", 2)
    assert (phi * phi).congruent(S.identity(5), S.Kc)
    with pytest.raises(MembershipError):
        affine_quotient(S, phi, "SO_odd", 2)


def test_phi_gl_power():
    S = Setting(5)
    fwd, back = phi_gl(S, 3, 2)
    assert (fwd * back).congruent(S.identity(3), S.Kc)
    cube = fwd * fwd * fwd
    a = S.unit_of_log(2)
    assert all(cube[i, i].congruent(S.num(5) / a, S.Kc) for i in range(3))


def test_element_orders_symbolic():
    rep = element_orders(4)
    assert rep["ok"]
    names = {c["element"] for c in rep["checks"]}
    assert "phi_SO_odd^2 = I" in names and "phi_GL^N = varpi a^-1 I" in names
    assert element_orders(3, a_value=2)["ok"]


def test_indeterminate_entry_is_named():
    S = Setting(3, precision=2, compare=2)
    g = S.identity(3)
    g.rows[2][0] = PadicNum.zero(S.ring, 1)
    with pytest.raises(IndeterminateError, match=r"entry \(3, 1\)"):
        membership(S, g, "I++", "GL", 3)
    assert membership(S, g, "I+", "GL", 3)


def test_compare_above_precision_rejected():
    with pytest.raises(ValueError):
        Setting(3, precision=4, compare=6)


def test_affine_simple_roots_and_missing():
    assert quotient_positions("SO_even", 2) == [(1, 2), (1, 3), (3, 1)]
    assert affine_simple_positions("SO_even", 2, 3) == [(1, 2), (1, 3), (2, 1), (3, 1)]
    assert missing_positions("SO_even", 2, 3) == [(2, 1)]
    assert missing_positions("SO_even", 3, 3) == []
    assert missing_positions("SO_odd", 2, 2) == []
    assert missing_positions("GL", 4, 3) == []


def test_bt_transport_is_orthogonal():
    S = Setting(2)
    rng = random.Random(7)
    for _ in range(5):
        g = sample(S, "SO_odd", 2, rng)
        b = bt_conjugate(S, 2, g)
        assert is_orthogonal(S, b, "SO_odd", 2, coords="bt")
        assert membership(S, b, "I+", "SO_odd", 2, coords="bt")


@pytest.mark.parametrize("family,n,p", [
    ("GL", 3, 2), ("GL", 3, 3), ("SO_odd", 2, 3), ("SO_even", 3, 3), ("SO_even", 3, 2),
])
def test_suite_claims_hold(family, n, p):
    rep = run_suite(family, n, p, seed=DEFAULT_SEED, trials=25, with_orders=False)
    failing = [k for k, v in rep["claims"].items() if not v["ok"]]
    assert not failing and rep["ok"]
    assert rep["affine_generic"]["generic"]


def test_bt_degeneracy_at_two():
    rep = run_suite("SO_odd", 2, 2, trials=25, with_orders=False)
    deg = rep["bt_degeneracy"]
    assert deg["nonzero_uncorrected"] == 0 and deg["nonzero_corrected"] > 0
    assert deg["top_mid_bound"] >= 1 and rep["ok"]
    odd = run_suite("SO_odd", 2, 3, trials=25, with_orders=False)["bt_degeneracy"]
    assert odd["nonzero_uncorrected"] > 0 and odd["top_mid_bound"] == 0


def test_so4_quotient_is_incomplete():
    rep = run_suite("SO_even", 2, 3, trials=25, with_orders=False)
    found = rep["incomplete_quotient"]
    assert found["missing"] == [[2, 1]]
    assert found["phi_changes_chi"] > 0
    assert not rep["affine_generic"]["generic"]
    assert rep["ok"]


def test_suite_is_reproducible():
    a = run_suite("SO_odd", 2, 3, seed=11, trials=5, with_orders=False)
    b = run_suite("SO_odd", 2, 3, seed=11, trials=5, with_orders=False)
    assert a == b
    assert a["params"] == SOOddParams(3, 2, a["params"]["a_exp"], 1).to_json()
