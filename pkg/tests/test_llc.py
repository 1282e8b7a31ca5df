import cmath
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from ssc_llc.catalog import GLSSCParams, SOEvenParams, SOOddParams, enumerate_ssc, is_self_dual
from ssc_llc.characters import PI, LocalField
from ssc_llc.gamma import quadratic_constituents
from ssc_llc.llc import (
    GLLift, appendix_consistency, check_invariants, det_and_type_check, llc, lpacket_data,
    verify_gamma_product, DecompositionError, ParameterDecomposition,
)
from ssc_llc.scalars import complex_embed, q_power

FIELDS = {q: LocalField(*pf, D=1) for q, pf in
          {2: (2, 1), 3: (3, 1), 4: (2, 2), 5: (5, 1), 7: (7, 1), 9: (3, 2)}.items()}
F2, F3, F5 = FIELDS[2], FIELDS[3], FIELDS[5]


def test_so_odd_example():
    a = F3.k.log[2]
    dec = llc(F3, SOOddParams(3, 2, a, -1))
    assert len(dec.constituents) == 1
    assert dec.lift == GLLift(4, GLSSCParams(3, 4, 0, a, Fraction(1, 2)), "symplectic")
    assert dec.to_json()["packet_size"] == 1


def test_so_even_p2_example():
    dec = llc(F2, SOEvenParams(2, 2, 1, 0, 0, -1))
    assert dec.lift == GLLift(3, GLSSCParams(2, 3, 0, 0, Fraction(1, 2)), "orthogonal")
    (chi,) = dec.quadratics
    assert chi == F2.unramified_quadratic()
    assert lpacket_data(dec) == {"num_constituents": 2, "component_group": 1, "packet_size": 1}


def test_so_even_odd_p_example():
    dec = llc(F3, SOEvenParams(3, 2, 1, 0, 0, 1))
    lift = dec.lift.lift
    assert (lift.N, lift.omega_j, lift.a_exp, lift.zeta) == (2, 1, 0, Fraction(3, 4))
    # sqrt(3) / (zeta_3 - zeta_3^2) evaluated numerically is -i
    w = cmath.exp(2j * cmath.pi / 3)
    assert abs(3**0.5 / (w - w * w) - (-1j)) < 1e-12
    assert complex_embed(F3.root(lift.zeta)) == pytest.approx(-1j)
    phi1, phi2 = dec.quadratics
    assert phi1.is_trivial()
    assert not phi2.unramified and phi2.at(PI) == Fraction(1, 2)
    assert lpacket_data(dec)["packet_size"] == 2
    report = det_and_type_check(F3, dec)
    assert report["ok"] and report["checks"]["zeta_squared"]


def test_det_checks():
    assert det_and_type_check(F2, llc(F2, SOEvenParams(2, 2, 1, 0, 0, -1)))["ok"]
    assert det_and_type_check(F3, llc(F3, SOOddParams(3, 2, 1, -1)))["checks"]["trivial_det"]


def test_appendix_example():
    g = SOEvenParams(3, 2, 1, 0, 0, 1)
    gauss = F3.gauss_sum(F3.char(1))
    eta = q_power(F3.cfg, -1) * gauss * F3.cfg.scalar(-1)
    assert eta == F3.root(Fraction(3, 4))
    assert appendix_consistency(F3, g)
    with pytest.raises(ValueError):
        appendix_consistency(F2, SOEvenParams(2, 2, 1, 0, 0, 1))


@pytest.mark.parametrize("q", [3, 5])
def test_appendix_exhaustive(q):
    F = FIELDS[q]
    for n in (2, 3):
        assert all(appendix_consistency(F, g) for g in enumerate_ssc(F, "SO_even", n))


@pytest.mark.parametrize("q,family,n", [(3, "SO_odd", 2), (2, "SO_even", 2), (3, "SO_even", 2)])
def test_gamma_product_examples(q, family, n):
    F = FIELDS[q]
    for g in enumerate_ssc(F, family, n):
        report = verify_gamma_product(F, g, 8)
        assert report["ok"], report["failures"]
        assert report["checked"] == (q - 1) * 22  # angles of order <= 8


def test_invariant_breach_detected():
    g = SOOddParams(3, 2, 0, 1)
    bad = ParameterDecomposition("SO_odd", 3, 3, g, [GLLift(4, GLSSCParams(3, 4, 0, 0, 0), "symplectic")])
    with pytest.raises(DecompositionError):
        check_invariants(F3, bad)


@given(st.sampled_from(sorted(FIELDS)), st.integers(1, 6), st.integers(0, 100), st.sampled_from([1, -1]),
       st.sampled_from([1, -1]), st.integers(0, 1), st.booleans())
def test_decomposition_invariants(q, n, a, zeta, xi, kappa, even):
    F = FIELDS[q]
    if even:
        g = SOEvenParams(q, max(n, 2), xi if F.p != 2 else 1, kappa, a, zeta)
    else:
        g = SOOddParams(q, n, a, zeta)
    dec = llc(F, g)
    assert dec.dimension == 2 * g.n and dec.swan_total == 1
    assert len(set(dec.constituents)) == len(dec.constituents)
    assert is_self_dual(F, dec.lift.lift)
    assert det_and_type_check(F, dec)["ok"]
    if even:
        assert dec.quadratics == quadratic_constituents(F, g)
        if F.p != 2:
            assert (4 * dec.lift.lift.zeta) % 1 == 0
