"""Tate local factors of tame characters and the local coefficient C(s, tau, psi).

psi has level 1 throughout, and X = q^{-s}.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .characters import LocalField, TameCharacter, TameElement
from .laurent import LaurentRat, MonomialForm, ShapeError
from .scalars import q_power


def tate_gamma(F: LocalField, eta: TameCharacter) -> LaurentRat:
    if eta.level != 1:
        raise ValueError("tate_gamma expects a character of F^x")
    return _tate_gamma(F, eta.j, eta.angle)


@lru_cache(maxsize=None)
def _tate_gamma(F: LocalField, j: int, angle: Fraction) -> LaurentRat:
    cfg = F.cfg
    root_q_inv = q_power(cfg, -1)
    if j == 0:
        # q^{s-1/2} c^{-1} (1 - cX) / (1 - c^{-1} q^{s-1}) with c = eta(pi)
        c = cfg.root(angle)
        c_inv = cfg.root(-angle)
        num = {-1: root_q_inv * c_inv, 0: -root_q_inv}
        den = {0: cfg.scalar(1), -1: c_inv * Fraction(-1, F.q)}
        return LaurentRat(num, den)
    return LaurentRat.const(root_q_inv * F.gauss_sum(-j))


def tate_L(F: LocalField, eta: TameCharacter, e: int = 1) -> LaurentRat:
    """(1 - eta(pi) X^e)^{-1} for unramified eta, else 1."""
    cfg = F.cfg
    one = cfg.scalar(1)
    if not eta.unramified:
        return LaurentRat.const(one)
    return LaurentRat({0: one}, {0: one, e: -cfg.root(eta.angle)})


def ls_coefficient_C(F: LocalField, tau: TameCharacter, gamma: TameElement) -> LaurentRat:
    """tau(gamma) |gamma|^{s-1} gamma(2s-1, tau^2, psi)."""
    cfg = F.cfg
    shifted = tate_gamma(F, tau**2).substitute(cfg.scalar(F.q), 2)
    # |gamma|^{s-1} = q^{-v(s-1)} = q^v X^v
    scale = F.value(tau, gamma) * Fraction(F.q) ** gamma.val
    return shifted * LaurentRat.monomial(scale, gamma.val)


def eps_abs_exponent(F: LocalField, gamma: LaurentRat | MonomialForm) -> int:
    """Swan exponent k of a monomial gamma c X^k with |c|^2 = q^k.

    Such a gamma has |gamma(s)| = q^{k(1/2 - s)} on the real line.
    """
    mono = gamma if isinstance(gamma, MonomialForm) else gamma.to_monomial()
    norm = mono.coeff.norm2()
    if not norm.is_rational() or norm.rational_value() != Fraction(F.q) ** mono.xpow:
        raise ShapeError(f"|coefficient|^2 is not q^{mono.xpow}")
    return mono.xpow
