"""Twisted gamma factors gamma(s, pi x tau, psi) of simple supercuspidals.

All outputs are rational functions of X = q^{-s}.  The GL and SO odd
formulas are monomials.  For SO even there are two independent routes: the
closed form through the quadratic constituents (`gamma_so_even`) and the
raw Rankin-Selberg evaluation with the A_tau term (`gamma_ak_raw`).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .catalog import GLSSCParams, SOEvenParams, SOOddParams, is_self_dual, pi_prime
from .characters import PI, LocalField, TameCharacter
from .laurent import LaurentRat, MonomialForm
from .local_factors import tate_gamma
from .scalars import q_power


class ConsistencyError(AssertionError):
    pass


def _sign(z: int) -> Fraction:
    return Fraction(0) if z == 1 else Fraction(1, 2)


def _mono(F: LocalField, angle: Fraction, half_q: int, xpow: int) -> MonomialForm:
    return MonomialForm(F.root(angle) * q_power(F.cfg, half_q), xpow)


def gamma_gl(F: LocalField, g: GLSSCParams, tau: TameCharacter, strict: bool = True) -> MonomialForm:
    """tau(-1)^{N-1} tau(pi a^{-1}) zeta q^{1/2} X.

    The formula is only claimed for self-dual g; strict=False evaluates the
    expression anyway.
    """
    if strict and not is_self_dual(F, g):
        raise ValueError("gamma_gl is only asserted for self-dual parameters")
    angle = (g.N - 1) * tau.at(F.minus_one) + tau.at(pi_prime(F, g.a_exp)) + g.zeta
    return _mono(F, angle, 1, 1)


def gamma_so_odd(F: LocalField, g: SOOddParams, tau: TameCharacter) -> MonomialForm:
    """zeta tau(-a^{-1} pi) q^{1/2} X."""
    angle = _sign(g.zeta) + tau.at(F.minus_one * pi_prime(F, g.a_exp))
    return _mono(F, angle, 1, 1)


def quadratic_constituents(F: LocalField, g: SOEvenParams) -> list[TameCharacter]:
    """[phi_r] for p = 2, [phi_{r-1}, phi_r] for p odd."""
    unram = F.solve_unramified_quadratic(g.a_exp, g.zeta)
    if F.p == 2:
        return [unram]
    return [unram, F.solve_ramified_quadratic(g.a_exp, g.zeta, g.kappa)]


def gamma_so_even(F: LocalField, g: SOEvenParams, tau: TameCharacter) -> LaurentRat:
    quads = quadratic_constituents(F, g)
    if F.p == 2:
        angle = _sign(g.zeta) + tau.at(pi_prime(F, g.a_exp))
        head = _mono(F, angle, 1, 1).to_rat()
        return head * tate_gamma(F, quads[0] * tau)
    # xi zeta tau((-1)^{n+1} pi / (4 eps^kappa a)) q X G(phi_r)^{-1}
    point = (F.minus_one ** (g.n + 1)) * PI * (F.integer(4) * F.unit(g.kappa * F.epsilon_log + g.a_exp)).inverse()
    angle = _sign(g.xi) + _sign(g.zeta) + tau.at(point)
    coeff = F.root(angle) * F.q / F.gauss_sum(quads[1])
    head = LaurentRat.monomial(coeff, 1)
    return head * tate_gamma(F, quads[0] * tau) * tate_gamma(F, quads[1] * tau)


@dataclass(frozen=True)
class AKData:
    """The same representation in the other parametrization of SO_{2n}."""

    central_sign: int  # pi(-I_{2n}) = xi
    chi_g: int  # chi(g_chi) = zeta
    alpha_log: int  # alpha = eps^kappa
    pi_prime_log: int  # pi' = u pi with u = gen^pi_prime_log, so a = u^{-1}


def ak_data(F: LocalField, g: SOEvenParams) -> AKData:
    return AKData(g.xi, g.zeta, g.kappa * F.epsilon_log, -g.a_exp)


def gamma_ak_raw(F: LocalField, g: SOEvenParams, tau: TameCharacter) -> LaurentRat:
    """Raw evaluation of the Rankin-Selberg gamma factor for any tame tau."""
    data = ak_data(F, g)
    cfg = F.cfg
    pp = F.unit(data.pi_prime_log) * PI
    tau2 = tau**2
    shifted = tate_gamma(F, tau2).substitute(cfg.scalar(F.q), 2)
    lead = F.root(_sign(data.central_sign) + g.n * tau.at(F.minus_one))
    # chi(g_chi) tau^{-1}(-alpha) tau(pi') q^{1/2} X
    second_angle = _sign(data.chi_g) - tau.at(F.minus_one * F.unit(data.alpha_log)) + tau.at(pp)
    bracket = LaurentRat.monomial(F.root(second_angle) * q_power(cfg, 1), 1)
    if tau2.unramified:
        c = F.root(tau2.at(pp))
        one = cfg.scalar(1)
        first = LaurentRat({2: c * q_power(cfg, 1) * (F.q - 1)}, {0: one, 2: -(c * F.q)})
        bracket = bracket + first
    return shifted * bracket * lead


def ak_quadratics(F: LocalField, g: SOEvenParams) -> tuple[TameCharacter, TameCharacter | None]:
    """tau_1 (unramified, tau_1(pi') = chi(g_chi)) and, for p odd, tau_2
    (Legendre unit part, tau_2(pi') = chi(g_chi) tau_2(-4 alpha))."""
    data = ak_data(F, g)
    pp = F.unit(data.pi_prime_log) * PI
    target = _sign(data.chi_g)
    tau1 = next(c for c in (F.char(0, 0), F.char(0, Fraction(1, 2))) if c.at(pp) == target)
    if F.p == 2:
        return tau1, None
    gamma = F.minus_one * F.integer(4) * F.unit(data.alpha_log)
    leg = F.legendre_j
    tau2 = next(
        c for c in (F.char(leg, 0), F.char(leg, Fraction(1, 2)))
        if c.at(pp) == (target + c.at(gamma)) % 1
    )
    return tau1, tau2


def ak_case(F: LocalField, tau: TameCharacter, tau1: TameCharacter) -> int:
    """Which of the three cases of the derivation tau falls in."""
    if not (tau**2).unramified:
        return 1
    if (tau * tau1).unramified:
        return 2
    return 3


def ak_closed_form(F: LocalField, g: SOEvenParams, tau: TameCharacter) -> MonomialForm:
    """tau((-1)^{n+1} alpha^{-1} pi') chi(g_chi) [tau^{-1}(4) tau_2(-1) eps(s, tau_2, psi)] q^{1/2} X."""
    data = ak_data(F, g)
    pp = F.unit(data.pi_prime_log) * PI
    point = (F.minus_one ** (g.n + 1)) * F.unit(-data.alpha_log) * pp
    angle = _sign(data.central_sign) + tau.at(point) + _sign(data.chi_g)
    coeff = F.root(angle) * q_power(F.cfg, 1)
    if F.p != 2:
        _, tau2 = ak_quadratics(F, g)
        eps = q_power(F.cfg, -1) * F.gauss_sum(tau2.inverse())
        coeff = coeff * F.root(-tau.at(F.integer(4)) + tau2.at(F.minus_one)) * eps
    return MonomialForm(coeff, 1)


def ak_case_form(F: LocalField, g: SOEvenParams, tau: TameCharacter, case: int) -> MonomialForm:
    """The per-case formulas reached in the three branches of the derivation."""
    data = ak_data(F, g)
    pp = F.unit(data.pi_prime_log) * PI
    tau1, tau2 = ak_quadratics(F, g)
    base = _sign(data.central_sign) + tau.at(pp) + _sign(data.chi_g)
    sq = q_power(F.cfg, 1)
    if F.p == 2:
        if case == 1:
            # G(tau^{-2}) / G(tau^{-1}) collapses by Frobenius invariance
            angle = base + g.n * tau.at(F.minus_one) - tau.at(F.minus_one * F.unit(data.alpha_log))
            ratio = F.gauss_sum(tau.inverse() ** 2) / F.gauss_sum(tau.inverse())
            return MonomialForm(F.root(angle) * ratio * sq, 1)
        return MonomialForm(F.root(base) * sq, 1)
    eps = q_power(F.cfg, -1) * F.gauss_sum(tau2.inverse())
    sign2 = tau2.at(F.minus_one)
    if case == 1:
        angle = base + g.n * tau.at(F.minus_one) - tau.at(F.minus_one * F.unit(data.alpha_log))
        angle += -tau.at(F.integer(4)) + sign2
    elif case == 2:
        angle = base + sign2
    else:
        gamma = F.minus_one * F.integer(4) * F.unit(data.alpha_log)
        angle = base + g.n * tau.at(F.minus_one) + tau.at(gamma) + sign2
    return MonomialForm(F.root(angle) * eps * sq, 1)


def gamma_lift_quotient(F: LocalField, g: SOEvenParams, tau: TameCharacter) -> tuple[MonomialForm, int]:
    """Divide the raw gamma by the tame Tate gammas and match the closed form.

    Returns the closed form and the case number of the derivation.
    """
    tau1, tau2 = ak_quadratics(F, g)
    quotient = gamma_ak_raw(F, g, tau) / tate_gamma(F, tau * tau1)
    if tau2 is not None:
        quotient = quotient / tate_gamma(F, tau * tau2)
    closed = ak_closed_form(F, g, tau)
    if quotient != closed.to_rat():
        raise ConsistencyError(f"quotient differs from the closed form for {g} and {tau}")
    case = ak_case(F, tau, tau1)
    if ak_case_form(F, g, tau, case) != closed:
        raise ConsistencyError(f"case {case} formula differs from the closed form for {g} and {tau}")
    return closed, case
