"""The L-parameter of a simple supercuspidal of SO_N and its consistency checks."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

from .catalog import GLSSCParams, SOEvenParams, SOOddParams, is_self_dual
from .characters import PI, LocalField, TameCharacter
from .gamma import gamma_gl, gamma_so_even, gamma_so_odd, quadratic_constituents
from .laurent import LaurentRat, ShapeError
from .local_factors import eps_abs_exponent, tate_gamma
from .scalars import ScalarExt, q_power


class DecompositionError(AssertionError):
    pass


@dataclass(frozen=True)
class GLLift:
    m: int
    lift: GLSSCParams
    kind: str  # "symplectic" or "orthogonal"
    swan: int = 1

    def to_json(self) -> dict:
        z = self.lift.zeta
        return {
            "kind": "gl_lift", "m": self.m, "omega_j": self.lift.omega_j, "a_exp": self.lift.a_exp,
            "zeta": {"order": z.denominator, "exponent": z.numerator}, "type": self.kind,
        }


@dataclass(frozen=True)
class TameQuadratic:
    chi: TameCharacter
    kind: str = "orthogonal"
    swan: int = 0
    m: int = 1

    def to_json(self) -> dict:
        return {
            "kind": "quad", "unramified": self.chi.unramified,
            "value_at_pi": 1 if self.chi.angle == 0 else -1, "type": self.kind,
        }


Constituent = Union[GLLift, TameQuadratic]


@dataclass
class ParameterDecomposition:
    family: str
    p: int
    n: int
    params: object
    constituents: list[Constituent] = field(default_factory=list)

    @property
    def dimension(self) -> int:
        return sum(c.m for c in self.constituents)

    @property
    def swan_total(self) -> int:
        return sum(c.swan for c in self.constituents)

    @property
    def lift(self) -> GLLift:
        return self.constituents[0]

    @property
    def quadratics(self) -> list[TameCharacter]:
        return [c.chi for c in self.constituents[1:]]

    def to_json(self) -> dict:
        return {
            "family": self.family, "n": self.n, "p": self.p,
            "params": self.params.to_json(),
            "constituents": [c.to_json() for c in self.constituents],
            "packet_size": lpacket_data(self)["packet_size"],
            "swan_total": self.swan_total,
        }


def _sign_angle(z: int) -> Fraction:
    return Fraction(0) if z == 1 else Fraction(1, 2)


def recognize_root(F: LocalField, z: ScalarExt, order: int) -> Fraction:
    """The angle k/order with exp(2 pi i k/order) == z; fails otherwise."""
    for k in range(order):
        if F.root(Fraction(k, order)) == z:
            return Fraction(k, order)
    raise DecompositionError(f"{z!r} is not a root of unity of order dividing {order}")


def lift_data_even(F: LocalField, g: SOEvenParams) -> tuple[int, ScalarExt]:
    """(a', zeta') of the wild constituent for SO_{2n}, p odd, zeta' exact."""
    a_lift = (g.n * F.minus_one.ulog + F.integer(4).ulog + g.a_exp + g.kappa * F.epsilon_log) % (F.q - 1)
    phi2 = quadratic_constituents(F, g)[1]
    zeta = F.root(_sign_angle(g.xi) + _sign_angle(g.zeta)) * q_power(F.cfg, 1) / F.gauss_sum(phi2)
    return a_lift, zeta


def llc(F: LocalField, g: SOOddParams | SOEvenParams) -> ParameterDecomposition:
    q, n = F.q, g.n
    if isinstance(g, SOOddParams):
        lift = GLSSCParams(q, 2 * n, 0, g.a_exp, _sign_angle(g.zeta))
        dec = ParameterDecomposition("SO_odd", F.p, n, g, [GLLift(2 * n, lift, "symplectic")])
        check_invariants(F, dec)
        return dec
    if not isinstance(g, SOEvenParams):
        raise TypeError(f"not an SO parameter: {g!r}")
    quads = quadratic_constituents(F, g)
    if F.p == 2:
        lift = GLSSCParams(q, 2 * n - 1, 0, g.a_exp, _sign_angle(g.zeta))
        parts = [GLLift(2 * n - 1, lift, "orthogonal"), TameQuadratic(quads[0])]
    else:
        a_lift, zeta = lift_data_even(F, g)
        lift = GLSSCParams(q, 2 * n - 2, F.legendre_j, a_lift, recognize_root(F, zeta, 4))
        parts = [GLLift(2 * n - 2, lift, "orthogonal")] + [TameQuadratic(c) for c in quads]
    dec = ParameterDecomposition("SO_even", F.p, n, g, parts)
    check_invariants(F, dec)
    return dec


def check_invariants(F: LocalField, dec: ParameterDecomposition) -> None:
    if dec.dimension != 2 * dec.n:
        raise DecompositionError(f"dimensions sum to {dec.dimension}, expected {2 * dec.n}")
    if dec.swan_total != 1:
        raise DecompositionError("total Swan conductor is not 1")
    if len(set(dec.constituents)) != len(dec.constituents):
        raise DecompositionError("repeated constituent")
    if not is_self_dual(F, dec.lift.lift):
        raise DecompositionError("wild constituent is not self-dual")
    for chi in dec.quadratics:
        if not chi.is_quadratic():
            raise DecompositionError(f"{chi} is not quadratic")


def lift_determinant(F: LocalField, lift: GLSSCParams) -> TameCharacter:
    """Central character of the GL lift: unit part omega, value zeta^N omega(a) at pi."""
    angle = lift.N * lift.zeta + Fraction(lift.omega_j * lift.a_exp, F.q - 1)
    return F.char(lift.omega_j, angle)


def det_and_type_check(F: LocalField, dec: ParameterDecomposition) -> dict:
    lift = dec.lift.lift
    det = lift_determinant(F, lift)
    report: dict = {"family": dec.family, "p": dec.p, "checks": {}}
    checks = report["checks"]
    if dec.family == "SO_odd":
        checks["trivial_omega"] = lift.omega_j == 0
        checks["trivial_det"] = det.is_trivial()
        checks["symplectic"] = dec.lift.kind == "symplectic"
    else:
        product = F.trivial()
        for chi in dec.quadratics:
            product = product * chi
        # det(phi) = 1 means det(lift) is the inverse of the quadratic product
        checks["det_matches_quadratics"] = det == product.inverse()
        checks["orthogonal"] = all(c.kind == "orthogonal" for c in dec.constituents)
        if dec.p != 2:
            checks["omega_is_legendre"] = lift.omega_j == F.legendre_j == product.j
            omega_minus_one = F.char(lift.omega_j).at(F.minus_one)
            checks["zeta_squared"] = (2 * lift.zeta) % 1 == omega_minus_one
    report["ok"] = all(checks.values())
    return report


def lpacket_data(dec: ParameterDecomposition) -> dict:
    r = len(dec.constituents) - 1
    s_bar = 2**r if dec.family == "SO_odd" else 2 ** (r - 1)
    return {"num_constituents": r + 1, "component_group": s_bar, "packet_size": s_bar}


def family_gamma(F: LocalField, g, tau: TameCharacter) -> LaurentRat:
    if isinstance(g, SOOddParams):
        return gamma_so_odd(F, g, tau).to_rat()
    return gamma_so_even(F, g, tau)


def constituent_gammas(F: LocalField, dec: ParameterDecomposition, tau: TameCharacter) -> list:
    return [gamma_gl(F, dec.lift.lift, tau)] + [tate_gamma(F, chi * tau) for chi in dec.quadratics]


def swan_of_twists(F: LocalField, dec: ParameterDecomposition, tau: TameCharacter) -> int | None:
    """Sum of the |epsilon| exponents of the twisted constituents, or None if an
    L-factor intervenes (some chi tau unramified)."""
    if any((chi * tau).unramified for chi in dec.quadratics):
        return None
    total = 0
    for gam in constituent_gammas(F, dec, tau):
        total += eps_abs_exponent(F, gam if not isinstance(gam, LaurentRat) else gam.to_monomial())
    return total


def verify_gamma_product(F: LocalField, g, order_bound: int = 8) -> dict:
    dec = llc(F, g)
    failures = []
    checked = 0
    for tau in F.tame_characters(order_bound):
        lhs = family_gamma(F, g, tau)
        rhs = LaurentRat.const(F.cfg.scalar(1))
        for gam in constituent_gammas(F, dec, tau):
            rhs = rhs * gam
        checked += 1
        if lhs != rhs:
            failures.append({"tau": tau.to_json()})
            continue
        try:
            swan = swan_of_twists(F, dec, tau)
        except ShapeError as exc:
            failures.append({"tau": tau.to_json(), "swan": str(exc)})
            continue
        if swan is not None and swan != 1:
            failures.append({"tau": tau.to_json(), "swan": swan})
    return {"params": g.to_json(), "checked": checked, "failures": failures, "ok": not failures}


def appendix_consistency(F: LocalField, g: SOEvenParams) -> bool:
    """Compare the lift data with the second route through eta and b."""
    if F.p == 2:
        raise ValueError("the eta / b comparison needs p odd")
    dec = llc(F, g)
    lift = dec.lift.lift
    phi2 = dec.quadratics[1]
    gauss = F.gauss_sum(F.legendre_j)
    omega_minus_one = F.root(F.char(F.legendre_j).at(F.minus_one))
    if F.gauss_sum(phi2) ** 2 != F.root(phi2.at(F.minus_one)) * F.q:
        return False
    eta = q_power(F.cfg, -1) * gauss * omega_minus_one * g.xi
    b = (F.minus_one ** g.n) * F.integer(4) * F.unit(g.a_exp + g.kappa * F.epsilon_log)
    zeta_prime = F.root(lift.zeta)
    return eta * g.zeta == zeta_prime and F.unit(b.ulog) == F.unit(lift.a_exp)


def pi_value_of_quadratic(chi: TameCharacter) -> int:
    return 1 if chi.at(PI) == 0 else -1
