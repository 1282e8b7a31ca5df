"""Parameters of simple supercuspidal representations and their dictionaries.

Units of k are recorded by their exponent with respect to the generator of
k^x (`a_exp`), multiplicative characters of k^x by their index (`omega_j`),
and GL central values zeta by an angle.  SO signs are plain +1 / -1.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Union

from .characters import PI, LocalField, TameCharacter, TameElement

SIGNS = (1, -1)


def _sign_angle(sign: int) -> Fraction:
    if sign not in SIGNS:
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    return Fraction(0) if sign == 1 else Fraction(1, 2)


@dataclass(frozen=True)
class GLSSCParams:
    q: int
    N: int
    omega_j: int
    a_exp: int
    zeta: Fraction

    def __post_init__(self):
        if self.N < 1:
            raise ValueError("N must be positive")
        object.__setattr__(self, "omega_j", self.omega_j % (self.q - 1))
        object.__setattr__(self, "a_exp", self.a_exp % (self.q - 1))
        object.__setattr__(self, "zeta", Fraction(self.zeta) % 1)

    def to_json(self) -> dict:
        return {
            "family": "GL",
            "n_or_N": self.N,
            "omega_j": self.omega_j,
            "a_exp": self.a_exp,
            "zeta": {"order": self.zeta.denominator, "exponent": self.zeta.numerator},
        }


@dataclass(frozen=True)
class SOOddParams:
    q: int
    n: int
    a_exp: int
    zeta: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be at least 1")
        _sign_angle(self.zeta)
        object.__setattr__(self, "a_exp", self.a_exp % (self.q - 1))

    @property
    def family(self) -> str:
        return "SO_odd"

    def to_json(self) -> dict:
        return {"family": "SO_odd", "n_or_N": self.n, "a_exp": self.a_exp, "zeta": self.zeta}


@dataclass(frozen=True)
class SOEvenParams:
    q: int
    n: int
    xi: int
    kappa: int
    a_exp: int
    zeta: int

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("n must be at least 2")
        _sign_angle(self.xi)
        _sign_angle(self.zeta)
        if self.kappa not in (0, 1):
            raise ValueError("kappa must be 0 or 1")
        if self.q % 2 == 0:
            if self.xi != 1:
                raise ValueError("xi must be 1 when p = 2")
            # the two kappa classes coincide when p = 2
            object.__setattr__(self, "kappa", 0)
        object.__setattr__(self, "a_exp", self.a_exp % (self.q - 1))

    @property
    def family(self) -> str:
        return "SO_even"

    def to_json(self) -> dict:
        return {
            "family": "SO_even", "n_or_N": self.n, "xi": self.xi, "kappa": self.kappa,
            "a_exp": self.a_exp, "zeta": self.zeta,
        }


SOParams = Union[SOOddParams, SOEvenParams]


def theta_dual(F: LocalField, g: GLSSCParams) -> GLSSCParams:
    omega = F.char(g.omega_j)
    return GLSSCParams(
        g.q, g.N, -g.omega_j,
        g.a_exp + g.N * F.minus_one.ulog,
        omega.at(F.minus_one) - g.zeta,
    )


def is_self_dual(F: LocalField, g: GLSSCParams) -> bool:
    return theta_dual(F, g) == g


def enumerate_ssc(F: LocalField, family: str, n: int, zeta_order: int = 8) -> list:
    q = F.q
    units = range(q - 1)
    if family == "SO_odd":
        return [SOOddParams(q, n, a, z) for a in units for z in SIGNS]
    if family == "SO_even":
        if F.p == 2:
            return [SOEvenParams(q, n, 1, 0, a, z) for a in units for z in SIGNS]
        return [
            SOEvenParams(q, n, xi, kappa, a, z)
            for xi in SIGNS for kappa in (0, 1) for a in units for z in SIGNS
        ]
    if family == "GL":
        angles = sorted({Fraction(k, m) for m in range(1, zeta_order + 1) for k in range(m)})
        return [GLSSCParams(q, n, w, a, z) for w in range(q - 1) for a in units for z in angles]
    raise ValueError(f"unknown family {family!r}")


# dictionaries with other parametrizations; an alternative uniformizer
# pi' = u * pi is passed as the exponent of u, so a = pi / pi' = u^{-1}

def dict_convert(F: LocalField, source: str, data: dict):
    q = F.q
    a_exp = -data.get("pi_prime", 0)
    if source == "AL16":
        omega: TameCharacter = data["omega"]
        N = data["N"]
        zeta = Fraction(data["zeta"]) % 1
        pi_prime = TameElement(data["pi_prime"], 1)
        if (N * zeta) % 1 != omega.at(pi_prime):
            raise ValueError("zeta must be an N-th root of omega(pi')")
        return GLSSCParams(q, N, omega.j, a_exp, zeta)
    if source == "Adr16":
        n = data["n"]
        return SOOddParams(q, n, a_exp + (n + 1) * F.minus_one.ulog, data["zeta"])
    if source == "Oi19":
        if F.p == 2:
            raise ValueError("this parametrization needs p odd")
        return SOOddParams(q, data["n"], data["a_exp"] + F.integer(2).ulog, data["zeta"])
    if source == "AK21":
        alpha = data["alpha_exp"] % (q - 1)
        if alpha == 0:
            kappa = 0
        elif F.p != 2 and alpha == F.epsilon_log:
            kappa = 1
        else:
            raise ValueError("alpha must be 1 or epsilon")
        return SOEvenParams(q, data["n"], data["xi"], kappa, a_exp, data["zeta"])
    raise ValueError(f"unknown convention {source!r}")


def dict_export(F: LocalField, target: str, params) -> dict:
    """Inverse of dict_convert, with pi' = a^{-1} pi where the target uses pi'."""
    if target == "AL16":
        u = -params.a_exp
        # omega(pi') = zeta^N with omega|k^x = omega_j
        angle = params.N * params.zeta - Fraction(params.omega_j * u, F.q - 1)
        return {"N": params.N, "pi_prime": u, "zeta": params.zeta, "omega": F.char(params.omega_j, angle)}
    if target == "Adr16":
        # a_ours = (-1)^{n+1} pi / pi'
        a_dict = params.a_exp - (params.n + 1) * F.minus_one.ulog
        return {"n": params.n, "pi_prime": -a_dict, "zeta": params.zeta}
    if target == "Oi19":
        return {"n": params.n, "pi_prime": 0, "a_exp": params.a_exp - F.integer(2).ulog, "zeta": params.zeta}
    if target == "AK21":
        return {
            "n": params.n, "pi_prime": -params.a_exp, "alpha_exp": params.kappa * F.epsilon_log,
            "xi": params.xi, "zeta": params.zeta,
        }
    raise ValueError(f"unknown convention {target!r}")


def pi_prime(F: LocalField, a_exp: int) -> TameElement:
    """pi' = a^{-1} pi."""
    return F.unit(-a_exp) * PI


def with_zeta(g: GLSSCParams, zeta: Fraction) -> GLSSCParams:
    return replace(g, zeta=Fraction(zeta) % 1)
