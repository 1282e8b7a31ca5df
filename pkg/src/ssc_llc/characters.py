"""Additive and multiplicative characters of residue fields, tame characters.

Multiplicative data lives in log coordinates: a unit of k is recorded by its
exponent with respect to the fixed generator, and an element of F^x by the
pair (unit exponent, valuation) through the Teichmueller splitting
F^x = <pi> x k^x x (1 + p).  A tame character is then the pair
(unit index j, angle of its value at pi), and every value is a root of unity
exp(2 pi i angle) with a rational angle.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache

from .fields import Extension, FiniteField
from .scalars import Cyclo, CyclotomicConfig, ScalarExt


def _angle(x) -> Fraction:
    return Fraction(x) % 1


@dataclass(frozen=True)
class TameElement:
    """pi^val times the Teichmueller lift of gen^ulog."""

    ulog: int
    val: int = 0

    def __mul__(self, other: TameElement) -> TameElement:
        return TameElement(self.ulog + other.ulog, self.val + other.val)

    def inverse(self) -> TameElement:
        return TameElement(-self.ulog, -self.val)

    def __pow__(self, k: int) -> TameElement:
        return TameElement(self.ulog * k, self.val * k)


PI = TameElement(0, 1)


@dataclass(frozen=True)
class TameCharacter:
    """Character of E^x trivial on 1 + p_E, E unramified of degree `level`.

    `j` is the index of the unit part on F_{q^level}^x (mod q^level - 1) and
    `angle` is the value at pi as a fraction of a full turn.
    """

    q: int
    j: int
    angle: Fraction
    level: int = 1

    def __post_init__(self):
        object.__setattr__(self, "j", self.j % self.modulus)
        object.__setattr__(self, "angle", _angle(self.angle))

    @property
    def modulus(self) -> int:
        return self.q**self.level - 1

    @property
    def unramified(self) -> bool:
        return self.j == 0

    @property
    def unit_order(self) -> int:
        from math import gcd

        return self.modulus // gcd(self.j, self.modulus)

    def is_quadratic(self) -> bool:
        return (2 * self.j) % self.modulus == 0 and (2 * self.angle) % 1 == 0

    def is_trivial(self) -> bool:
        return self.j == 0 and self.angle == 0

    def __mul__(self, other: TameCharacter) -> TameCharacter:
        if (self.q, self.level) != (other.q, other.level):
            raise ValueError("characters of different fields")
        return TameCharacter(self.q, self.j + other.j, self.angle + other.angle, self.level)

    def inverse(self) -> TameCharacter:
        return TameCharacter(self.q, -self.j, -self.angle, self.level)

    def __pow__(self, k: int) -> TameCharacter:
        return TameCharacter(self.q, self.j * k, self.angle * k, self.level)

    def at(self, x: TameElement) -> Fraction:
        """Angle of the value at x (x must be an element of F^x at level 1)."""
        return _angle(Fraction(self.j * x.ulog, self.modulus) + x.val * self.angle)

    def restrict(self, e: int) -> TameCharacter:
        """Restriction to E'^x with E' the degree-e subextension.

        The generator of F_{q^e} is the norm of the generator of F_{q^d},
        so the unit index simply reduces modulo q^e - 1.
        """
        if self.level % e:
            raise ValueError(f"{e} does not divide {self.level}")
        return TameCharacter(self.q, self.j, self.angle, e)

    def to_json(self) -> dict:
        return {
            "q": self.q,
            "d": self.level,
            "j": self.j,
            "uniformizer_value": {"order": self.angle.denominator, "exponent": self.angle.numerator},
        }


class LocalField:
    """A p-adic field with residue field F_q and its fixed character data.

    Fixed choices: the generator of k from its primitive polynomial,
    psi = zeta_p^Tr, and epsilon = gen (p odd) or 1 (p = 2).
    """

    def __init__(self, p: int, f: int = 1, D: int = 4, root_bound: int = 8):
        self.cfg = CyclotomicConfig(p, f, D, root_bound)
        self.p, self.f, self.q = p, f, p**f
        self.k = FiniteField(p, f)
        self._ext: dict[int, Extension] = {}

    def __repr__(self) -> str:
        return f"LocalField(p={self.p}, f={self.f})"

    def extension(self, d: int) -> Extension:
        if d not in self._ext:
            self._ext[d] = Extension(self.k, d)
        return self._ext[d]

    # residue-field bookkeeping
    @property
    def minus_one(self) -> TameElement:
        return TameElement(0 if self.p == 2 else (self.q - 1) // 2)

    @property
    def epsilon_log(self) -> int:
        return 0 if self.p == 2 else 1

    def unit(self, ulog: int) -> TameElement:
        return TameElement(ulog % (self.q - 1))

    def integer(self, m: int) -> TameElement:
        """Teichmueller class of a rational integer prime to p."""
        x = self.k.from_int(m)
        if x == 0:
            raise ValueError(f"{m} is not a unit when p = {self.p}")
        return TameElement(self.k.log[x])

    @cached_property
    def legendre_j(self) -> int:
        if self.p == 2:
            raise ValueError("no quadratic residue character when p = 2")
        return (self.q - 1) // 2

    def char(self, j: int, angle=0, level: int = 1) -> TameCharacter:
        return TameCharacter(self.q, j, Fraction(angle), level)

    def trivial(self) -> TameCharacter:
        return self.char(0, 0)

    def value(self, chi: TameCharacter, x: TameElement) -> ScalarExt:
        return self.cfg.root(chi.at(x))

    def root(self, angle) -> ScalarExt:
        return self.cfg.root(Fraction(angle))

    # characters on finite fields
    def psi_angle(self, x: int, d: int = 1) -> Fraction:
        field = self.extension(d).field
        return Fraction(field.trace_table[x], self.p)

    def psi(self, x: int, d: int = 1) -> ScalarExt:
        return self.cfg.root(self.psi_angle(x, d))

    def mult_angle(self, j: int, x: int, d: int = 1) -> Fraction:
        field = self.extension(d).field
        if x == 0:
            raise ValueError("multiplicative character at zero")
        return _angle(Fraction(j * field.log[x], field.order))

    def mult(self, j: int, x: int, d: int = 1) -> ScalarExt:
        return self.cfg.root(self.mult_angle(j, x, d))

    def gauss_sum(self, chi: TameCharacter | int, d: int = 1) -> ScalarExt:
        """G(chi, psi) = sum over F_{q^d}^x of chi(x) psi(x); only the unit part matters."""
        if isinstance(chi, TameCharacter):
            chi, d = chi.j, chi.level
        return self._gauss(chi % (self.q**d - 1), d)

    @lru_cache(maxsize=None)
    def _gauss(self, j: int, d: int) -> ScalarExt:
        field = self.extension(d).field
        M, p, order = self.cfg.M, self.p, field.order
        trace = field.trace_table
        unit_step, add_step = M // order, M // p
        terms: dict[int, int] = {}
        for t, x in enumerate(field.exp):
            e = (j * t * unit_step + trace[x] * add_step) % M
            terms[e] = terms.get(e, 0) + 1
        return ScalarExt(self.cfg, Cyclo(self.cfg.field, terms))

    # quadratic characters
    def unramified_quadratic(self) -> TameCharacter:
        return self.char(0, Fraction(1, 2))

    def quad_kit(self) -> list[TameCharacter]:
        if self.p == 2:
            raise ValueError("the four quadratic characters need p odd")
        leg = self.legendre_j
        return [self.char(0, 0), self.char(0, Fraction(1, 2)), self.char(leg, 0), self.char(leg, Fraction(1, 2))]

    def solve_unramified_quadratic(self, a_exp: int, zeta: int) -> TameCharacter:
        """The unramified phi with phi^2 = 1 and phi(a^{-1} pi) = zeta."""
        target = Fraction(0) if zeta == 1 else Fraction(1, 2)
        point = self.unit(-a_exp) * PI
        found = [c for c in (self.char(0, 0), self.char(0, Fraction(1, 2))) if c.at(point) == target]
        if len(found) != 1:
            raise AssertionError("unramified quadratic solution is not unique")
        return found[0]

    def solve_ramified_quadratic(self, a_exp: int, zeta: int, kappa: int) -> TameCharacter:
        """The ramified quadratic phi with phi(a^{-1} pi) = zeta * phi(-4 eps^kappa)."""
        if self.p == 2:
            raise ValueError("no ramified tame quadratic character when p = 2")
        point = self.unit(-a_exp) * PI
        gamma = self.minus_one * self.integer(4) * self.unit(kappa * self.epsilon_log)
        shift = Fraction(0) if zeta == 1 else Fraction(1, 2)
        leg = self.legendre_j
        found = [
            c for c in (self.char(leg, 0), self.char(leg, Fraction(1, 2)))
            if c.at(point) == _angle(shift + c.at(gamma))
        ]
        if len(found) != 1:
            raise AssertionError("ramified quadratic solution is not unique")
        return found[0]

    def tame_characters(self, root_bound: int | None = None) -> list[TameCharacter]:
        """All level-1 tame characters whose value at pi has order <= root_bound."""
        bound = self.cfg.root_bound if root_bound is None else root_bound
        angles = sorted({Fraction(k, n) for n in range(1, bound + 1) for k in range(n)})
        return [self.char(j, t) for j in range(self.q - 1) for t in angles]


def restrict_char(chi: TameCharacter, e: int) -> TameCharacter:
    """chi restricted to the units of the degree-e subextension."""
    return chi.restrict(e)


def trace_norm(ext: Extension, x: int, e: int = 1) -> tuple[int, int]:
    """(Tr, Nm) from F_{q^d} down to F_{q^e}.

    For e = 1 the results are encoded as elements of k; otherwise they are
    the elements of the subfield of F_{q^d}.
    """
    tr, nm = ext.trace(x, e), ext.norm(x, e)
    if e == 1 and ext.d > 1:
        return _pull_to_base(ext, tr), _pull_to_base(ext, nm)
    return tr, nm


def _pull_to_base(ext: Extension, x: int) -> int:
    if x == 0:
        return 0
    ratio = ext.field.order // ext.base.order
    t, rem = divmod(ext.field.log[x], ratio)
    if rem:
        raise ValueError("element does not lie in the base field")
    return ext.base.exp[t]
