"""Rational functions in X = q^{-s} with exact scalar coefficients."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .scalars import Cyclo, CyclotomicConfig, ScalarExt, complex_embed


class ShapeError(ValueError):
    pass


Poly = dict  # exponent -> ScalarExt, exponents may be negative


def _pmul(a: Poly, b: Poly) -> Poly:
    out: Poly = {}
    for i, x in a.items():
        for j, y in b.items():
            term = x * y
            out[i + j] = out[i + j] + term if i + j in out else term
    return out


def _padd(a: Poly, b: Poly) -> Poly:
    out = dict(a)
    for i, y in b.items():
        out[i] = out[i] + y if i in out else y
    return out


def _prune(a: Poly) -> dict[int, Cyclo]:
    out = {}
    for i, x in a.items():
        v = x.folded()
        if v:
            out[i] = v
    return out


# dense polynomial helpers over Q(zeta_M); lists run low -> high degree
def _trim(a: list[Cyclo]) -> list[Cyclo]:
    while a and not a[-1]:
        a = a[:-1]
    return a


def _divmod(a: list[Cyclo], b: list[Cyclo]) -> tuple[list[Cyclo], list[Cyclo]]:
    a = list(a)
    lead_inv = b[-1].inverse()
    zero = b[-1] * 0
    quot = [zero] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b) and a:
        c = a[-1] * lead_inv
        shift = len(a) - len(b)
        quot[shift] = c
        for i, y in enumerate(b):
            a[shift + i] = a[shift + i] - c * y
        a = _trim(a[:-1])
    return quot, a


def _gcd(a: list[Cyclo], b: list[Cyclo]) -> list[Cyclo]:
    while b:
        _, r = _divmod(a, b)
        a, b = b, r
    return a


@dataclass(frozen=True)
class MonomialForm:
    coeff: ScalarExt
    xpow: int

    def to_rat(self) -> LaurentRat:
        return LaurentRat({self.xpow: self.coeff}, {0: self.coeff.cfg.scalar(1)})

    def __eq__(self, other) -> bool:
        if isinstance(other, MonomialForm):
            return self.xpow == other.xpow and self.coeff == other.coeff
        if isinstance(other, LaurentRat):
            return self.to_rat() == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.xpow, self.coeff))


class LaurentRat:
    """num(X) / den(X) with Laurent polynomial numerator and denominator.

    Arithmetic keeps unreduced pairs; equality cross-multiplies, and
    `canonical()` produces the gcd-reduced form X^k N(X)/D(X) with
    N(0), D(0) nonzero and D monic.
    """

    __slots__ = ("num", "den", "_canon")

    def __init__(self, num: Poly, den: Poly):
        if not den or not any(v for v in den.values()):
            raise ZeroDivisionError("zero denominator")
        self.num = num
        self.den = den
        self._canon = None

    @classmethod
    def const(cls, c: ScalarExt) -> LaurentRat:
        return cls({0: c}, {0: c.cfg.scalar(1)})

    @classmethod
    def monomial(cls, c: ScalarExt, k: int) -> LaurentRat:
        return cls({k: c}, {0: c.cfg.scalar(1)})

    @classmethod
    def poly(cls, cfg: CyclotomicConfig, terms: dict[int, ScalarExt]) -> LaurentRat:
        return cls(dict(terms), {0: cfg.scalar(1)})

    @property
    def cfg(self) -> CyclotomicConfig:
        return next(iter(self.den.values())).cfg

    def _coerce(self, other) -> LaurentRat:
        if isinstance(other, LaurentRat):
            return other
        if isinstance(other, MonomialForm):
            return other.to_rat()
        if isinstance(other, ScalarExt):
            return LaurentRat.const(other)
        return LaurentRat.const(self.cfg.scalar(other))

    def __mul__(self, other) -> LaurentRat:
        other = self._coerce(other)
        return LaurentRat(_pmul(self.num, other.num), _pmul(self.den, other.den))

    __rmul__ = __mul__

    def __truediv__(self, other) -> LaurentRat:
        other = self._coerce(other)
        return LaurentRat(_pmul(self.num, other.den), _pmul(self.den, other.num))

    def __rtruediv__(self, other) -> LaurentRat:
        return self._coerce(other) / self

    def __add__(self, other) -> LaurentRat:
        other = self._coerce(other)
        return LaurentRat(
            _padd(_pmul(self.num, other.den), _pmul(other.num, self.den)),
            _pmul(self.den, other.den),
        )

    __radd__ = __add__

    def __neg__(self) -> LaurentRat:
        return LaurentRat({i: -x for i, x in self.num.items()}, self.den)

    def __sub__(self, other) -> LaurentRat:
        return self + (-self._coerce(other))

    def __pow__(self, k: int) -> LaurentRat:
        if k < 0:
            return (1 / self) ** (-k)
        out = LaurentRat.const(self.cfg.scalar(1))
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, (LaurentRat, MonomialForm, ScalarExt, int, Fraction)):
            return NotImplemented
        other = self._coerce(other)
        return _prune(_pmul(self.num, other.den)) == _prune(_pmul(other.num, self.den))

    def __hash__(self) -> int:
        shift, n, d = self.canonical()
        return hash((shift, tuple(n), tuple(d)))

    def is_zero(self) -> bool:
        return not _prune(self.num)

    def substitute(self, c: ScalarExt, k: int) -> LaurentRat:
        """Replace X by c * X^k."""
        def sub(poly: Poly) -> Poly:
            out: Poly = {}
            for i, x in poly.items():
                term = x * (c**i)
                out[i * k] = out[i * k] + term if i * k in out else term
            return out

        return LaurentRat(sub(self.num), sub(self.den))

    def canonical(self) -> tuple[int, list[Cyclo], list[Cyclo]]:
        if self._canon is None:
            num, den = _prune(self.num), _prune(self.den)
            if not num:
                one = next(iter(den.values())) * 0 + 1
                self._canon = (0, [], [one])
                return self._canon
            lo_n, lo_d = min(num), min(den)
            zero = next(iter(den.values())) * 0
            n = [num.get(i, zero) for i in range(lo_n, max(num) + 1)]
            d = [den.get(i, zero) for i in range(lo_d, max(den) + 1)]
            g = _gcd(list(n), list(d))
            if len(g) > 1:
                n, _ = _divmod(n, g)
                d, _ = _divmod(d, g)
            lead = d[-1].inverse()
            self._canon = (lo_n - lo_d, [x * lead for x in n], [x * lead for x in d])
        return self._canon

    def to_monomial(self) -> MonomialForm:
        num, den = _prune(self.num), _prune(self.den)
        if len(num) == 1 and len(den) == 1:
            (i, a), (j, b) = next(iter(num.items())), next(iter(den.items()))
            return MonomialForm(ScalarExt(self.cfg, a * b.inverse()), i - j)
        shift, n, d = self.canonical()
        if len(n) != 1 or len(d) != 1:
            raise ShapeError("rational function is not a monomial")
        return MonomialForm(ScalarExt(self.cfg, n[0]), shift)

    def is_monomial(self) -> bool:
        try:
            self.to_monomial()
        except ShapeError:
            return False
        return True

    def evaluate(self, x: complex) -> complex:
        num = sum(complex_embed(c) * x**i for i, c in self.num.items())
        den = sum(complex_embed(c) * x**i for i, c in self.den.items())
        return num / den

    def to_json(self) -> dict:
        shift, n, d = self.canonical()
        cfg = self.cfg

        def pack(c: Cyclo) -> dict:
            return ScalarExt(cfg, c).to_json()

        return {
            "num": [[shift + i, pack(c)] for i, c in enumerate(n) if c],
            "den": [[i, pack(c)] for i, c in enumerate(d) if c],
        }

    def pretty(self) -> str:
        shift, n, d = self.canonical()

        def poly(coeffs: list[Cyclo], offset: int) -> str:
            parts = []
            for i, c in enumerate(coeffs):
                if c:
                    parts.append(f"({c!r})" + (f"*X^{i + offset}" if i + offset else ""))
            return " + ".join(parts) or "0"

        if len(d) == 1:
            return poly(n, shift)
        return f"[{poly(n, shift)}] / [{poly(d, 0)}]"

    def __repr__(self) -> str:
        return f"LaurentRat({self.pretty()})"
