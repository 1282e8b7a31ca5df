"""Exact arithmetic in Q(zeta_M)[sqrt q].

Elements of Q(zeta_M) are stored sparsely as integer coefficients on powers
of zeta_M over a common denominator.  The normal form uses the tensor basis
of the prime-power cyclotomic fields: writing M = prod l^k, a power zeta_M^e
is in the basis when every CRT component e mod l^k lies below phi(l^k).
Anything outside the basis is rewritten with the relation
1 + x^(m/l) + ... + x^((l-1)m/l) = 0.  Unique normal form makes equality an
exact dictionary comparison, and sparse storage keeps Gauss sums cheap even
when M has tens of thousands of divisors.

sqrt(q) is carried as a second coordinate so that most arithmetic never
touches it, but equality, hashing and inversion fold it into Q(zeta_M) through
the standard embedding (zeta_M = exp(2 pi i / M), sqrt(q) > 0).
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import reduce
from itertools import product
from typing import Iterable

import mpmath


def factorize(n: int) -> list[tuple[int, int]]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            k = 0
            while n % d == 0:
                n //= d
                k += 1
            out.append((d, k))
        d += 1
    if n > 1:
        out.append((n, 1))
    return out


def lcm(*values: int) -> int:
    return reduce(lambda x, y: x * y // math.gcd(x, y), values, 1)


class CyclotomicField:
    """Normal-form engine for Q(zeta_m)."""

    def __init__(self, m: int):
        if m < 1:
            raise ValueError("conductor must be positive")
        self.m = m
        self.parts = []
        for ell, k in factorize(m):
            mod = ell**k
            crt = (m // mod) * pow(m // mod, -1, mod) % m
            self.parts.append((ell, mod, mod - mod // ell, crt))
        self.degree = math.prod(phi for _, _, phi, _ in self.parts)
        self._cache: dict[int, tuple[tuple[int, int], ...]] = {}

    def reduce(self, e: int) -> tuple[tuple[int, int], ...]:
        """Basis expansion of zeta_m^e as ((sign, exponent), ...)."""
        e %= self.m
        hit = self._cache.get(e)
        if hit is not None:
            return hit
        pieces = []
        for ell, mod, phi, crt in self.parts:
            c = e % mod
            if c < phi:
                pieces.append(((1, c * crt),))
            else:
                r = c - phi
                step = mod // ell
                pieces.append(tuple((-1, (r + t * step) * crt) for t in range(ell - 1)))
        out = []
        for combo in product(*pieces):
            sign = 1
            exp = 0
            for s, x in combo:
                sign *= s
                exp += x
            out.append((sign, exp % self.m))
        hit = tuple(out)
        self._cache[e] = hit
        return hit

    def basis(self) -> list[int]:
        ranges = [range(phi) for _, _, phi, _ in self.parts]
        crts = [crt for _, _, _, crt in self.parts]
        return sorted(sum(c * x for c, x in zip(combo, crts)) % self.m for combo in product(*ranges))


class CyclotomicConfig:
    """Conductor and sqrt(q) data for a residue field of size q = p^f.

    M = lcm(p, q^d - 1 for d <= D, 8, 1..root_bound).  The last factor lets
    uniformizer values of any order up to root_bound live in the field.
    """

    def __init__(self, p: int, f: int = 1, D: int = 4, root_bound: int = 8):
        if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
            raise ValueError(f"{p} is not prime")
        if f < 1 or D < 1 or root_bound < 1:
            raise ValueError("f, D and root_bound must be positive")
        self.p, self.f, self.D, self.root_bound = p, f, D, root_bound
        self.q = p**f
        self.M = lcm(p, 8, *(self.q**d - 1 for d in range(1, D + 1)), *range(1, root_bound + 1))
        self.field = CyclotomicField(self.M)
        self._sqrt_q: Cyclo | None = None

    def __repr__(self) -> str:
        return f"CyclotomicConfig(p={self.p}, f={self.f}, D={self.D}, M={self.M})"

    def cyclo(self, value=0) -> Cyclo:
        return Cyclo.rational(self.field, value)

    def scalar(self, value=0) -> ScalarExt:
        return ScalarExt(self, self.cyclo(value))

    def zeta(self, order: int, exponent: int = 1) -> Cyclo:
        if self.M % order:
            raise ValueError(f"order {order} does not divide M = {self.M}")
        return Cyclo.monomial(self.field, exponent * (self.M // order))

    def root(self, angle: Fraction) -> ScalarExt:
        """exp(2 pi i angle) for a rational angle whose denominator divides M."""
        angle = Fraction(angle)
        if self.M % angle.denominator:
            raise ValueError(f"root of order {angle.denominator} does not divide M = {self.M}")
        return ScalarExt(self, Cyclo.monomial(self.field, angle.numerator * (self.M // angle.denominator)))

    def sqrt_q(self) -> ScalarExt:
        return ScalarExt(self, self.cyclo(0), self.cyclo(1))

    def sqrt_q_cyclo(self) -> Cyclo:
        """Positive real sqrt(q) as an element of Q(zeta_M)."""
        if self._sqrt_q is None:
            p, f = self.p, self.f
            if f % 2 == 0:
                self._sqrt_q = self.cyclo(p ** (f // 2))
                return self._sqrt_q
            if p == 2:
                root_p = self.zeta(8, 1) + self.zeta(8, -1)
            else:
                gauss = self.cyclo(0)
                for x in range(1, p):
                    sign = 1 if pow(x, (p - 1) // 2, p) == 1 else -1
                    gauss = gauss + self.zeta(p, x) * sign
                # quadratic Gauss sum is sqrt(p) or i sqrt(p)
                root_p = gauss if p % 4 == 1 else gauss * self.zeta(4, -1)
            self._sqrt_q = root_p * p ** ((f - 1) // 2)
        return self._sqrt_q


class Cyclo:
    """Element of Q(zeta_m): {exponent: integer} over a positive denominator."""

    __slots__ = ("field", "terms", "den")

    def __init__(self, field: CyclotomicField, terms: dict[int, int], den: int = 1, normal: bool = False):
        self.field = field
        if not normal:
            red: dict[int, int] = {}
            for e, c in terms.items():
                if c:
                    for s, x in field.reduce(e):
                        red[x] = red.get(x, 0) + s * c
            terms = red
        terms = {e: c for e, c in terms.items() if c}
        if den < 0:
            den = -den
            terms = {e: -c for e, c in terms.items()}
        g = reduce(math.gcd, terms.values(), den)
        if g > 1:
            den //= g
            terms = {e: c // g for e, c in terms.items()}
        if not terms:
            den = 1
        self.terms = terms
        self.den = den

    @classmethod
    def rational(cls, field: CyclotomicField, value) -> Cyclo:
        value = Fraction(value)
        return cls(field, {0: value.numerator} if value else {}, value.denominator, normal=True)

    @classmethod
    def monomial(cls, field: CyclotomicField, exponent: int) -> Cyclo:
        return cls(field, {exponent: 1})

    def _coerce(self, other) -> Cyclo:
        if isinstance(other, Cyclo):
            if other.field is not self.field:
                raise ValueError("elements from different cyclotomic fields")
            return other
        return Cyclo.rational(self.field, other)

    def __add__(self, other) -> Cyclo:
        other = self._coerce(other)
        den = self.den * other.den // math.gcd(self.den, other.den)
        u, v = den // self.den, den // other.den
        terms = {e: c * u for e, c in self.terms.items()}
        for e, c in other.terms.items():
            terms[e] = terms.get(e, 0) + c * v
        return Cyclo(self.field, terms, den)

    __radd__ = __add__

    def __neg__(self) -> Cyclo:
        return Cyclo(self.field, {e: -c for e, c in self.terms.items()}, self.den, normal=True)

    def __sub__(self, other) -> Cyclo:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> Cyclo:
        return self._coerce(other) - self

    def __mul__(self, other) -> Cyclo:
        if not isinstance(other, Cyclo):
            value = Fraction(other)
            return Cyclo(self.field, {e: c * value.numerator for e, c in self.terms.items()},
                         self.den * value.denominator, normal=True)
        other = self._coerce(other)
        if len(self.terms) > len(other.terms):
            return other * self
        m = self.field.m
        reduce_ = self.field.reduce
        out: dict[int, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                c = c1 * c2
                for s, x in reduce_((e1 + e2) % m):
                    out[x] = out.get(x, 0) + s * c
        return Cyclo(self.field, out, self.den * other.den, normal=True)

    __rmul__ = __mul__

    def __truediv__(self, other) -> Cyclo:
        if isinstance(other, Cyclo):
            return self * other.inverse()
        return self * (1 / Fraction(other))

    def __pow__(self, k: int) -> Cyclo:
        if k < 0:
            return self.inverse() ** (-k)
        out = Cyclo.rational(self.field, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, Cyclo):
            try:
                other = self._coerce(other)
            except (TypeError, ValueError):
                return NotImplemented
        return self.den == other.den and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.den, frozenset(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = [f"{c}*z^{e}" if e else str(c) for e, c in sorted(self.terms.items())]
        body = " + ".join(parts)
        return f"({body})/{self.den}" if self.den != 1 else body

    def conj(self) -> Cyclo:
        return Cyclo(self.field, {-e % self.field.m: c for e, c in self.terms.items()}, self.den)

    def is_rational(self) -> bool:
        return set(self.terms) <= {0}

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("element is not rational")
        return Fraction(self.terms.get(0, 0), self.den)

    def conductor(self) -> int:
        g = reduce(math.gcd, self.terms, self.field.m)
        return self.field.m // g

    def inverse(self) -> Cyclo:
        if not self.terms:
            raise ZeroDivisionError("inverse of zero")
        norm = self * self.conj()
        if norm.is_rational():
            return self.conj() * (1 / norm.rational_value())
        return self._inverse_by_linear_algebra()

    def _inverse_by_linear_algebra(self) -> Cyclo:
        # solve z * w = 1 inside the smallest cyclotomic subfield containing z
        m = self.conductor()
        scale = self.field.m // m
        sub = CyclotomicField(m)
        z = Cyclo(sub, {e // scale: c for e, c in self.terms.items()}, self.den)
        basis = sub.basis()
        index = {e: i for i, e in enumerate(basis)}
        n = len(basis)
        rows = [[Fraction(0)] * (n + 1) for _ in range(n)]
        for col, b in enumerate(basis):
            image = z * Cyclo.monomial(sub, b)
            for e, c in image.terms.items():
                rows[index[e]][col] = Fraction(c, image.den)
        rows[index[0]][n] = Fraction(1)
        for col in range(n):
            pivot = next(r for r in range(col, n) if rows[r][col])
            rows[col], rows[pivot] = rows[pivot], rows[col]
            inv = 1 / rows[col][col]
            rows[col] = [x * inv for x in rows[col]]
            for r in range(n):
                if r != col and rows[r][col]:
                    factor = rows[r][col]
                    rows[r] = [x - factor * y for x, y in zip(rows[r], rows[col])]
        den = lcm(*(rows[i][n].denominator for i in range(n)))
        terms = {basis[i] * scale: int(rows[i][n] * den) for i in range(n) if rows[i][n]}
        return Cyclo(self.field, terms, den)

    def embed(self, digits: int = 15) -> complex:
        m = self.field.m
        if digits <= 15:
            total = sum(c * cmath.exp(2j * math.pi * e / m) for e, c in self.terms.items())
            return total / self.den
        with mpmath.workdps(digits + 5):
            total = mpmath.fsum(c * mpmath.expjpi(mpmath.mpf(2 * e) / m) for e, c in self.terms.items())
            return complex(total / self.den)

    def to_json(self) -> list:
        return [[e, str(Fraction(c, self.den))] for e, c in sorted(self.terms.items())]


class ScalarExt:
    """a + b*sqrt(q) with a, b in Q(zeta_M)."""

    __slots__ = ("cfg", "a", "b", "_folded")

    def __init__(self, cfg: CyclotomicConfig, a: Cyclo, b: Cyclo | None = None):
        self.cfg = cfg
        self.a = a
        self.b = b if b is not None else Cyclo.rational(cfg.field, 0)
        self._folded: Cyclo | None = None

    def _coerce(self, other) -> ScalarExt:
        if isinstance(other, ScalarExt):
            if other.cfg is not self.cfg:
                raise ValueError("scalars from different configurations")
            return other
        if isinstance(other, Cyclo):
            return ScalarExt(self.cfg, other)
        return self.cfg.scalar(other)

    def folded(self) -> Cyclo:
        if self._folded is None:
            self._folded = self.a + self.b * self.cfg.sqrt_q_cyclo() if self.b else self.a
        return self._folded

    def __add__(self, other) -> ScalarExt:
        other = self._coerce(other)
        return ScalarExt(self.cfg, self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __neg__(self) -> ScalarExt:
        return ScalarExt(self.cfg, -self.a, -self.b)

    def __sub__(self, other) -> ScalarExt:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> ScalarExt:
        return self._coerce(other) - self

    def __mul__(self, other) -> ScalarExt:
        if isinstance(other, (int, Fraction)):
            return ScalarExt(self.cfg, self.a * other, self.b * other)
        other = self._coerce(other)
        a = self.a * other.a
        if self.b and other.b:
            a = a + self.b * other.b * self.cfg.q
        b = self.a * other.b + self.b * other.a if (self.b or other.b) else None
        return ScalarExt(self.cfg, a, b)

    __rmul__ = __mul__

    def __truediv__(self, other) -> ScalarExt:
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        return self * scalar_inverse(self._coerce(other))

    def __rtruediv__(self, other) -> ScalarExt:
        return self._coerce(other) * scalar_inverse(self)

    def __pow__(self, k: int) -> ScalarExt:
        if k < 0:
            return scalar_inverse(self) ** (-k)
        out = self.cfg.scalar(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, (ScalarExt, Cyclo, int, Fraction)):
            return NotImplemented
        other = self._coerce(other)
        if self.a == other.a and self.b == other.b:
            return True
        return self.folded() == other.folded()

    def __hash__(self) -> int:
        return hash(self.folded())

    def __bool__(self) -> bool:
        return bool(self.folded())

    def __repr__(self) -> str:
        if not self.b:
            return f"ScalarExt({self.a!r})"
        return f"ScalarExt({self.a!r} + ({self.b!r})*sqrt({self.cfg.q}))"

    def conj(self) -> ScalarExt:
        return ScalarExt(self.cfg, self.a.conj(), self.b.conj())

    def norm2(self) -> ScalarExt:
        return self * self.conj()

    def is_rational(self) -> bool:
        return self.folded().is_rational()

    def rational_value(self) -> Fraction:
        return self.folded().rational_value()

    def to_json(self) -> dict:
        return {"M": self.cfg.M, "a_coeffs": self.a.to_json(), "b_coeffs": self.b.to_json()}


def cyclo_root_of_unity(cfg: CyclotomicConfig, order: int, exponent: int) -> ScalarExt:
    if order < 1 or cfg.M % order:
        raise ValueError(f"order {order} does not divide M = {cfg.M}")
    return cfg.root(Fraction(exponent, order))


def scalar_inverse(z: ScalarExt) -> ScalarExt:
    if not z.b:
        return ScalarExt(z.cfg, z.a.inverse())
    # (a + b r)(a - b r) = a^2 - q b^2 is sqrt-free
    norm = z.a * z.a - z.b * z.b * z.cfg.q
    if norm:
        inv = norm.inverse()
        return ScalarExt(z.cfg, z.a * inv, -z.b * inv)
    folded = z.folded()
    if not folded:
        raise ZeroDivisionError("inverse of zero")
    return ScalarExt(z.cfg, folded.inverse())


def complex_embed(z: ScalarExt, digits: int = 15) -> complex:
    return z.a.embed(digits) + z.b.embed(digits) * math.sqrt(z.cfg.q)


def q_power(cfg: CyclotomicConfig, half_exponent: int) -> ScalarExt:
    """q^(half_exponent/2)."""
    whole, odd = divmod(half_exponent, 2)
    value = Fraction(cfg.q) ** whole
    if odd:
        return ScalarExt(cfg, cfg.cyclo(0), cfg.cyclo(value))
    return cfg.scalar(value)


def sum_scalars(cfg: CyclotomicConfig, values: Iterable[ScalarExt]) -> ScalarExt:
    total = cfg.scalar(0)
    for v in values:
        total = total + v
    return total
