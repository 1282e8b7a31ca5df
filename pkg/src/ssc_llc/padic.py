"""Truncated arithmetic in the unramified extension F of Q_p with residue field k.

The uniformizer is p.  Integers of F are the Galois ring GR(p^K, f) =
(Z/p^K)[t] / (lift of k's defining polynomial); an element of F is stored as
p^val times a unit of that ring, together with the number of p-adic digits
of the unit that are known (relative precision).  A number with no known
digits is an inexact zero, known only to lie in p^val O.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .fields import FiniteField

EXACT = 1 << 20  # stands in for infinite precision of exact zero


class IndeterminateError(ArithmeticError):
    """The working precision cannot decide the requested property."""


class GaloisRing:
    def __init__(self, k: FiniteField):
        self.k = k
        self.p, self.f = k.p, k.n
        self.modulus = list(k.modulus)  # x^f + sum modulus[i] x^i

    def zero(self) -> tuple[int, ...]:
        return (0,) * self.f

    def one(self) -> tuple[int, ...]:
        return (1,) + (0,) * (self.f - 1)

    def const(self, c: int) -> tuple[int, ...]:
        return (c,) + (0,) * (self.f - 1)

    def reduce(self, x, prec: int) -> tuple[int, ...]:
        m = self.p**prec
        return tuple(c % m for c in x)

    def add(self, x, y, prec: int) -> tuple[int, ...]:
        m = self.p**prec
        return tuple((a + b) % m for a, b in zip(x, y))

    def scale(self, x, c: int, prec: int) -> tuple[int, ...]:
        m = self.p**prec
        return tuple((a * c) % m for a in x)

    def mul(self, x, y, prec: int) -> tuple[int, ...]:
        m = self.p**prec
        f = self.f
        if f == 1:
            return ((x[0] * y[0]) % m,)
        prod = [0] * (2 * f - 1)
        for i, a in enumerate(x):
            if a:
                for j, b in enumerate(y):
                    prod[i + j] += a * b
        for d in range(2 * f - 2, f - 1, -1):
            top = prod[d]
            if top:
                for i, c in enumerate(self.modulus):
                    prod[d - f + i] -= top * c
        return tuple(c % m for c in prod[:f])

    def valuation(self, x) -> int:
        """min p-adic valuation of the coefficients (EXACT for zero)."""
        v = EXACT
        for c in x:
            if c:
                t = 0
                while c % self.p == 0:
                    c //= self.p
                    t += 1
                v = min(v, t)
        return v

    def divide_p(self, x, t: int) -> tuple[int, ...]:
        d = self.p**t
        return tuple(c // d for c in x)

    def residue(self, x) -> int:
        """Image in k, encoded as k encodes its elements."""
        return sum((c % self.p) * self.p**i for i, c in enumerate(x))

    def lift(self, r: int) -> tuple[int, ...]:
        return tuple(self.k.digits(r))

    def inverse(self, x, prec: int) -> tuple[int, ...]:
        r = self.residue(x)
        if r == 0:
            raise ZeroDivisionError("not a unit")
        y = self.lift(self.k.inv(r))
        done = 1
        while done < prec:
            done = min(2 * done, prec)
            # Newton step y <- y (2 - x y)
            xy = self.mul(x, y, done)
            two_minus = tuple((-c) % self.p**done for c in xy)
            two_minus = (two_minus[0] + 2,) + two_minus[1:]
            y = self.mul(y, two_minus, done)
        return self.reduce(y, prec)

    def power(self, x, e: int, prec: int) -> tuple[int, ...]:
        out, base = self.one(), x
        while e:
            if e & 1:
                out = self.mul(out, base, prec)
            base = self.mul(base, base, prec)
            e >>= 1
        return out

    def teichmuller(self, r: int, prec: int) -> tuple[int, ...]:
        """The root of unity lifting r in k (0 lifts to 0)."""
        if r == 0:
            return self.zero()
        y = self.lift(r)
        q = self.p**self.f
        for _ in range(prec):
            y = self.power(y, q, prec)
        return y

    def random(self, rng: random.Random, prec: int) -> tuple[int, ...]:
        m = self.p**prec
        return tuple(rng.randrange(m) for _ in range(self.f))


@dataclass(frozen=True)
class PadicNum:
    """p^val * unit with `prec` known digits of the unit; prec = 0 is O(p^val)."""

    ring: GaloisRing
    val: int
    unit: tuple
    prec: int

    # construction
    @classmethod
    def from_ring(cls, ring: GaloisRing, x, prec: int) -> PadicNum:
        x = ring.reduce(x, prec)
        t = ring.valuation(x)
        if t >= prec:
            return cls.zero(ring, prec)
        return cls(ring, t, ring.divide_p(x, t), prec - t)

    @classmethod
    def from_int(cls, ring: GaloisRing, c: int, prec: int) -> PadicNum:
        if c == 0:
            return cls.exact_zero(ring)
        t = 0
        while c % ring.p == 0:
            c //= ring.p
            t += 1
        return cls(ring, t, ring.reduce(ring.const(c), prec), prec)

    @classmethod
    def from_fraction(cls, ring: GaloisRing, num: int, den: int, prec: int) -> PadicNum:
        return cls.from_int(ring, num, prec) / cls.from_int(ring, den, prec)

    @classmethod
    def zero(cls, ring: GaloisRing, val: int) -> PadicNum:
        return cls(ring, val, ring.zero(), 0)

    @classmethod
    def exact_zero(cls, ring: GaloisRing) -> PadicNum:
        return cls(ring, EXACT, ring.zero(), 0)

    @classmethod
    def teichmuller(cls, ring: GaloisRing, r: int, prec: int) -> PadicNum:
        if r == 0:
            return cls.exact_zero(ring)
        return cls(ring, 0, ring.teichmuller(r, prec), prec)

    @property
    def is_zero_ish(self) -> bool:
        return self.prec == 0

    @property
    def absolute(self) -> int:
        return self.val + self.prec if self.prec else self.val

    # arithmetic
    def __mul__(self, other: PadicNum) -> PadicNum:
        if self.prec == 0 or other.prec == 0:
            return PadicNum.zero(self.ring, min(EXACT, self.val + other.val))
        prec = min(self.prec, other.prec)
        return PadicNum(self.ring, self.val + other.val, self.ring.mul(self.unit, other.unit, prec), prec)

    def __add__(self, other: PadicNum) -> PadicNum:
        ring = self.ring
        if other.prec == 0 and other.val >= self.absolute:
            return self
        if self.prec == 0 and self.val >= other.absolute:
            return other
        absolute = min(self.absolute, other.absolute)
        v0 = min(self.val, other.val)
        width = absolute - v0
        if width <= 0:
            return PadicNum.zero(ring, absolute)
        total = ring.zero()
        for x in (self, other):
            if x.prec:
                total = ring.add(total, ring.scale(x.unit, ring.p ** (x.val - v0), width), width)
        t = ring.valuation(total)
        if t >= width:
            return PadicNum.zero(ring, absolute)
        return PadicNum(ring, v0 + t, ring.divide_p(total, t), width - t)

    def __neg__(self) -> PadicNum:
        if self.prec == 0:
            return self
        return PadicNum(self.ring, self.val, self.ring.scale(self.unit, -1, self.prec), self.prec)

    def __sub__(self, other: PadicNum) -> PadicNum:
        return self + (-other)

    def inverse(self) -> PadicNum:
        if self.prec == 0:
            raise IndeterminateError("cannot invert a number not known to be nonzero")
        return PadicNum(self.ring, -self.val, self.ring.inverse(self.unit, self.prec), self.prec)

    def __truediv__(self, other: PadicNum) -> PadicNum:
        return self * other.inverse()

    # predicates
    def valuation_at_least(self, bound: int) -> bool:
        if self.prec:
            return self.val >= bound
        if self.val >= bound:
            return True
        raise IndeterminateError(f"only known to have valuation >= {self.val}, asked about {bound}")

    def is_unit(self) -> bool:
        if self.prec:
            return self.val == 0
        if self.val >= 1:
            return False
        raise IndeterminateError("unit test on an inexact zero")

    def residue(self) -> int:
        if not self.valuation_at_least(0):
            raise ValueError("residue of a non-integral number")
        if self.prec == 0 or self.val > 0:
            return 0
        return self.ring.residue(self.unit)

    def congruent(self, other: PadicNum, digits: int) -> bool:
        return (self - other).valuation_at_least(digits)

    def __repr__(self) -> str:
        if self.prec == 0:
            return "0" if self.val >= EXACT else f"O(p^{self.val})"
        return f"p^{self.val}*{self.unit}+O(p^{self.val + self.prec})"


class PadicMatrix:
    def __init__(self, rows: list[list[PadicNum]]):
        self.rows = rows
        self.n = len(rows)

    def __getitem__(self, ij: tuple[int, int]) -> PadicNum:
        i, j = ij
        return self.rows[i][j]

    def __mul__(self, other: PadicMatrix) -> PadicMatrix:
        n = self.n
        ring = self.rows[0][0].ring
        zero = PadicNum.exact_zero(ring)
        cols = [[other.rows[k][j] for k in range(n)] for j in range(n)]
        out = []
        for i in range(n):
            row = self.rows[i]
            new_row = []
            for j in range(n):
                acc = zero
                for a, b in zip(row, cols[j]):
                    if a.prec == 0 and a.val >= EXACT or b.prec == 0 and b.val >= EXACT:
                        continue
                    acc = acc + a * b
                new_row.append(acc)
            out.append(new_row)
        return PadicMatrix(out)

    def transpose(self) -> PadicMatrix:
        return PadicMatrix([list(col) for col in zip(*self.rows)])

    def congruent(self, other: PadicMatrix, digits: int) -> bool:
        return all(
            self.rows[i][j].congruent(other.rows[i][j], digits)
            for i in range(self.n) for j in range(self.n)
        )

    def __repr__(self) -> str:
        return "\n".join(" ".join(repr(x) for x in row) for row in self.rows)


def matrix_from_fractions(ring: GaloisRing, entries: list[list], prec: int) -> PadicMatrix:
    """Rational entries (int or (num, den, p-power)) to a PadicMatrix."""
    from fractions import Fraction

    rows = []
    for row in entries:
        out = []
        for x in row:
            x = Fraction(x)
            if x == 0:
                out.append(PadicNum.exact_zero(ring))
            else:
                out.append(PadicNum.from_fraction(ring, x.numerator, x.denominator, prec))
        rows.append(out)
    return PadicMatrix(rows)


def identity(ring: GaloisRing, n: int, prec: int) -> PadicMatrix:
    one = PadicNum.from_int(ring, 1, prec)
    zero = PadicNum.exact_zero(ring)
    return PadicMatrix([[one if i == j else zero for j in range(n)] for i in range(n)])
