"""Finite fields F_{q^d} with log tables and compatible generators.

Elements are integers 0 .. p^n - 1 read as base-p digit vectors, digit i
being the coefficient of x^i modulo the defining polynomial.  The prime
field is the set of constants.  An extension of degree d of the residue
field k is built on its own primitive polynomial and then re-generated so
that the norm of its generator is the image of k's generator; this keeps
character indices on k meaningful inside every extension.
"""

from __future__ import annotations

import math
from functools import cached_property
from itertools import product


def _poly_mulx_mod(coeffs: list[int], modulus: list[int], p: int) -> list[int]:
    # multiply by x modulo a monic polynomial; modulus lists low..high without the leading 1
    n = len(modulus)
    top = coeffs[-1]
    shifted = [0] + coeffs[:-1]
    return [(shifted[i] - top * modulus[i]) % p for i in range(n)]


def _find_primitive_modulus(p: int, n: int) -> list[int]:
    if n == 1:
        for g in range(1, p):
            if all(pow(g, (p - 1) // r, p) != 1 for r in _prime_divisors(p - 1)):
                return [(-g) % p]
        raise AssertionError("no primitive root")
    order = p**n - 1
    for tail in product(range(p), repeat=n):
        modulus = list(tail)
        if modulus[0] == 0:
            continue
        x = [0] * n
        x[0] = 1
        one = list(x)
        k = 0
        while True:
            x = _poly_mulx_mod(x, modulus, p)
            k += 1
            if x == one:
                break
            if k > order:
                break
        if k == order:
            return modulus
    raise AssertionError("no primitive polynomial found")


def _prime_divisors(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


class FiniteField:
    """F_{p^n}; `gen` is the integer code of the chosen generator."""

    def __init__(self, p: int, n: int, modulus: list[int] | None = None, gen_exponent: int = 1):
        self.p, self.n = p, n
        self.size = p**n
        self.order = self.size - 1
        self.modulus = modulus if modulus is not None else _find_primitive_modulus(p, n)
        base = [0] * n
        base[0] = 1
        powers = []
        x = base
        for _ in range(self.order):
            powers.append(self._encode(x))
            x = _poly_mulx_mod(x, self.modulus, p)
        if len(set(powers)) != self.order:
            raise ValueError("modulus is not primitive")
        # re-index by gen = x^gen_exponent
        self.exp = [powers[(gen_exponent * t) % self.order] for t in range(self.order)]
        if len(set(self.exp)) != self.order:
            raise ValueError("generator exponent not coprime to the group order")
        self.log = {v: t for t, v in enumerate(self.exp)}
        self.gen = self.exp[1] if self.order > 1 else 1

    def _encode(self, coeffs: list[int]) -> int:
        return sum(c * self.p**i for i, c in enumerate(coeffs))

    def digits(self, x: int) -> list[int]:
        out = []
        for _ in range(self.n):
            x, r = divmod(x, self.p)
            out.append(r)
        return out

    def add(self, x: int, y: int) -> int:
        p = self.p
        out, scale = 0, 1
        for _ in range(self.n):
            x, r = divmod(x, p)
            y, s = divmod(y, p)
            out += ((r + s) % p) * scale
            scale *= p
        return out

    def neg(self, x: int) -> int:
        return self._encode([(-c) % self.p for c in self.digits(x)])

    def sub(self, x: int, y: int) -> int:
        return self.add(x, self.neg(y))

    def mul(self, x: int, y: int) -> int:
        if x == 0 or y == 0:
            return 0
        return self.exp[(self.log[x] + self.log[y]) % self.order]

    def inv(self, x: int) -> int:
        if x == 0:
            raise ZeroDivisionError("inverse of zero in finite field")
        return self.exp[-self.log[x] % self.order]

    def power(self, x: int, k: int) -> int:
        if x == 0:
            if k <= 0:
                raise ZeroDivisionError("non-positive power of zero")
            return 0
        return self.exp[(self.log[x] * k) % self.order]

    def from_int(self, m: int) -> int:
        return m % self.p

    def elements(self) -> range:
        return range(self.size)

    def units(self) -> list[int]:
        return list(self.exp)

    def frobenius(self, x: int, times: int = 1) -> int:
        return self.power(x, self.p**times) if x else 0

    def absolute_trace(self, x: int) -> int:
        """Tr_{F_{p^n}/F_p}(x) as an integer in [0, p)."""
        total = 0
        y = x
        for _ in range(self.n):
            total = self.add(total, y)
            y = self.frobenius(y)
        if total >= self.p:
            raise AssertionError("trace left the prime field")
        return total

    @cached_property
    def trace_table(self) -> list[int]:
        return [self.absolute_trace(x) for x in range(self.size)]

    def is_square(self, x: int) -> bool:
        if x == 0:
            return True
        return self.p == 2 or self.log[x] % 2 == 0

    def __repr__(self) -> str:
        return f"FiniteField({self.p}^{self.n}, modulus={self.modulus})"


class Extension:
    """F_{q^d} over the residue field k = F_q, with compatible generators.

    Nm_{d/1}(gen_d) is the image of gen_k, so the embedding k -> F_{q^d} is
    gen_k^t -> gen_d^{t (q^d-1)/(q-1)} and character indices restrict by
    reduction modulo q - 1.
    """

    def __init__(self, base: FiniteField, d: int):
        self.base, self.d = base, d
        self.q = base.size
        if d == 1:
            self.field = base
            return
        p, f = base.p, base.n
        raw = FiniteField(p, f * d)
        big = raw.order
        ratio = big // base.order
        # image of gen_k: any root of k's defining polynomial inside the big field
        target = next(
            r for r in (raw.exp[(t * ratio) % big] for t in range(base.order))
            if self._is_root_of_base_modulus(raw, r)
        )
        u = raw.log[target] // ratio
        while math.gcd(u, big) != 1:
            u += base.order
        self.field = FiniteField(p, f * d, modulus=raw.modulus, gen_exponent=u)

    def _is_root_of_base_modulus(self, raw: FiniteField, r: int) -> bool:
        # evaluate x^f + sum modulus[i] x^i at r
        f = self.base.n
        acc = raw.power(r, f)
        for i, c in enumerate(self.base.modulus):
            if c:
                term = raw.mul(raw.from_int(c), raw.power(r, i)) if i else raw.from_int(c)
                acc = raw.add(acc, term)
        return acc == 0

    @property
    def size(self) -> int:
        return self.field.size

    def embed_base(self, x: int) -> int:
        if self.d == 1 or x == 0:
            return x
        ratio = self.field.order // self.base.order
        return self.field.exp[(self.base.log[x] * ratio) % self.field.order]

    def subfield(self, e: int) -> list[int]:
        if self.d % e:
            raise ValueError(f"{e} does not divide {self.d}")
        ratio = self.field.order // (self.q**e - 1)
        return [0] + [self.field.exp[(t * ratio) % self.field.order] for t in range(self.q**e - 1)]

    def sub_gen(self, e: int) -> int:
        if self.d % e:
            raise ValueError(f"{e} does not divide {self.d}")
        return self.field.power(self.field.gen, self.field.order // (self.q**e - 1))

    def trace(self, x: int, e: int) -> int:
        if self.d % e:
            raise ValueError(f"{e} does not divide {self.d}")
        total, y = 0, x
        for _ in range(self.d // e):
            total = self.field.add(total, y)
            y = self.field.power(y, self.q**e) if y else 0
        return total

    def norm(self, x: int, e: int) -> int:
        if self.d % e:
            raise ValueError(f"{e} does not divide {self.d}")
        if x == 0:
            return 0
        return self.field.power(x, (self.q**self.d - 1) // (self.q**e - 1))
