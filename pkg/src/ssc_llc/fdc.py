"""Formal-degree arithmetic: the adjoint gamma identity and the finite search
that forces r and the triviality of L(s, Ad o phi).

Families: "SO_odd" (N = 2n+1), "SO_even" with p = 2 or p odd (read off q).
Everything is exact integer arithmetic; gamma(0, Ad o phi_pr, psi_0) stays a symbol.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction


def _p_of(q: int) -> int:
    for p in range(2, q + 1):
        if q % p == 0:
            return p
    raise ValueError(f"q = {q} is not a prime power")


def branch(family: str, q: int) -> str:
    if family == "SO_odd":
        return "SO_odd"
    if family == "SO_even":
        return "SO_even_p2" if _p_of(q) == 2 else "SO_even_odd"
    raise ValueError(f"unknown family {family!r}")


# number of tame characters among the constituents in each branch
CHARACTERS = {"SO_odd": 0, "SO_even_p2": 1, "SO_even_odd": 2}


def q_exponent(family: str, n: int) -> int:
    return n * n + n if family == "SO_odd" else n * n


def adjoint_dimension(family: str, n: int) -> int:
    return 2 * n * n + n if family == "SO_odd" else 2 * n * n - n


def formal_degree(family: str, n: int, q: int) -> tuple[Fraction, int]:
    """|deg(pi)| = c * q^k * gamma(0, Ad o phi_pr, psi_0)^{-1}; returns (c, k)."""
    b = branch(family, q)
    c = Fraction(1, 2) if b == "SO_even_odd" else Fraction(1)
    return c, q_exponent(family, n)


def fdc_rhs(family: str, n: int, q: int, r: int) -> dict:
    """2^{r - c} q^k with c the number of character constituents."""
    b = branch(family, q)
    two = r - CHARACTERS[b]
    k = q_exponent(family, n)
    value = Fraction(2) ** two * Fraction(q) ** k
    return {"two_exponent": two, "q_exponent": k, "value": value}


def _coprime_part(x: int, q: int) -> int:
    p = _p_of(q)
    while x % p == 0:
        x //= p
    return x


def _q_log(x: int, q: int) -> int | None:
    """k with q^k = x, or None."""
    k = 0
    while x % q == 0 and x > 1:
        x //= q
        k += 1
    return k if x == 1 else None


@dataclass
class FDCSolution:
    r: int
    poles: tuple[int, ...]
    artin: int
    wedge_pole_on_wild: bool

    def to_json(self) -> dict:
        return {"r": self.r, "poles": list(self.poles), "artin": self.artin, "wild_pole": self.wedge_pole_on_wild}


@dataclass
class SearchReport:
    family: str
    n: int
    q: int
    solutions: list[FDCSolution] = field(default_factory=list)
    witnesses: list[dict] = field(default_factory=list)
    nodes: int = 0
    truncated: bool = False

    def to_json(self) -> dict:
        return {
            "family": self.family, "n": self.n, "q": self.q,
            "solutions": [s.to_json() for s in self.solutions],
            "obstructions": self.witnesses[:8], "nodes": self.nodes, "truncated": self.truncated,
        }


def solve_constraints(family: str, n: int, q: int, e_max: int | None = None) -> SearchReport:
    """All (r, {e_i}, Artin) with 4^delta q^{Artin + 2 sum e} = q^{2k} prod (1 + q^{e_i})^2.

    delta = 1 when the wild constituent carries a pole of L(s, wedge^2),
    and the multiset has r - c + delta entries (one per tame non-character
    constituent, plus the wild one if delta = 1).  Dimensions bound r: the
    wild constituent has dimension >= 1, each tame non-character one >= 2.
    Branches die as soon as the part of the product prime to q exceeds the
    part of 4^delta prime to q, which can only grow.
    """
    b = branch(family, q)
    c = CHARACTERS[b]
    k = q_exponent(family, n)
    e_max = 2 * n * n if e_max is None else e_max
    report = SearchReport(family, n, q)
    r_max = c + (2 * n - 1 - c) // 2
    for r in range(c, r_max + 1):
        for delta in (0, 1):
            size = r - c + delta
            target = _coprime_part(4**delta, q)
            _search(report, q, k, r, delta, size, target, e_max, (), 1)
    return report


def _search(report: SearchReport, q: int, k: int, r: int, delta: int, size: int,
            target: int, e_max: int, poles: tuple[int, ...], product: int) -> None:
    report.nodes += 1
    if len(poles) == size:
        # q^{A} = q^{2k} prod (1 + q^e)^2 / (4^delta q^{2 sum e})
        num = q ** (2 * k) * product
        den = 4**delta * q ** (2 * sum(poles))
        if num % den:
            return
        artin = _q_log(num // den, q)
        if artin is not None:
            report.solutions.append(FDCSolution(r, poles, artin, bool(delta)))
        return
    start = poles[-1] if poles else 1
    for e in range(start, e_max + 1):
        factor = (1 + q**e) ** 2
        new = product * factor
        if _coprime_part(new, q) > target:
            report.witnesses.append({
                "r": r, "delta": delta, "poles": list(poles) + [e],
                "factor": factor, "prime_to_q": _coprime_part(factor, q), "bound": target,
            })
            # larger e only makes the prime-to-q part larger
            if _coprime_part(factor, q) > target:
                break
            continue
        _search(report, q, k, r, delta, size, target, e_max, poles + (e,), new)


def expected(family: str, n: int, q: int) -> tuple[int, int]:
    """(r, Artin) forced by the identity."""
    b = branch(family, q)
    return CHARACTERS[b], 2 * q_exponent(family, n)


def artin_consistency(family: str, n: int, artin: int, swan_total: int) -> bool:
    """Artin(Ad o phi) = dim Ad + n Swan(phi) when L(s, Ad o phi) = 1."""
    return artin == adjoint_dimension(family, n) + n * swan_total


def obstruction(q: int, poles: list[int], delta: int = 0) -> dict:
    """Why a nonempty pole multiset fails: the prime-to-q part of the product."""
    product = 1
    for e in poles:
        product *= (1 + q**e) ** 2
    part = _coprime_part(product, q)
    bound = _coprime_part(4**delta, q)
    return {"product": product, "prime_to_q": part, "bound": bound, "infeasible": part > bound}
