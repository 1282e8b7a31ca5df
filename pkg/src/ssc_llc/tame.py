"""Tame irreducible self-dual representations Ind_{W_E}^{W_F} chi, E/F unramified.

A representation is recorded by (q, d, j, value): the unit index j of chi on
F_{q^d}^x and chi(pi).  Galois acts on indices by j -> j q.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .characters import LocalField, TameCharacter
from .laurent import LaurentRat


def orbit(q: int, d: int, j: int) -> tuple[int, ...]:
    mod = q**d - 1
    return tuple(sorted({(j * q**i) % mod for i in range(d)}))


@dataclass(frozen=True)
class TameInducedRep:
    q: int
    d: int
    j: int
    value: Fraction  # angle of chi(pi)

    def __post_init__(self):
        object.__setattr__(self, "j", self.j % (self.q**self.d - 1))
        object.__setattr__(self, "value", Fraction(self.value) % 1)

    @property
    def e(self) -> int:
        return self.d // 2

    @property
    def chi(self) -> TameCharacter:
        return TameCharacter(self.q, self.j, self.value, self.d)

    def key(self) -> tuple:
        """Isomorphism class: the Galois orbit of chi (chi^g has the same value at pi)."""
        return (self.d, orbit(self.q, self.d, self.j), self.value)


def is_regular(q: int, d: int, j: int) -> bool:
    return len(orbit(q, d, j)) == d


def is_self_dual(q: int, d: int, j: int, value: Fraction) -> bool:
    if d % 2:
        return False
    mod = q**d - 1
    return (j * q ** (d // 2) + j) % mod == 0 and (2 * Fraction(value)) % 1 == 0


def classify_tame(q: int, d: int, j: int, value=0) -> dict:
    """Regularity, self-duality and orthogonal / symplectic type.

    The type reads off chi restricted to E'^x (E' of degree d/2): trivial
    gives orthogonal, the unramified quadratic character gives symplectic.
    """
    value = Fraction(value) % 1
    regular = is_regular(q, d, j)
    self_dual = regular and is_self_dual(q, d, j, value)
    kind = "none"
    if self_dual:
        rest = TameCharacter(q, j, value, d).restrict(d // 2)
        if rest.is_trivial():
            kind = "orthogonal"
        elif rest.unramified and rest.angle == Fraction(1, 2):
            kind = "symplectic"
        else:
            raise AssertionError(f"restriction {rest} is neither trivial nor unramified quadratic")
    return {"q": q, "d": d, "j": j % (q**d - 1), "regular": regular, "self_dual": self_dual, "type": kind}


def type_by_determinant(q: int, d: int, j: int, value) -> str:
    """Type from det(Ind_{E}^{E'} chi) = mu_ur . chi|E'^x: symplectic iff the
    determinant is trivial.  Works on values directly, without restrict()."""
    e = d // 2
    mod_e = q**e - 1
    # chi|E'^x at the generator of F_{q^e}: gen_d^{(q^d-1)/(q^e-1)}
    unit_angle = Fraction(j * ((q**d - 1) // mod_e), q**d - 1) % 1
    det_unit = unit_angle
    det_pi = (Fraction(1, 2) + Fraction(value)) % 1
    return "symplectic" if det_unit == 0 and det_pi == 0 else "orthogonal"


def _require_self_dual(rep: TameInducedRep) -> None:
    if not (is_regular(rep.q, rep.d, rep.j) and is_self_dual(rep.q, rep.d, rep.j, rep.value)):
        raise ValueError(f"{rep} is not a self-dual irreducible induced representation")


def sym_ext_L(F: LocalField, rep: TameInducedRep) -> dict[str, LaurentRat]:
    """L(s, Sym^2 rho) and L(s, wedge^2 rho) for tame self-dual rho.

    chi itself is never self-dual here (chi^2 = 1 would contradict
    regularity), so the factor attached to the type is (1 + X^e)^{-1};
    the complementary square carries the e unramified characters with
    omega^e = 1, giving (1 - X^e)^{-1}.
    """
    _require_self_dual(rep)
    cfg = F.cfg
    one = cfg.scalar(1)
    e = rep.e
    plus = LaurentRat({0: one}, {0: one, e: one})
    minus = LaurentRat({0: one}, {0: one, e: -one})
    kind = classify_tame(rep.q, rep.d, rep.j, rep.value)["type"]
    if kind == "orthogonal":
        return {"L_sym2": minus, "L_ext2": plus}
    return {"L_sym2": plus, "L_ext2": minus}


def _cycle_factors(perm: dict, scale: dict) -> list[tuple[int, Fraction]]:
    """det(1 - X M) for a monomial matrix M as a list of (cycle length, angle of the product)."""
    seen, out = set(), []
    for start in perm:
        if start in seen:
            continue
        length, angle, cur = 0, Fraction(0), start
        while cur not in seen:
            seen.add(cur)
            angle += scale[cur]
            cur = perm[cur]
            length += 1
        out.append((length, angle % 1))
    return out


def square_L_bruteforce(F: LocalField, rep: TameInducedRep) -> dict[str, LaurentRat]:
    """Oracle: build rho as d x d monomial matrices and read off both factors.

    Basis e_0..e_{d-1}; inertia acts on e_i through j q^i, Frobenius sends
    e_i to e_{i+1} and e_{d-1} to chi(pi) e_0.  The inertia invariants of
    rho (x) rho are spanned by the pairs whose indices cancel.
    """
    q, d, j = rep.q, rep.d, rep.j
    mod = q**d - 1
    idx = [(j * q**i) % mod for i in range(d)]
    cfg = F.cfg
    one = cfg.scalar(1)
    result = {}
    for name, sign in (("L_sym2", 0), ("L_ext2", Fraction(1, 2))):
        pairs = [(a, b) for a in range(d) for b in range(a, d) if (idx[a] + idx[b]) % mod == 0]
        if sign:
            pairs = [(a, b) for a, b in pairs if a != b]
        perm, scale = {}, {}
        for a, b in pairs:
            a2, b2 = a + 1, b + 1
            angle = Fraction(0)
            if a2 == d:
                a2, angle = 0, angle + rep.value
            if b2 == d:
                b2, angle = 0, angle + rep.value
            if a2 > b2:
                a2, b2 = b2, a2
                angle += sign  # swapping wedge factors costs a sign
            perm[(a, b)] = (a2, b2)
            scale[(a, b)] = angle
        den = {0: one}
        for length, angle in _cycle_factors(perm, scale):
            factor = {0: one, length: -cfg.root(angle)}
            new: dict = {}
            for i, x in den.items():
                for k, y in factor.items():
                    new[i + k] = new[i + k] + x * y if i + k in new else x * y
            den = new
        result[name] = LaurentRat({0: one}, den)
    return result


def self_dual_regular(q: int, d: int) -> list[int]:
    """All unit indices j of self-dual regular chi (value at pi is then +-1)."""
    return [j for j in range(q**d - 1) if is_regular(q, d, j) and is_self_dual(q, d, j, 0)]


def unramified_twist_fixers(F: LocalField, d: int) -> list[TameCharacter]:
    """Unramified omega with rho (x) omega = rho: exactly omega(pi)^d = 1."""
    return [F.char(0, Fraction(k, d)) for k in range(d)]


def twist(rep: TameInducedRep, omega: TameCharacter) -> TameInducedRep:
    """rho (x) omega for unramified omega: chi becomes chi . (omega o Nm)."""
    if not omega.unramified:
        raise ValueError("only unramified twists are modelled")
    return TameInducedRep(rep.q, rep.d, rep.j, rep.value + rep.d * omega.angle)


def twist_fixers_bruteforce(F: LocalField, rep: TameInducedRep, order_bound: int = 8) -> list[TameCharacter]:
    chars = [c for c in F.tame_characters(order_bound) if c.unramified]
    return [c for c in chars if twist(rep, c).key() == rep.key()]


def cross_term_free(F: LocalField, d: int, order_bound: int = 8) -> bool:
    """No unramified twist carries one self-dual regular rep of a given type
    to a different one of the same type and degree."""
    reps = []
    for j in self_dual_regular(F.q, d):
        for v in (Fraction(0), Fraction(1, 2)):
            rep = TameInducedRep(F.q, d, j, v)
            if rep.key() not in {r.key() for r in reps}:
                reps.append(rep)
    unram = [c for c in F.tame_characters(order_bound) if c.unramified]
    for r1 in reps:
        t1 = classify_tame(r1.q, d, r1.j, r1.value)["type"]
        for r2 in reps:
            if r1.key() == r2.key() or classify_tame(r2.q, d, r2.j, r2.value)["type"] != t1:
                continue
            if any(twist(r1, w).key() == r2.key() for w in unram):
                return False
    return True
