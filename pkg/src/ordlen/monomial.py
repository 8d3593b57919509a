"""Monomial-ideal arithmetic over a fixed polynomial ring k[x_1..x_n].

The field k is purely formal: every invariant computed downstream is
field-independent, so no coefficient arithmetic exists anywhere.  Ideals
are kept as canonical minimal generating antichains, which makes equality
structural.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable

from .chow import PrimeSupport
from .errors import (
    AmbientMismatchError,
    InvalidSubquotientError,
    TooManyVariablesError,
)

# Associated-prime search is exponential in the variable count; keep a desk
# scale default, overridable via set_max_vars (CLI flag --max-vars).
_DEFAULT_MAX_VARS = 16
_max_vars = _DEFAULT_MAX_VARS


def set_max_vars(n: int | None) -> None:
    global _max_vars
    _max_vars = _DEFAULT_MAX_VARS if n is None else n


def get_max_vars() -> int:
    return _max_vars


@dataclass(frozen=True)
class Monomial:
    """A monomial given by its exponent vector; 1 is the all-zeros vector."""

    exponents: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(e < 0 for e in self.exponents):
            raise ValueError("negative exponent")

    @property
    def n(self) -> int:
        return len(self.exponents)

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    @property
    def is_one(self) -> bool:
        return not any(self.exponents)

    @property
    def support(self) -> frozenset[int]:
        return frozenset(i for i, e in enumerate(self.exponents) if e)

    def divides(self, other: Monomial) -> bool:
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def times(self, other: Monomial) -> Monomial:
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def lcm(self, other: Monomial) -> Monomial:
        return Monomial(tuple(max(a, b) for a, b in zip(self.exponents, other.exponents)))

    def quotient_by(self, other: Monomial) -> Monomial:
        """self / gcd(self, other), the monomial colon quotient."""
        return Monomial(tuple(max(a - b, 0) for a, b in zip(self.exponents, other.exponents)))

    def sort_key(self) -> tuple:
        # degree-lexicographic with x_0 > x_1 > ..., the deterministic
        # order used in all searches and displays
        return (self.degree, tuple(-e for e in self.exponents))


def one_monomial(n: int) -> Monomial:
    return Monomial((0,) * n)


def variable(n: int, i: int) -> Monomial:
    return Monomial(tuple(1 if j == i else 0 for j in range(n)))


def _minimize(gens: Iterable[Monomial]) -> tuple[Monomial, ...]:
    uniq = sorted(set(gens), key=Monomial.sort_key)
    keep: list[Monomial] = []
    for g in uniq:
        if not any(h.divides(g) for h in keep):
            keep.append(g)
    return tuple(keep)


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal as its minimal generating antichain, sorted deg-lex."""

    ambient_n: int
    gens: tuple[Monomial, ...]

    def __post_init__(self) -> None:
        if self.ambient_n > _max_vars:
            raise TooManyVariablesError(
                "%d variables exceeds the cap of %d" % (self.ambient_n, _max_vars)
            )
        for g in self.gens:
            if g.n != self.ambient_n:
                raise AmbientMismatchError("generator in wrong ring")

    @classmethod
    def make(cls, ambient_n: int, gens: Iterable[Monomial | tuple[int, ...]]) -> MonomialIdeal:
        monos = [g if isinstance(g, Monomial) else Monomial(tuple(g)) for g in gens]
        return cls(ambient_n, _minimize(monos))

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return len(self.gens) == 1 and self.gens[0].is_one

    @property
    def support(self) -> frozenset[int]:
        """Union of the supports of the generators."""
        out: set[int] = set()
        for g in self.gens:
            out |= g.support
        return frozenset(out)

    @property
    def max_degree(self) -> int:
        return max((g.degree for g in self.gens), default=0)

    def contains(self, m: Monomial) -> bool:
        return any(g.divides(m) for g in self.gens)

    def contains_ideal(self, other: MonomialIdeal) -> bool:
        return all(self.contains(g) for g in other.gens)


def zero_ideal(n: int) -> MonomialIdeal:
    return MonomialIdeal(n, ())


def unit_ideal(n: int) -> MonomialIdeal:
    return MonomialIdeal(n, (one_monomial(n),))


def prime_ideal(p: PrimeSupport) -> MonomialIdeal:
    """The monomial prime (x_i : i in p.vars) as an ideal."""
    return MonomialIdeal.make(p.ambient_n, [variable(p.ambient_n, i) for i in sorted(p.vars)])


def maximal_ideal(n: int) -> MonomialIdeal:
    return MonomialIdeal.make(n, [variable(n, i) for i in range(n)])


def _check_ring(i: MonomialIdeal, j: MonomialIdeal) -> None:
    if i.ambient_n != j.ambient_n:
        raise AmbientMismatchError("ideals over different rings")


def ideal_sum(i: MonomialIdeal, j: MonomialIdeal) -> MonomialIdeal:
    _check_ring(i, j)
    return MonomialIdeal.make(i.ambient_n, i.gens + j.gens)


def ideal_intersection(i: MonomialIdeal, j: MonomialIdeal) -> MonomialIdeal:
    _check_ring(i, j)
    return MonomialIdeal.make(i.ambient_n, [f.lcm(g) for f in i.gens for g in j.gens])


def ideal_product(i: MonomialIdeal, j: MonomialIdeal) -> MonomialIdeal:
    _check_ring(i, j)
    return MonomialIdeal.make(i.ambient_n, [f.times(g) for f in i.gens for g in j.gens])


def ideal_power(i: MonomialIdeal, n: int) -> MonomialIdeal:
    if n < 0:
        raise ValueError("negative power")
    out = unit_ideal(i.ambient_n)
    for _ in range(n):
        out = ideal_product(out, i)
    return out


def colon(i: MonomialIdeal, j: MonomialIdeal) -> MonomialIdeal:
    """(i : j); the colon by the zero ideal is the unit ideal."""
    _check_ring(i, j)
    out = unit_ideal(i.ambient_n)
    for g in j.gens:
        step = MonomialIdeal.make(i.ambient_n, [f.quotient_by(g) for f in i.gens])
        out = ideal_intersection(out, step)
    return out


def saturation(i: MonomialIdeal, j: MonomialIdeal) -> MonomialIdeal:
    """(i : j^infinity), the stable value of iterated colons."""
    cur = i
    while True:
        nxt = colon(cur, j)
        if nxt == cur:
            return cur
        cur = nxt


def restrict_to_prime(i: MonomialIdeal, p: PrimeSupport) -> MonomialIdeal:
    """Image of i under x_j -> 1 for j outside p, in the subring on p's variables.

    The result lives in a polynomial ring on len(p.vars) variables, ordered
    by ascending original index; it models localization at the prime.
    """
    if i.ambient_n != p.ambient_n:
        raise AmbientMismatchError("prime over a different ring")
    keep = sorted(p.vars)
    gens = [tuple(g.exponents[v] for v in keep) for g in i.gens]
    return MonomialIdeal.make(len(keep), gens)


def torsion_box_monomials(i: MonomialIdeal) -> frozenset[Monomial]:
    """Monomial basis of the torsion at the irrelevant maximal ideal of R/i.

    Any torsion monomial m (m not in i, m killed by a power of every
    variable) satisfies exp_v(m) < c_v, where c_v is the top exponent of
    x_v among the generators of i: pushing an exponent past c_v can never
    change membership in i.  Enumerating that box suffices.
    """
    n = i.ambient_n
    sat = saturation(i, maximal_ideal(n))
    bounds = [max((g.exponents[v] for g in i.gens), default=0) for v in range(n)]
    out = []
    for exps in itertools.product(*(range(b) for b in bounds)):
        m = Monomial(exps)
        if not i.contains(m) and sat.contains(m):
            out.append(m)
    return frozenset(out)


@dataclass(frozen=True)
class SubquotientModule:
    """The module J/I presented by nested monomial ideals I <= J.

    (I, (1)) denotes the quotient ring R/I viewed as a module.
    """

    lower: MonomialIdeal
    upper: MonomialIdeal

    def __post_init__(self) -> None:
        _check_ring(self.lower, self.upper)
        if not self.upper.contains_ideal(self.lower):
            raise InvalidSubquotientError("lower ideal not contained in upper ideal")

    @classmethod
    def quotient_ring(cls, i: MonomialIdeal) -> SubquotientModule:
        return cls(i, unit_ideal(i.ambient_n))

    @property
    def ambient_n(self) -> int:
        return self.lower.ambient_n

    @property
    def is_zero(self) -> bool:
        return self.lower.contains_ideal(self.upper)

    def submodule(self, k: MonomialIdeal) -> SubquotientModule:
        """The submodule K/I of J/I; requires I <= K <= J."""
        if not k.contains_ideal(self.lower) or not self.upper.contains_ideal(k):
            raise InvalidSubquotientError("witness ideal not between I and J")
        return SubquotientModule(self.lower, k)

    def quotient_by(self, k: MonomialIdeal) -> SubquotientModule:
        """The quotient (J/I)/(K/I) = J/K; requires I <= K <= J."""
        if not k.contains_ideal(self.lower) or not self.upper.contains_ideal(k):
            raise InvalidSubquotientError("witness ideal not between I and J")
        return SubquotientModule(k, self.upper)
