"""Exact arithmetic on ordinals strictly below omega^omega.

An ordinal is kept in Cantor normal form as a sparse tuple of
(exponent, coefficient) pairs, exponents strictly decreasing and all
coefficients positive.  Equality is therefore structural and every value
is hashable and immutable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, NamedTuple


@dataclass(frozen=True)
class Ordinal:
    """An ordinal below omega^omega, canonicalized on construction."""

    terms: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        last = None
        for exp, coeff in self.terms:
            if exp < 0 or coeff <= 0:
                raise ValueError("bad Cantor term (%d, %d)" % (exp, coeff))
            if last is not None and exp >= last:
                raise ValueError("Cantor terms not strictly decreasing")
            last = exp

    @classmethod
    def from_coeffs(cls, coeffs: Mapping[int, int] | Iterable[tuple[int, int]]) -> Ordinal:
        """Build from {exponent: coefficient}; zero coefficients are dropped."""
        acc: dict[int, int] = {}
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        for exp, coeff in items:
            acc[exp] = acc.get(exp, 0) + coeff
        return cls(tuple(sorted(((e, c) for e, c in acc.items() if c), reverse=True)))

    @classmethod
    def omega_power(cls, exp: int, coeff: int = 1) -> Ordinal:
        return cls.from_coeffs({exp: coeff})

    @classmethod
    def from_int(cls, n: int) -> Ordinal:
        return cls.from_coeffs({0: n})

    def coeff(self, exp: int) -> int:
        for e, c in self.terms:
            if e == exp:
                return c
        return 0

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> int | None:
        """Maximum of the support; None for the zero ordinal."""
        return self.terms[0][0] if self.terms else None

    @property
    def order(self) -> int | None:
        """Minimum of the support; None for the zero ordinal."""
        return self.terms[-1][0] if self.terms else None

    @property
    def valence(self) -> int:
        return sum(c for _, c in self.terms)

    @property
    def support(self) -> frozenset[int]:
        return frozenset(e for e, _ in self.terms)

    @property
    def is_successor(self) -> bool:
        return bool(self.terms) and self.terms[-1][0] == 0

    @property
    def is_limit(self) -> bool:
        return bool(self.terms) and self.terms[-1][0] > 0

    def display(self, ascii_only: bool = False) -> str:
        """Render as e.g. 'ω^2 + 3ω + 1' ('w^2 + 3w + 1' with ascii_only)."""
        if not self.terms:
            return "0"
        w = "w" if ascii_only else "ω"
        parts = []
        for exp, coeff in self.terms:
            if exp == 0:
                parts.append(str(coeff))
            else:
                head = "" if coeff == 1 else str(coeff)
                tail = w if exp == 1 else "%s^%d" % (w, exp)
                parts.append(head + tail)
        return " + ".join(parts)

    def __str__(self) -> str:
        return self.display()

    # Total order: lexicographic on Cantor coefficients from the top down.
    def __lt__(self, other: Ordinal) -> bool:
        return leq(self, other) and self != other

    def __le__(self, other: Ordinal) -> bool:
        return leq(self, other)

    def __gt__(self, other: Ordinal) -> bool:
        return not leq(self, other)

    def __ge__(self, other: Ordinal) -> bool:
        return not leq(self, other) or self == other


ZERO = Ordinal()
ONE = Ordinal.from_int(1)
OMEGA = Ordinal.omega_power(1)


class OrdinalClass(NamedTuple):
    """Derived shape data of an ordinal; degree/order are None for zero."""

    degree: int | None
    order: int | None
    valence: int
    support: frozenset[int]
    is_limit: bool
    is_successor: bool


def classify(a: Ordinal) -> OrdinalClass:
    return OrdinalClass(a.degree, a.order, a.valence, a.support, a.is_limit, a.is_successor)


def cantor_sum(a: Ordinal, b: Ordinal) -> Ordinal:
    """The ordinary (non-commutative) ordinal sum a + b."""
    if b.is_zero:
        return a
    e = b.terms[0][0]
    terms = [(exp, c) for exp, c in a.terms if exp > e]
    terms.append((e, a.coeff(e) + b.terms[0][1]))
    terms.extend(b.terms[1:])
    return Ordinal(tuple(terms))


def shuffle_sum(a: Ordinal, b: Ordinal) -> Ordinal:
    """The natural (commutative) sum: coefficient-wise addition."""
    return Ordinal.from_coeffs(list(a.terms) + list(b.terms))


def meet(a: Ordinal, b: Ordinal) -> Ordinal:
    """Coefficient-wise minimum, the infimum for the weaker order."""
    return Ordinal.from_coeffs({e: min(c, b.coeff(e)) for e, c in a.terms})


def weaker(a: Ordinal, b: Ordinal) -> bool:
    """The partial order: every coefficient of a is <= that of b."""
    return all(c <= b.coeff(e) for e, c in a.terms)


def leq(a: Ordinal, b: Ordinal) -> bool:
    """The usual total order on ordinals, lexicographic on coefficients."""
    if a == b:
        return True
    exps = sorted({e for e, _ in a.terms} | {e for e, _ in b.terms}, reverse=True)
    for e in exps:
        ca, cb = a.coeff(e), b.coeff(e)
        if ca != cb:
            return ca < cb
    return True


def truncate_above(a: Ordinal, i: int) -> Ordinal:
    """Keep only the terms of exponent >= i + 1."""
    return Ordinal(tuple((e, c) for e, c in a.terms if e > i))


def truncate_below(a: Ordinal, i: int) -> Ordinal:
    """Keep only the terms of exponent <= i; complements truncate_above."""
    return Ordinal(tuple((e, c) for e, c in a.terms if e <= i))


def scalar_mul(n: int, a: Ordinal) -> Ordinal:
    """The sum of n copies of a, i.e. coefficient-wise multiplication by n."""
    if n < 0:
        raise ValueError("scalar must be a natural number")
    if n == 0:
        return ZERO
    return Ordinal(tuple((e, n * c) for e, c in a.terms))


def shuffle_difference(a: Ordinal, b: Ordinal) -> Ordinal:
    """The witness c with shuffle_sum(b, c) == a; requires b weaker than a."""
    if not weaker(b, a):
        raise ValueError("difference defined only when b is weaker than a")
    return Ordinal.from_coeffs({e: c - b.coeff(e) for e, c in a.terms})
