"""Cycles on the monomial primes of a fixed polynomial ring.

A monomial prime of k[x_1..x_n] is identified with the subset of variable
indices generating it; its dimension is n minus the size of that subset.
Cycles are finitely supported integer combinations of such primes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import AmbientMismatchError, NonEffectiveCycleError
from .ordinal import Ordinal


@dataclass(frozen=True)
class PrimeSupport:
    """The monomial prime (x_i : i in vars) of an n-variable polynomial ring."""

    ambient_n: int
    vars: frozenset[int]

    def __post_init__(self) -> None:
        if any(v < 0 or v >= self.ambient_n for v in self.vars):
            raise ValueError("variable index out of range")

    @property
    def dim(self) -> int:
        return self.ambient_n - len(self.vars)

    def sort_key(self) -> tuple:
        return (len(self.vars), tuple(sorted(self.vars)))


def prime(ambient_n: int, vars: Iterable[int]) -> PrimeSupport:
    return PrimeSupport(ambient_n, frozenset(vars))


@dataclass(frozen=True)
class Cycle:
    """An element of the Chow group: a sparse sum of primes with integer weights."""

    ambient_n: int
    terms: tuple[tuple[PrimeSupport, int], ...] = ()

    def __post_init__(self) -> None:
        for p, c in self.terms:
            if p.ambient_n != self.ambient_n:
                raise AmbientMismatchError("cycle term in wrong ring")
            if c == 0:
                raise ValueError("zero coefficient stored in cycle")

    @classmethod
    def from_terms(
        cls, ambient_n: int, terms: Mapping[PrimeSupport, int] | Iterable[tuple[PrimeSupport, int]]
    ) -> Cycle:
        acc: dict[PrimeSupport, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for p, c in items:
            acc[p] = acc.get(p, 0) + c
        canon = tuple(sorted(((p, c) for p, c in acc.items() if c), key=lambda t: t[0].sort_key()))
        return cls(ambient_n, canon)

    def coeff(self, p: PrimeSupport) -> int:
        for q, c in self.terms:
            if q == p:
                return c
        return 0

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_effective(self) -> bool:
        return all(c > 0 for _, c in self.terms)

    @property
    def degree(self) -> int:
        """Sum of the coefficients."""
        return sum(c for _, c in self.terms)

    @property
    def support(self) -> frozenset[PrimeSupport]:
        return frozenset(p for p, _ in self.terms)


def zero_cycle(ambient_n: int) -> Cycle:
    return Cycle(ambient_n)


def _check_ambient(d: Cycle, e: Cycle) -> None:
    if d.ambient_n != e.ambient_n:
        raise AmbientMismatchError("cycles over different rings")


def cycle_add(d: Cycle, e: Cycle) -> Cycle:
    _check_ambient(d, e)
    return Cycle.from_terms(d.ambient_n, list(d.terms) + list(e.terms))


def cycle_sub(d: Cycle, e: Cycle) -> Cycle:
    _check_ambient(d, e)
    return Cycle.from_terms(d.ambient_n, list(d.terms) + [(p, -c) for p, c in e.terms])


def cycle_leq(d: Cycle, e: Cycle) -> bool:
    """Coefficient-wise comparison of cycles."""
    _check_ambient(d, e)
    keys = d.support | e.support
    return all(d.coeff(p) <= e.coeff(p) for p in keys)


def binord(d: Cycle) -> Ordinal:
    """Map an effective cycle to the shuffle sum of omega^dim(p) with multiplicity."""
    if not d.is_effective:
        raise NonEffectiveCycleError("binord requires an effective cycle")
    return Ordinal.from_coeffs([(p.dim, c) for p, c in d.terms])
