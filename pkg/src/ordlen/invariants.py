"""Associated primes, local multiplicities, fundamental cycles, and length.

The central computation: the ordinal length of a monomial subquotient J/I
is the shuffle sum, over its associated primes p, of the local
multiplicity at p copies of omega^dim(p).
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import NamedTuple

from . import ordinal as ord_
from .chow import Cycle, PrimeSupport, binord
from .errors import InvalidSubquotientError, OrdlenError, SubmoduleSearchError, ZeroModuleError
from .monomial import (
    Monomial,
    MonomialIdeal,
    SubquotientModule,
    ideal_intersection,
    ideal_sum,
    prime_ideal,
    restrict_to_prime,
    saturation,
    torsion_box_monomials,
    unit_ideal,
)
from .ordinal import Ordinal


@lru_cache(maxsize=None)
def local_multiplicity(m: SubquotientModule, p: PrimeSupport) -> int:
    """Length of the p-torsion of (J/I) localized at p.

    Localization at a monomial prime turns the variables outside p into
    units, so both ideals restrict to the subring on p's variables; the
    multiplicity is the number of torsion monomials of that restriction
    which survive into the restricted upper ideal.
    """
    lower_s = restrict_to_prime(m.lower, p)
    upper_s = restrict_to_prime(m.upper, p)
    return sum(1 for mono in torsion_box_monomials(lower_s) if upper_s.contains(mono))


@lru_cache(maxsize=None)
def associated_primes(m: SubquotientModule) -> frozenset[PrimeSupport]:
    """All monomial primes with positive local multiplicity.

    Only subsets of the union of the lower ideal's generator supports can
    occur: if x_v * mono lies in I but mono does not, the witnessing
    generator must involve x_v.
    """
    if m.is_zero:
        return frozenset()
    supp = sorted(m.lower.support)
    found = []
    for r in range(len(supp) + 1):
        for sub in itertools.combinations(supp, r):
            p = PrimeSupport(m.ambient_n, frozenset(sub))
            if local_multiplicity(m, p) > 0:
                found.append(p)
    return frozenset(found)


def fundamental_cycle(m: SubquotientModule) -> Cycle:
    """The effective cycle summing local multiplicities at associated primes."""
    return Cycle.from_terms(
        m.ambient_n, {p: local_multiplicity(m, p) for p in associated_primes(m)}
    )


@lru_cache(maxsize=None)
def length(m: SubquotientModule) -> Ordinal:
    """The ordinal length of J/I."""
    return binord(fundamental_cycle(m))


def height_rank(outer: SubquotientModule, inner_upper: MonomialIdeal) -> Ordinal:
    """Height rank of the submodule K/I inside J/I, i.e. the length of J/K."""
    return length(outer.quotient_by(inner_upper))


class ModuleInvariants(NamedTuple):
    order: int
    valence: int
    generic_length: int
    dimension: int
    is_unmixed: bool
    no_embedded_primes: bool


def basic_invariants(m: SubquotientModule) -> ModuleInvariants:
    """Order, valence, generic length, dimension and mixedness of a nonzero module."""
    ass = associated_primes(m)
    if not ass:
        raise ZeroModuleError("order and dimension are undefined for the zero module")
    dims = [p.dim for p in ass]
    order = min(dims)
    dimension = max(dims)
    fc = fundamental_cycle(m)
    generic = sum(c for p, c in fc.terms if p.dim == dimension)
    antichain = not any(p.vars < q.vars for p in ass for q in ass)
    return ModuleInvariants(
        order=order,
        valence=fc.degree,
        generic_length=generic,
        dimension=dimension,
        is_unmixed=order == dimension,
        no_embedded_primes=antichain,
    )


def dimension_filtration(m: SubquotientModule, i: int) -> SubquotientModule:
    """The largest submodule of J/I of dimension at most i, as a pair (I, K).

    K is the saturation of I at the intersection of the associated primes
    of dimension at most i, cut back into J; with no such primes the
    result is the zero submodule (K = I).
    """
    if i < -1:
        raise ValueError("filtration index must be >= -1")
    low = [p for p in associated_primes(m) if p.dim <= i]
    a = unit_ideal(m.ambient_n)
    for p in sorted(low, key=PrimeSupport.sort_key):
        a = ideal_intersection(a, prime_ideal(p))
    k = ideal_sum(ideal_intersection(saturation(m.lower, a), m.upper), m.lower)
    piece = SubquotientModule(m.lower, k)
    if length(piece) != ord_.truncate_below(length(m), i):
        raise OrdlenError("dimension filtration postcondition failed")
    return piece


def cycle_defect(m: SubquotientModule, inner_upper: MonomialIdeal) -> Cycle:
    """fcyc(N) + fcyc(Q) - fcyc(M) for the chain N = K/I inside M with Q = M/N.

    The result is effective whenever M has no embedded primes; callers
    assert that where it applies, since the operation itself stays total.
    """
    from .chow import cycle_add, cycle_sub

    n_part = fundamental_cycle(m.submodule(inner_upper))
    q_part = fundamental_cycle(m.quotient_by(inner_upper))
    return cycle_sub(cycle_add(n_part, q_part), fundamental_cycle(m))


def _candidate_monomials(m: SubquotientModule, bound: int) -> list[Monomial]:
    n = m.ambient_n
    out = []
    for exps in itertools.product(range(bound + 1), repeat=n):
        if sum(exps) <= bound:
            out.append(Monomial(exps))
    out.sort(key=Monomial.sort_key)
    return out


def _prime_multiplies_into(p: PrimeSupport, x: Monomial, k: MonomialIdeal) -> bool:
    from .monomial import variable

    return all(k.contains(variable(x.n, v).times(x)) for v in p.vars)


def construct_submodule_of_length(m: SubquotientModule, nu: Ordinal) -> MonomialIdeal:
    """Find K with I <= K <= J and len(K/I) = nu; nu must be weaker than len(J/I).

    Follows the existence proof: peel nu into omega-power steps from the
    top degree down, at each step adjoining a monomial x outside the
    current K with p*x inside K for an associated prime p of the step's
    dimension.  Candidates are scanned in degree-lex order up to a fixed
    degree bound; failure within the bound is a hard error, never a
    silent widening of the bound.
    """
    mu = length(m)
    if not ord_.weaker(nu, mu):
        raise InvalidSubquotientError("target length is not weaker than the module length")
    bound = max(m.lower.max_degree, m.upper.max_degree) + mu.valence
    cands = _candidate_monomials(m, bound)
    ass = sorted(associated_primes(m), key=PrimeSupport.sort_key)

    steps: list[int] = []
    for exp, coeff in nu.terms:
        steps.extend([exp] * coeff)

    k = m.lower
    target = ord_.ZERO
    for exp in steps:
        target = ord_.shuffle_sum(target, Ordinal.omega_power(exp))
        k2 = _extend_by_one(m, k, target, exp, cands, ass, maximalized=False)
        if k2 is None:
            # retry after saturating k with length-preserving adjunctions,
            # mirroring the maximality hypothesis of the existence proof
            k = _maximalize(m, k, cands)
            k2 = _extend_by_one(m, k, target, exp, cands, ass, maximalized=True)
        if k2 is None:
            raise SubmoduleSearchError(
                "no monomial submodule of length %s found within degree %d (module %r)"
                % (target, bound, m)
            )
        k = k2
    return k


def _extend_by_one(m, k, target, exp, cands, ass, maximalized):
    dim_primes = [p for p in ass if p.dim == exp]
    for x in cands:
        if k.contains(x) or not m.upper.contains(x):
            continue
        if not maximalized and not any(_prime_multiplies_into(p, x, k) for p in dim_primes):
            continue
        k2 = ideal_sum(k, MonomialIdeal.make(m.ambient_n, [x]))
        if length(SubquotientModule(m.lower, k2)) == target:
            return k2
    return None


def _maximalize(m, k, cands):
    cur = length(SubquotientModule(m.lower, k))
    changed = True
    while changed:
        changed = False
        for x in cands:
            if k.contains(x) or not m.upper.contains(x):
                continue
            k2 = ideal_sum(k, MonomialIdeal.make(m.ambient_n, [x]))
            if length(SubquotientModule(m.lower, k2)) == cur:
                k = k2
                changed = True
                break
    return k
