"""The canonical topology on a subquotient module and its refinements.

All predicates here are decided at the level of fundamental cycles and
ordinal lengths; no module elements beyond monomial sets are ever
manipulated.
"""

from __future__ import annotations

import os
from typing import NamedTuple

from . import ordinal as ord_
from .errors import OrdlenError, ResourceCapError, ZeroModuleError
from .invariants import (
    associated_primes,
    basic_invariants,
    dimension_filtration,
    fundamental_cycle,
    length,
)
from .monomial import (
    MonomialIdeal,
    SubquotientModule,
    ideal_intersection,
    ideal_power,
    ideal_sum,
    prime_ideal,
)

DEFAULT_POWER_CAP = 32


def is_open(m: SubquotientModule, k: MonomialIdeal) -> bool:
    """True iff the submodule K/I has the same fundamental cycle as J/I."""
    n = m.submodule(k)
    by_cycle = fundamental_cycle(n) == fundamental_cycle(m)
    if by_cycle != (length(n) == length(m)):
        raise OrdlenError("openness criteria disagree")  # cannot happen
    return by_cycle


def is_strongly_additive(m: SubquotientModule, k: MonomialIdeal) -> bool:
    """True iff both semi-additivity inequalities for I <= K <= J are equalities.

    Verified two ways: directly on the ordinals, and through the
    dimension/order criterion (strong additivity holds iff the submodule's
    dimension is at most the quotient's order).
    """
    n = m.submodule(k)
    q = m.quotient_by(k)
    len_m, len_n, len_q = length(m), length(n), length(q)
    direct = len_m == ord_.cantor_sum(len_q, len_n) and len_m == ord_.shuffle_sum(len_q, len_n)
    if n.is_zero or q.is_zero:
        criterion = True
    else:
        criterion = basic_invariants(n).dimension <= basic_invariants(q).order
    if direct != criterion:
        raise OrdlenError("strong additivity criteria disagree")
    return direct


def is_i_open(m: SubquotientModule, k: MonomialIdeal, i: int) -> bool:
    """True iff K/I has length equal to the degree->=i+1 part of len(J/I)."""
    return length(m.submodule(k)) == ord_.truncate_above(length(m), i)


def is_open_in_ith_topology(m: SubquotientModule, k: MonomialIdeal, i: int) -> bool:
    """True iff the degree->=i+1 part of len(J/I) is weaker than len(K/I)."""
    return ord_.weaker(ord_.truncate_above(length(m), i), length(m.submodule(k)))


def closure(m: SubquotientModule, k: MonomialIdeal) -> MonomialIdeal:
    """Closure of K/I in the canonical topology: K plus the finite-length part."""
    m.submodule(k)
    d0 = dimension_filtration(m, 0)
    return ideal_sum(k, d0.upper)


class EOpenPower(NamedTuple):
    n: int
    ideal: MonomialIdeal


def default_power_cap() -> int:
    env = os.environ.get("ORDLEN_CAP")
    return int(env) if env else DEFAULT_POWER_CAP


def find_e_open_power(r_mod: SubquotientModule, cap: int | None = None) -> EOpenPower:
    """Least n with (a^n + I)/I an e-open in R/I, for e the order of R/I and
    a the intersection of its associated primes of dimension e.

    Artin-Rees guarantees some power works but gives no effective bound;
    the cap converts non-termination risk into a reported error.
    """
    if not r_mod.upper.is_unit:
        raise OrdlenError("e-open power search expects a quotient ring R/I")
    if r_mod.is_zero:
        raise ZeroModuleError("the zero module has no order")
    cap = default_power_cap() if cap is None else cap
    inv = basic_invariants(r_mod)
    e = inv.order
    a = None
    for p in sorted(associated_primes(r_mod), key=lambda p: p.sort_key()):
        if p.dim == e:
            pid = prime_ideal(p)
            a = pid if a is None else ideal_intersection(a, pid)
    assert a is not None
    for n in range(1, cap + 1):
        k = ideal_sum(ideal_power(a, n), r_mod.lower)
        if is_i_open(r_mod, k, e):
            return EOpenPower(n, k)
    raise ResourceCapError("no e-open power of the ideal found up to the cap %d" % cap)


def hom_vanishes(m: SubquotientModule, n: SubquotientModule) -> bool:
    """Sufficient vanishing criterion: dim(M) < ord(N) forces Hom(M, N) = 0."""
    if m.is_zero or n.is_zero:
        raise ZeroModuleError("hom vanishing criterion needs nonzero modules")
    return basic_invariants(m).dimension < basic_invariants(n).order


def predicts_open_kernel(m: SubquotientModule, n: SubquotientModule) -> bool:
    """True iff M and N share no associated prime (then every kernel is open)."""
    return not (associated_primes(m) & associated_primes(n))


def kernel_chain_bound(n: SubquotientModule) -> int:
    """Upper bound 2^val(N) on chain lengths among kernels of maps into N."""
    if n.is_zero:
        return 1
    return 2 ** basic_invariants(n).valence


def max_common_ass_dimension(m: SubquotientModule, n: SubquotientModule) -> int:
    """Largest dimension of a common associated prime; -1 when there is none."""
    common = associated_primes(m) & associated_primes(n)
    return max((p.dim for p in common), default=-1)
