"""Associated primes of monomial subquotients.

Every associated prime of a monomial subquotient is generated by a subset of
the variables (or is the zero prime).  Membership of a candidate prime is
decided by a localization/socle test on the ideals restricted to the
candidate's support; ass() enumerates candidate supports inside the support
of the denominator.  ass_oracle() is the definitional fallback: scan
monomials and collect the colons that are primes.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .kernel import (GradedRing, MonomialIdeal, colon_ideal, colon_monomial,
                     intersect, lcm, member, minimalize, monomials_up_to,
                     weighted_degree)
from .modules import Subquotient, is_zero


@dataclass(frozen=True)
class MonomialPrime:
    """Prime generated by the variables with indices in support; () is the zero prime."""

    support: tuple

    @staticmethod
    def of(indices) -> "MonomialPrime":
        return MonomialPrime(tuple(sorted(set(indices))))

    @property
    def is_zero(self) -> bool:
        return not self.support

    def strictly_inside(self, other: "MonomialPrime") -> bool:
        return set(self.support) < set(other.support)

    def sort_key(self):
        return (len(self.support), self.support)

    def names(self, ring: GradedRing) -> list:
        return [ring.var_names[i] for i in self.support]


@dataclass(frozen=True)
class AssSet:
    """Canonically ordered set of associated primes."""

    primes: tuple

    @staticmethod
    def of(primes) -> "AssSet":
        return AssSet(tuple(sorted(set(primes), key=MonomialPrime.sort_key)))

    def __iter__(self):
        return iter(self.primes)

    def __len__(self):
        return len(self.primes)

    def __contains__(self, p):
        return p in self.primes

    def issubset(self, other: "AssSet") -> bool:
        return set(self.primes) <= set(other.primes)


def prime_ideal(ring: GradedRing, p: MonomialPrime) -> MonomialIdeal:
    return minimalize(ring, (ring.variable(i) for i in p.support))


def full_prime(ring: GradedRing) -> MonomialPrime:
    return MonomialPrime(tuple(range(ring.nvars)))


@lru_cache(maxsize=1024)
def _restricted_ring(ring: GradedRing, s: tuple) -> GradedRing:
    return GradedRing(tuple(ring.var_names[i] for i in s),
                      tuple(ring.weights[i] for i in s))


def restrict_to_support(b: MonomialIdeal, s: tuple) -> MonomialIdeal:
    """Set every variable outside s to 1: keep only the s-coordinates, re-minimalize."""
    s = tuple(sorted(set(s)))
    sub = _restricted_ring(b.ring, s)
    return minimalize(sub, (tuple(g[i] for i in s) for g in b.gens))


def is_associated(q: Subquotient, s: tuple) -> bool:
    """Socle test for the prime with support s after localizing away from it.

    The zero prime is associated iff den = 0 and the module is nonzero (the
    module is then a nonzero torsion-free ideal).  Otherwise the prime is
    associated iff the restricted module has nonzero socle.
    """
    s = tuple(sorted(set(s)))
    if not s:
        return q.den.is_zero and not is_zero(q)
    num_r = restrict_to_support(q.num, s)
    den_r = restrict_to_support(q.den, s)
    if den_r.is_unit:
        return False
    sub = num_r.ring
    m_s = minimalize(sub, (sub.variable(i) for i in range(sub.nvars)))
    socle = intersect(colon_ideal(den_r, m_s), num_r)
    return any(not member(g, den_r) for g in socle.gens)


def _den_support(q: Subquotient) -> tuple:
    out = set()
    for g in q.den.gens:
        out.update(i for i, e in enumerate(g) if e > 0)
    return tuple(sorted(out))


def ass(q: Subquotient) -> AssSet:
    """All associated primes; candidate supports live inside the den support."""
    if is_zero(q):
        return AssSet.of([])
    base = _den_support(q)
    found = []
    for r in range(len(base) + 1):
        for s in combinations(base, r):
            if is_associated(q, s):
                found.append(MonomialPrime(s))
    return AssSet.of(found)


def _prime_of_colon(c: MonomialIdeal):
    """The prime equal to c, if c is the zero ideal or generated by bare variables."""
    if c.is_zero:
        return MonomialPrime(())
    idx = []
    for g in c.gens:
        sup = [i for i, e in enumerate(g) if e > 0]
        if len(sup) != 1 or g[sup[0]] != 1:
            return None
        idx.append(sup[0])
    return MonomialPrime.of(idx)


def default_degree_bound(q: Subquotient) -> int:
    """Weighted degree of the lcm of all generators of num and den, plus the max weight."""
    big = q.ring.one
    for g in q.num.gens + q.den.gens:
        big = lcm(big, g)
    extra = max(q.ring.weights) if q.ring.weights else 1
    return weighted_degree(q.ring, big) + extra


def ass_oracle(q: Subquotient, degree_bound: int | None = None) -> AssSet:
    """Definitional scan: collect (den : m) over monomials m of A\\B up to the bound."""
    if degree_bound is None:
        degree_bound = default_degree_bound(q)
    found = set()
    num, den = q.num, q.den
    for m in monomials_up_to(q.ring, degree_bound):
        if not member(m, num) or member(m, den):
            continue
        p = _prime_of_colon(colon_monomial(den, m))
        if p is not None:
            found.add(p)
    return AssSet.of(found)
