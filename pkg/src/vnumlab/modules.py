"""Graded subquotients A/B of monomial ideals and their degree invariants.

A Subquotient is a pair of monomial ideals B <= A plus an integer degree
shift; the module it presents is (A/B)(shift), graded by weighted degree.
indeg of the zero module is +infinity, end of the zero module is -infinity.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, replace
from itertools import product

from .errors import DomainError
from .kernel import (GradedRing, Monomial, MonomialIdeal, colon_ideal,
                     colon_monomial, intersect, member, monomials_of_degree,
                     mul, saturate, weighted_degree)

INF = math.inf
NEG_INF = -math.inf


@dataclass(frozen=True)
class Subquotient:
    """The graded module (num/den)(shift) with den contained in num."""

    ring: GradedRing
    num: MonomialIdeal
    den: MonomialIdeal
    shift: int = 0


def make_subquotient(ring: GradedRing, num: MonomialIdeal, den: MonomialIdeal,
                     shift: int = 0) -> Subquotient:
    if num.ring != ring or den.ring != ring:
        raise DomainError("ring-mismatch", "subquotient ideals live in different rings")
    if not isinstance(shift, int) or isinstance(shift, bool):
        raise DomainError("bad-shift", f"shift must be an integer, got {shift!r}")
    for g in den.gens:
        if not member(g, num):
            raise DomainError("denominator-not-contained",
                              "denominator is not contained in the numerator")
    return Subquotient(ring, num, den, shift)


def is_zero(q: Subquotient) -> bool:
    """A/B = 0 iff every generator of A lies in B."""
    return all(member(g, q.den) for g in q.num.gens)


def indeg(q: Subquotient):
    """Least degree with a nonzero graded piece; +inf for the zero module."""
    degs = [weighted_degree(q.ring, g) for g in q.num.gens if not member(g, q.den)]
    return INF if not degs else q.shift + min(degs)


def monomials_in_degree(q: Subquotient, u: int) -> list:
    """Monomial k-basis of the degree-u piece of A/B, sorted by exponent tuple."""
    t = u - q.shift
    out = [m for m in monomials_of_degree(q.ring, t)
           if member(m, q.num) and not member(m, q.den)]
    return out


def twist(q: Subquotient, h: int) -> Subquotient:
    return replace(q, shift=q.shift + h)


def ann_submodule(q: Subquotient, a: MonomialIdeal) -> Subquotient:
    """(0 :_Q a) as a subquotient: ((den : a) ^ num) / den, same shift."""
    c = intersect(colon_ideal(q.den, a), q.num)
    return Subquotient(q.ring, c, q.den, q.shift)


def gamma_submodule(q: Subquotient, a: MonomialIdeal) -> Subquotient:
    """The a-torsion Gamma_a(Q): ((den : a^inf) ^ num) / den, same shift."""
    c = intersect(saturate(q.den, a), q.num)
    return Subquotient(q.ring, c, q.den, q.shift)


def _pure_power_bound(c: MonomialIdeal, i: int):
    """Least k with x_i^k in c, or None; a generator with support in {i} witnesses it."""
    best = None
    for g in c.gens:
        if all(e == 0 for j, e in enumerate(g) if j != i):
            k = g[i]
            if best is None or k < best:
                best = k
    return best


def is_artinian(q: Subquotient) -> bool:
    """Finite length iff every cyclic piece (den : g) contains a power of every variable."""
    for g in q.num.gens:
        c = colon_monomial(q.den, g)
        for i in range(q.ring.nvars):
            if _pure_power_bound(c, i) is None:
                return False
    return True


def end_artinian(q: Subquotient):
    """Largest degree with a nonzero piece; -inf for zero.  Requires finite length.

    Monomials of A\\B are multiples g*u of generators g of A outside B, and
    u_i is capped by the least k with x_i^k * g in B, which gives a finite
    search box per generator.
    """
    best = None
    for g in q.num.gens:
        if member(g, q.den):
            continue
        c = colon_monomial(q.den, g)
        caps = []
        for i in range(q.ring.nvars):
            k = _pure_power_bound(c, i)
            if k is None:
                raise DomainError("not-artinian", "module has infinite length")
            caps.append(k)
        for u in product(*(range(k) for k in caps)):
            m = mul(g, u)
            if not member(m, q.den):
                d = weighted_degree(q.ring, m)
                if best is None or d > best:
                    best = d
    if best is None:
        # no generator survives outside B; still honor the artinian precondition
        if not is_artinian(q):
            raise DomainError("not-artinian", "module has infinite length")
        return NEG_INF
    return q.shift + best
