"""v-numbers of monomial subquotients.

v_p(Q) is the least degree of an element whose annihilator is exactly the
associated prime p; v(Q) is the minimum over the associated primes.  The
pipeline computes v_p as the initial degree of ann_Q(p) modulo the torsion
submodule Gamma_V(Q), where V is the product of the associated primes
strictly containing p (V is the unit ideal when there are none).  v_oracle
is the definitional degree-bounded search and also produces witnesses.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import DomainError
from .kernel import (Monomial, colon_monomial, colon_ideal, ideal_product,
                     intersect, member, monomials_up_to, saturate, unit_ideal,
                     weighted_degree)
from .modules import Subquotient, is_artinian, end_artinian, gamma_submodule
from .primes import AssSet, MonomialPrime, ass, full_prime, prime_ideal, _prime_of_colon

INF = math.inf


@dataclass
class VReport:
    """Per-prime v-numbers, their minimum, and optional monomial witnesses."""

    per_prime: dict
    overall: object
    witnesses: dict = field(default_factory=dict)


@dataclass
class OracleFind:
    value: int
    witness: Monomial


@dataclass
class GammaEndReport:
    v_value: int
    gamma_end: int

    @property
    def ok(self) -> bool:
        return self.v_value <= self.gamma_end


def v_at_prime(q: Subquotient, p: MonomialPrime, ass_set: AssSet) -> int:
    """v_p(Q) for an associated prime p, via ann_Q(p) modulo Gamma over X_p."""
    if p not in ass_set:
        raise DomainError("prime-not-associated", "prime is not associated to the module")
    if p.is_zero:
        c = q.num
    else:
        c = intersect(colon_ideal(q.den, prime_ideal(q.ring, p)), q.num)
    bigger = [x for x in ass_set if p.strictly_inside(x)]
    v_ideal = unit_ideal(q.ring)
    for x in bigger:
        v_ideal = ideal_product(v_ideal, prime_ideal(q.ring, x))
    gamma = saturate(q.den, v_ideal)  # the unit V gives back den
    degs = [weighted_degree(q.ring, g) for g in c.gens if not member(g, gamma)]
    if not degs:
        raise RuntimeError("empty v-number module for an associated prime; "
                           "this contradicts the membership test")
    return q.shift + min(degs)


def v(q: Subquotient, with_witnesses: bool = False) -> VReport:
    """All per-prime v-numbers and their minimum; +inf overall for the zero module."""
    ass_set = ass(q)
    per = {p: v_at_prime(q, p, ass_set) for p in ass_set}
    overall = min(per.values()) if per else INF
    witnesses = {}
    if with_witnesses:
        for p, value in per.items():
            found = v_oracle(q, p, value - q.shift)
            if found is None:
                raise RuntimeError("pipeline value has no witness at its own degree")
            witnesses[p] = found.witness
    return VReport(per, overall, witnesses)


def v_oracle(q: Subquotient, p: MonomialPrime | None, degree_bound: int):
    """Definitional search for the least-degree monomial with colon exactly p.

    With p None, any associated prime counts.  Returns None when nothing is
    found below the bound; not-found is a value here, not an error.
    """
    want = None if p is None else prime_ideal(q.ring, p)
    for m in monomials_up_to(q.ring, degree_bound):
        if not member(m, q.num) or member(m, q.den):
            continue
        c = colon_monomial(q.den, m)
        if p is None:
            if _prime_of_colon(c) is None:
                continue
        elif c != want:
            continue
        return OracleFind(q.shift + weighted_degree(q.ring, m), m)
    return None


def gamma_end_check(q: Subquotient) -> GammaEndReport:
    """Compare v at the full-support prime against the end of the torsion part.

    Applies only when the prime generated by all variables is associated;
    Gamma_m(Q) then has finite length and v_m(Q) <= end(Gamma_m(Q)).
    """
    mfull = full_prime(q.ring)
    ass_set = ass(q)
    if mfull not in ass_set:
        raise DomainError("inapplicable",
                          "the full-support prime is not associated to the module")
    gamma = gamma_submodule(q, prime_ideal(q.ring, mfull))
    if not is_artinian(gamma):
        raise DomainError("not-artinian", "torsion part is not of finite length")
    return GammaEndReport(v_at_prime(q, mfull, ass_set), end_artinian(gamma))
