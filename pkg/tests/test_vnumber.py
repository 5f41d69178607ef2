"""v-numbers: pipeline against closed forms and the definitional oracle."""

import random

import pytest

from conftest import random_module_pair, random_ring
from vnumlab import (INF, DomainError, GradedRing, MonomialPrime, ass,
                     colon_monomial, default_degree_bound, gamma_end_check,
                     make_subquotient, minimalize, parse_monomial, prime_ideal,
                     twist, unit_ideal, v, v_at_prime, v_oracle, zero_ideal)

RXY = GradedRing(("X", "Y"), (1, 1))
RXYZ = GradedRing(("X", "Y", "Z"), (1, 1, 1))


def ideal(ring, *texts):
    return minimalize(ring, [parse_monomial(ring, t) for t in texts])


def quotient_by(ring, *texts):
    return make_subquotient(ring, unit_ideal(ring), ideal(ring, *texts))


def per_support(report):
    return {p.support: val for p, val in report.per_prime.items()}


def test_v_of_field_quotient():
    report = v(quotient_by(RXY, "X", "Y"))
    assert report.overall == 0
    assert per_support(report) == {(0, 1): 0}


def test_v_of_zero_module():
    a = ideal(RXY, "X")
    report = v(make_subquotient(RXY, a, a))
    assert report.overall == INF
    assert report.per_prime == {}


def test_v_simple_quotient():
    # R/(X): witness 1 with colon exactly (X)
    report = v(quotient_by(RXY, "X"), with_witnesses=True)
    assert report.overall == 0
    assert per_support(report) == {(0,): 0}
    assert report.witnesses[MonomialPrime((0,))] == (0, 0)


def test_v_principal_power_submodule():
    # I^n M with M = R/(X*Y^b), I = (X^a): v at (Y) is an + b - 1
    a, b = 2, 3
    for n in (1, 2, 5):
        q = make_subquotient(RXY, ideal(RXY, f"X^{a * n}", f"X*Y^{b}"),
                             ideal(RXY, f"X*Y^{b}"))
        report = v(q, with_witnesses=True)
        assert per_support(report) == {(1,): a * n + b - 1}
        assert report.overall == a * n + b - 1
        witness = report.witnesses[MonomialPrime((1,))]
        assert witness == (a * n, b - 1)
        assert colon_monomial(q.den, witness) == ideal(RXY, "Y")


def test_v_quotient_case_split():
    # M/I^n M: v_(X) = b via the saturation path, v_(X,Y) = an + b - 2
    a, b = 2, 3
    for n in (1, 3):
        q = quotient_by(RXY, f"X^{a * n}", f"X*Y^{b}")
        got = per_support(v(q))
        assert got == {(0,): b, (0, 1): a * n + b - 2}
        assert v(q).overall == min(b, a * n + b - 2)
    # a = n = 1 collapses to the single prime (X) with v = 0
    q1 = quotient_by(RXY, "X", "X*Y^3")
    assert per_support(v(q1)) == {(0,): 0}
    assert v(q1).overall == 0


def test_v_crossed_axes():
    # R/((XY) + (X^d1, Y^d2)^n): single prime (X,Y), v = d1*n - 1
    d1, d2, n = 2, 3, 2
    q = quotient_by(RXY, "X*Y", f"X^{d1 * n}", f"Y^{d2 * n}")
    report = v(q)
    assert per_support(report) == {(0, 1): d1 * n - 1}
    assert report.overall == d1 * n - 1


def test_v_at_prime_rejects_non_associated():
    q = quotient_by(RXY, "X")
    with pytest.raises(DomainError) as err:
        v_at_prime(q, MonomialPrime((1,)), ass(q))
    assert err.value.code == "prime-not-associated"


def test_v_zero_prime_is_indeg():
    # a torsion-free module: the zero prime's v is the initial degree
    q = make_subquotient(RXY, ideal(RXY, "X^2", "X*Y"), zero_ideal(RXY), 3)
    report = v(q)
    assert per_support(report) == {(): 5}
    assert report.overall == 5


def test_v_twist_rule():
    rng = random.Random(53)
    for _ in range(20):
        ring = random_ring(rng)
        num, den = random_module_pair(rng, ring, max_gens=3, max_exp=3)
        q = make_subquotient(ring, num, den)
        h = rng.randint(-4, 4)
        base, moved = v(q), v(twist(q, h))
        if base.overall == INF:
            assert moved.overall == INF
        else:
            assert moved.overall == base.overall + h
            assert per_support(moved) == {s: val + h
                                          for s, val in per_support(base).items()}


def test_v_oracle_staggered_start():
    # M/IM for M = R/(X^3, XY^4), I = (X, Y^2, Z^3): v = 3, witness YZ^2
    q = quotient_by(RXYZ, "X", "Y^2", "Z^3")
    found = v_oracle(q, MonomialPrime((0, 1, 2)), 6)
    assert found.value == 3
    assert found.witness == (0, 1, 2)
    assert v(q).overall == 3


def test_v_oracle_not_found_is_none():
    q = quotient_by(RXY, "X")
    assert v_oracle(q, MonomialPrime((0, 1)), 8) is None


def test_v_oracle_any_prime_matches_overall():
    rng = random.Random(59)
    for _ in range(25):
        ring = random_ring(rng)
        num, den = random_module_pair(rng, ring, max_gens=3, max_exp=3)
        q = make_subquotient(ring, num, den)
        report = v(q)
        bound = default_degree_bound(q)
        found = v_oracle(q, None, bound)
        if report.overall == INF:
            assert found is None
        else:
            assert found is not None and found.value == report.overall


def test_v_matches_oracle_per_prime_seeded():
    rng = random.Random(61)
    for _ in range(30):
        ring = random_ring(rng)
        num, den = random_module_pair(rng, ring, max_gens=3, max_exp=3)
        q = make_subquotient(ring, num, den, rng.randint(-2, 2))
        ass_set = ass(q)
        bound = default_degree_bound(q)
        for p in ass_set:
            value = v_at_prime(q, p, ass_set)
            found = v_oracle(q, p, max(bound, value - q.shift))
            assert found is not None
            assert found.value == value
            assert colon_monomial(q.den, found.witness) == prime_ideal(ring, p)


def test_gamma_end_check():
    report = gamma_end_check(quotient_by(RXY, "X^2", "Y^2"))
    assert report.v_value == 2
    assert report.gamma_end == 2
    assert report.ok
    d1, d2, n = 2, 3, 2
    report = gamma_end_check(quotient_by(RXY, "X*Y", f"X^{d1 * n}", f"Y^{d2 * n}"))
    assert report.v_value == d1 * n - 1
    assert report.gamma_end == d2 * n - 1
    assert report.ok


def test_gamma_end_check_inapplicable():
    with pytest.raises(DomainError) as err:
        gamma_end_check(quotient_by(RXY, "X"))
    assert err.value.code == "inapplicable"


def test_gamma_end_check_torsion_only():
    # the module has infinite length; only its m-torsion part is enumerated
    q = quotient_by(RXY, "X^2", "X*Y")
    report = gamma_end_check(q)
    assert report.v_value == 1
    assert report.gamma_end == 1
    assert report.ok
