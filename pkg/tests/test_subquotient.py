"""Subquotients A/B: degree invariants, torsion, finite-length detection."""

import random

import pytest

from conftest import random_module_pair, random_ring
from vnumlab import (INF, NEG_INF, DomainError, GradedRing, ann_submodule,
                     end_artinian, gamma_submodule, indeg, is_artinian,
                     is_zero, make_subquotient, minimalize,
                     monomials_in_degree, parse_monomial, twist, unit_ideal,
                     zero_ideal)

RXY = GradedRing(("X", "Y"), (1, 1))
RXYZ = GradedRing(("X", "Y", "Z"), (1, 1, 1))


def ideal(ring, *texts):
    return minimalize(ring, [parse_monomial(ring, t) for t in texts])


def quotient_by(ring, *texts):
    return make_subquotient(ring, unit_ideal(ring), ideal(ring, *texts))


def test_make_subquotient_validates():
    with pytest.raises(DomainError) as err:
        make_subquotient(RXY, ideal(RXY, "X^2"), ideal(RXY, "X"))
    assert err.value.code == "denominator-not-contained"
    with pytest.raises(DomainError) as err:
        make_subquotient(RXY, unit_ideal(RXYZ), zero_ideal(RXYZ))
    assert err.value.code == "ring-mismatch"
    with pytest.raises(DomainError) as err:
        make_subquotient(RXY, unit_ideal(RXY), zero_ideal(RXY), shift=1.5)
    assert err.value.code == "bad-shift"
    # B <= A via generator membership, not generator identity
    q = make_subquotient(RXY, ideal(RXY, "X"), ideal(RXY, "X^2", "X*Y"))
    assert not is_zero(q)


def test_is_zero():
    a = ideal(RXY, "X^2", "Y")
    assert is_zero(make_subquotient(RXY, a, a))
    assert not is_zero(quotient_by(RXY, "X"))
    assert is_zero(make_subquotient(RXY, zero_ideal(RXY), zero_ideal(RXY)))


def test_indeg():
    assert indeg(make_subquotient(RXY, unit_ideal(RXY), zero_ideal(RXY))) == 0
    assert indeg(make_subquotient(RXY, ideal(RXY, "X^2", "Y"), zero_ideal(RXY))) == 1
    a = ideal(RXY, "X^2", "Y")
    assert indeg(make_subquotient(RXY, a, a)) == INF
    # surviving generator rule: X^2 dies in the denominator, X*Y survives
    q = make_subquotient(RXY, ideal(RXY, "X^2", "X*Y"), ideal(RXY, "X^2"))
    assert indeg(q) == 2
    assert indeg(twist(q, -5)) == -3


def test_indeg_weighted():
    r = GradedRing(("X", "Y"), (2, 3))
    q = make_subquotient(r, ideal(r, "X", "Y"), zero_ideal(r))
    assert indeg(q) == 2


def test_monomials_in_degree():
    assert monomials_in_degree(quotient_by(RXY, "X*Y"), 2) == [(0, 2), (2, 0)]
    assert monomials_in_degree(quotient_by(RXY, "X^3", "X*Y^4"), 0) == [(0, 0)]
    q = make_subquotient(RXY, ideal(RXY, "X"), ideal(RXY, "X^2", "X*Y"))
    assert monomials_in_degree(q, 1) == [(1, 0)]
    assert monomials_in_degree(q, 2) == []
    assert monomials_in_degree(twist(q, 3), 4) == [(1, 0)]


def test_indeg_matches_degree_sweep():
    rng = random.Random(23)
    for _ in range(80):
        ring = random_ring(rng)
        num, den = random_module_pair(rng, ring, max_gens=3, max_exp=3)
        q = make_subquotient(ring, num, den, rng.randint(-2, 2))
        want = indeg(q)
        found = INF
        # numerator generators have degree <= 3 vars * exponent 3 * weight 2
        for u in range(q.shift, q.shift + 20):
            if monomials_in_degree(q, u):
                found = u
                break
        assert found == want


def test_twist():
    q = quotient_by(RXY, "X^2")
    assert twist(q, 0) == q
    assert twist(twist(q, 2), -2) == q
    assert indeg(twist(q, 7)) == 7


def test_ann_submodule():
    q = quotient_by(RXY, "X^2")
    got = ann_submodule(q, ideal(RXY, "X"))
    assert got.num == ideal(RXY, "X")
    assert got.den == q.den
    # ann by the unit ideal is zero
    assert is_zero(ann_submodule(q, unit_ideal(RXY)))
    # (0 :_M I) for the principal-power module is q^b M, nonzero
    a, b = 2, 3
    m = quotient_by(RXY, f"X*Y^{b}")
    got = ann_submodule(m, ideal(RXY, f"X^{a}"))
    assert got.num == ideal(RXY, f"Y^{b}")
    assert not is_zero(got)


def test_gamma_submodule():
    a, b, n = 2, 3, 1
    q = quotient_by(RXY, f"X^{a * n}", f"X*Y^{b}")
    got = gamma_submodule(q, ideal(RXY, "X", "Y"))
    assert got.num == ideal(RXY, "X")
    # nilpotent action: the whole module is torsion
    q2 = quotient_by(RXY, "X^3")
    assert gamma_submodule(q2, ideal(RXY, "X")).num.is_unit
    # nonzerodivisor: no torsion at all
    q3 = quotient_by(RXY, "X")
    assert is_zero(gamma_submodule(q3, ideal(RXY, "Y")))


def test_is_artinian():
    assert is_artinian(quotient_by(RXY, "X^4", "X*Y", "Y^6"))
    assert not is_artinian(quotient_by(RXY, "X"))
    assert is_artinian(quotient_by(GradedRing(("X",), (1,)), "X^2"))
    a = ideal(RXY, "X", "Y^2")
    assert is_artinian(make_subquotient(RXY, a, a))
    assert not is_artinian(make_subquotient(RXY, unit_ideal(RXY), zero_ideal(RXY)))


def test_end_artinian():
    assert end_artinian(quotient_by(RXY, "X^2", "Y^2")) == 2
    a = ideal(RXY, "X", "Y")
    assert end_artinian(make_subquotient(RXY, a, a)) == NEG_INF
    with pytest.raises(DomainError) as err:
        end_artinian(quotient_by(RXY, "X"))
    assert err.value.code == "not-artinian"
    # shift moves the end
    assert end_artinian(twist(quotient_by(RXY, "X^2", "Y^2"), 4)) == 6
    # weighted: basis 1, X, Y, XY with degrees 0, 1, 2, 3
    r = GradedRing(("X", "Y"), (1, 2))
    assert end_artinian(make_subquotient(r, unit_ideal(r), ideal(r, "X^2", "Y^2"))) == 3


def test_end_artinian_subquotient_box():
    # numerator generators need individual caps: (X, Y^3)/(X^2, X*Y, Y^5)
    q = make_subquotient(RXY, ideal(RXY, "X", "Y^3"),
                         ideal(RXY, "X^2", "X*Y", "Y^5"))
    # surviving monomials: X (deg 1), Y^3, Y^4 (deg 4)
    assert end_artinian(q) == 4
    assert indeg(q) == 1


def test_end_matches_degree_sweep():
    rng = random.Random(31)
    checked = 0
    while checked < 40:
        ring = random_ring(rng)
        num, den = random_module_pair(rng, ring, max_gens=3, max_exp=2)
        q = make_subquotient(ring, num, den)
        if not is_artinian(q):
            continue
        checked += 1
        want = end_artinian(q)
        found = NEG_INF
        # survivors divide into a box bounded by generator + cap exponents <= 5
        for u in range(0, 31):
            if monomials_in_degree(q, u):
                found = u
        assert found == want
