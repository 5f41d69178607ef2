"""Built-in check suites: three module families with closed-form invariants.

Each suite returns Check records pairing a computed quantity with its known
value, so the CLI and the test battery can grade them uniformly.

  principal_power   R = k[X,Y], M = R/(X*Y^b), I = (X^a)
  crossed_axes      R = k[X,Y], M = R/(X*Y), I = (X^d1, Y^d2)
  staggered_powers  R = k[X,Y,Z], M = R/(X^3, X*Y^4), I = (X, Y^2, Z^3)
"""
from __future__ import annotations

from dataclasses import dataclass

from .kernel import GradedRing, minimalize, parse_monomial, unit_ideal, zero_ideal
from .lab import (delta_probe, evaluate_series, family_member,
                  fit_eventual_linear, make_family_spec)
from .modules import end_artinian
from .primes import MonomialPrime, ass
from .vnum import gamma_end_check, v


@dataclass
class Check:
    label: str
    got: object
    want: object

    @property
    def ok(self) -> bool:
        return self.got == self.want


def _ring_xy() -> GradedRing:
    return GradedRing(("X", "Y"), (1, 1))


def _ring_xyz() -> GradedRing:
    return GradedRing(("X", "Y", "Z"), (1, 1, 1))


def _ideal(ring, *texts):
    return minimalize(ring, tuple(parse_monomial(ring, t) for t in texts))


def principal_power_checks(a: int, b: int, n_max: int = 10) -> list:
    """M = R/(X*Y^b) under I = (X^a): both power families and the M-family."""
    ring = _ring_xy()
    num = unit_ideal(ring)
    den = _ideal(ring, f"X*Y^{b}" if b > 1 else "X*Y")
    ideal_i = _ideal(ring, f"X^{a}" if a > 1 else "X")
    p_y = MonomialPrime.of((1,))
    p_x = MonomialPrime.of((0,))
    p_xy = MonomialPrime.of((0, 1))

    checks = []
    spec_pow = make_family_spec(ring, num, den, ideal_i, "In_mod_InN", n_max,
                                ideal_a=zero_ideal(ring))
    spec_slice = make_family_spec(ring, num, den, ideal_i, "In_mod_In1N", n_max)
    spec_mod = make_family_spec(ring, num, den, ideal_i, "M_mod_InN", n_max)
    pow_series = evaluate_series(spec_pow)
    slice_series = evaluate_series(spec_slice)
    mod_series = evaluate_series(spec_mod)

    for row in pow_series.rows:
        n = row.n
        if n == 0:
            continue
        tag = f"a={a},b={b},n={n}"
        checks.append(Check(f"power[{tag}].ass", set(row.ass_set), {p_y}))
        checks.append(Check(f"power[{tag}].indeg", row.indeg, a * n))
        checks.append(Check(f"power[{tag}].v", row.vreport.overall, a * n + b - 1))
    for row in slice_series.rows:
        n = row.n
        if n == 0:
            continue
        tag = f"a={a},b={b},n={n}"
        checks.append(Check(f"slice[{tag}].ass", set(row.ass_set), {p_xy}))
        checks.append(Check(f"slice[{tag}].indeg", row.indeg, a * n))
        checks.append(Check(f"slice[{tag}].v", row.vreport.overall, a * n + a + b - 2))
    for row in mod_series.rows:
        n = row.n
        if n == 0:
            continue
        tag = f"a={a},b={b},n={n}"
        if a * n == 1:
            checks.append(Check(f"mod[{tag}].ass", set(row.ass_set), {p_x}))
            checks.append(Check(f"mod[{tag}].v", row.vreport.overall, 0))
            checks.append(Check(f"mod[{tag}].v_X", row.vreport.per_prime[p_x], 0))
        else:
            checks.append(Check(f"mod[{tag}].ass", set(row.ass_set), {p_x, p_xy}))
            checks.append(Check(f"mod[{tag}].v_X", row.vreport.per_prime[p_x], b))
            checks.append(Check(f"mod[{tag}].v_XY", row.vreport.per_prime[p_xy],
                                a * n + b - 2))
            checks.append(Check(f"mod[{tag}].v", row.vreport.overall,
                                min(b, a * n + b - 2)))
    return checks


def crossed_axes_checks(d1: int, d2: int, n_max: int = 10) -> list:
    """R/((X*Y) + (X^d1, Y^d2)^n), d1 <= d2: Artinian quotients with
    v = d1*n - 1 and end = d2*n - 1.

    At d1*n = 1 the X-axis collapses entirely (the module is k[Y]/(Y^(d2*n)))
    and the closed form becomes v = d2*n - 1; the linear formula needs
    d1*n >= 2 so that x^(d1*n - 1) is a nonunit witness.
    """
    ring = _ring_xy()
    num = unit_ideal(ring)
    den = _ideal(ring, "X*Y")
    ideal_i = _ideal(ring, f"X^{d1}" if d1 > 1 else "X",
                     f"Y^{d2}" if d2 > 1 else "Y")
    p_xy = MonomialPrime.of((0, 1))

    checks = []
    spec = make_family_spec(ring, num, den, ideal_i, "M_mod_InN", n_max)
    for n in range(1, n_max + 1):
        tag = f"d1={d1},d2={d2},n={n}"
        q = family_member(spec, n)
        report = v(q)
        want_v = d1 * n - 1 if d1 * n >= 2 else d2 * n - 1
        checks.append(Check(f"axes[{tag}].ass", set(ass(q)), {p_xy}))
        checks.append(Check(f"axes[{tag}].v", report.overall, want_v))
        checks.append(Check(f"axes[{tag}].end", end_artinian(q), d2 * n - 1))
        gamma = gamma_end_check(q)
        checks.append(Check(f"axes[{tag}].v_le_end", gamma.ok, True))
        checks.append(Check(f"axes[{tag}].gamma_end", gamma.gamma_end, d2 * n - 1))
    return checks


STAGGERED_INDEG = [0, 1, 2, 4, 7, 10, 12, 14, 16]
STAGGERED_V = [3, 4, 5, 7, 10, 13, 15, 17, 19]


def staggered_powers_checks(n_max: int = 8, window: int = 3, s_max: int = 8) -> list:
    """M = R/(X^3, X*Y^4) under I = (X, Y^2, Z^3): hand-computed series for
    both graded kinds, colon stability, the fitted laws, and the probe."""
    ring = _ring_xyz()
    num = unit_ideal(ring)
    den = _ideal(ring, "X^3", "X*Y^4")
    ideal_i = _ideal(ring, "X", "Y^2", "Z^3")

    spec_g = make_family_spec(ring, num, den, ideal_i, "In_mod_In1N", n_max)
    spec_m = make_family_spec(ring, num, den, ideal_i, "M_mod_InN", max(n_max + 1, 4))
    series_g = evaluate_series(spec_g)
    series_m = evaluate_series(spec_m)

    checks = []
    upto = min(n_max, len(STAGGERED_INDEG) - 1)
    for n in range(upto + 1):
        row = series_g.rows[n]
        checks.append(Check(f"stag.slice[n={n}].indeg", row.indeg, STAGGERED_INDEG[n]))
        checks.append(Check(f"stag.slice[n={n}].v", row.vreport.overall, STAGGERED_V[n]))
        row_m = series_m.rows[n + 1]
        # the quotient M/I^(n+1)M keeps the unit, so its indeg is 0; only its
        # v series coincides with the slice kind
        checks.append(Check(f"stag.mod[n={n + 1}].indeg", row_m.indeg, 0))
        checks.append(Check(f"stag.mod[n={n + 1}].v", row_m.vreport.overall, STAGGERED_V[n]))
    for n in range(min(6, n_max) + 1):
        checks.append(Check(f"stag.colon_stable[n={n}]",
                            series_g.rows[n].colon_stable, True))
    if n_max >= 7:
        law_i = fit_eventual_linear(series_g.ns, series_g.indeg_values(), window)
        law_v = fit_eventual_linear(series_g.ns, series_g.v_values(), window)
        checks.append(Check("stag.law.indeg", (law_i.slope, law_i.intercept,
                                               law_i.start_n, law_i.stabilized),
                            (2, 0, 5, True)))
        checks.append(Check("stag.law.v", (law_v.slope, law_v.intercept,
                                           law_v.start_n, law_v.stabilized),
                            (2, 3, 5, True)))
    probe = delta_probe(spec_g, s_max)
    checks.append(Check("stag.probe.delta_index", probe.delta_index, 2))
    checks.append(Check("stag.probe.delta_degree", probe.delta_degree, 2))
    checks.append(Check("stag.probe.gen1_in_radical", probe.verdicts[0].in_radical, True))
    checks.append(Check("stag.probe.gen1_exponent_le_3", probe.verdicts[0].exponent <= 3, True))
    checks.append(Check("stag.probe.gen2_not_found", probe.verdicts[1].in_radical, False))
    return checks


def builtin_golden_checks() -> list:
    """All suites with the pinned parameter grids."""
    checks = []
    for a, b in ((1, 1), (1, 3), (2, 3), (3, 2)):
        checks.extend(principal_power_checks(a, b))
    for d1, d2 in ((1, 2), (2, 3), (3, 5)):
        checks.extend(crossed_axes_checks(d1, d2))
    checks.extend(staggered_powers_checks())
    return checks


def golden_family_specs() -> list:
    """The three example families as specs with a unit multiplier, for the
    theorem battery."""
    ring2 = _ring_xy()
    ring3 = _ring_xyz()
    specs = [
        make_family_spec(ring2, unit_ideal(ring2), _ideal(ring2, "X*Y^3"),
                         _ideal(ring2, "X^2"), "In_mod_In1N", 8),
        make_family_spec(ring2, unit_ideal(ring2), _ideal(ring2, "X*Y"),
                         _ideal(ring2, "X", "Y^2"), "M_mod_InN", 8),
        make_family_spec(ring3, unit_ideal(ring3), _ideal(ring3, "X^3", "X*Y^4"),
                         _ideal(ring3, "X", "Y^2", "Z^3"), "In_mod_In1N", 8),
    ]
    return specs
