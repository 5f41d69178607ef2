"""Families Q_n built from powers of an ideal acting on a module, and the
asymptotic laws of their invariants.

With M = A0/B0, N = aM, and I a nonzero monomial ideal, the three family
kinds present, at index n:

    In_mod_InN   : I^n M / I^n N       = (I^n A0 + B0, I^n a A0 + B0)
    M_mod_InN    : M / I^n N           = (A0,          I^n a A0 + B0)
    In_mod_In1N  : I^n M / I^(n+1) N   = (I^n A0 + B0, I^(n+1) a A0 + B0)

evaluate_series computes indeg/v/Ass per n plus the annihilator flags and
the per-n colon-stability test; fit_eventual_linear detects exact integer
linear tails; delta_probe locates the least generator of I outside the
radical of the Rees annihilator, whose degree is the predicted slope; and
check_theorems grades the eventual-linearity statements PASS / FAIL /
INAPPLICABLE against the computed data.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError
from .kernel import (MonomialIdeal, ideal_power, ideal_product, ideal_sum,
                     intersect, colon_ideal, member, monomial_power, mul,
                     weighted_degree)
from .modules import Subquotient, indeg as mod_indeg, INF
from .primes import AssSet, ass
from .vnum import VReport, v

KINDS = ("In_mod_InN", "M_mod_InN", "In_mod_In1N")


@dataclass(frozen=True)
class FamilySpec:
    """Everything needed to evaluate one family: module data, ideals, kind, range."""

    ring: object
    m_num: MonomialIdeal
    m_den: MonomialIdeal
    ideal_i: MonomialIdeal
    ideal_a: MonomialIdeal
    ideal_j: MonomialIdeal
    kind: str
    n_max: int


def make_family_spec(ring, m_num, m_den, ideal_i, kind, n_max,
                     ideal_a=None, ideal_j=None) -> FamilySpec:
    from .kernel import unit_ideal
    if ideal_a is None:
        ideal_a = unit_ideal(ring)
    if ideal_j is None:
        ideal_j = ideal_i
    for ideal in (m_num, m_den, ideal_i, ideal_a, ideal_j):
        if ideal.ring != ring:
            raise DomainError("ring-mismatch", "family ideals live in different rings")
    if kind not in KINDS:
        raise DomainError("bad-kind", f"unknown family kind {kind!r}")
    if not isinstance(n_max, int) or isinstance(n_max, bool) or n_max < 4:
        raise DomainError("bad-range", "n_max must be an integer >= 4")
    if ideal_i.is_zero:
        raise DomainError("zero-ideal", "the filtration ideal I must be nonzero")
    if ideal_j.is_zero:
        raise DomainError("zero-ideal", "the reduction ideal J must be nonzero")
    for g in m_den.gens:
        if not member(g, m_num):
            raise DomainError("denominator-not-contained",
                              "module denominator is not contained in the numerator")
    for g in ideal_j.gens:
        if not member(g, ideal_i):
            raise DomainError("reduction-not-contained", "J must be contained in I")
    return FamilySpec(ring, m_num, m_den, ideal_i, ideal_a, ideal_j, kind, n_max)


def _aA0(spec: FamilySpec) -> MonomialIdeal:
    return ideal_product(spec.ideal_a, spec.m_num)


def family_member(spec: FamilySpec, n: int) -> Subquotient:
    """The subquotient presented by the family at index n (shift 0)."""
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise DomainError("bad-range", f"family index must be a non-negative integer, got {n!r}")
    aa = _aA0(spec)
    i_n = ideal_power(spec.ideal_i, n)
    if spec.kind == "In_mod_InN":
        num = ideal_sum(ideal_product(i_n, spec.m_num), spec.m_den)
        den = ideal_sum(ideal_product(i_n, aa), spec.m_den)
    elif spec.kind == "M_mod_InN":
        num = spec.m_num
        den = ideal_sum(ideal_product(i_n, aa), spec.m_den)
    else:  # In_mod_In1N
        i_n1 = ideal_power(spec.ideal_i, n + 1)
        num = ideal_sum(ideal_product(i_n, spec.m_num), spec.m_den)
        den = ideal_sum(ideal_product(i_n1, aa), spec.m_den)
    return Subquotient(spec.ring, num, den, 0)


def generator_degrees(j: MonomialIdeal) -> list:
    """Weighted degrees of the minimal generators, ascending (canonical gen order)."""
    if j.is_zero:
        raise DomainError("zero-ideal", "the zero ideal has no generator degrees")
    return [weighted_degree(j.ring, g) for g in j.gens]


@dataclass
class SeriesRow:
    n: int
    indeg: object
    vreport: VReport
    ass_set: AssSet
    colon_stable: bool


@dataclass
class InvariantSeries:
    spec: FamilySpec
    rows: list
    ann_i_zero: bool
    ann_y1_zero: bool

    @property
    def ns(self):
        return [r.n for r in self.rows]

    def indeg_values(self):
        return [r.indeg for r in self.rows]

    def v_values(self):
        return [r.vreport.overall for r in self.rows]


def _ann_zero_flag(spec: FamilySpec, against: MonomialIdeal) -> bool:
    """(0 :_M against) = 0, tested on the numerator level."""
    c = intersect(colon_ideal(spec.m_den, against), spec.m_num)
    return all(member(g, spec.m_den) for g in c.gens)


def series_flags(spec: FamilySpec) -> dict:
    """ann_I_zero and ann_y1_zero for the underlying module, n-independent."""
    y1 = spec.ideal_j.gens[0]
    return {
        "ann_I_zero": _ann_zero_flag(spec, spec.ideal_i),
        "ann_y1_zero": _ann_zero_flag(spec, MonomialIdeal(spec.ring, (y1,))),
    }


def colon_stability(spec: FamilySpec, n: int) -> bool:
    """(I^(n+1) N :_M I) = I^n M, kind-independent."""
    aa = _aA0(spec)
    den_next = ideal_sum(ideal_product(ideal_power(spec.ideal_i, n + 1), aa), spec.m_den)
    lhs = intersect(colon_ideal(den_next, spec.ideal_i), spec.m_num)
    rhs = ideal_sum(ideal_product(ideal_power(spec.ideal_i, n), spec.m_num), spec.m_den)
    return lhs == rhs


def compute_rows(spec: FamilySpec, ns) -> list:
    rows = []
    for n in ns:
        q = family_member(spec, n)
        rows.append(SeriesRow(n, mod_indeg(q), v(q), ass(q), colon_stability(spec, n)))
    return rows


def evaluate_series(spec: FamilySpec) -> InvariantSeries:
    """indeg, v, Ass and colon stability for n = 0..n_max, plus the ann flags."""
    rows = compute_rows(spec, range(spec.n_max + 1))
    flags = series_flags(spec)
    return InvariantSeries(spec, rows, flags["ann_I_zero"], flags["ann_y1_zero"])


# --- linear tails ---------------------------------------------------------


@dataclass
class LinearLaw:
    """v(n) = slope*n + intercept for n >= start_n; stabilized means the tail
    reached the fit window."""

    slope: int
    intercept: int
    start_n: int
    stabilized: bool

    def value(self, n: int) -> int:
        return self.slope * n + self.intercept


def fit_eventual_linear(ns, values, window: int = 3) -> LinearLaw:
    """Exact integer fit on the longest linear suffix of finite values.

    Returns the least start_n whose suffix is collinear; stabilized only if
    that suffix has at least `window` points.  Best-effort fields otherwise.
    """
    if len(ns) != len(values) or not ns:
        raise DomainError("bad-range", "fit wants equal-length nonempty n/value lists")
    for a, b in zip(ns, ns[1:]):
        if b != a + 1:
            raise DomainError("bad-range", "fit wants consecutive n values")
    if window < 2:
        raise DomainError("bad-range", "window must be at least 2")
    # longest all-finite suffix
    lo = len(values)
    while lo > 0 and isinstance(values[lo - 1], int):
        lo -= 1
    tail_ns, tail_vals = ns[lo:], values[lo:]
    if len(tail_vals) < 2:
        if len(tail_vals) == 1:
            return LinearLaw(0, tail_vals[0], tail_ns[0], False)
        return LinearLaw(0, 0, ns[-1] + 1, False)
    slope = tail_vals[-1] - tail_vals[-2]
    start = len(tail_vals) - 2
    while start > 0 and tail_vals[start] - tail_vals[start - 1] == slope:
        start -= 1
    start_n = tail_ns[start]
    intercept = tail_vals[start] - slope * start_n
    stabilized = (len(tail_vals) - start) >= window
    return LinearLaw(slope, intercept, start_n, stabilized)


def min_linear_combine(laws) -> tuple:
    """Eventual minimum of linear laws: least slope, then least intercept among those."""
    laws = list(laws)
    if not laws:
        raise DomainError("empty-laws", "cannot combine zero laws")
    a = min(s for s, _ in laws)
    b = min(t for s, t in laws if s == a)
    return (a, b)


# --- the leading-coefficient probe ---------------------------------------


@dataclass
class GenVerdict:
    index: int  # 1-based position in the degree-sorted generator list
    generator: tuple
    degree: int
    in_radical: bool
    exponent: int | None  # least confirming s, None when not found below s_max


@dataclass
class DeltaProbe:
    verdicts: list
    s_max: int
    delta_index: int | None
    delta_degree: int | None


def delta_probe(spec: FamilySpec, s_max: int = 8) -> DeltaProbe:
    """Bounded membership of each generator of I in the radical of the Rees
    annihilator of the family's graded module.

    The module is generated in Rees degree 0, so y^s kills it iff y^s kills
    the degree-0 piece: y^s A0 <= I^s N (kind In_mod_InN) or y^s A0 <=
    I^(s+1) N (kind In_mod_In1N).  Not found below s_max is reported, not
    decided.  The first generator not found gives delta_index/delta_degree.
    """
    if not isinstance(s_max, int) or isinstance(s_max, bool) or s_max < 1:
        raise DomainError("bad-range", "s_max must be a positive integer")
    if spec.ideal_j != spec.ideal_i:
        raise DomainError("unsupported-reduction",
                          "the probe is defined for the J = I case only")
    if spec.kind == "M_mod_InN":
        raise DomainError("unsupported-kind",
                          "probe the In_mod_In1N form instead of M_mod_InN")
    off = 0 if spec.kind == "In_mod_InN" else 1
    aa = _aA0(spec)
    verdicts = []
    delta_index = None
    delta_degree = None
    for j, y in enumerate(spec.ideal_j.gens, start=1):
        hit = None
        for s in range(1, s_max + 1):
            target = ideal_sum(ideal_product(ideal_power(spec.ideal_i, s + off), aa),
                               spec.m_den)
            ys = monomial_power(y, s)
            if all(member(mul(ys, g), target) for g in spec.m_num.gens):
                hit = s
                break
        deg = weighted_degree(spec.ring, y)
        verdicts.append(GenVerdict(j, y, deg, hit is not None, hit))
        if hit is None and delta_index is None:
            delta_index = j
            delta_degree = deg
    return DeltaProbe(verdicts, s_max, delta_index, delta_degree)


def reduction_check(j: MonomialIdeal, i: MonomialIdeal, n_probe: int):
    """Least n <= n_probe with J * I^n = I^(n+1), or None when not found."""
    for g in j.gens:
        if not member(g, i):
            raise DomainError("reduction-not-contained", "J must be contained in I")
    for n in range(n_probe + 1):
        if ideal_product(j, ideal_power(i, n)) == ideal_power(i, n + 1):
            return n
    return None


def absorb_exponent(spec: FamilySpec, k_max: int):
    """Least k <= k_max with I^k M <= N (tested as I^k A0 <= a A0 + B0), else None."""
    target = ideal_sum(_aA0(spec), spec.m_den)
    for k in range(k_max + 1):
        ik = ideal_power(spec.ideal_i, k)
        if all(member(mul(g, h), target) for g in ik.gens for h in spec.m_num.gens):
            return k
    return None


# --- theorem compliance ----------------------------------------------------


@dataclass
class ItemResult:
    status: str  # PASS | FAIL | INAPPLICABLE
    detail: str


@dataclass
class TheoremReport:
    items: dict
    data: dict

    @property
    def failed(self) -> list:
        return [k for k, r in self.items.items() if r.status == "FAIL"]


def ass_tail(series: InvariantSeries):
    """(start_n, AssSet) of the longest suffix with a constant Ass set."""
    rows = series.rows
    tail_set = rows[-1].ass_set
    k = len(rows) - 1
    while k > 0 and rows[k - 1].ass_set == tail_set:
        k -= 1
    return rows[k].n, tail_set


def _is_zero_tail(series: InvariantSeries, window: int) -> bool:
    tail = series.v_values()[-window:]
    return all(x == INF for x in tail)


def _per_prime_series(series: InvariantSeries, start_n: int, p):
    ns, vals = [], []
    for row in series.rows:
        if row.n < start_n:
            continue
        ns.append(row.n)
        vals.append(row.vreport.per_prime.get(p, INF))
    return ns, vals


def check_theorems(spec: FamilySpec, window: int = 3, s_max: int = 8) -> TheoremReport:
    """Grade the eventual-linearity statements on the three companion families.

    Items (each PASS, FAIL, or INAPPLICABLE):
      a  slope(indeg) = slope(v) = probe degree, families In_mod_InN / In_mod_In1N
      b  per-prime slopes on the stable Ass tail sit among generator degrees >= d_delta
      c  v(M/I^nN) <= v(I^nM/I^nN) everywhere, and <= the fitted line on its tail
      d  with (0:_M I) = 0: ann_{M/I^(n+1)N}(I) = ann_{I^nM/I^(n+1)N}(I) on the tail
      e  with (0:_M I) = 0, I-power absorbed into N, equal Ass tails: equal v on the tail
      f  per n: colon stability and equal Ass there force equal v at that n
      g  with (0:_M y1) = 0, d1 >= 1, I-power absorbed: slopes and probe degree equal d1
      h  Ass(I^nM/I^nN) <= Ass(M/I^nN) at every n
    """
    specs = {kind: FamilySpec(spec.ring, spec.m_num, spec.m_den, spec.ideal_i,
                              spec.ideal_a, spec.ideal_j, kind, spec.n_max)
             for kind in KINDS}
    series = {kind: evaluate_series(specs[kind]) for kind in KINDS}
    s_h, s_g, s_m = series["In_mod_InN"], series["In_mod_In1N"], series["M_mod_InN"]

    zero = {kind: _is_zero_tail(series[kind], window) for kind in KINDS}
    laws_indeg, laws_v = {}, {}
    for kind in KINDS:
        laws_indeg[kind] = fit_eventual_linear(series[kind].ns,
                                               series[kind].indeg_values(), window)
        laws_v[kind] = fit_eventual_linear(series[kind].ns,
                                           series[kind].v_values(), window)
        if not zero[kind] and not (laws_indeg[kind].stabilized and laws_v[kind].stabilized):
            raise DomainError("not-stabilized",
                              f"{kind} series did not stabilize below n_max; raise n_max")

    probes = {}
    if spec.ideal_j == spec.ideal_i:
        for kind in ("In_mod_InN", "In_mod_In1N"):
            probes[kind] = delta_probe(specs[kind], s_max)

    degrees = generator_degrees(spec.ideal_j)
    d1 = degrees[0]
    absorbed = absorb_exponent(spec, s_max)
    ann_i_zero = s_h.ann_i_zero
    ann_y1_zero = s_h.ann_y1_zero
    # paired comparisons use indices (n, n+1), so the window ends at n_max - 1
    tail_n = max(spec.n_max - window, 0)

    items = {}

    # (a) slope(indeg) = slope(v) = probe delta degree, per power family
    notes, bad, applicable = [], [], False
    for kind in ("In_mod_InN", "In_mod_In1N"):
        if zero[kind]:
            probe = probes.get(kind)
            if probe is not None and probe.delta_index is not None:
                notes.append(f"{kind}: zero family, probe inconclusive below s_max")
            continue
        applicable = True
        li, lv = laws_indeg[kind], laws_v[kind]
        if li.slope != lv.slope:
            bad.append(f"{kind}: slope(indeg)={li.slope} != slope(v)={lv.slope}")
            continue
        probe = probes.get(kind)
        if probe is None:
            notes.append(f"{kind}: slopes agree at {lv.slope}; no probe (J != I)")
        elif probe.delta_index is None:
            bad.append(f"{kind}: probe kills every generator yet the family is nonzero")
        elif probe.delta_degree != lv.slope:
            bad.append(f"{kind}: probe degree {probe.delta_degree} != slope {lv.slope}")
        else:
            notes.append(f"{kind}: slope {lv.slope} matches probe degree")
    if bad:
        items["a"] = ItemResult("FAIL", "; ".join(bad + notes))
    elif applicable:
        items["a"] = ItemResult("PASS", "; ".join(notes))
    else:
        items["a"] = ItemResult("INAPPLICABLE", "both power families are eventually zero")

    # (b) per-prime slopes land in the generator degrees >= d_delta
    notes, bad, undecided, applicable = [], [], [], False
    for kind in ("In_mod_InN", "In_mod_In1N"):
        if zero[kind]:
            continue
        applicable = True
        start_n, tail_set = ass_tail(series[kind])
        probe = probes.get(kind)
        floor = probe.delta_degree if probe is not None and probe.delta_degree is not None else None
        allowed = {d for d in degrees if floor is None or d >= floor}
        for p in tail_set:
            name = ",".join(p.names(spec.ring)) or "(0)"
            ns, vals = _per_prime_series(series[kind], start_n, p)
            law = fit_eventual_linear(ns, vals, window)
            if not law.stabilized:
                undecided.append(f"{kind}/{name}: tail too short")
            elif law.slope not in allowed:
                bad.append(f"{kind}/{name}: slope {law.slope} not in {sorted(allowed)}")
            else:
                notes.append(f"{kind}/{name}: slope {law.slope}")
    if bad:
        items["b"] = ItemResult("FAIL", "; ".join(bad))
    elif not applicable:
        items["b"] = ItemResult("INAPPLICABLE", "no nonzero power family")
    elif undecided:
        items["b"] = ItemResult("INAPPLICABLE", "; ".join(undecided))
    else:
        items["b"] = ItemResult("PASS", "; ".join(notes))

    # (c) the M-family is bounded by the In_mod_InN family and its fitted line
    if zero["In_mod_InN"]:
        items["c"] = ItemResult("INAPPLICABLE", "In_mod_InN family is eventually zero")
    else:
        law_h = laws_v["In_mod_InN"]
        bad = []
        for row_m, row_h in zip(s_m.rows, s_h.rows):
            if row_m.vreport.overall > row_h.vreport.overall:
                bad.append(f"n={row_m.n}: v(M/I^nN)={row_m.vreport.overall} "
                           f"> v(I^nM/I^nN)={row_h.vreport.overall}")
        for row in s_m.rows:
            if row.n >= law_h.start_n and isinstance(row.vreport.overall, int) \
                    and row.vreport.overall > law_h.value(row.n):
                bad.append(f"n={row.n}: v(M/I^nN) above the fitted bound")
        items["c"] = ItemResult("FAIL", "; ".join(bad)) if bad else ItemResult(
            "PASS", f"bounded by slope {law_h.slope} + {law_h.intercept}")

    # (d) colon-comparison: ann modules agree on the tail
    if not ann_i_zero:
        items["d"] = ItemResult("INAPPLICABLE", "(0 :_M I) != 0")
    else:
        aa = _aA0(spec)
        bad = []
        for n in range(tail_n, spec.n_max):
            den_next = ideal_sum(ideal_product(ideal_power(spec.ideal_i, n + 1), aa),
                                 spec.m_den)
            lhs = intersect(colon_ideal(den_next, spec.ideal_i), spec.m_num)
            num_n = ideal_sum(ideal_product(ideal_power(spec.ideal_i, n), spec.m_num),
                              spec.m_den)
            if not all(member(g, num_n) for g in lhs.gens):
                bad.append(f"n={n}: (I^(n+1)N : I) reaches outside I^nM")
        items["d"] = ItemResult("FAIL", "; ".join(bad)) if bad else ItemResult(
            "PASS", f"ann modules agree for n={tail_n}..{spec.n_max - 1}")

    # (e) equal Ass tails force equal v on the tail
    if not ann_i_zero:
        items["e"] = ItemResult("INAPPLICABLE", "(0 :_M I) != 0")
    elif absorbed is None:
        items["e"] = ItemResult("INAPPLICABLE", f"no I^k M <= N confirmed below k={s_max}")
    elif zero["In_mod_In1N"] or zero["M_mod_InN"]:
        items["e"] = ItemResult("INAPPLICABLE", "a compared family is eventually zero")
    else:
        _, tail_g = ass_tail(s_g)
        _, tail_m = ass_tail(s_m)
        if tail_g != tail_m:
            items["e"] = ItemResult("INAPPLICABLE", "Ass tails differ")
        else:
            bad = []
            m_rows = {r.n: r for r in s_m.rows}
            for row in s_g.rows:
                if row.n < tail_n or row.n + 1 > spec.n_max:
                    continue
                other = m_rows[row.n + 1]
                if row.vreport.overall != other.vreport.overall:
                    bad.append(f"n={row.n}: v={row.vreport.overall} vs "
                               f"v(M/I^(n+1)N)={other.vreport.overall}")
            items["e"] = ItemResult("FAIL", "; ".join(bad)) if bad else ItemResult(
                "PASS", f"equal v on n={tail_n}..{spec.n_max - 1}")

    # (f) per-n: colon stability + equal Ass => equal v at that n
    if absorbed is None:
        items["f"] = ItemResult("INAPPLICABLE", f"no I^k M <= N confirmed below k={s_max}")
    else:
        m_rows = {r.n: r for r in s_m.rows}
        triggered, bad = 0, []
        for row in s_g.rows:
            if row.n + 1 > spec.n_max:
                continue
            other = m_rows[row.n + 1]
            if not (row.colon_stable and row.ass_set == other.ass_set):
                continue
            triggered += 1
            if row.vreport.overall != other.vreport.overall:
                bad.append(f"n={row.n}: v={row.vreport.overall} vs {other.vreport.overall}")
        if bad:
            items["f"] = ItemResult("FAIL", "; ".join(bad))
        elif triggered == 0:
            items["f"] = ItemResult("INAPPLICABLE", "premise never holds below n_max")
        else:
            items["f"] = ItemResult("PASS", f"implication holds at {triggered} indices")

    # (g) regular least-degree generator pins the slope to d1
    if not ann_y1_zero or d1 < 1:
        items["g"] = ItemResult("INAPPLICABLE", "(0 :_M y1) != 0 or d1 = 0")
    elif absorbed is None:
        items["g"] = ItemResult("INAPPLICABLE", f"no I^k M <= N confirmed below k={s_max}")
    elif zero["In_mod_In1N"] or zero["M_mod_InN"]:
        items["g"] = ItemResult("INAPPLICABLE", "a graded family is eventually zero")
    else:
        bad = []
        if laws_v["In_mod_In1N"].slope != d1:
            bad.append(f"In_mod_In1N v slope {laws_v['In_mod_In1N'].slope} != d1={d1}")
        if laws_v["M_mod_InN"].slope != d1:
            bad.append(f"M_mod_InN v slope {laws_v['M_mod_InN'].slope} != d1={d1}")
        probe = probes.get("In_mod_In1N")
        if probe is not None and probe.delta_degree is not None and probe.delta_degree != d1:
            bad.append(f"probe degree {probe.delta_degree} != d1={d1}")
        items["g"] = ItemResult("FAIL", "; ".join(bad)) if bad else ItemResult(
            "PASS", f"slope pinned to d1={d1}")

    # (h) the power family's primes sit inside the M-family's, at every n
    bad = []
    for row_h, row_m in zip(s_h.rows, s_m.rows):
        if not row_h.ass_set.issubset(row_m.ass_set):
            bad.append(f"n={row_h.n}")
    items["h"] = ItemResult("FAIL", "Ass not contained at n: " + ", ".join(bad)) if bad \
        else ItemResult("PASS", "Ass(I^nM/I^nN) contained in Ass(M/I^nN) for all n")

    data = {
        "flags": {"ann_I_zero": ann_i_zero, "ann_y1_zero": ann_y1_zero,
                  "absorb_exponent": absorbed},
        "laws_v": {k: laws_v[k] for k in KINDS},
        "laws_indeg": {k: laws_indeg[k] for k in KINDS},
        "zero_tail": zero,
        "probes": probes,
        "generator_degrees": degrees,
        "series": series,
    }
    return TheoremReport(items, data)
