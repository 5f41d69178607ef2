"""Exact arithmetic for monomials and monomial ideals in a weighted polynomial ring.

A monomial is a bare exponent tuple, one entry per ring variable.  A
MonomialIdeal always stores its canonical minimal generating set, sorted by
(weighted degree, exponent tuple), so dataclass equality is ideal equality:
the zero ideal has no generators, the unit ideal exactly one (the unit
monomial).  All operations are exact integer arithmetic; there is no field,
no coefficients, no Groebner machinery.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

from .errors import DomainError, ParseError

Monomial = tuple  # exponent vector; Monomial and tuple[int, ...] are used interchangeably

# Exponents are conceptually machine-width; growth past this cap (possible via
# power() on adversarial input) is a checked error, never silent wraparound.
MAX_EXPONENT = 2**63 - 1

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z_0-9]*\Z")


@dataclass(frozen=True)
class GradedRing:
    """Polynomial ring k[x_1..x_d] graded by positive integer variable weights."""

    var_names: tuple
    weights: tuple

    def __post_init__(self):
        names = tuple(self.var_names)
        weights = tuple(self.weights)
        object.__setattr__(self, "var_names", names)
        object.__setattr__(self, "weights", weights)
        if len(names) != len(weights):
            raise DomainError("invalid-ring", "need one weight per variable")
        if len(set(names)) != len(names):
            raise DomainError("invalid-ring", "variable names must be distinct")
        for name in names:
            if not isinstance(name, str) or not _NAME_RE.match(name):
                raise DomainError("invalid-ring", f"bad variable name {name!r}")
        for w in weights:
            if not isinstance(w, int) or isinstance(w, bool) or w < 1:
                raise DomainError("invalid-ring", f"weights must be positive integers, got {w!r}")

    @property
    def nvars(self) -> int:
        return len(self.var_names)

    @property
    def one(self) -> Monomial:
        return (0,) * self.nvars

    def variable(self, i: int) -> Monomial:
        return tuple(1 if j == i else 0 for j in range(self.nvars))

    def index_of(self, name: str) -> int:
        try:
            return self.var_names.index(name)
        except ValueError:
            raise ParseError("unknown-variable", f"unknown variable {name!r}") from None

    def check_monomial(self, m: Monomial) -> None:
        if len(m) != self.nvars:
            raise DomainError("dimension-mismatch",
                              f"monomial has {len(m)} exponents, ring has {self.nvars} variables")
        for e in m:
            if not isinstance(e, int) or isinstance(e, bool) or e < 0:
                raise DomainError("dimension-mismatch", f"bad exponent {e!r}")


def weighted_degree(ring: GradedRing, m: Monomial) -> int:
    """Sum of exponent * weight over all variables."""
    ring.check_monomial(m)
    return sum(e * w for e, w in zip(m, ring.weights))


def divides(m1: Monomial, m2: Monomial) -> bool:
    """Componentwise m1 <= m2."""
    if len(m1) != len(m2):
        raise DomainError("dimension-mismatch", "monomials live in different rings")
    return all(a <= b for a, b in zip(m1, m2))


def mul(m1: Monomial, m2: Monomial) -> Monomial:
    if len(m1) != len(m2):
        raise DomainError("dimension-mismatch", "monomials live in different rings")
    out = tuple(a + b for a, b in zip(m1, m2))
    if any(e > MAX_EXPONENT for e in out):
        raise DomainError("exponent-overflow", "exponent exceeds the machine-width cap")
    return out


def monomial_power(m: Monomial, k: int) -> Monomial:
    out = tuple(e * k for e in m)
    if any(e > MAX_EXPONENT for e in out):
        raise DomainError("exponent-overflow", "exponent exceeds the machine-width cap")
    return out


def lcm(m1: Monomial, m2: Monomial) -> Monomial:
    if len(m1) != len(m2):
        raise DomainError("dimension-mismatch", "monomials live in different rings")
    return tuple(a if a >= b else b for a, b in zip(m1, m2))


def colon_quotient(g: Monomial, m: Monomial) -> Monomial:
    """g / gcd(g, m), the generator contribution to a colon ideal."""
    return tuple(a - b if a > b else 0 for a, b in zip(g, m))


def support(m: Monomial) -> tuple:
    return tuple(i for i, e in enumerate(m) if e > 0)


@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal held by its canonical minimal generators; compare with ==."""

    ring: GradedRing
    gens: tuple

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return len(self.gens) == 1 and not any(self.gens[0])

    def __contains__(self, m: Monomial) -> bool:
        return member(m, self)


def minimalize(ring: GradedRing, gens: Iterable[Monomial]) -> MonomialIdeal:
    """Canonical form: drop duplicates and non-minimal generators, sort by (degree, exponents)."""
    seen = set()
    for g in gens:
        g = tuple(g)
        ring.check_monomial(g)
        seen.add(g)
    ordered = sorted(seen, key=lambda m: (weighted_degree(ring, m), m))
    kept: list = []
    for m in ordered:
        # any divisor already kept also witnesses divisors dropped earlier
        if not any(divides(g, m) for g in kept):
            kept.append(m)
    return MonomialIdeal(ring, tuple(kept))


def zero_ideal(ring: GradedRing) -> MonomialIdeal:
    return MonomialIdeal(ring, ())


def unit_ideal(ring: GradedRing) -> MonomialIdeal:
    return MonomialIdeal(ring, (ring.one,))


def member(m: Monomial, b: MonomialIdeal) -> bool:
    """True iff some generator divides m."""
    b.ring.check_monomial(m)
    return any(all(a <= c for a, c in zip(g, m)) for g in b.gens)


def _check_same_ring(a: MonomialIdeal, b: MonomialIdeal) -> None:
    if a.ring != b.ring:
        raise DomainError("ring-mismatch", "ideals live in different rings")


def ideal_sum(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    _check_same_ring(a, b)
    return minimalize(a.ring, a.gens + b.gens)


def ideal_product(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    _check_same_ring(a, b)
    return minimalize(a.ring, (mul(g, h) for g in a.gens for h in b.gens))


@lru_cache(maxsize=8192)
def _power_cached(b: MonomialIdeal, n: int) -> MonomialIdeal:
    if n == 0:
        return unit_ideal(b.ring)
    return ideal_product(_power_cached(b, n - 1), b)


def ideal_power(b: MonomialIdeal, n: int) -> MonomialIdeal:
    """b^n with b^0 the unit ideal; re-minimalized at every step."""
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise DomainError("bad-exponent", f"power wants a non-negative integer, got {n!r}")
    return _power_cached(b, n)


def intersect(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    """Pairwise lcms of generators, minimalized."""
    _check_same_ring(a, b)
    return minimalize(a.ring, (lcm(g, h) for g in a.gens for h in b.gens))


def colon_monomial(b: MonomialIdeal, m: Monomial) -> MonomialIdeal:
    """(b : m) for a single monomial m."""
    b.ring.check_monomial(m)
    return minimalize(b.ring, (colon_quotient(g, m) for g in b.gens))


def colon_ideal(b: MonomialIdeal, a: MonomialIdeal) -> MonomialIdeal:
    """(b : a) as the intersection of the per-generator colons."""
    _check_same_ring(b, a)
    if a.is_zero:
        raise DomainError("colon-by-zero", "colon by the zero ideal is undefined")
    out = None
    for m in a.gens:
        part = colon_monomial(b, m)
        out = part if out is None else intersect(out, part)
    return out


def saturate(b: MonomialIdeal, a: MonomialIdeal) -> MonomialIdeal:
    """(b : a^infinity), the stable value of iterated colon."""
    _check_same_ring(b, a)
    if a.is_zero:
        raise DomainError("colon-by-zero", "saturation by the zero ideal is undefined")
    cur = b
    while True:
        nxt = colon_ideal(cur, a)
        if nxt == cur:
            return cur
        cur = nxt


def radical_member(m: Monomial, b: MonomialIdeal) -> bool:
    """m in rad(b): some power of m is in b iff some generator's support is inside m's."""
    b.ring.check_monomial(m)
    return any(all(ge == 0 or me > 0 for ge, me in zip(g, m)) for g in b.gens)


# --- monomial text form --------------------------------------------------
#
# term   := "1" | factor ("*" factor)*
# factor := varname ("^" positive-integer)?
#
# Whitespace between tokens is ignored; "X^0" is a syntax error.

_TOKEN_RE = re.compile(r"[A-Za-z_][A-Za-z_0-9]*|\d+|\^|\*|\S")


def parse_monomial(ring: GradedRing, text: str) -> Monomial:
    tokens = [(m.group(0), m.start() + 1) for m in _TOKEN_RE.finditer(text)]
    if not tokens:
        raise ParseError("syntax-error", "empty monomial", column=1)
    if len(tokens) == 1 and tokens[0][0] == "1":
        return ring.one
    exps = [0] * ring.nvars
    pos = 0

    def fail(msg, col):
        raise ParseError("syntax-error", msg, column=col)

    expect_factor = True
    while pos < len(tokens):
        tok, col = tokens[pos]
        if expect_factor:
            if not _NAME_RE.match(tok):
                fail(f"expected a variable name, got {tok!r}", col)
            try:
                idx = ring.index_of(tok)
            except ParseError:
                raise ParseError("unknown-variable", f"unknown variable {tok!r}", column=col) from None
            pos += 1
            e = 1
            if pos < len(tokens) and tokens[pos][0] == "^":
                pos += 1
                if pos >= len(tokens) or not tokens[pos][0].isdigit():
                    fail("expected an exponent after '^'", col)
                e = int(tokens[pos][0])
                if e < 1:
                    fail("exponent must be a positive integer", tokens[pos][1])
                pos += 1
            exps[idx] += e
            expect_factor = False
        else:
            if tok != "*":
                fail(f"expected '*', got {tok!r}", col)
            pos += 1
            expect_factor = True
    if expect_factor:
        fail("dangling '*'", tokens[-1][1])
    m = tuple(exps)
    if any(e > MAX_EXPONENT for e in m):
        raise DomainError("exponent-overflow", "exponent exceeds the machine-width cap")
    return m


def format_monomial(ring: GradedRing, m: Monomial) -> str:
    ring.check_monomial(m)
    parts = []
    for name, e in zip(ring.var_names, m):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"


# --- degree-bounded enumeration ------------------------------------------


def monomials_of_degree(ring: GradedRing, t: int) -> Iterator[Monomial]:
    """All exponent tuples of weighted degree exactly t, in ascending tuple order."""
    w = ring.weights
    d = ring.nvars
    if t < 0:
        return
    if d == 0:
        if t == 0:
            yield ()
        return

    def rec(i, remaining, prefix):
        if i == d - 1:
            if remaining % w[i] == 0:
                yield prefix + (remaining // w[i],)
            return
        for e in range(remaining // w[i] + 1):
            yield from rec(i + 1, remaining - e * w[i], prefix + (e,))

    yield from rec(0, t, ())


def monomials_up_to(ring: GradedRing, bound: int) -> Iterator[Monomial]:
    """All monomials of weighted degree <= bound, by increasing degree then tuple order."""
    for t in range(bound + 1):
        yield from monomials_of_degree(ring, t)
