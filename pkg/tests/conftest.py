"""Seeded instance builders and brute-force membership oracles for the tests.

Everything random goes through an explicit random.Random handed in by the
caller, so every run enumerates the same instances in the same order.
"""

from vnumlab import GradedRing, member, minimalize, mul, unit_ideal
from vnumlab.kernel import monomial_power

VAR_POOL = ("X", "Y", "Z", "W")


def random_ring(rng, max_vars=3, weights=(1, 2)):
    nvars = rng.randint(1, max_vars)
    return GradedRing(VAR_POOL[:nvars],
                      tuple(rng.choice(weights) for _ in range(nvars)))


def random_monomial(rng, ring, max_exp=4, nonunit=False):
    while True:
        m = tuple(rng.randint(0, max_exp) for _ in range(ring.nvars))
        if any(m) or not nonunit:
            return m


def random_ideal(rng, ring, max_gens=4, max_exp=4, min_gens=0):
    count = rng.randint(min_gens, max_gens)
    return minimalize(ring, [random_monomial(rng, ring, max_exp, nonunit=True)
                             for _ in range(count)])


def contained_ideal(rng, ring, ambient, max_gens=4, mult_exp=2):
    """A random ideal inside ambient, generated by multiples of its generators."""
    if ambient.is_zero:
        return ambient
    count = rng.randint(0, max_gens)
    gens = [mul(rng.choice(ambient.gens), random_monomial(rng, ring, mult_exp))
            for _ in range(count)]
    return minimalize(ring, gens)


def random_module_pair(rng, ring, max_gens=4, max_exp=4):
    """(A, B) with B contained in A, each from at most max_gens generators."""
    if rng.random() < 0.2:
        num = unit_ideal(ring)
    else:
        num = random_ideal(rng, ring, max_gens, max_exp, min_gens=1)
    return num, contained_ideal(rng, ring, num, max_gens)


def brute_colon_member(m, b, a):
    """m in (B : A) by definition: m times every generator of A lands in B."""
    return all(member(mul(m, g), b) for g in a.gens)


def brute_saturate_member(m, b, a):
    """m in (B : A^infinity) by per-generator power scans.

    m saturates against the ideal iff it saturates against each generator
    separately: in a high total power of A some factor's exponent clears its
    own threshold, and extra factors only multiply further.  Per generator g
    the useful k is bounded by the largest exponent among B's generators,
    since m * g^k only gains divisibility on the support of g.
    """
    bound = max((e for g in b.gens for e in g), default=0)
    return all(any(member(mul(m, monomial_power(g, k)), b)
                   for k in range(bound + 1))
               for g in a.gens)
