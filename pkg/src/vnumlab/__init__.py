"""v-numbers, associated primes, and eventual linearity of filtration
invariants for monomial modules over weighted polynomial rings."""

from .errors import DomainError, ParseError
from .kernel import (MAX_EXPONENT, GradedRing, Monomial, MonomialIdeal,
                     colon_ideal, colon_monomial, divides, format_monomial,
                     ideal_power, ideal_product, ideal_sum, intersect, lcm,
                     member, minimalize, monomials_of_degree, monomials_up_to,
                     mul, parse_monomial, radical_member, saturate,
                     unit_ideal, weighted_degree, zero_ideal)
from .modules import (INF, NEG_INF, Subquotient, ann_submodule, end_artinian,
                      gamma_submodule, indeg, is_artinian, is_zero,
                      make_subquotient, monomials_in_degree, twist)
from .primes import (AssSet, MonomialPrime, ass, ass_oracle,
                     default_degree_bound, full_prime, is_associated,
                     prime_ideal, restrict_to_support)
from .vnum import (GammaEndReport, OracleFind, VReport, gamma_end_check, v,
                   v_at_prime, v_oracle)
from .lab import (KINDS, DeltaProbe, FamilySpec, InvariantSeries, ItemResult,
                  LinearLaw, SeriesRow, TheoremReport, absorb_exponent,
                  ass_tail, check_theorems, colon_stability, delta_probe,
                  evaluate_series, family_member, fit_eventual_linear,
                  generator_degrees, make_family_spec, min_linear_combine,
                  reduction_check, series_flags)
from .golden import (Check, builtin_golden_checks, crossed_axes_checks,
                     golden_family_specs, principal_power_checks,
                     staggered_powers_checks)
from .docio import (ProblemDocument, canonical_dict, document_from_dict,
                    load_document)

__version__ = "0.1.0"

__all__ = [
    "DomainError", "ParseError",
    "MAX_EXPONENT", "GradedRing", "Monomial", "MonomialIdeal",
    "colon_ideal", "colon_monomial", "divides", "format_monomial",
    "ideal_power", "ideal_product", "ideal_sum", "intersect", "lcm",
    "member", "minimalize", "monomials_of_degree", "monomials_up_to", "mul",
    "parse_monomial", "radical_member", "saturate", "unit_ideal",
    "weighted_degree", "zero_ideal",
    "INF", "NEG_INF", "Subquotient", "ann_submodule", "end_artinian",
    "gamma_submodule", "indeg", "is_artinian", "is_zero", "make_subquotient",
    "monomials_in_degree", "twist",
    "AssSet", "MonomialPrime", "ass", "ass_oracle", "default_degree_bound",
    "full_prime", "is_associated", "prime_ideal", "restrict_to_support",
    "GammaEndReport", "OracleFind", "VReport", "gamma_end_check", "v",
    "v_at_prime", "v_oracle",
    "KINDS", "DeltaProbe", "FamilySpec", "InvariantSeries", "ItemResult",
    "LinearLaw", "SeriesRow", "TheoremReport", "absorb_exponent", "ass_tail",
    "check_theorems", "colon_stability", "delta_probe", "evaluate_series",
    "family_member", "fit_eventual_linear", "generator_degrees",
    "make_family_spec", "min_linear_combine", "reduction_check",
    "series_flags",
    "Check", "builtin_golden_checks", "crossed_axes_checks",
    "golden_family_specs", "principal_power_checks", "staggered_powers_checks",
    "ProblemDocument", "canonical_dict", "document_from_dict", "load_document",
]
