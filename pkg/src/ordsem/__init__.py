"""Workbench for finite ordered semigroups.

Validates structures, computes ideals and annihilators, machine-checks a
suite of annihilator/ideal claims with counterexample witnesses, and
exhaustively enumerates small ordered semigroups for property search.
"""

from .core import (
    BuildError,
    OrderedSemigroup,
    ValidationReport,
    Violation,
    build,
    covering_pairs,
    find_zero,
    from_leq,
    iter_bits,
    mask_of,
    validate,
    zero_of,
)
from .enumeration import (
    SearchResult,
    SearchTask,
    enumerate_compatible_orders,
    enumerate_ordered_semigroups,
    enumerate_semigroups,
    evaluate_property,
    search,
)
from .lemmas import LemmaEntry, LemmaReport, check_all, refute_monotonicity
from .setalg import (
    IdealKind,
    annihilator,
    down_closure,
    enumerate_ideals,
    is_ideal,
    is_ideal_of_subsemigroup,
    left_annihilator,
    product,
    right_annihilator,
)

__version__ = "0.1.0"

__all__ = [
    "BuildError",
    "IdealKind",
    "LemmaEntry",
    "LemmaReport",
    "OrderedSemigroup",
    "SearchResult",
    "SearchTask",
    "ValidationReport",
    "Violation",
    "annihilator",
    "build",
    "check_all",
    "covering_pairs",
    "down_closure",
    "enumerate_compatible_orders",
    "enumerate_ideals",
    "enumerate_ordered_semigroups",
    "enumerate_semigroups",
    "evaluate_property",
    "find_zero",
    "from_leq",
    "is_ideal",
    "is_ideal_of_subsemigroup",
    "iter_bits",
    "left_annihilator",
    "mask_of",
    "product",
    "refute_monotonicity",
    "right_annihilator",
    "search",
    "validate",
    "zero_of",
]
