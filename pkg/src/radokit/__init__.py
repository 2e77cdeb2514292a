"""Exact-arithmetic toolkit for partition regularity: columns-condition
certificates, localized subrings of the rationals, truncated system
builders, and colouring searches."""

from .linalg import RatMatrix, format_matrix, in_span, parse_matrix, rank, rref
from .rado import (
    CCCertificate,
    FirstEntryReport,
    columns_condition,
    first_entries,
    verify_cc_certificate,
    weak_first_entries_condition,
)
from .rings import (
    PrimeSet,
    Rat,
    factorize,
    finite_sums,
    format_rat,
    in_scaled_subring,
    in_subring,
    is_prime,
    make_rat,
    padic_valuation,
    parse_prime_set,
    parse_rat,
    pigeonhole_subset,
)
from .search import (
    BudgetExceededError,
    Colouring,
    GroundSet,
    RadoNumberResult,
    SolutionAssignment,
    doubling_distinct,
    log2_parity_colour,
    min_rado_number,
    monochromatic_solution,
)
from .systems import (
    CoefficientSchedule,
    SystemSpec,
    build_stacked_matrix,
    build_truncated_system,
    natural_solution_witness,
    parse_schedule,
    refute_over_subring,
    schedule_value,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceededError",
    "CCCertificate",
    "CoefficientSchedule",
    "Colouring",
    "FirstEntryReport",
    "GroundSet",
    "PrimeSet",
    "RadoNumberResult",
    "Rat",
    "RatMatrix",
    "SolutionAssignment",
    "SystemSpec",
    "build_stacked_matrix",
    "build_truncated_system",
    "columns_condition",
    "doubling_distinct",
    "factorize",
    "finite_sums",
    "first_entries",
    "format_matrix",
    "format_rat",
    "in_scaled_subring",
    "in_span",
    "in_subring",
    "is_prime",
    "log2_parity_colour",
    "make_rat",
    "min_rado_number",
    "monochromatic_solution",
    "natural_solution_witness",
    "padic_valuation",
    "parse_matrix",
    "parse_prime_set",
    "parse_rat",
    "parse_schedule",
    "pigeonhole_subset",
    "rank",
    "refute_over_subring",
    "rref",
    "schedule_value",
    "verify_cc_certificate",
    "weak_first_entries_condition",
]
