"""Lattice polynomial functions, Sugeno integrals and Sugeno utility functions
on finite chains, with exact factorisation of utility tables."""

from .axioms import (
    Axiom,
    AxiomResult,
    check,
    check_classical,
    check_pseudo,
    harmonize_ranges,
    is_order_preserving,
)
from .chains import (
    Chain,
    ProductDomain,
    characteristic_vector,
    comonotonic,
    convex_hull,
    cut,
    lattice_shift,
    med3,
    substitute,
)
from .generate import (
    compose,
    random_composition,
    random_monotone_map,
    random_sugeno_integral,
)
from .oracle import (
    BudgetExceeded,
    EnumerationBudget,
    brute_force_factorize,
    enum_monotone_maps,
    enum_sugeno_integrals,
)
from .polynomial import (
    PolynomialDNF,
    clamp,
    interpolate,
    is_sugeno,
    simplify,
    sugeno_core,
    to_text,
)
from .suff import (
    ConstantTableError,
    Factorization,
    FailureKind,
    FailureReason,
    NotSugenoUtility,
    Policy,
    classify,
    factorize,
    integral_of,
    is_sugeno_utility,
    local_utility,
    normalize,
    recompose,
)
from .sufio import (
    ParseError,
    hotel_maps,
    hotel_table,
    parse_maps,
    parse_table,
    render_maps,
    render_table,
)
from .table import (
    UnaryMap,
    UtilityTable,
    tables_equal,
)

__version__ = "0.1.0"

__all__ = [
    "Axiom",
    "AxiomResult",
    "check",
    "check_classical",
    "check_pseudo",
    "harmonize_ranges",
    "is_order_preserving",
    "Chain",
    "ProductDomain",
    "characteristic_vector",
    "comonotonic",
    "convex_hull",
    "cut",
    "lattice_shift",
    "med3",
    "substitute",
    "compose",
    "random_composition",
    "random_monotone_map",
    "random_sugeno_integral",
    "BudgetExceeded",
    "EnumerationBudget",
    "brute_force_factorize",
    "enum_monotone_maps",
    "enum_sugeno_integrals",
    "PolynomialDNF",
    "clamp",
    "interpolate",
    "is_sugeno",
    "simplify",
    "sugeno_core",
    "to_text",
    "ParseError",
    "hotel_maps",
    "hotel_table",
    "parse_maps",
    "parse_table",
    "render_maps",
    "render_table",
    "ConstantTableError",
    "Factorization",
    "FailureKind",
    "FailureReason",
    "NotSugenoUtility",
    "Policy",
    "classify",
    "factorize",
    "integral_of",
    "is_sugeno_utility",
    "local_utility",
    "normalize",
    "recompose",
    "UnaryMap",
    "UtilityTable",
    "tables_equal",
]
