"""Exact chromatic numbers and slab colorings of distance graphs on the real line."""

from ._distchrom import (
    BudgetError,
    DistanceSet,
    DomainError,
    NoSlabCertificate,
    ParseError,
    PeriodicColoring,
    QuadExt,
    SlabColoring,
    __version__,
    ceil_div,
    certify_no_t_slab,
    chi_integer,
    chi_m_bounds,
    clique_number_integer,
    find_clique,
    find_linear_coloring,
    integer_slab_from_periodic,
    is_t_colorable_integer,
    parse_distance_set,
    propagate_forced,
    replay_certificate,
    theorem_family,
    unit_slab_coloring,
    verify_periodic,
    verify_slab,
    window_chromatic,
)

__all__ = [
    "BudgetError",
    "DistanceSet",
    "DomainError",
    "NoSlabCertificate",
    "ParseError",
    "PeriodicColoring",
    "QuadExt",
    "SlabColoring",
    "__version__",
    "ceil_div",
    "certify_no_t_slab",
    "chi_integer",
    "chi_m_bounds",
    "clique_number_integer",
    "find_clique",
    "find_linear_coloring",
    "integer_slab_from_periodic",
    "is_t_colorable_integer",
    "parse_distance_set",
    "propagate_forced",
    "replay_certificate",
    "theorem_family",
    "unit_slab_coloring",
    "verify_periodic",
    "verify_slab",
    "window_chromatic",
]
