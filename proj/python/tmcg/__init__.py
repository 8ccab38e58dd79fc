"""Thompson groups, braided tree pairs and the universal mapping class group."""

from ._tmcg import (
    AddressError,
    BElement,
    BVElement,
    DimensionError,
    DomainError,
    NonConvergenceError,
    ParseError,
    ResourceError,
    TmcgError,
    VElement,
    cayley_ball,
    psl2_probe,
    run_suite,
    set_budget,
    suite_names,
    t_section,
)

__all__ = [
    "AddressError",
    "BElement",
    "BVElement",
    "DimensionError",
    "DomainError",
    "NonConvergenceError",
    "ParseError",
    "ResourceError",
    "TmcgError",
    "VElement",
    "cayley_ball",
    "psl2_probe",
    "run_suite",
    "set_budget",
    "suite_names",
    "t_section",
]
