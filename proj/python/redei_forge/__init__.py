"""Finite-field congruence, direction, and power-pair verification kernels."""

try:
    from ._core import *  # noqa: F401,F403
    from ._core import __doc__ as _core_doc
except ImportError:  # test layout: extension built next to the package, not inside it
    from _core import *  # noqa: F401,F403
    from _core import __doc__ as _core_doc

__all__ = [
    "InputError",
    "TheoremViolation",
    "SearchBudgetExceeded",
    "IoError",
    "solve_thue",
    "solve_vinogradov",
    "expressible_set",
    "redei_audit",
    "find_pair",
    "compare_bounds",
    "sum_two_squares",
    "ratio_set",
    "verify_direction_bound",
    "hp_check",
    "corollary_max_search",
    "run_sweep",
]
