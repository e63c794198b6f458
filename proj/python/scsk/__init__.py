"""Exact shortest common superstring with one mismatch-tolerant string."""

from ._scsk import (
    Error,
    GenerationError,
    InputError,
    Instance,
    OracleLimitError,
    Solution,
    ValidationError,
    brute_force_scs,
    brute_force_scsk,
    generate_instance,
    parse_instance,
    solve,
    solve_json,
    validate,
    verify_solution,
)

__all__ = [
    "Error",
    "GenerationError",
    "InputError",
    "Instance",
    "OracleLimitError",
    "Solution",
    "ValidationError",
    "brute_force_scs",
    "brute_force_scsk",
    "generate_instance",
    "parse_instance",
    "solve",
    "solve_json",
    "validate",
    "verify_solution",
]
