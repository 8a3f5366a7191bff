"""Joint security/QoS countermeasure selection via stable matching.

Thin wrapper over the compiled extension. Scenarios and solutions cross the
boundary as JSON strings using the same schema as the command-line tool.
"""

try:
    from ._irsmatch import *  # noqa: F401,F403
    from ._irsmatch import __doc__ as _ext_doc  # noqa: F401
except ImportError:  # extension built out-of-tree (plain CMake build)
    from _irsmatch import *  # noqa: F401,F403

__all__ = [
    "generate",
    "validate_scenario",
    "solve",
    "exact",
    "upper_bound",
    "check_stability",
    "pareto_csv",
    "experiment_csv",
    "InputError",
    "GuardError",
]
