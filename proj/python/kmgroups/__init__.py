"""Exact computations with the Kim-Manturov pentagon-relation groups.

Thin wrapper over the pybind11 module. When installed as a wheel the
extension lives inside this package; in a development tree it is importable
from the build directory instead.
"""

try:
    from ._kmgroups import *  # noqa: F401,F403
    from ._kmgroups import __doc__ as _doc
except ImportError:  # development tree: extension on PYTHONPATH
    from _kmgroups import *  # noqa: F401,F403
    from _kmgroups import __doc__ as _doc

__doc__ = _doc
__all__ = [
    "Presentation",
    "build_presentation",
    "presentation_from_text",
    "delta5_four_generator_presentation",
    "delta5_index2_subgroup_presentation",
    "h1",
    "canonical_quad",
    "lambda_generators",
    "rewrite_in_lambda",
    "kernel_h1",
    "smith_normal_form",
    "lattice_image_invariants",
    "phi3",
    "phi2",
    "hook_dim",
    "character_table_rows",
    "verify_all",
]
