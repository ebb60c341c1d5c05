"""Exact classification of quiver variety singularities over extended Dynkin diagrams.

Thin wrapper over the C++ extension. All arithmetic is exact: parameters are
Gaussian rationals given as strings like "1/2", "-2i" or "1/2+1/3i" (or
anything str() turns into one, so plain ints work too).
"""

try:
    from ._quivar import (
        bordism,
        classify,
        decompose,
        diagram,
        enumerate_configurations,
        extended_diagram,
        is_generic,
        make_dominant,
        mckay,
        r_plus,
        roots,
        simple_exists,
        slice_quivers,
        types,
        verify,
    )
except ImportError:  # extension built outside the package (plain CMake builds)
    from _quivar import (
        bordism,
        classify,
        decompose,
        diagram,
        enumerate_configurations,
        extended_diagram,
        is_generic,
        make_dominant,
        mckay,
        r_plus,
        roots,
        simple_exists,
        slice_quivers,
        types,
        verify,
    )

__version__ = "0.1.0"

__all__ = [
    "bordism",
    "classify",
    "decompose",
    "diagram",
    "enumerate_configurations",
    "extended_diagram",
    "is_generic",
    "make_dominant",
    "mckay",
    "r_plus",
    "roots",
    "simple_exists",
    "slice_quivers",
    "types",
    "verify",
]
