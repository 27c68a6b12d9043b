"""Exact frame-theoretic invariants of time-frequency lattices.

All arithmetic is exact: rationals come back as canonical ``"p/q"`` strings
(feed them to :class:`fractions.Fraction`), integers as python ints.
"""

from ._core import (
    InvalidInputError,
    SelfCheckError,
    __version__,
    analyze,
    analyze_json,
    covolume,
    det,
    order,
    skew_normal_form,
    smith_normal_form,
    standard_symplectic,
    symplectic_pairing,
)

__all__ = [
    "InvalidInputError",
    "SelfCheckError",
    "__version__",
    "analyze",
    "analyze_json",
    "covolume",
    "det",
    "order",
    "skew_normal_form",
    "smith_normal_form",
    "standard_symplectic",
    "symplectic_pairing",
]
