"""Exact verification of the quadratic-residue determinant theorem."""

from ._core import (
    chapman_det,
    chapman_matrix,
    class_number,
    compute_a,
    det_bareiss,
    det_modular,
    fundamental_unit,
    is_prime,
    legendre,
    records_json,
    sequence,
    verify_prime,
    verify_range,
)

__all__ = [
    "chapman_det",
    "chapman_matrix",
    "class_number",
    "compute_a",
    "det_bareiss",
    "det_modular",
    "fundamental_unit",
    "is_prime",
    "legendre",
    "records_json",
    "sequence",
    "verify_prime",
    "verify_range",
]
