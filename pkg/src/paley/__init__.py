"""Exact arithmetic for k-th power Paley digraphs: transitive
subtournament counts via character sums, and lower-bound searches for
multicolor directed Ramsey numbers."""

from .field import Field, build_field, coset, residue_class, valid_modulus

__all__ = [
    "Field",
    "build_field",
    "coset",
    "residue_class",
    "valid_modulus",
]

__version__ = "0.1.0"
