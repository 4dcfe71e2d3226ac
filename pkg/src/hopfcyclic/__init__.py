"""Exact engine for Hopf algebroids and their equivariant / Hopf-cyclic cohomology.

Everything is computed over the rational field with exact arithmetic.
See README.md for an overview and the CLI entry points.
"""

from .ratlinalg import (
    Matrix,
    Rat,
    Subspace,
    QuotientSpace,
    induced_map,
    kernel,
    quotient,
    rref,
    subspace_intersect,
    subspace_sum,
)
from .report import CheckReport, Violation

__all__ = [
    "Matrix",
    "Rat",
    "Subspace",
    "QuotientSpace",
    "induced_map",
    "kernel",
    "quotient",
    "rref",
    "subspace_intersect",
    "subspace_sum",
    "CheckReport",
    "Violation",
]
