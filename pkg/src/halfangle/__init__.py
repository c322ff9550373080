"""Certified sin/cos from the doubling identities alone, plus a harness that
checks the Pythagorean identity those identities imply."""

from .arith import FixedPoint, Interval, Rounding
from .errors import DomainError, PrecisionError
from .identities import (
    bound_chain_check,
    decay_table,
    defect_recursion_residual,
    paper_bound,
    product_term,
    pythagoras_defect,
)
from .kernel import AnglePair, chord_length, complement, sin_cos

__all__ = [
    "AnglePair",
    "DomainError",
    "FixedPoint",
    "Interval",
    "PrecisionError",
    "Rounding",
    "bound_chain_check",
    "chord_length",
    "complement",
    "decay_table",
    "defect_recursion_residual",
    "paper_bound",
    "product_term",
    "pythagoras_defect",
    "sin_cos",
]
