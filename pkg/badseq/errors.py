"""
badseq/errors.py
-----------------
Every failure a service can raise. The CLI maps these onto exit codes
(see badseq/cli.py); library callers catch BadseqError or a subclass.
"""

from __future__ import annotations

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from .models.violation import Violation


class BadseqError(Exception):
    pass


class InvalidVectorError(BadseqError, ValueError):
    pass


class DimensionMismatchError(BadseqError, ValueError):
    def __init__(self, left: int, right: int):
        super().__init__(f"dimension mismatch: {left} vs {right}")
        self.left = left
        self.right = right


class UnsupportedDimensionError(BadseqError, ValueError):
    pass


class IndexOutOfRangeError(BadseqError, IndexError):
    pass


class SequenceFormatError(BadseqError, ValueError):
    pass


class BudgetExceededError(BadseqError):
    """A materialization, pairwise scan or enumeration would blow its budget."""

    def __init__(self, what: str, needed: int, budget: int):
        super().__init__(f"{what} needs {needed} but the budget is {budget}")
        self.what = what
        self.needed = needed
        self.budget = budget


class FixedWidthOverflowError(BadseqError, OverflowError):
    pass


class PreconditionError(BadseqError):
    """extend() was handed a sequence that is not cyclic and non-dominating."""

    def __init__(self, violation: Violation):
        super().__init__(f"input sequence rejected: {violation}")
        self.violation = violation
