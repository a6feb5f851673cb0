"""Exception hierarchy shared across the package.

Everything raised on bad *input* derives from ``VHodgeError`` so the CLI
can map it to a single exit code; internal consistency failures use plain
``AssertionError`` and indicate a bug, not a bad input.
"""

from __future__ import annotations


class VHodgeError(Exception):
    """Base class for all domain errors raised by this package."""


class ParseError(VHodgeError):
    """Syntax error in a polynomial expression, with a character offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at offset {position})")
        self.position = position


class UnknownVariableError(ParseError):
    """Expression uses a name outside the declared variable list."""

    def __init__(self, name: str, position: int):
        super().__init__(f"unknown variable name {name!r}", position)
        self.name = name


class WeightError(VHodgeError):
    """Base class for weight-inference and weight-validation failures."""


class UnderdeterminedWeightsError(WeightError):
    """The weight system is not unique; the caller must supply weights."""


class InconsistentWeightsError(WeightError):
    """No weight system exists: the polynomial is not weighted homogeneous."""


class NonPositiveWeightsError(WeightError):
    """The unique solution of the weight system has a non-positive entry."""


class NotWeightedHomogeneousError(VHodgeError):
    """Explicitly supplied weights do not make the polynomial homogeneous."""


class SmoothDivisorError(VHodgeError):
    """The Jacobian ideal is the unit ideal: the divisor is smooth at 0."""


class NonIsolatedSingularityError(VHodgeError):
    """The Milnor algebra is infinite dimensional."""


class InfiniteQuotientError(VHodgeError):
    """Quotient by the ideal is not a finite-dimensional vector space."""


class DegreeMismatchError(VHodgeError):
    """Graded slices of different degrees (or ambient spaces) compared."""


class HomogeneityRequiredError(VHodgeError):
    """Operation is only certified for homogeneous input (all weights 1/d)."""


class InvalidInputError(VHodgeError):
    """A precondition on user input is violated."""


class CoordinatePowerWarning(UserWarning):
    """Some pure power x_i^(1/w_i) is missing from the polynomial."""
