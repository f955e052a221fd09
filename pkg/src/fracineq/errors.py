"""Exception types shared by every numeric module.

The audit machinery has to distinguish "the inputs were outside the stated
domain" from "the algorithm could not certify a value", so both get their
own class instead of a bare ValueError/RuntimeError.
"""


class DomainError(ValueError):
    """An argument lies outside the documented domain of an operation."""


class ConvergenceError(ArithmeticError):
    """An iterative scheme hit its cap before reaching the tolerance."""


class NonFiniteError(ArithmeticError):
    """An integrand or series produced a NaN/inf sample."""


class CrossCheckError(ArithmeticError):
    """Two independent evaluation routes of one quantity disagree."""
