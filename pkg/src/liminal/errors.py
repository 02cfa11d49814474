"""Exception hierarchy shared across the package.

Every domain failure derives from :class:`LiminalError`; the CLI maps these to
exit code 1 and prints the class name verbatim.
"""

from __future__ import annotations


class LiminalError(Exception):
    """Base class for domain errors."""


class WeightSystemError(LiminalError, ValueError):
    """Structurally invalid weights or degree."""


class NormalizationError(WeightSystemError):
    """Some weight exceeds half the degree (2*a_i > d)."""


class NonPolynomialQuotient(LiminalError, ArithmeticError):
    """The Poincare product formula does not yield a polynomial with
    non-negative coefficients, so no isolated quasi-homogeneous singularity
    has these weights."""


class NonIntegerMilnorNumber(LiminalError, ArithmeticError):
    pass


class DimensionTooLarge(LiminalError):
    """Enumeration would exceed the configured search-node budget."""


class InvalidComplex(LiminalError, ValueError):
    pass
