"""Exceptions shared across the package."""


class DimensionMismatchError(ValueError):
    """Two vectors that must share a dimension do not."""


class ZeroDenominatorError(ValueError):
    """A ratio required by a formula has a vanishing denominator."""
