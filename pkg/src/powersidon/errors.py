"""Shared exception types."""


class WidthOverflowError(OverflowError):
    """A value does not fit the configured unsigned integer width."""


class ResourceLimitError(RuntimeError):
    """An operation would exceed its configured memory or size budget."""


class UndefinedFitError(ValueError):
    """A least-squares fit has no usable points."""
