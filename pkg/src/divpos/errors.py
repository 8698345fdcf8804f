"""Exception types shared across the package."""


class DivposError(Exception):
    """Base class for all package errors."""


class MixedFieldError(DivposError):
    """Two irrational operands live in different quadratic fields."""


class InvalidInput(DivposError, ValueError):
    """A caller-supplied value violates a documented precondition."""


class RepresentationError(DivposError):
    """Operation requires a different divisor representation (prime vs general)."""


class OracleUnavailable(DivposError):
    """The surface model does not carry the oracle this operation needs."""


class InternalError(DivposError):
    """An exact identity that must hold failed to verify; indicates a bug."""


class ConfigError(DivposError, ValueError):
    """An audit configuration is malformed; message names the offending field."""
