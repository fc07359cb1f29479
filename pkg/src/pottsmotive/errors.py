"""Exception types shared across the package."""


class PottsError(Exception):
    """Base class for all package-specific errors."""


class InvalidParameterError(PottsError, ValueError):
    """A constructor or family parameter is out of range."""


class InvalidArgumentError(PottsError, ValueError):
    """An operation was called on an argument outside its domain."""


class EdgeNotFoundError(PottsError, KeyError):
    """An edge id is not present in the graph."""


class ResourceLimitError(PottsError):
    """An enumeration would exceed the configured work budget."""


class ExactDivisionError(PottsError, ArithmeticError):
    """An exact polynomial division left a nonzero remainder."""


class NotPolynomialCountError(PottsError):
    """Point counts are inconsistent with a polynomial class in T."""
