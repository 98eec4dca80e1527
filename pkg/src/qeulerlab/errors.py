"""Exception hierarchy shared by every module of the package."""


class QEulerError(Exception):
    """Base class for all errors raised by qeulerlab."""


class DomainError(QEulerError, ValueError):
    """An operation was asked for a value outside its domain."""


class PoleError(DomainError, ZeroDivisionError):
    """Evaluation of a rational function at a root of its reduced denominator."""


class ParameterError(QEulerError, ValueError):
    """Bad parameters for a table, check or certificate."""


class ConfigurationError(QEulerError, ValueError):
    """A series configuration cannot deliver the requested accuracy.

    ``minimal_terms`` holds the smallest truncation that would have sufficed.
    """

    def __init__(self, message, minimal_terms=None):
        super().__init__(message)
        self.minimal_terms = minimal_terms


class InvariantError(QEulerError, RuntimeError):
    """An internal invariant failed; this signals a bug, not bad input."""
