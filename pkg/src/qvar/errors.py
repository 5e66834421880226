"""Exception types shared across the package."""


class QvarError(Exception):
    """Base class for all package errors."""


class PoleError(QvarError):
    """Evaluation requested at (or too close to) a pole of a gamma factor."""


class AccuracyError(QvarError):
    """A quadrature or series did not reach the requested accuracy.

    Carries the best error estimate achieved so callers can decide whether
    the partial result is still usable.
    """

    def __init__(self, message, achieved=None, value=None):
        super().__init__(message)
        self.achieved = achieved
        self.value = value


class ParameterDomainError(QvarError):
    """Arguments outside the validity domain of a formula."""


class InsufficientRangeError(QvarError):
    """A Hecke eigenvalue map does not cover a required index."""

    def __init__(self, message, needed=None, available=None):
        super().__init__(message)
        self.needed = needed
        self.available = available


class ConditionViolatedError(QvarError):
    """An exponential-sum identity was invoked outside its coprimality guard."""


class SpecMismatchError(QvarError):
    """Incompatible observable specs passed to a variance form."""


class DatasetError(QvarError):
    """Base class for dataset ingestion failures."""


class DatasetParseError(DatasetError):
    """The file could not be parsed at all (bad JSON / CSV)."""


class DatasetSchemaError(DatasetError):
    """A record is missing required fields or has wrong types."""


class DatasetValidationError(DatasetError):
    """A structurally valid record violates a mathematical invariant."""

    def __init__(self, message, index=None, reason=None):
        super().__init__(message)
        self.index = index
        self.reason = reason
