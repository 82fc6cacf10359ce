"""Exception hierarchy shared by every module of the package."""


class TitsError(Exception):
    """Base class for all errors raised by :mod:`titsindex`."""


class DomainError(TitsError, ValueError):
    """An argument lies outside the domain of an operation."""


class ValidationError(DomainError):
    """A structural object (diagram automorphism, index, profile) is malformed."""


class InconsistentProfile(DomainError):
    """An invariant profile violates a relation between its slots."""


class MissingSlots(DomainError):
    """A query needs profile slots that were not supplied."""

    def __init__(self, message, slots=()):
        super().__init__(message)
        self.slots = tuple(slots)


class SchemaError(DomainError):
    """A JSON document does not match the expected interchange format."""

    def __init__(self, field, message):
        super().__init__(f"{field}: {message}")
        self.field = field
