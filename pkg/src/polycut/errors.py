"""Exception hierarchy shared by every module."""


class PolycutError(Exception):
    """Base class for all errors raised by polycut."""


class InvalidInputError(PolycutError, ValueError):
    pass


class NotFoundError(PolycutError, LookupError):
    pass


class InvalidComplexError(InvalidInputError):
    """A complex failed validation; ``report`` holds the details."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class FacetListFormatError(InvalidInputError):
    pass


class FlipIllegalError(PolycutError):
    pass


class OracleScaleExceeded(PolycutError):
    pass
