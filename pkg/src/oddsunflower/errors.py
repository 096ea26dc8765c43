"""Exception types shared across the package."""


class SunflowerError(Exception):
    """Base class for all errors raised by this package."""


class FamilyError(SunflowerError, ValueError):
    pass


class EmptySet(FamilyError):
    pass


class DuplicateSet(FamilyError):
    pass


class ElementOutOfRange(FamilyError):
    pass


class InvalidParameter(SunflowerError, ValueError):
    pass


class PreconditionViolated(SunflowerError, ValueError):
    pass


class MaterializationTooLarge(SunflowerError):
    """A construction would produce more members than the configured cap."""


class TooLarge(SunflowerError):
    """An exact search was asked to run beyond its supported size."""


class EvenN(InvalidParameter):
    pass


class EmptyInstance(InvalidParameter):
    pass


class ParseError(SunflowerError, ValueError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line
