"""Exception types shared across the package."""


class CayleyError(Exception):
    """Base class for all errors raised by cayleyfn."""


class SizeMismatch(CayleyError, ValueError):
    pass


class ParseError(CayleyError, ValueError):
    """Malformed transformation or descriptor text.

    ``line`` and ``column`` are 1-based and may be None when the position
    is not meaningful (e.g. a JSON schema error).
    """

    def __init__(self, message, line=None, column=None):
        self.message = message
        self.line = line
        self.column = column
        if line is not None:
            message = f"{line}:{column}: {message}"
        super().__init__(message)


class NotIdempotent(CayleyError, ValueError):
    pass


class NotInCentralizer(CayleyError, ValueError):
    pass


class CarrierTooLarge(CayleyError, ValueError):
    pass


class InconsistencyError(CayleyError, RuntimeError):
    """Two deciders that must agree did not. Always an implementation bug."""


class HasInfiniteBranch(CayleyError, ValueError):
    pass


class RadiusTooSmall(CayleyError, ValueError):
    pass
