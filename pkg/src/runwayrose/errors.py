"""Exception hierarchy.

Every error raised on purpose by this package derives from
:class:`WindRoseError`.  :class:`ValidationError` covers bad values and
unsupported configurations; :class:`ParseError` covers malformed input files.
"""


class WindRoseError(ValueError):
    """Base class for all package errors."""


class ValidationError(WindRoseError):
    pass


class ParseError(WindRoseError):
    """Malformed input text.  ``line`` is 1-based when known."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class TotalExceeds100(ValidationError):
    pass


class NegativeCell(ValidationError):
    pass


class BadGeometry(ValidationError):
    pass


class EmptyInput(ValidationError):
    pass


class NegativeWeight(ValidationError):
    pass


class DegenerateCell(ValidationError):
    pass


class DimensionMismatch(ValidationError):
    pass


class CompatModeUnavailable(ValidationError):
    pass


class SameClass(ValidationError):
    pass


class OddClassCount(ValidationError):
    pass


class BadOptions(ValidationError):
    pass
