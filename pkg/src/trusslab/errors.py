"""Exception hierarchy for trusslab."""


class TrussLabError(Exception):
    """Base class for all trusslab errors."""


class FieldMismatchError(TrussLabError):
    """Operands live over different coefficient fields."""


class DimensionMismatchError(TrussLabError):
    """Operand shapes are incompatible."""


class DimensionLimitError(TrussLabError):
    """A structure exceeds the configured dimension cap."""


class ParseError(TrussLabError):
    """A scalar, matrix, or document cannot be parsed."""


class NotInvertibleError(TrussLabError):
    """A linear map has no two-sided inverse."""


class NotIdempotentError(TrussLabError):
    """split_idempotent was handed a map with q∘q != q."""


class InconsistentSystemError(TrussLabError):
    """An exact linear system has no solution."""


class AmbiguousSystemError(TrussLabError):
    """An exact linear system has more than one solution."""


class NoAntipodeError(TrussLabError):
    """The identity has no convolution inverse."""


class InvalidStructureError(TrussLabError):
    """Input data fails the axioms required by an operation."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class IncompleteGrouplikesError(TrussLabError):
    """Grouplike extraction could not certify completeness."""


class ClosureError(TrussLabError):
    """A product of grouplikes left the span of the grouplikes."""


class BoundExceededError(TrussLabError):
    """An enumeration or search exceeds its configured bound."""
