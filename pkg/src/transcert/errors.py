"""Exception hierarchy shared by every layer of the workbench."""


class TranscertError(Exception):
    """Base class for all workbench errors."""


class DivisionByZeroInterval(TranscertError, ZeroDivisionError):
    """Divisor enclosure contains zero."""


class DomainError(TranscertError, ValueError):
    """Argument enclosure leaves the real domain of the function."""


class BranchCutError(DomainError):
    """Rectangle touches the principal-branch cut {Re <= 0, Im = 0}."""


class NonRealComparand(TranscertError, ValueError):
    """A comparison side does not evaluate to a (near-)real enclosure."""


class UnknownClaim(TranscertError, KeyError):
    pass


class DimensionMismatch(TranscertError, ValueError):
    pass


class ZeroAlpha(TranscertError, ValueError):
    pass


class NonPositiveEntries(TranscertError, ValueError):
    pass


class DegenerateCurve(TranscertError, ValueError):
    pass


class ExprSyntaxError(TranscertError, SyntaxError):
    """Parse failure carrying the byte offset of the offending token."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at byte {offset}")
        self.message = message
        self.offset = offset


class UnknownIdentifier(ExprSyntaxError):
    pass
