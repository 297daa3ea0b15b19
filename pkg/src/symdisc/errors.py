"""Exception hierarchy shared by every module."""


class SymDiscError(Exception):
    """Base class for all library errors."""


class DomainError(SymDiscError, ValueError):
    """An argument lies outside the region where the operation is defined."""


class NotInterior(DomainError):
    pass


class NonSmoothPoint(DomainError):
    pass


class SingularSystem(DomainError):
    pass


class WrongBoundaryType(DomainError):
    pass


class NonPositiveDenominator(DomainError):
    pass


class MapEscapesDomain(DomainError):
    pass


class PoleHit(SymDiscError, ZeroDivisionError):
    pass


class HolomorphyViolation(SymDiscError):
    pass


class ArityMismatch(SymDiscError, TypeError):
    pass


class ExprSyntaxError(SymDiscError):
    """Malformed map expression. ``offset`` is the byte offset of the fault."""

    def __init__(self, message, offset=None):
        self.offset = offset
        self.message = message
        if offset is not None:
            message = f"{message} (at offset {offset})"
        super().__init__(message)


class UnknownIdentifier(ExprSyntaxError):
    pass


class HypothesisViolated(SymDiscError):
    """A theorem's hypothesis does not hold for the supplied map.

    ``hypothesis`` names the failed assumption, e.g. ``"origin-fixed"``.
    """

    def __init__(self, hypothesis, message, residual=None):
        self.hypothesis = hypothesis
        self.residual = residual
        super().__init__(f"{hypothesis}: {message}")
