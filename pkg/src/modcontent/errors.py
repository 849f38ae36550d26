"""Exception hierarchy shared by every module."""


class ModContentError(Exception):
    """Base class for all errors raised by this package."""


class SymbolSyntaxError(ModContentError, ValueError):
    """Farey symbol text does not match the grammar."""


class ValidationError(ModContentError, ValueError):
    """Input is well formed but violates a structural condition."""


class DomainError(ModContentError, ValueError):
    pass


class DegenerateSymbol(ModContentError, ValueError):
    """Symbol has fewer than three distinct ideal vertices."""


class NoMediant(ModContentError, RuntimeError):
    """Triangulation got stuck: no vertex is the mediant of its neighbours."""


class SizeBoundExceeded(ModContentError):
    pass


class NotTransitive(ModContentError, ValueError):
    pass


class LiftFailure(ModContentError, RuntimeError):
    """Character table verification failed. Always a bug, never data."""


class NotIntegral(ModContentError, ValueError):
    pass


class NegativeArrowCount(ModContentError, ValueError):
    pass


class NotSubset(ModContentError, ValueError):
    pass


class InsufficientTruncation(ModContentError, ValueError):
    pass


class NonConvergence(ModContentError, RuntimeError):
    pass
