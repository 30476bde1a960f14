"""Exception hierarchy shared by all zetaint modules."""


class ZetaIntError(Exception):
    """Base class for every error raised by this package."""


class PoleAtOne(ZetaIntError, ZeroDivisionError):
    pass


class ToleranceUnachievable(ZetaIntError):
    pass


class LogOfZero(ZetaIntError, ValueError):
    pass


class ZeroDenominator(ZetaIntError, ZeroDivisionError):
    pass


class DomainError(ZetaIntError, ValueError):
    pass


class PathThroughZero(ZetaIntError):
    """A phase-tracking sample landed (numerically) on a zero of zeta."""


class UnwrapInconsistent(ZetaIntError):
    pass


class MissedZero(ZetaIntError):
    pass


class ParseError(ZetaIntError, ValueError):
    def __init__(self, message, lineno=None):
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)
        self.lineno = lineno


class NotMonotone(ZetaIntError, ValueError):
    pass


class CountMismatch(ZetaIntError):
    pass


class NonConvergent(ZetaIntError):
    pass


class UnsupportedKernel(ZetaIntError, ValueError):
    pass


class NotSimplePole(ZetaIntError):
    pass


class SpecViolation(ZetaIntError, ValueError):
    """Criterion parameters fall outside the domain of the named theorem."""


class InsufficientZeroTable(ZetaIntError):
    pass


class Inconclusive(ZetaIntError):
    pass
