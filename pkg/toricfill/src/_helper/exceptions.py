"""
Exceptions
=======================================

Every domain failure raised by toricfill derives from ToricFillError, so
callers (and the command line front end) can separate "the mathematics says
no" from programming errors.
"""


class ToricFillError(ValueError):
    """Root of all toricfill domain errors."""


class NotPrimitive(ToricFillError):
    pass


class InvalidSite(ToricFillError):
    pass


class NotMinusOne(ToricFillError):
    pass


class TooShort(ToricFillError):
    pass


class DegenerateCone(ToricFillError):
    """The normal chain does not turn past a half-plane: t2 - t1 <= 0."""


class NoRealization(ToricFillError):
    """
    No positive edge lengths close the moment image.

    :ivar refutation: the FeasibilityAnswer refuting the length system,
                      or None when user supplied lengths were rejected.
    """
    def __init__(self, message, refutation=None):
        ToricFillError.__init__(self, message)
        self.refutation = refutation


class RaysDoNotCoincide(ToricFillError):
    pass


class EndEdgesNotParallel(ToricFillError):
    pass


class NoClosedRealization(NoRealization):
    pass


class NotClosable(ToricFillError):
    """Input to the cyclic closure is not a linear plumbing ending in 0
    with at least four vertices."""


class NotToric(ToricFillError):
    """
    No rotation of a cyclic plumbing closes up.

    :ivar reasons: list of (rotation, message) pairs, one per rotation tried.
    """
    def __init__(self, message, reasons=()):
        ToricFillError.__init__(self, message)
        self.reasons = list(reasons)


class NotCoprime(ToricFillError):
    pass


class InvalidLens(ToricFillError):
    pass


class DivisionByZero(ToricFillError, ZeroDivisionError):
    pass


class UnsupportedTarget(ToricFillError):
    pass


class VerificationError(ToricFillError):
    pass


class DimensionMismatch(ToricFillError):
    pass


class ParseError(ToricFillError):
    """
    Plumbing spec syntax error.

    :ivar line: 1-based line of the offending character
    :ivar column: 1-based column of the offending character
    :ivar expected: what the parser expected at that position
    """
    def __init__(self, message, line, column, expected):
        ToricFillError.__init__(
            self, '%s at line %d, column %d (expected %s)'
            % (message, line, column, expected))
        self.line = line
        self.column = column
        self.expected = expected
