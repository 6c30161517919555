"""Exception hierarchy shared by all trigideal modules."""


class TrigIdealError(Exception):
    """Base class for all errors raised by this package."""


class NonConvergence(TrigIdealError):
    """Root refinement could not certify a unique root inside the given box."""


class NotIsolating(TrigIdealError):
    """An input box does not isolate a single root of its polynomial."""


class ConstantPolynomial(TrigIdealError):
    """A nonconstant polynomial was required."""


class PrecisionExhausted(TrigIdealError):
    """The configured precision ceiling was reached without a certified answer."""


class ResourceLimit(TrigIdealError):
    """A configured work ceiling (e.g. processed pair count) was exceeded."""


class WrongOrder(TrigIdealError):
    """The operation requires a basis computed under an eliminating order."""


class RegistryMismatch(TrigIdealError):
    """Operands belong to different variable registries."""


class CertificationFailure(TrigIdealError):
    """Numeric certification of an emitted generator failed.

    This signals an internal error: every generator lies in the relation
    ideal by construction, so its interval evaluation can never exclude 0.
    """


class ExponentOverflow(TrigIdealError, OverflowError):
    """A monomial exponent exceeded the fixed-width component limit."""


class ParseError(TrigIdealError):
    """Input text could not be parsed.

    Carries a 1-based line and column when they are known.
    """

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f" (line {line}" + (f", col {column}" if column is not None else "") + ")"
        super().__init__(message + where)
