"""Exception hierarchy shared across the package."""


class StarRamseyError(Exception):
    """Base class. ``code`` is the machine-readable name used by the CLI."""

    code = "Error"


class MalformedInput(StarRamseyError, ValueError):
    code = "MalformedInput"


class HypothesisViolated(StarRamseyError):
    """The star family is not additive, so the closed forms do not apply."""

    code = "HypothesisViolated"

    def __init__(self, message, certificate=None):
        super().__init__(message)
        self.certificate = certificate


class OutOfTheoremRange(StarRamseyError):
    code = "OutOfTheoremRange"


class NotApplicable(StarRamseyError):
    code = "NotApplicable"


class InternalInconsistency(StarRamseyError, AssertionError):
    """Raised on states that the mathematics rules out; always a bug."""

    code = "InternalInconsistency"


class OddOrder(StarRamseyError, ValueError):
    code = "OddOrder"


class EvenOrder(StarRamseyError, ValueError):
    code = "EvenOrder"


class NotAPath(StarRamseyError, ValueError):
    code = "NotAPath"


class ColorCountMismatch(StarRamseyError, ValueError):
    code = "ColorCountMismatch"


class BudgetExhausted(StarRamseyError):
    code = "BudgetExhausted"

    def __init__(self, message, nodes_explored=0):
        super().__init__(message)
        self.nodes_explored = nodes_explored
