"""Exception hierarchy shared by all extbinom modules."""


class ExtBinomError(Exception):
    """Base class for every error raised by this package."""


class ParseError(ExtBinomError, ValueError):
    """Malformed weight-spec text."""

    def __init__(self, text, position, reason):
        self.text = text
        self.position = position
        self.reason = reason
        super().__init__(f"{reason} at position {position} in {text!r}")


class DivergentMass(ExtBinomError, ValueError):
    """Total mass requested for a weight with unbounded support."""


class DivergentBracket(ExtBinomError, ValueError):
    """Bracket sum (or a finite-support construction) requested for unbounded support."""


class InfiniteCount(ExtBinomError, ValueError):
    """Composition count with arbitrarily many parts is infinite because f(0) > 0."""


class BudgetExceeded(ExtBinomError, RuntimeError):
    """An enumeration or search went over its work budget."""


class NotPrime(ExtBinomError, ValueError):
    """A modulus that must be prime is not."""


class HypothesisViolation(ExtBinomError, ValueError):
    """Parameters fall outside a theorem's hypotheses."""
