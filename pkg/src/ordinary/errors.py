"""Exception hierarchy shared by every module of the package."""


class OrdinaryError(Exception):
    """Base class for all errors raised by this package."""


class DegenerateLine(OrdinaryError, ValueError):
    """A line or hyperplane was given a zero direction/normal part."""


class IdenticalLines(OrdinaryError, ValueError):
    pass


class WitnessOnLine(OrdinaryError, ValueError):
    pass


class DimensionMismatch(OrdinaryError, ValueError):
    pass


class NotAnArrangement(OrdinaryError, ValueError):
    """The input is too small or contains duplicates."""


class DuplicateHyperplane(NotAnArrangement):
    pass


class InvalidArrangement(OrdinaryError, ValueError):
    """A pseudoline arrangement violates the crossing axioms."""


class NoCrossing(InvalidArrangement):
    pass


class MultipleCrossings(InvalidArrangement):
    pass


class HypothesisError(OrdinaryError):
    """The input breaks an assumption the search relies on.

    These are distinct from malformed input: the arrangement is well formed
    but no ordinary point is guaranteed to exist.
    """


class AllParallel(HypothesisError):
    pass


class AllConcurrent(HypothesisError):
    pass


class HypothesisViolated(HypothesisError):
    """``d`` hyperplanes were found through a common line (or worse)."""


class SpecInfeasible(OrdinaryError, ValueError):
    pass


class OracleTooLarge(OrdinaryError, ValueError):
    pass
