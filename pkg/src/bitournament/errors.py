"""Exception hierarchy shared by every module of the package."""


class BitournamentError(Exception):
    """Base class for all errors raised by this package."""


class SequenceError(BitournamentError, ValueError):
    """An integer sequence violates its domain (negative, too wide, over bound)."""


class PositionNotPositive(SequenceError):
    """A general trimming asked to decrement an element that is already 0."""

    def __init__(self, index: int):
        self.index = index
        super().__init__(f"element at index {index} is not positive")


class NotEnoughPositives(SequenceError):
    """A normal c-trimming needs c positive elements but fewer are available."""

    def __init__(self, requested: int, available: int):
        self.requested = requested
        self.available = available
        super().__init__(f"NotEnoughPositives({requested},{available})")


class TrimFailed(SequenceError):
    """A trimming schedule broke down at ``step`` (1-based).

    ``trace`` holds the partial trace up to, but not including, the failing step.
    """

    def __init__(self, step: int, cause: NotEnoughPositives, trace=None):
        self.step = step
        self.cause = cause
        self.trace = trace
        super().__init__(f"step {step}: {cause}")


class BoundMismatch(BitournamentError, ValueError):
    """Bounds of a candidate pair do not cross-match the partner lengths."""


class SumMismatch(BitournamentError, ValueError):
    def __init__(self, actual: int, expected: int):
        self.actual = actual
        self.expected = expected
        super().__init__(f"SumMismatch({actual},{expected})")


class NotFeasible(BitournamentError, ValueError):
    pass


class NotRealizable(BitournamentError):
    """Raised by the realizer; ``report`` is the rejecting trimming report."""

    def __init__(self, report):
        self.report = report
        super().__init__(f"pair is not a bitournament score sequence: {report.describe()}")


class BudgetExceeded(BitournamentError):
    pass


class Discrepancy(BitournamentError, AssertionError):
    """Two characterizations (or a characterization and the oracle) disagree."""

    def __init__(self, witnesses):
        self.witnesses = list(witnesses)
        super().__init__(f"{len(self.witnesses)} discrepancies, first: {self.witnesses[:3]}")
