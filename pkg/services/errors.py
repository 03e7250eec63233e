"""
Exception hierarchy shared by the services and the command line
"""


class CanImageError(ValueError):
    """Base class for invalid input (bad cycles, bad sets, degree clashes)."""


class DegreeMismatchError(CanImageError):
    """Raised when permutations, groups or sets of different degrees meet."""

    def __init__(self, expected, actual, what="degree"):
        super().__init__(f"{what} mismatch: expected {expected}, got {actual}")
        self.expected = expected
        self.actual = actual


class CycleParseError(CanImageError):
    """Raised for malformed cycle notation or set literals."""


class GroupFileError(CanImageError):
    """Raised for malformed group files; carries the offending line number."""

    def __init__(self, message, line_number=None, path=None):
        location = ""
        if path is not None:
            location = f"{path}"
        if line_number is not None:
            location = f"{location}:{line_number}" if location else f"line {line_number}"
        super().__init__(f"{location}: {message}" if location else message)
        self.line_number = line_number
        self.path = path


class BudgetExceededError(Exception):
    """Base class for exhausted search or enumeration budgets."""


class SearchTimeout(BudgetExceededError):
    """The node budget ran out before the search finished.

    `stats` holds the statistics gathered up to the abort.
    """

    def __init__(self, budget, stats=None):
        super().__init__(f"node budget of {budget} exhausted")
        self.budget = budget
        self.stats = stats


class OracleBudgetError(BudgetExceededError):
    """The brute-force oracle would have to enumerate more than allowed."""

    def __init__(self, what, size, cap):
        super().__init__(f"{what} of size {size} exceeds oracle cap {cap}")
        self.what = what
        self.size = size
        self.cap = cap
