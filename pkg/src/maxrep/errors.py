"""Exception types shared across the package."""


class MaxrepError(Exception):
    """Base class for all maxrep errors."""


class SizeCapExceeded(MaxrepError):
    """Input is larger than the brute-force size cap.

    Signals the caller to use the suffix-array engine instead.
    """

    def __init__(self, n: int, cap: int):
        super().__init__(f"input length {n} exceeds brute-force cap {cap}")
        self.n = n
        self.cap = cap


class MissingTerminator(MaxrepError):
    """The text does not end with a symbol that occurs exactly once."""


class StatsMismatch(MaxrepError):
    """CDAWG size does not match the measures of its text (construction bug)."""


class ParameterOutOfRange(MaxrepError, ValueError):
    """A family generator was called with parameters outside its domain."""


class BoundViolation(MaxrepError):
    """A theorem inequality failed on a real text (defect detector, never expected)."""


class OracleInconsistency(MaxrepError):
    """The two maximal-repeat definitions disagreed inside the oracle."""
