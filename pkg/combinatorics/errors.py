"""Exception hierarchy shared by the combinatorics and theorem packages."""


class SpechtError(Exception):
    """Base class for every error raised by this project"""


class ParseError(SpechtError, ValueError):
    """Malformed text input (partition or composition grammar)"""


class ValidityError(SpechtError, ValueError):
    """Value is well formed but not a valid partition / shape"""


class PreconditionError(SpechtError, ValueError):
    """Operation called outside its hypotheses"""

    def __init__(self, message: str, violations=None):
        super().__init__(message)
        self.violations = list(violations or [message])


class DomainError(SpechtError, ValueError):
    """Invalid parameter domain (l < 2, p neither 0 nor prime, r < 0)"""


class UnsupportedBaseCaseError(SpechtError):
    """A character oracle refuses a restricted weight it has no table entry for"""


class ConsistencyError(SpechtError):
    """Two independent computations of the same quantity disagree"""
