"""Exception hierarchy shared by all modules."""


class ConeError(Exception):
    """Base class for every error raised by shapecones."""


class SingularMatrix(ConeError, ArithmeticError):
    pass


class DimensionMismatch(ConeError, ValueError):
    def __init__(self, expected, actual, what="length"):
        super().__init__(f"dimension mismatch: expected {what} {expected}, got {actual}")
        self.expected = expected
        self.actual = actual


class NonPositiveEntry(ConeError, ValueError):
    def __init__(self, index):
        super().__init__(f"log-concavity needs strictly positive entries; entry {index} is <= 0")
        self.index = index


class IndexOutOfRange(ConeError, IndexError):
    pass


class StructuralViolation(ConeError, AssertionError):
    """A computed matrix contradicts a structural property it must satisfy."""


class NotInCone(ConeError, ValueError):
    def __init__(self, kind, predicate, index):
        where = "" if index is None else f" at index {index}"
        super().__init__(f"vector is not in the {kind} cone: {predicate} violated{where}")
        self.kind = kind
        self.predicate = predicate
        self.index = index


class ScaleLimitExceeded(ConeError, ValueError):
    pass


class MalformedEntry(ConeError, ValueError):
    def __init__(self, position, token, reason="malformed entry"):
        super().__init__(f"{reason} at position {position}: {token!r}")
        self.position = position
        self.token = token


class ZeroDenominator(MalformedEntry):
    def __init__(self, position, token):
        super().__init__(position, token, reason="zero denominator")
