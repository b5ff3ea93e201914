# pylint: disable=unsubscriptable-object
'''
onehull exceptions
'''
from typing import Optional, Sequence


class OneHullException(Exception):
    '''
    A common exception class
    '''

    def __init__(self, msg: Optional[str] = None, cause: Optional[Exception] = None) -> None:
        self.msg = msg
        self.cause = cause
        super().__init__(self.msg)


class DimensionMismatchError(OneHullException):
    '''
    Raised when two operands have incompatible shapes
    '''

    def __init__(self, what: str, expected: int, actual: int) -> None:
        self.expected = expected
        self.actual = actual
        super().__init__(f"Dimension mismatch in {what}: expected {expected}, got {actual}")


class RankDeficientError(OneHullException):
    '''
    Raised when a generator matrix does not have full row rank
    '''

    def __init__(self, rank: int, rows: int, offending_rows: Sequence[int] = ()) -> None:
        self.rank = rank
        self.rows = rows
        self.offending_rows = tuple(offending_rows)
        msg = f"Generator has rank {rank} but {rows} rows"
        if self.offending_rows:
            msg += '; dependent rows: ' + ', '.join(str(row) for row in self.offending_rows)
        super().__init__(msg)


class EnumerationCapExceeded(OneHullException):
    '''
    Raised when exhaustive enumeration of 2^k codewords is above the configured cap
    '''

    def __init__(self, k: int, cap: int) -> None:
        self.k = k
        self.cap = cap
        super().__init__(
            f"Enumerating 2^{k} codewords exceeds the cap {cap}; raise it with --cap")


class PreconditionError(OneHullException):
    '''
    Raised when a construction or transform is applied outside its hypotheses
    '''

    def __init__(self, operation: str, reason: str) -> None:
        self.operation = operation
        self.reason = reason
        super().__init__(f"{operation}: {reason}")


class ParseError(OneHullException):
    '''
    Raised when a code or data file is malformed
    '''

    def __init__(self, line: int, reason: str, source: str = '<string>') -> None:
        self.line = line
        self.reason = reason
        self.source = source
        super().__init__(f"{source}:{line}: {reason}")


class InfeasibleSearchError(OneHullException):
    '''
    Raised when a search target is above a proven upper bound
    '''

    def __init__(self, n: int, k: int, d: int, bound: int, source: str = 'griesmer') -> None:
        self.bound = bound
        super().__init__(
            f"No [{n},{k},{d}] code can exist: {source} bound gives d <= {bound}")


class UncoveredParametersError(OneHullException):
    '''
    Raised when no closed-form d_one family covers (n, k)
    '''

    def __init__(self, n: int, k: int) -> None:
        super().__init__(
            f"No closed form covers (n={n}, k={k}); use composite_upper_bound instead")


class InconsistentBoundsError(OneHullException):
    '''
    Raised when combined bounds produce an empty interval
    '''

    def __init__(self, n: int, k: int, lower: int, upper: int) -> None:
        super().__init__(f"Bounds for (n={n}, k={k}) are inconsistent: {lower} > {upper}")


class RecordDoesNotExist(OneHullException):
    '''
    Raised when a record queried from the store does not exist
    '''

    def __init__(self, n: int, k: int) -> None:
        super().__init__(f"No record stored for (n={n}, k={k})")


class InvalidStateError(OneHullException):
    '''
    Raised when the internal state of an operation is invalid
    '''
    msg = 'Operation in invalid state'
