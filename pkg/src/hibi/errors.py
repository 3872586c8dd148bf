"""Exception hierarchy shared by every module."""


class HibiError(Exception):
    pass


class CycleDetected(HibiError):
    pass


class IndexOutOfRange(HibiError):
    pass


class NotAChain(HibiError):
    pass


class LatticeTooLarge(HibiError):
    pass


class VariableCountMismatch(HibiError):
    pass


class NotDivisible(HibiError):
    pass


class TargetTooSmall(HibiError):
    pass


class NotHomogeneous(HibiError):
    """Raised with the first incomparable pair whose binomial is not homogeneous."""

    def __init__(self, pair, message=None):
        self.pair = pair
        super().__init__(message or f"grading is not homogeneous on pair {pair}")


class CapExceeded(HibiError):
    pass


class IsActuallyChain(HibiError):
    pass


class PreconditionViolated(HibiError):
    pass


class Unsupported(HibiError):
    pass


class InternalConsistencyError(HibiError):
    """Two independent computations disagreed. Always a bug, never bad input."""


class LowerDegreeResidue(InternalConsistencyError):
    pass


class OracleMismatch(InternalConsistencyError):
    pass
