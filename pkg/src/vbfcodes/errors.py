class VbfError(Exception):
    """Base class for every error raised by vbfcodes."""


class DomainError(VbfError, ValueError):
    """An argument lies outside the domain of the operation (m out of range,
    inverse of zero, parity mismatch, invalid hyperplane, ...)."""


class CapacityError(VbfError, RuntimeError):
    """Exhaustive enumeration was asked for more codewords than the guard allows."""


class WalshPathUnavailable(VbfError, RuntimeError):
    """The (x, y) -> c_{x,y} map of the code is not injective, so the
    Walsh-based histogram would overcount codewords."""


class UnknownTargetError(DomainError):
    """Verification target name not registered."""
