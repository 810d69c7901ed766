"""Exception hierarchy shared by every sub-package."""

from typing import Optional


class PauliForgeError(Exception):
    """Base class for all errors raised by pauli_forge."""

    pass


class DomainError(PauliForgeError, ValueError):
    """Raised when an input violates an operation's precondition."""

    pass


class DimensionMismatch(DomainError):
    """Raised when operands act on different numbers of qubits."""

    pass


class NotAChannel(PauliForgeError, ValueError):
    """Raised when probabilities or multipliers fall outside the channel polytope."""

    pass


class NotFound(PauliForgeError):
    """Raised when no 1PR decomposition was found for a curve.

    Absence of a decomposition is only proven when ``certified`` is set,
    i.e. when the curve spans more than three dimensions.
    """

    def __init__(self, message: str, best_residual: float = float("inf"), certified: bool = False):
        super().__init__(message)
        self.best_residual = best_residual
        self.certified = certified


class SingularInversion(PauliForgeError):
    """Raised when tomography inputs are not informationally complete."""

    pass


class UnsupportedGate(PauliForgeError):
    """Raised when a gate cannot be expressed in the requested target."""

    pass


class QasmParseError(PauliForgeError, ValueError):
    """Raised when OpenQASM text falls outside the supported subset."""

    def __init__(self, message: str, line: Optional[int] = None):
        super().__init__(f"line {line}: {message}" if line is not None else message)
        self.line = line


class ResourceLimitExceeded(PauliForgeError):
    """Raised when a resource limit is exceeded."""

    pass


class ScanPointFailed(PauliForgeError):
    """Raised when a scan grid point fails while being evaluated."""

    def __init__(self, index: int, cause: BaseException):
        super().__init__(f"scan point {index} failed: {cause!r}")
        self.index = index
