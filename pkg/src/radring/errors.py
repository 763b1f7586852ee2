"""Exception types shared across the package."""


class CapExceeded(ValueError):
    """An enumerative or search operation would exceed its configured size cap."""


class HypothesisViolation(ValueError):
    """Arguments fall outside a theorem's hypothesis (typically: m must divide q - 1)."""


class NotInvertible(ArithmeticError):
    """Raised when inverting a non-unit; carries the offending determinant."""

    def __init__(self, message, det=None, gcd=None):
        super().__init__(message)
        self.det = det
        self.gcd = gcd
