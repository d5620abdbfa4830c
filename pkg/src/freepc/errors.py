"""Exception hierarchy shared by all modules."""


class FreePCError(Exception):
    """Base class for every error raised by the package."""


class UsageError(FreePCError, ValueError):
    """Caller broke a precondition (mismatched universes, bad arguments)."""


class DomainError(FreePCError, ArithmeticError):
    """Mathematically undefined request: inverse of zero, tip of zero."""


class SamplingError(FreePCError):
    pass


class QuotientError(FreePCError):
    """No exact two-sided quotient exists."""


class AttackError(FreePCError):
    """The attack could not be set up or did not succeed."""


class PartialRecoveryError(AttackError):
    def __init__(self, index: int, reason: str):
        super().__init__(f"generator {index}: {reason}")
        self.index = index
        self.reason = reason


class ParseError(FreePCError, ValueError):
    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} at byte {offset}"
        super().__init__(message)
        self.offset = offset


class OracleError(FreePCError):
    """The decryption oracle answered ERR or the connection failed."""
