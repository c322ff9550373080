class DomainError(ValueError):
    """An angle or parameter lies outside the supported domain."""


class PrecisionError(ArithmeticError):
    """The depth/guard-bit policy failed to reach the requested width."""
