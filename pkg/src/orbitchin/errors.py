"""Exception hierarchy shared by every module."""


class OrbitchinError(ValueError):
    """Base class for all library errors."""


class CurveMismatchError(OrbitchinError):
    """Two objects that must live on the same curve do not."""


class InvalidClassError(OrbitchinError):
    """A numerical class violates one of its defining invariants."""


class DomainError(OrbitchinError):
    """An operation was called outside its mathematical domain
    (non-hyperbolic curve, rank too small, failed hypothesis, ...)."""


class FalsificationAlarm(OrbitchinError):
    """A computed local type contradicts a proven case statement."""
