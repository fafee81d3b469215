"""Exception hierarchy and shared argument checks."""

from sympy import isprime


class SylowCensusError(ValueError):
    """Base class for every error raised by this package."""


class DomainError(SylowCensusError):
    """A mathematical argument lies outside the function's domain."""


class OracleCapError(SylowCensusError):
    """The brute-force oracle was asked for n above its cap."""


class ConfigError(SylowCensusError):
    """An invalid census or verification configuration."""


class MissingCensusError(SylowCensusError):
    """Verification needs census data that was never computed."""


def require_odd_prime(q: int) -> int:
    """Return q unchanged if it is an odd prime, else raise DomainError."""
    if q == 2:
        raise DomainError("q = 2 is excluded: only odd primes q are supported")
    if not isinstance(q, int) or q < 3 or not isprime(q):
        raise DomainError(f"q must be an odd prime, got {q!r}")
    return q
