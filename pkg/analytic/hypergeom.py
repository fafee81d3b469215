"""The power series H_gamma(z) = -sum_{n >= 1} gamma/(n - gamma) z^n."""

import math

from groups.errors import DomainError

_TOLERANCE = 1e-14
_MAX_TERMS = 10**7


def h_gamma(gamma: float, z: float) -> float:
    """Sum the series until n > gamma and the next term is below 1e-14 (1 - z)."""
    if gamma <= 0 or float(gamma).is_integer():
        raise DomainError(f"gamma must be positive and not an integer, got {gamma}")
    if not 0 <= z < 1:
        raise DomainError(f"z must lie in [0, 1), got {z}")
    if z == 0:
        return 0.0
    threshold = _TOLERANCE * (1 - z)
    terms: list[float] = []
    power = 1.0
    for n in range(1, _MAX_TERMS + 1):
        power *= z
        term = gamma / (n - gamma) * power
        terms.append(term)
        if n > gamma and abs(term) < threshold:
            break
    else:
        raise DomainError(f"series for z = {z} did not converge in {_MAX_TERMS} terms")
    return -math.fsum(terms)


def h_gamma_scaled(gamma: float, z: float, log_x: float) -> float:
    """h_gamma(gamma, z) / (gamma (z log x)^gamma).

    Its derivative in z is -1 / ((1 - z) (z log x)^gamma).
    """
    if z <= 0:
        raise DomainError(f"z must be positive, got {z}")
    return h_gamma(gamma, z) / (gamma * (z * log_x) ** gamma)
