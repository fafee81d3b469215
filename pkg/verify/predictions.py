"""Asymptotic main terms evaluated at concrete x."""

import math

from analytic.euler import artin_xi, b_q, constant_A, k_constant
from analytic.precision import PrecisionValue
from config.constants import MIN_PREDICT_X
from config.settings import get_settings
from groups.errors import DomainError, require_odd_prime
from groups.partitions import Partition, c_alpha


def _check_x(x: float, minimum: float) -> None:
    if x < minimum:
        raise DomainError(f"main term needs x >= {minimum}, got {x}")


def sylow_shape(q: int, length: int, x: float) -> float:
    """x (log log x)^length / (log x)^(1/(q-1))."""
    log_x = math.log(x)
    return x * math.log(log_x) ** length / log_x ** (1.0 / (q - 1))


def predicted_D(q: int, alpha: Partition, x: float, cutoff: int | None = None) -> float:
    """K(Z_{q^alpha}) x (log log x)^l(alpha) / (log x)^(1/(q-1))."""
    require_odd_prime(q)
    _check_x(x, MIN_PREDICT_X)
    return k_constant(q, alpha, cutoff).real * sylow_shape(q, alpha.length, x)


def d0_constant(q: int, alpha: Partition, cutoff: int | None = None) -> PrecisionValue:
    """C(alpha) B_q / q^(sum of parts)."""
    cutoff = cutoff or get_settings().euler_cutoff
    return b_q(q, cutoff) * (c_alpha(alpha) / q**alpha.size)


def predicted_D0(q: int, alpha: Partition, x: float, cutoff: int | None = None) -> float:
    require_odd_prime(q)
    _check_x(x, MIN_PREDICT_X)
    return d0_constant(q, alpha, cutoff).real * sylow_shape(q, alpha.length, x)


def predicted_mnc(
    x: float, A: PrecisionValue | None = None, xi: PrecisionValue | None = None
) -> float:
    """A x / (log x)^(1 - xi)."""
    _check_x(x, math.e)
    settings = get_settings()
    xi = xi or artin_xi(settings.xi_cutoff)
    A = A or constant_A(settings.a_cutoff, xi=xi)
    return A.real * x / math.log(x) ** (1.0 - xi.real)


def predicted_cyclic(x: float) -> float:
    """(3/2) x / log x, the count of n <= x with cyclic unit group to leading order."""
    _check_x(x, 3)
    return 1.5 * x / math.log(x)
