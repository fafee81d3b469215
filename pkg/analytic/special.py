"""Gamma and digamma at real arguments, evaluated with mpmath."""

from fractions import Fraction

import mpmath

from analytic.precision import PrecisionValue
from config.settings import get_settings
from groups.errors import DomainError

_EPS = 2.0**-52


def to_mpf(x: float | int | Fraction) -> mpmath.mpf:
    """Exact conversion of rationals; floats are taken at face value."""
    if isinstance(x, Fraction):
        return mpmath.mpf(x.numerator) / x.denominator
    return mpmath.mpf(x)


def _working_error(value: float) -> float:
    dps = get_settings().mp_dps
    return abs(value) * (_EPS + 10.0 ** (-(dps - 3)))


def gamma_real(x: float | Fraction) -> PrecisionValue:
    if x <= 0:
        raise DomainError(f"gamma_real needs x > 0, got {x}")
    with mpmath.workdps(get_settings().mp_dps):
        value = float(mpmath.gamma(to_mpf(x)))
    return PrecisionValue(value, _working_error(value))


def log_gamma_real(x: float | Fraction) -> PrecisionValue:
    if x <= 0:
        raise DomainError(f"log_gamma_real needs x > 0, got {x}")
    with mpmath.workdps(get_settings().mp_dps):
        value = float(mpmath.loggamma(to_mpf(x)))
    return PrecisionValue(value, _working_error(value) + 10.0 ** -(get_settings().mp_dps - 3))


def digamma(x: float | Fraction) -> PrecisionValue:
    if not 0 < x <= 1:
        raise DomainError(f"digamma is provided on (0, 1], got {x}")
    with mpmath.workdps(get_settings().mp_dps):
        value = float(mpmath.digamma(to_mpf(x)))
    return PrecisionValue(value, _working_error(value))
