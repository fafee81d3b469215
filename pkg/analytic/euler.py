"""Euler-product constants: B_q, K(Z_{q^alpha}), Artin's constant and A.

Products are accumulated as sums of logarithms over the primes p <= P in
increasing order, each segment reduced with math.fsum and the segment sums
reduced again with math.fsum, so a value does not depend on how the primes
were chunked.
"""

import cmath
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable

import numpy as np
from sympy import n_order

from analytic.characters import characters, l_one
from analytic.precision import PrecisionValue
from analytic.special import digamma, log_gamma_real
from census.sieve import iter_prime_segments
from census.squarefree import SquarefreeTable, squarefree_sieve
from config.settings import get_settings
from groups.errors import DomainError, require_odd_prime
from groups.partitions import Partition, c_alpha, e_q_alpha

logger = logging.getLogger(__name__)

_EPS = 2.0**-52
MIN_CUTOFF = 100


@dataclass
class _LogSum:
    """Running compensated sum of log-terms with its absolute mass."""

    partials: list[float]
    magnitude: float = 0.0

    @classmethod
    def empty(cls) -> "_LogSum":
        return cls([])

    def add(self, terms: np.ndarray) -> None:
        if terms.size:
            values = terms.tolist()
            self.partials.append(math.fsum(values))
            self.magnitude += float(np.sum(np.abs(terms)))

    @property
    def total(self) -> float:
        return math.fsum(self.partials)

    @property
    def rounding(self) -> float:
        # Each term carries one rounding from its own evaluation
        return 4 * _EPS * self.magnitude


def _exp_with_error(log_value: float, log_err: float) -> tuple[float, float]:
    value = math.exp(log_value)
    return value, value * math.expm1(log_err) + value * _EPS


def _require_cutoff(cutoff: int) -> None:
    if cutoff < MIN_CUTOFF:
        raise DomainError(f"cutoff must be >= {MIN_CUTOFF}, got {cutoff}")


def _order_table(q: int) -> np.ndarray:
    """orders[r] = multiplicative order of r mod q; orders[0] = 0."""
    orders = np.zeros(q, dtype=np.int64)
    for r in range(1, q):
        orders[r] = int(n_order(r, q))
    return orders


def l_factor_log(q: int) -> PrecisionValue:
    """log of prod over nonprincipal chi of L(1, chi)^(-1/(q-1))."""
    total = 0j
    err = 0.0
    for chi in characters(q)[1:]:
        value = l_one(chi)
        total += cmath.log(value.value)
        err += value.err / (abs(value.value) - value.err)
    return PrecisionValue(-total.real / (q - 1), err / (q - 1))


@lru_cache(maxsize=32)
def b_q(q: int, cutoff: int) -> PrecisionValue:
    """B_q with the Euler product truncated at p <= cutoff.

    Every omitted prime has k_p >= 2, so the omitted log-terms sum to at
    most sum_{n > P} n^(-2) < 1/P, which is folded into err.
    """
    require_odd_prime(q)
    _require_cutoff(cutoff)
    settings = get_settings()

    gamma_part = log_gamma_real(Fraction(q - 2, q - 1))
    power_part = math.log1p(-1.0 / q) * (q - 2) / (q - 1)
    l_part = l_factor_log(q)

    orders = _order_table(q)
    euler = _LogSum.empty()
    for _, primes in iter_prime_segments(cutoff, settings.segment_size):
        k = orders[primes % q]
        keep = k >= 2
        p = primes[keep].astype(np.float64)
        k = k[keep]
        euler.add(-np.log1p(-np.power(p, -k.astype(np.float64))) / k)

    log_value = math.fsum([-gamma_part.value, power_part, euler.total, l_part.value])
    log_err = (
        1.0 / cutoff
        + euler.rounding
        + gamma_part.err
        + l_part.err
        + _EPS * (abs(power_part) + abs(log_value))
    )
    value, err = _exp_with_error(log_value, log_err)
    logger.info(f"[constants] B_{q} = {value:.15g} ± {err:.2g} (P = {cutoff})")
    return PrecisionValue(value, err)


def k_constant(q: int, alpha: Partition, cutoff: int | None = None) -> PrecisionValue:
    """K(Z_{q^alpha}) = B_q C(alpha) E_q(alpha)."""
    cutoff = cutoff or get_settings().euler_cutoff
    return b_q(q, cutoff) * (c_alpha(alpha) * e_q_alpha(q, alpha))


@lru_cache(maxsize=8)
def artin_xi(cutoff: int) -> PrecisionValue:
    """prod_{p <= P} (1 - 1/(p(p-1))) with the tail 2/P folded into err."""
    _require_cutoff(cutoff)
    logs = _LogSum.empty()
    for _, primes in iter_prime_segments(cutoff, get_settings().segment_size):
        p = primes.astype(np.float64)
        logs.add(np.log1p(-1.0 / (p * (p - 1.0))))
    log_value = logs.total
    value, err = _exp_with_error(log_value, 2.0 / cutoff + logs.rounding)
    logger.info(f"[constants] xi = {value:.15g} ± {err:.2g} (P = {cutoff})")
    return PrecisionValue(value, err)


def _a_terms(primes: np.ndarray, sqfree: SquarefreeTable, xi: float) -> np.ndarray:
    p = primes.astype(np.float64)
    mu2 = sqfree.lookup(primes - 1).astype(np.float64)
    return np.log1p((p + 1.0) * mu2 / (p * p)) + xi * np.log1p(-1.0 / p)


def _ensure_table(sqfree: SquarefreeTable | None, cutoff: int) -> SquarefreeTable:
    if sqfree is None:
        return squarefree_sieve(cutoff)
    if sqfree.limit < cutoff:
        raise DomainError(f"squarefree table covers 1..{sqfree.limit}, need 1..{cutoff}")
    return sqfree


def a_partial(cutoff: int, sqfree: SquarefreeTable | None = None, xi: float | None = None) -> float:
    """15/(14 Gamma(xi)) times the A-product over p <= cutoff, in plain floats."""
    if cutoff < 1:
        raise DomainError(f"cutoff must be >= 1, got {cutoff}")
    sqfree = _ensure_table(sqfree, cutoff)
    if xi is None:
        xi = artin_xi(max(cutoff, MIN_CUTOFF)).real
    total = [math.log(15 / 14), -math.lgamma(xi)]
    if cutoff >= 2:
        for _, primes in iter_prime_segments(cutoff, get_settings().segment_size):
            total.append(math.fsum(_a_terms(primes, sqfree, xi).tolist()))
    return math.exp(math.fsum(total))


def constant_A(
    cutoff: int, sqfree: SquarefreeTable | None = None, xi: PrecisionValue | None = None
) -> PrecisionValue:
    """The maximally non-cyclic constant A truncated at p <= cutoff.

    The log-terms decay only through the density cancellation of
    mu^2(p-1) against xi, so no cheap rigorous tail bound exists. The tail
    is estimated from the last two decades of partial sums and reported as
    heuristic_tail; the rest of err is rigorous.
    """
    _require_cutoff(cutoff)
    sqfree = _ensure_table(sqfree, cutoff)
    xi = xi or artin_xi(cutoff)
    checkpoints = sorted({max(cutoff // 100, 1), max(cutoff // 10, 1), cutoff})

    logs = _LogSum.empty()
    mertens = _LogSum.empty()
    snapshots: dict[int, float] = {}
    pending = iter(checkpoints)
    target = next(pending)
    for hi, primes in iter_prime_segments(cutoff, get_settings().segment_size, checkpoints):
        logs.add(_a_terms(primes, sqfree, xi.real))
        mertens.add(np.log1p(-1.0 / primes.astype(np.float64)))
        while target is not None and hi - 1 >= target:
            snapshots[target] = logs.total
            target = next(pending, None)

    gamma_part = log_gamma_real(xi.real)
    log_value = math.fsum([math.log(15 / 14), -gamma_part.value, logs.total])

    s100, s10, s1 = (snapshots[c] for c in checkpoints)
    d1, d2 = s10 - s100, s1 - s10
    ratio = min(abs(d2 / d1), 0.9) if d1 else 0.9
    tail_log = abs(d2) / (1.0 - ratio)

    # d log A / d xi = -psi(xi) + sum_p log(1 - 1/p)
    sensitivity = abs(-digamma(xi.real).value + mertens.total)
    rigorous_log = logs.rounding + gamma_part.err + sensitivity * xi.err + _EPS * abs(log_value)

    value = math.exp(log_value)
    rigorous = value * math.expm1(rigorous_log) + value * _EPS
    heuristic = value * math.expm1(tail_log)
    logger.info(
        f"[constants] A = {value:.15g} ± {rigorous:.2g} (rigorous) "
        f"± {heuristic:.2g} (heuristic tail), P = {cutoff}"
    )
    return PrecisionValue(value, rigorous + heuristic, heuristic_tail=heuristic)


def cf_constant(
    f: Callable[[int, int], float], omega: float, cutoff: int, max_power: int = 60
) -> PrecisionValue:
    """Mean-value constant 1/Gamma(omega) prod_{p <= P} (sum_r f(p^r)/p^r)(1 - 1/p)^omega.

    f(p, r) gives the multiplicative function at p^r; powers stop once
    p^r exceeds 2^max_power. No tail bound is attached.
    """
    if omega <= 0:
        raise DomainError(f"omega must be positive, got {omega}")
    if cutoff < 2:
        raise DomainError(f"cutoff must be >= 2, got {cutoff}")
    logs: list[float] = []
    magnitude = 0.0
    for _, primes in iter_prime_segments(cutoff, get_settings().segment_size):
        for p in primes.tolist():
            local = [1.0]
            r, power = 1, p
            while power <= 2**max_power:
                local.append(f(p, r) / power)
                r += 1
                power *= p
            term = math.log(math.fsum(local)) + omega * math.log1p(-1.0 / p)
            logs.append(term)
            magnitude += abs(term)
    log_value = math.fsum(logs) - math.lgamma(omega)
    value = math.exp(log_value)
    return PrecisionValue(value, value * math.expm1(4 * _EPS * (magnitude + abs(log_value))))

