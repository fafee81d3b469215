"""Segmented prime and factorization sieves.

Base primes up to sqrt(limit) stay resident; each segment is a half-open
window [lo, hi) of at most segment_size integers. Segment boundaries are
additionally cut at every requested checkpoint so callers can snapshot
cumulative results exactly at those limits.
"""

import logging
import math
from typing import Iterable, Iterator

import numpy as np

from groups.errors import ConfigError
from groups.multgroup import Factorization

logger = logging.getLogger(__name__)


def simple_sieve(limit: int) -> np.ndarray:
    """All primes <= limit by the sieve of Eratosthenes."""
    if limit < 2:
        return np.array([], dtype=np.int64)
    is_prime = np.ones(limit + 1, dtype=bool)
    is_prime[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if is_prime[p]:
            is_prime[p * p :: p] = False
    return np.flatnonzero(is_prime).astype(np.int64)


def base_primes(limit: int) -> np.ndarray:
    """Primes up to sqrt(limit), enough to factor every n <= limit."""
    return simple_sieve(math.isqrt(limit))


def segment_bounds(
    limit: int, segment_size: int, checkpoints: Iterable[int] = ()
) -> list[tuple[int, int]]:
    """Half-open windows covering 1..limit, cut at every checkpoint."""
    if limit < 1:
        raise ConfigError(f"limit must be >= 1, got {limit}")
    if segment_size < 2:
        raise ConfigError(f"segment_size must be >= 2, got {segment_size}")
    cuts = sorted({c + 1 for c in checkpoints if 1 <= c < limit} | {limit + 1})
    bounds: list[tuple[int, int]] = []
    lo = 1
    for cut in cuts:
        while lo < cut:
            hi = min(lo + segment_size, cut)
            bounds.append((lo, hi))
            lo = hi
    logger.debug(f"[sieve] {len(bounds)} segment(s) up to {limit}, {len(cuts)} cut(s)")
    return bounds


def prime_mask(lo: int, hi: int, base: np.ndarray) -> np.ndarray:
    """Boolean mask over [lo, hi): True where the integer is prime."""
    mask = np.ones(hi - lo, dtype=bool)
    for p in base.tolist():
        if p * p >= hi:
            break
        start = max(p * p, -(-lo // p) * p)
        mask[start - lo :: p] = False
    if lo <= 1:
        mask[: 2 - lo] = False
    return mask


def iter_prime_segments(
    limit: int, segment_size: int, checkpoints: Iterable[int] = ()
) -> Iterator[tuple[int, np.ndarray]]:
    """Yield (hi, primes in [lo, hi)) for consecutive windows, increasing."""
    base = base_primes(limit)
    for lo, hi in segment_bounds(limit, segment_size, checkpoints):
        mask = prime_mask(lo, hi, base)
        yield hi, lo + np.flatnonzero(mask).astype(np.int64)


def primes_upto(limit: int, segment_size: int = 2**22) -> np.ndarray:
    if limit < 2:
        return np.array([], dtype=np.int64)
    return np.concatenate([primes for _, primes in iter_prime_segments(limit, segment_size)])


def sieve_factorizations(limit: int, segment_size: int) -> Iterator[tuple[int, Factorization]]:
    """Every n in 1..limit with its full factorization, in increasing order."""
    base = base_primes(limit)
    for lo, hi in segment_bounds(limit, segment_size):
        size = hi - lo
        remaining = np.arange(lo, hi, dtype=np.int64)
        factors: list[list[tuple[int, int]]] = [[] for _ in range(size)]
        for p in base.tolist():
            if p * p >= hi:
                break
            start = (-lo) % p
            if start >= size:
                continue
            index = np.arange(start, size, p)
            values = remaining[index]
            exponents = np.zeros(index.size, dtype=np.int64)
            divisible = values % p == 0
            while divisible.any():
                exponents[divisible] += 1
                values[divisible] //= p
                divisible = values % p == 0
            remaining[index] = values
            for i, e in zip(index.tolist(), exponents.tolist()):
                factors[i].append((p, e))
        for i in np.flatnonzero(remaining > 1).tolist():
            factors[i].append((int(remaining[i]), 1))
        for i in range(size):
            yield lo + i, Factorization(tuple(factors[i]))
