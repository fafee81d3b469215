"""Sums and counts over primes: squarefree shifted primes and Mertens-type sums."""

import logging
import math
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from census.sieve import iter_prime_segments
from census.squarefree import SquarefreeTable, squarefree_sieve
from config.settings import get_settings
from groups.errors import DomainError, require_odd_prime
from groups.multgroup import nu_array

logger = logging.getLogger(__name__)


def prime_pminus1_squarefree_count(
    x: int, sqfree: SquarefreeTable | None = None
) -> tuple[int, int]:
    """(#{p <= x : p - 1 squarefree}, pi(x))."""
    if x < 2:
        raise DomainError(f"x must be >= 2, got {x}")
    if sqfree is None or sqfree.limit < x:
        sqfree = squarefree_sieve(x)
    passing = 0
    total = 0
    for _, primes in iter_prime_segments(x, get_settings().segment_size):
        total += int(primes.size)
        passing += int(np.count_nonzero(sqfree.lookup(primes - 1)))
    return passing, total


def mertens_sums(q: int, alpha: int, xs: Iterable[int]) -> dict[int, float]:
    """Sum of 1/p over p <= x with nu_q(p - 1) = alpha, at every x in xs.

    Each segment is summed with math.fsum and the partials are combined with
    math.fsum again; the order of summation is fixed by the segment layout.
    """
    require_odd_prime(q)
    if alpha < 1:
        raise DomainError(f"alpha must be >= 1, got {alpha}")
    checkpoints = sorted({int(x) for x in xs})
    if not checkpoints or checkpoints[0] < 1:
        raise DomainError(f"checkpoints must be positive, got {checkpoints}")
    partials: list[float] = []
    results: dict[int, float] = {}
    pending = iter(checkpoints)
    target = next(pending)
    segments = iter_prime_segments(checkpoints[-1], get_settings().segment_size, checkpoints)
    for hi, primes in segments:
        if primes.size:
            selected = primes[nu_array(q, primes - 1) == alpha]
            partials.append(math.fsum((1.0 / selected).tolist()))
        while target is not None and hi - 1 == target:
            results[target] = math.fsum(partials)
            target = next(pending, None)
    return results


def mertens_sum(q: int, alpha: int, x: int) -> float:
    return mertens_sums(q, alpha, [x])[x]


@dataclass(frozen=True)
class MertensDrift:
    """M(x) - log log x / q^alpha at decades and the differences between them."""

    xs: list[int]
    offsets: list[float]
    differences: list[float]

    @property
    def stabilizing(self) -> bool:
        """Consecutive-decade differences strictly shrink in absolute value."""
        sizes = [abs(d) for d in self.differences]
        return all(b < a for a, b in zip(sizes, sizes[1:]))


def mertens_drift(q: int, alpha: int, xs: Iterable[int]) -> MertensDrift:
    xs = sorted({int(x) for x in xs})
    if xs[0] < 3:
        raise DomainError("drift checkpoints must be >= 3 so that log log x > 0")
    sums = mertens_sums(q, alpha, xs)
    offsets = [sums[x] - math.log(math.log(x)) / q**alpha for x in xs]
    differences = [b - a for a, b in zip(offsets, offsets[1:])]
    logger.debug(f"[census] Mertens drift q={q} alpha={alpha}: {differences}")
    return MertensDrift(xs=xs, offsets=offsets, differences=differences)
