"""Packed squarefree bitmap over 0..limit."""

import logging
import math
from dataclasses import dataclass

import numpy as np

from census.sieve import simple_sieve
from groups.errors import DomainError

logger = logging.getLogger(__name__)

# Chunk length for building the bitmap; a multiple of 8 so chunks pack cleanly
_BUILD_CHUNK = 2**23


@dataclass(frozen=True)
class SquarefreeTable:
    """Bit m is set iff m is squarefree, for 0 <= m <= limit (bit 0 unset)."""

    limit: int
    bits: np.ndarray

    def is_squarefree(self, m: int) -> bool:
        if m < 1 or m > self.limit:
            raise DomainError(f"{m} outside squarefree table range 1..{self.limit}")
        return bool((self.bits[m >> 3] >> (7 - (m & 7))) & 1)

    __call__ = is_squarefree

    def lookup(self, values: np.ndarray) -> np.ndarray:
        """Vectorized membership test for an integer array."""
        values = np.asarray(values, dtype=np.int64)
        if values.size and (values.min() < 1 or values.max() > self.limit):
            raise DomainError(f"values outside squarefree table range 1..{self.limit}")
        return ((self.bits[values >> 3] >> (7 - (values & 7))) & 1).astype(bool)


def squarefree_sieve(limit: int) -> SquarefreeTable:
    """Strike multiples of p^2 for every prime p <= sqrt(limit)."""
    if limit < 1:
        raise DomainError(f"limit must be >= 1, got {limit}")
    squares = [p * p for p in simple_sieve(math.isqrt(limit)).tolist()]
    chunks = []
    for lo in range(0, limit + 1, _BUILD_CHUNK):
        hi = min(lo + _BUILD_CHUNK, limit + 1)
        flags = np.ones(hi - lo, dtype=bool)
        for d2 in squares:
            if d2 >= hi:
                break
            flags[(-lo) % d2 :: d2] = False
        if lo == 0:
            flags[0] = False
        chunks.append(np.packbits(flags))
    logger.debug(f"[census] squarefree table built up to {limit}")
    return SquarefreeTable(limit=limit, bits=np.concatenate(chunks))
