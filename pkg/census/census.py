"""Sylow-signature and maximally-non-cyclic censuses over n <= x.

Each segment is an independent work unit. Workers return packed partial
histograms which are merged in segment order, so a table never depends on
how many workers produced it.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Callable, Iterable, Iterator, Sequence

import numpy as np
from tqdm import tqdm

from census.sieve import base_primes, iter_prime_segments, segment_bounds
from census.squarefree import SquarefreeTable, squarefree_sieve
from census.table import SIGNATURE_PRIMES, STRATUM_BASE, CensusConfig, CensusTable
from config.settings import get_settings
from groups.errors import ConfigError
from groups.multgroup import nu, nu_array

logger = logging.getLogger(__name__)

_SIGNATURE_ARRAY = np.array(SIGNATURE_PRIMES, dtype=np.int64)

# Squarefree table shared with worker processes through the pool initializer
_worker_sqfree: SquarefreeTable | None = None


def _init_mnc_worker(table: SquarefreeTable) -> None:
    global _worker_sqfree
    _worker_sqfree = table


def _run_segments(
    worker: Callable[..., Any],
    tasks: Sequence[tuple],
    threads: int,
    initializer: Callable[..., None] | None = None,
    initargs: tuple = (),
    label: str = "census",
) -> Iterator[Any]:
    """Run worker over tasks, yielding results in task order."""
    settings = get_settings()
    progress = tqdm(total=len(tasks), desc=label, disable=not settings.show_progress)
    try:
        if threads <= 1 or len(tasks) <= 1:
            if initializer is not None:
                initializer(*initargs)
            for task in tasks:
                yield worker(*task)
                progress.update(1)
            return
        with ProcessPoolExecutor(
            max_workers=threads, initializer=initializer, initargs=initargs
        ) as executor:
            for result in executor.map(worker, *zip(*tasks)):
                yield result
                progress.update(1)
    finally:
        progress.close()


def _strip_prime(
    remaining: np.ndarray, lo: int, hi: int, p: int, exponents: np.ndarray | None = None
) -> None:
    """Divide each multiple of p in [lo, hi) by its full power of p.

    When exponents is given, the exponent of p is added to it per index.
    """
    power = p
    while power <= hi - 1:
        start = (-lo) % power
        remaining[start::power] //= p
        if exponents is not None:
            exponents[start::power] += 1
        if power > (hi - 1) // p:
            break
        power *= p


def sylow_segment(lo: int, hi: int, q: int, base: np.ndarray) -> dict[int, int]:
    """Packed (signature, stratum) histogram for n in [lo, hi)."""
    size = hi - lo
    remaining = np.arange(lo, hi, dtype=np.int64)
    code = np.ones(size, dtype=np.int64)
    stratum = np.zeros(size, dtype=np.int64)

    for p in base.tolist():
        if p * p >= hi:
            break
        if p == q:
            _strip_prime(remaining, lo, hi, p, stratum)
            continue
        start = (-lo) % p
        if start >= size:
            continue
        _strip_prime(remaining, lo, hi, p)
        v = nu(q, p - 1)
        if v:
            code[start::p] *= SIGNATURE_PRIMES[v - 1]

    # What is left above 1 is a single prime to the first power.
    large = remaining > 1
    is_q = remaining == q
    stratum[is_q] += 1
    large &= ~is_q
    if large.any():
        v = nu_array(q, remaining[large] - 1)
        contributing = v > 0
        index = np.flatnonzero(large)[contributing]
        code[index] *= _SIGNATURE_ARRAY[v[contributing] - 1]

    # q^k || n with k >= 2 contributes a cyclic factor of order q^(k-1)
    lifted = stratum >= 2
    code[lifted] *= _SIGNATURE_ARRAY[stratum[lifted] - 2]

    keys, counts = np.unique(code * STRATUM_BASE + stratum, return_counts=True)
    return dict(zip(keys.tolist(), counts.tolist()))


def census_sylow_checkpoints(cfg: CensusConfig, xs: Iterable[int]) -> dict[int, CensusTable]:
    """One sieve pass to max(xs) with a cumulative table snapshot at every x."""
    checkpoints = sorted({int(x) for x in xs})
    if not checkpoints or checkpoints[0] < 1:
        raise ConfigError(f"checkpoints must be positive integers, got {checkpoints}")
    limit = checkpoints[-1]
    if limit > cfg.x:
        raise ConfigError(f"checkpoint {limit} exceeds configured x = {cfg.x}")
    bounds = segment_bounds(limit, cfg.segment_size, checkpoints)
    base = base_primes(limit)
    tasks = [(lo, hi, cfg.q, base) for lo, hi in bounds]
    logger.info(
        f"[census] q={cfg.q} up to x={limit}: {len(tasks)} segments, {cfg.threads} worker(s)"
    )

    packed: dict[int, int] = {}
    snapshots: dict[int, CensusTable] = {}
    pending = iter(checkpoints)
    target = next(pending)
    for (lo, hi), partial in zip(bounds, _run_segments(sylow_segment, tasks, cfg.threads)):
        for key, count in partial.items():
            packed[key] = packed.get(key, 0) + count
        while target is not None and hi - 1 == target:
            snapshots[target] = CensusTable.from_packed(cfg.q, target, packed)
            logger.debug(f"[census] snapshot at x={target}")
            target = next(pending, None)
    return snapshots


def census_sylow(cfg: CensusConfig) -> CensusTable:
    """Histogram of (stratum k, Sylow signature) over every n <= cfg.x."""
    return census_sylow_checkpoints(cfg, [cfg.x])[cfg.x]


def mnc_segment(lo: int, hi: int, base: np.ndarray) -> int:
    """Count n in [lo, hi) whose unit group is maximally non-cyclic."""
    table = _worker_sqfree
    size = hi - lo
    remaining = np.arange(lo, hi, dtype=np.int64)
    ok = np.ones(size, dtype=bool)
    for p in base.tolist():
        if p * p >= hi:
            break
        start = (-lo) % p
        if start >= size:
            continue
        _strip_prime(remaining, lo, hi, p)
        if not table.is_squarefree(p - 1):
            ok[start::p] = False
        forbidden = 16 if p == 2 else p**3
        if forbidden <= hi - 1:
            ok[(-lo) % forbidden :: forbidden] = False
    large = np.flatnonzero(remaining > 1)
    if large.size:
        ok[large] &= table.lookup(remaining[large] - 1)
    return int(np.count_nonzero(ok))


def census_mnc_checkpoints(
    xs: Iterable[int],
    segment_size: int | None = None,
    threads: int | None = None,
    sqfree: SquarefreeTable | None = None,
) -> dict[int, int]:
    settings = get_settings()
    segment_size = segment_size or settings.segment_size
    threads = threads or settings.threads
    checkpoints = sorted({int(x) for x in xs})
    if not checkpoints or checkpoints[0] < 1:
        raise ConfigError(f"checkpoints must be positive integers, got {checkpoints}")
    limit = checkpoints[-1]
    if limit > settings.x_cap:
        raise ConfigError(f"x must be <= {settings.x_cap}, got {limit}")
    if sqfree is None or sqfree.limit < limit:
        sqfree = squarefree_sieve(limit)
    bounds = segment_bounds(limit, segment_size, checkpoints)
    base = base_primes(limit)
    tasks = [(lo, hi, base) for lo, hi in bounds]
    logger.info(f"[census] maximally non-cyclic count up to x={limit}: {len(tasks)} segments")

    results: dict[int, int] = {}
    total = 0
    pending = iter(checkpoints)
    target = next(pending)
    segments = _run_segments(
        mnc_segment, tasks, threads, _init_mnc_worker, (sqfree,), label="mnc"
    )
    for (lo, hi), count in zip(bounds, segments):
        total += count
        while target is not None and hi - 1 == target:
            results[target] = total
            target = next(pending, None)
    return results


def census_mnc(
    x: int,
    sqfree: SquarefreeTable | None = None,
    threads: int | None = None,
    segment_size: int | None = None,
) -> int:
    """Exact count of n <= x with (Z/nZ)^x maximally non-cyclic."""
    return census_mnc_checkpoints([x], segment_size, threads, sqfree)[x]


def mnc_prime_power_indicator(p: int, r: int, sqfree: SquarefreeTable) -> bool:
    """The multiplicative indicator f(p^r) of maximally non-cyclic groups."""
    if r < 1:
        return False
    if p == 2:
        return r <= 3
    return r <= 2 and sqfree.is_squarefree(p - 1)


def cyclic_count(x: int, segment_size: int | None = None) -> int:
    """Count n <= x with cyclic unit group: 1, 2, 4, p^r and 2p^r for odd p."""
    segment_size = segment_size or get_settings().segment_size
    count = 1 + (x >= 2) + (x >= 4)
    if x < 3:
        return count
    for _, primes in iter_prime_segments(x, segment_size):
        odd = primes[primes > 2]
        if not odd.size:
            continue
        count += int(odd.size) + int(np.count_nonzero(2 * odd <= x))
        for p in odd[odd * odd <= x].tolist():
            power = p * p
            while power <= x:
                count += 1 + (2 * power <= x)
                power *= p
    return count
