"""Census configuration and the mergeable count table."""

from dataclasses import dataclass, field
from functools import lru_cache

from sympy import primerange

from config.settings import get_settings
from groups.errors import ConfigError, DomainError, require_odd_prime
from groups.partitions import Partition

# A signature is packed into one integer as a product of SIGNATURE_PRIMES[j-1]
# over its parts j, then combined with the stratum k as key * STRATUM_BASE + k.
SIGNATURE_PRIMES: tuple[int, ...] = tuple(primerange(2, 300))
STRATUM_BASE = 64


@dataclass(frozen=True)
class CensusConfig:
    x: int
    q: int
    segment_size: int = field(default_factory=lambda: get_settings().segment_size)
    oracle_cap: int = field(default_factory=lambda: get_settings().oracle_cap)
    threads: int = field(default_factory=lambda: get_settings().threads)

    def __post_init__(self) -> None:
        require_odd_prime(self.q)
        cap = get_settings().x_cap
        if not 1 <= self.x <= cap:
            raise ConfigError(f"x must be in 1..{cap}, got {self.x}")
        if self.segment_size < 2:
            raise ConfigError(f"segment_size must be >= 2, got {self.segment_size}")
        if self.threads < 1:
            raise ConfigError(f"threads must be >= 1, got {self.threads}")


@lru_cache(maxsize=None)
def decode_key(key: int) -> tuple[int, Partition]:
    """Invert the packed (signature, stratum) key."""
    k = key % STRATUM_BASE
    code = key // STRATUM_BASE
    parts: list[int] = []
    for j, prime in enumerate(SIGNATURE_PRIMES, start=1):
        if code == 1:
            break
        while code % prime == 0:
            parts.append(j)
            code //= prime
    if code != 1:
        raise DomainError(f"undecodable census key {key}")
    return k, Partition(tuple(parts))


def encode_key(k: int, signature: Partition) -> int:
    code = 1
    for part in signature:
        code *= SIGNATURE_PRIMES[part - 1]
    return code * STRATUM_BASE + k


@dataclass
class CensusTable:
    """Exact counts keyed by (k, signature): #{n <= x : nu_q(n) = k, G_q(n) = Z_{q^alpha}}.

    Tables form a commutative monoid under pointwise addition.
    """

    q: int
    x: int
    counts: dict[tuple[int, Partition], int] = field(default_factory=dict)

    @classmethod
    def from_packed(cls, q: int, x: int, packed: dict[int, int]) -> "CensusTable":
        counts: dict[tuple[int, Partition], int] = {}
        for key, count in packed.items():
            counts[decode_key(key)] = counts.get(decode_key(key), 0) + count
        return cls(q=q, x=x, counts=counts)

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def count_dk(self, k: int, signature: Partition) -> int:
        return self.counts.get((k, signature), 0)

    def count_d(self, signature: Partition) -> int:
        return sum(c for (_, sig), c in self.counts.items() if sig == signature)

    def signatures(self) -> list[Partition]:
        return sorted({sig for _, sig in self.counts})

    def strata(self, signature: Partition) -> dict[int, int]:
        return {k: c for (k, sig), c in sorted(self.counts.items()) if sig == signature}

    def rows(self) -> list[tuple[int, Partition, int]]:
        """(k, signature, count) sorted by (k, signature)."""
        return [(k, sig, c) for (k, sig), c in sorted(self.counts.items())]

    def merge(self, other: "CensusTable") -> "CensusTable":
        """Pointwise sum; the limit of the result is the larger of the two."""
        if other.q != self.q:
            raise ConfigError(f"cannot merge tables for q={self.q} and q={other.q}")
        counts = dict(self.counts)
        for key, count in other.counts.items():
            counts[key] = counts.get(key, 0) + count
        return CensusTable(q=self.q, x=max(self.x, other.x), counts=counts)


def count_D(table: CensusTable, signature: Partition) -> int:
    """D(H, x) summed over every stratum k."""
    return table.count_d(signature)


def count_Dk(table: CensusTable, k: int, signature: Partition) -> int:
    """D_k(H, x): the stratum with nu_q(n) = k."""
    return table.count_dk(k, signature)
