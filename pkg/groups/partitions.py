"""Partitions labelling finite abelian q-groups Z_{q^alpha}."""

import math
import re
from dataclasses import dataclass
from fractions import Fraction

from groups.errors import DomainError, require_odd_prime

_TEXT_RE = re.compile(r"^\[\s*(\d+(\s*,\s*\d+)*)?\s*\]$")


@dataclass(frozen=True, order=True)
class Partition:
    """A nonincreasing tuple of positive integers.

    The constructor accepts parts in any order and stores them sorted
    nonincreasing, so equal groups always compare and hash equal. The empty
    partition labels the trivial group.
    """

    parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        parts = tuple(int(p) for p in self.parts)
        if any(p < 1 for p in parts):
            raise DomainError(f"partition parts must be positive, got {parts}")
        object.__setattr__(self, "parts", tuple(sorted(parts, reverse=True)))

    @classmethod
    def of(cls, *parts: int) -> "Partition":
        return cls(tuple(parts))

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse the bracketed text form, e.g. "[3,1]" or "[]"."""
        cleaned = text.strip()
        if not _TEXT_RE.match(cleaned):
            raise DomainError(f"not a partition literal: {text!r}")
        inner = cleaned[1:-1].strip()
        if not inner:
            return cls()
        return cls(tuple(int(p) for p in inner.split(",")))

    def __str__(self) -> str:
        return "[" + ",".join(str(p) for p in self.parts) + "]"

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, index: int) -> int:
        return self.parts[index]

    @property
    def length(self) -> int:
        return len(self.parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def largest(self) -> int:
        """alpha_1, or 0 for the empty partition."""
        return self.parts[0] if self.parts else 0

    def multiplicities(self) -> dict[int, int]:
        counts: dict[int, int] = {}
        for p in self.parts:
            counts[p] = counts.get(p, 0) + 1
        return counts

    def remove_part(self, value: int) -> "Partition":
        """Drop one occurrence of value; raises DomainError if absent."""
        parts = list(self.parts)
        try:
            parts.remove(value)
        except ValueError:
            raise DomainError(f"{value} is not a part of {self}") from None
        return Partition(tuple(parts))

    def add_part(self, value: int) -> "Partition":
        return Partition(self.parts + (value,))


def conjugate(p: Partition) -> Partition:
    """Transpose the Ferrers diagram: a_j = #{k : p_k >= j}."""
    parts = p.parts
    return Partition(tuple(sum(1 for part in parts if part >= j) for j in range(1, p.largest + 1)))


def c_alpha(p: Partition) -> Fraction:
    """C(alpha) = prod_u 1/(a_u - a_{u+1})! over the conjugate partition a."""
    a = conjugate(p).parts + (0,)
    denominator = 1
    for u in range(p.largest):
        denominator *= math.factorial(a[u] - a[u + 1])
    return Fraction(1, denominator)


def e_q_alpha(q: int, p: Partition) -> Fraction:
    """E_q(alpha) = (q+1) / q^(1 + sum of parts)."""
    require_odd_prime(q)
    return Fraction(q + 1, q ** (1 + p.size))
