"""Structure of the multiplicative group (Z/nZ)^x.

The Sylow q-subgroup of (Z/nZ)^x is read off the factorization of n through
the Chinese remainder theorem: every prime p != q dividing n contributes a
cyclic factor of order q^nu_q(p-1), and q^k || n with k >= 2 contributes a
cyclic factor of order q^(k-1). An independent element-order oracle checks
that formula by brute force.
"""

import logging
import math
from dataclasses import dataclass
from typing import Callable, Iterable

import numpy as np
from sympy import factorint

from config.settings import get_settings
from groups.errors import DomainError, OracleCapError, require_odd_prime
from groups.partitions import Partition, conjugate

logger = logging.getLogger(__name__)

# Largest modulus whose residue products fit in int64
POWMOD_MAX_MODULUS = math.isqrt(2**63 - 1)


@dataclass(frozen=True)
class Factorization:
    """Prime factorization of n as (prime, exponent) pairs, primes increasing.

    Primality of the bases is trusted: instances come from the sieve or from
    sympy.factorint.
    """

    pairs: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        pairs = tuple((int(p), int(e)) for p, e in self.pairs)
        for i, (p, e) in enumerate(pairs):
            if p < 2 or e < 1:
                raise DomainError(f"invalid factor {p}^{e}")
            if i and pairs[i - 1][0] >= p:
                raise DomainError(f"primes must be strictly increasing: {pairs}")
        object.__setattr__(self, "pairs", pairs)

    @property
    def n(self) -> int:
        value = 1
        for p, e in self.pairs:
            value *= p**e
        return value

    @property
    def primes(self) -> list[int]:
        return [p for p, _ in self.pairs]

    def exponent_of(self, prime: int) -> int:
        for p, e in self.pairs:
            if p == prime:
                return e
        return 0

    def __str__(self) -> str:
        return "[" + ",".join(f"({p},{e})" for p, e in self.pairs) + "]"


@dataclass(frozen=True)
class GroupSignature:
    """The partition alpha with Sylow q-subgroup isomorphic to Z_{q^alpha}."""

    partition: Partition = Partition()

    def __str__(self) -> str:
        return str(self.partition)

    @property
    def is_trivial(self) -> bool:
        return self.partition.length == 0


def factorize(n: int) -> Factorization:
    """Factor a single integer n >= 1."""
    if n < 1:
        raise DomainError(f"can only factor positive integers, got {n}")
    return Factorization(tuple(sorted(factorint(n).items())))


def nu(q: int, x: int) -> int:
    """q-adic valuation: the largest k with q^k | x."""
    if x == 0:
        raise DomainError("nu_q(0) is undefined")
    if q < 2:
        raise DomainError(f"valuation base must be >= 2, got {q}")
    x = abs(x)
    k = 0
    while x % q == 0:
        x //= q
        k += 1
    return k


def euler_phi(f: Factorization) -> int:
    phi = 1
    for p, e in f.pairs:
        phi *= p ** (e - 1) * (p - 1)
    return phi


def sylow_signature(q: int, f: Factorization) -> GroupSignature:
    """Sylow q-subgroup of (Z/nZ)^x from the factorization of n."""
    require_odd_prime(q)
    parts: list[int] = []
    for p, e in f.pairs:
        if p == q:
            if e >= 2:
                parts.append(e - 1)
            continue
        v = nu(q, p - 1)
        if v:
            parts.append(v)
    return GroupSignature(Partition(tuple(parts)))


def _powmod(base: np.ndarray, exponent: int, modulus: int) -> np.ndarray:
    result = np.ones_like(base)
    while exponent:
        if exponent & 1:
            result = (result * base) % modulus
        base = (base * base) % modulus
        exponent >>= 1
    return result


def sylow_signature_oracle(q: int, n: int, cap: int | None = None) -> GroupSignature:
    """Sylow q-subgroup of (Z/nZ)^x by counting elements of q-power order.

    N_i = #{x unit : x^(q^i) = 1} equals q^(a_1 + ... + a_i) where a is the
    conjugate partition; iteration stops once N_i stabilizes.
    """
    require_odd_prime(q)
    cap = get_settings().oracle_cap if cap is None else cap
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    if n > cap:
        raise OracleCapError(f"oracle cap is {cap}, got n = {n}")
    if n > POWMOD_MAX_MODULUS:
        raise OracleCapError(f"n = {n} exceeds the int64 oracle limit {POWMOD_MAX_MODULUS}")
    if n <= 2:
        return GroupSignature()

    residues = np.arange(1, n, dtype=np.int64)
    y = residues[np.gcd(residues, n) == 1]
    previous = 1
    conjugate_parts: list[int] = []
    while True:
        y = _powmod(y, q, n)
        count = int(np.count_nonzero(y == 1))
        if count == previous:
            break
        step = nu(q, count // previous)
        if q**step * previous != count:
            raise ArithmeticError(f"element count {count} is not a q-power multiple of {previous}")
        conjugate_parts.append(step)
        previous = count
    signature = GroupSignature(conjugate(Partition(tuple(conjugate_parts))))
    logger.debug(f"[groups] oracle q={q} n={n}: {signature}")
    return signature


def _prime_power(value: int) -> tuple[int, int]:
    if value < 2:
        raise DomainError(f"{value} is not a prime power >= 2")
    factors = factorint(value)
    if len(factors) != 1:
        raise DomainError(f"{value} is not a prime power")
    prime, exponent = next(iter(factors.items()))
    return int(prime), int(exponent)


def invariant_factors(primary: Iterable[int]) -> list[int]:
    """Regroup primary cyclic factors into invariant factors d_1 | ... | d_l."""
    by_prime: dict[int, list[int]] = {}
    for value in primary:
        p, _ = _prime_power(value)
        by_prime.setdefault(p, []).append(value)
    if not by_prime:
        return []
    length = max(len(powers) for powers in by_prime.values())
    factors = [1] * length
    for powers in by_prime.values():
        powers.sort(reverse=True)
        for i, power in enumerate(powers):
            factors[length - 1 - i] *= power
    return factors


def primary_decomposition(f: Factorization) -> list[int]:
    """Primary cyclic factors of (Z/nZ)^x from the shapes of Z_{p^r}^x."""
    primary: list[int] = []
    for p, r in f.pairs:
        if p == 2:
            if r == 2:
                primary.append(2)
            elif r >= 3:
                primary.extend([2, 2 ** (r - 2)])
            continue
        if r >= 2:
            primary.append(p ** (r - 1))
        primary.extend(prime**e for prime, e in factorint(p - 1).items())
    return sorted(primary)


def is_elementary_everywhere(primary: Iterable[int]) -> bool:
    """Every primary factor is Z_p for a prime p."""
    return all(_prime_power(value)[1] == 1 for value in primary)


def invariant_factors_squarefree(primary: Iterable[int]) -> bool:
    return all(all(e == 1 for e in factorint(d).values()) for d in invariant_factors(primary))


def largest_invariant_factor_minimal(primary: Iterable[int]) -> bool:
    """d_l equals the radical of the group order, the least value it can take."""
    primary = list(primary)
    factors = invariant_factors(primary)
    if not factors:
        return True
    order = 1
    for value in primary:
        order *= value
    radical = 1
    for prime in factorint(order):
        radical *= prime
    return factors[-1] == radical


def is_maximally_noncyclic(f: Factorization, sqfree: Callable[[int], bool]) -> bool:
    """Factorization test: 2^4 does not divide n, p^3 does not divide n for odd p,
    and p - 1 is squarefree for every p | n."""
    for p, e in f.pairs:
        if p == 2 and e >= 4:
            return False
        if p != 2 and e >= 3:
            return False
        if not sqfree(p - 1):
            return False
    return True


def nu_array(q: int, values: np.ndarray) -> np.ndarray:
    """Elementwise q-adic valuation of a positive integer array."""
    values = np.array(values, dtype=np.int64, copy=True)
    if values.size and values.min() < 1:
        raise DomainError("nu_array needs positive integers")
    result = np.zeros(values.shape, dtype=np.int64)
    divisible = values % q == 0
    while divisible.any():
        result[divisible] += 1
        values[divisible] //= q
        divisible = values % q == 0
    return result
