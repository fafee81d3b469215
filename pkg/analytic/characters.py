"""Dirichlet characters modulo an odd prime and their values L(1, chi)."""

import cmath
import logging
import math
from dataclasses import dataclass
from fractions import Fraction

import mpmath
import numpy as np
from sympy import n_order
from sympy import primitive_root as _sympy_primitive_root

from analytic.precision import PrecisionValue
from analytic.special import to_mpf
from config.settings import get_settings
from groups.errors import DomainError, require_odd_prime

logger = logging.getLogger(__name__)


def primitive_root(q: int) -> int:
    """Smallest generator of (Z/qZ)^x."""
    require_odd_prime(q)
    return int(_sympy_primitive_root(q))


def mult_order(p: int, q: int) -> int:
    """Least k >= 1 with p^k = 1 mod q."""
    require_odd_prime(q)
    if p % q == 0:
        raise DomainError(f"{p} is not a unit modulo {q}")
    return int(n_order(p % q, q))


@dataclass(frozen=True)
class DirichletCharacter:
    """chi_j mod q defined by chi(g^k) = exp(2 pi i j k / (q - 1)).

    dlog[a] is the discrete logarithm of a to base g for 1 <= a < q
    (dlog[0] is unused).
    """

    modulus: int
    index: int
    generator: int
    dlog: tuple[int, ...]

    @property
    def is_principal(self) -> bool:
        return self.index == 0

    def __call__(self, a: int) -> complex:
        a %= self.modulus
        if a == 0:
            return 0j
        # reduce before scaling so the phase stays in [0, 2 pi)
        k = (self.index * self.dlog[a]) % (self.modulus - 1)
        return cmath.exp(2j * math.pi * k / (self.modulus - 1))

    def mp_value(self, a: int) -> mpmath.mpc:
        """chi(a) at mpmath working precision."""
        a %= self.modulus
        if a == 0:
            return mpmath.mpc(0)
        k = (self.index * self.dlog[a]) % (self.modulus - 1)
        return mpmath.expjpi(to_mpf(Fraction(2 * k, self.modulus - 1)))

    @property
    def values(self) -> tuple[complex, ...]:
        """chi(a) for a = 1 .. q-1."""
        return tuple(self(a) for a in range(1, self.modulus))

    def conjugate(self) -> "DirichletCharacter":
        index = (-self.index) % (self.modulus - 1)
        return DirichletCharacter(self.modulus, index, self.generator, self.dlog)


def characters(q: int) -> list[DirichletCharacter]:
    """All q - 1 characters mod q, principal first."""
    g = primitive_root(q)
    dlog = [0] * q
    power = 1
    for k in range(q - 1):
        dlog[power] = k
        power = power * g % q
    return [DirichletCharacter(q, j, g, tuple(dlog)) for j in range(q - 1)]


def l_one(chi: DirichletCharacter) -> PrecisionValue:
    """L(1, chi) = -(1/q) sum_{a=1}^{q-1} chi(a) psi(a/q) for nonprincipal chi."""
    if chi.is_principal:
        raise DomainError("L(s, chi_0) has a pole at s = 1")
    q = chi.modulus
    dps = get_settings().mp_dps
    with mpmath.workdps(dps):
        total = mpmath.fsum(
            chi.mp_value(a) * mpmath.digamma(to_mpf(Fraction(a, q))) for a in range(1, q)
        )
        value = complex(-total / q)
    err = abs(value) * 2.0**-51 + (q - 1) * 10.0 ** (-(dps - 3))
    logger.debug(f"[characters] L(1, chi_{chi.index} mod {q}) = {value:.12g}")
    return PrecisionValue(value, err)


def l_one_series(chi: DirichletCharacter, terms: int, chunk: int = 2**20) -> complex:
    """Truncated Dirichlet series sum chi(n)/n, averaged over the last period.

    Averaging the partial sums S_M for M in (N - q, N] cancels the leading
    oscillating term of the truncation error.
    """
    if chi.is_principal:
        raise DomainError("the series for chi_0 diverges at s = 1")
    q = chi.modulus
    if terms < 2 * q:
        raise DomainError(f"need at least {2 * q} terms, got {terms}")
    table = np.array([0j] + list(chi.values), dtype=np.complex128)
    head_end = terms - q
    partials: list[complex] = []
    for lo in range(1, head_end + 1, chunk):
        n = np.arange(lo, min(lo + chunk, head_end + 1), dtype=np.int64)
        partials.append(complex(np.sum(table[n % q] / n)))
    head = sum(partials, 0j)
    n = np.arange(head_end + 1, terms + 1, dtype=np.int64)
    running = np.cumsum(table[n % q] / n)
    return head + complex(np.mean(running))
