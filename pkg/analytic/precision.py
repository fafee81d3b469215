"""Values carried together with an absolute error bound."""

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Number

_EPS = 2.0**-52


@dataclass(frozen=True)
class PrecisionValue:
    """A real or complex value with an absolute error bound err.

    heuristic_tail, when present, is the part of err that is an estimate
    rather than a proven bound.
    """

    value: float | complex
    err: float
    heuristic_tail: float | None = None

    def __post_init__(self) -> None:
        if not math.isfinite(self.err) or self.err < 0:
            raise ValueError(f"error bound must be finite and nonnegative, got {self.err}")

    @property
    def real(self) -> float:
        return complex(self.value).real if isinstance(self.value, complex) else float(self.value)

    @property
    def rigorous_err(self) -> float:
        return self.err - (self.heuristic_tail or 0.0)

    def contains(self, x: float | complex) -> bool:
        return abs(x - self.value) <= self.err

    def conjugate(self) -> "PrecisionValue":
        return PrecisionValue(complex(self.value).conjugate(), self.err, self.heuristic_tail)

    def __mul__(self, other: "PrecisionValue | Number | Fraction") -> "PrecisionValue":
        if isinstance(other, PrecisionValue):
            value = self.value * other.value
            err = (
                abs(self.value) * other.err
                + abs(other.value) * self.err
                + self.err * other.err
                + abs(value) * _EPS
            )
            return PrecisionValue(value, err)
        factor = float(other) if isinstance(other, Fraction) else other
        value = self.value * factor
        return PrecisionValue(value, self.err * abs(factor) + abs(value) * _EPS)

    __rmul__ = __mul__

    def __add__(self, other: "PrecisionValue | Number") -> "PrecisionValue":
        if isinstance(other, PrecisionValue):
            value = self.value + other.value
            return PrecisionValue(value, self.err + other.err + abs(value) * _EPS)
        value = self.value + other
        return PrecisionValue(value, self.err + abs(value) * _EPS)

    __radd__ = __add__

    def __str__(self) -> str:
        return f"{self.value!r} ± {self.err:.3g}"
