"""Exact dyadic rationals ``m * 2**e``."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import NonIntegralError

Number = Union["Dyadic", int]


def _split2(m: int) -> tuple[int, int]:
    if m == 0:
        return 0, 0
    tz = (m & -m).bit_length() - 1
    return m >> tz, tz


@dataclass(frozen=True)
class Dyadic:
    """Canonical form: odd mantissa, or zero with exponent 0."""

    mantissa: int
    exponent: int = 0

    def __post_init__(self):
        m, tz = _split2(self.mantissa)
        object.__setattr__(self, "mantissa", m)
        object.__setattr__(self, "exponent", self.exponent + tz if m else 0)

    @classmethod
    def pow2(cls, e: int) -> "Dyadic":
        return cls(1, e)

    @staticmethod
    def coerce(x: Number) -> "Dyadic":
        if isinstance(x, Dyadic):
            return x
        if isinstance(x, int):
            return Dyadic(x)
        if isinstance(x, Fraction):
            den = x.denominator
            if den & (den - 1):
                raise NonIntegralError(f"{x} is not dyadic")
            return Dyadic(x.numerator, -(den.bit_length() - 1))
        raise TypeError(f"cannot make a Dyadic from {type(x).__name__}")

    def __add__(self, other: Number) -> "Dyadic":
        o = Dyadic.coerce(other)
        e = min(self.exponent, o.exponent)
        return Dyadic((self.mantissa << (self.exponent - e)) + (o.mantissa << (o.exponent - e)), e)

    __radd__ = __add__

    def __neg__(self) -> "Dyadic":
        return Dyadic(-self.mantissa, self.exponent)

    def __sub__(self, other: Number) -> "Dyadic":
        return self + (-Dyadic.coerce(other))

    def __rsub__(self, other: Number) -> "Dyadic":
        return Dyadic.coerce(other) - self

    def __mul__(self, other: Number) -> "Dyadic":
        o = Dyadic.coerce(other)
        return Dyadic(self.mantissa * o.mantissa, self.exponent + o.exponent)

    __rmul__ = __mul__

    def exact_div(self, other: Number) -> "Dyadic":
        """Quotient, which must itself be dyadic."""
        o = Dyadic.coerce(other)
        if o.mantissa == 0:
            raise ZeroDivisionError("division by zero Dyadic")
        q, r = divmod(self.mantissa, o.mantissa)
        if r:
            raise NonIntegralError(f"{self} / {o} is not a dyadic rational")
        return Dyadic(q, self.exponent - o.exponent)

    def is_zero(self) -> bool:
        return self.mantissa == 0

    def is_integer(self) -> bool:
        return self.exponent >= 0 or self.mantissa == 0

    def to_int(self) -> int:
        if not self.is_integer():
            raise NonIntegralError(f"{self} is not an integer")
        return self.mantissa << self.exponent

    def to_fraction(self) -> Fraction:
        if self.exponent >= 0:
            return Fraction(self.mantissa << self.exponent)
        return Fraction(self.mantissa, 1 << -self.exponent)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Dyadic):
            return self.mantissa == other.mantissa and self.exponent == other.exponent
        if isinstance(other, (int, Fraction)):
            return self.to_fraction() == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.to_fraction())

    def __lt__(self, other: Number) -> bool:
        return (self - other).mantissa < 0

    def __le__(self, other: Number) -> bool:
        return (self - other).mantissa <= 0

    def __gt__(self, other: Number) -> bool:
        return (self - other).mantissa > 0

    def __ge__(self, other: Number) -> bool:
        return (self - other).mantissa >= 0

    def __str__(self) -> str:
        return str(self.to_fraction())
