"""Bit-packed GF(2) matrices and GF(2)[T] polynomials.

A matrix row is a single Python int whose bit ``j`` is the entry in column
``j``; polynomials store the coefficient of ``T^i`` in bit ``i``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DegreeOverflowError, WidthError

MAX_COLS = 63
MAX_POLY_DEGREE = 62

NEG_INF = -math.inf  # degree of the zero polynomial


@dataclass(frozen=True)
class BitMatrix:
    rows: tuple[int, ...]
    ncols: int

    def __post_init__(self):
        if not 0 <= self.ncols <= MAX_COLS:
            raise WidthError(f"{self.ncols} columns; at most {MAX_COLS} supported")
        mask = (1 << self.ncols) - 1
        for r in self.rows:
            if r < 0 or r & ~mask:
                raise ValueError(f"row word {r:#x} has bits outside {self.ncols} columns")

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @classmethod
    def from_lists(cls, entries: Sequence[Sequence[int]], ncols: int | None = None) -> "BitMatrix":
        if ncols is None:
            ncols = len(entries[0]) if entries else 0
        rows = []
        for row in entries:
            if len(row) != ncols:
                raise ValueError("ragged matrix")
            rows.append(sum((v & 1) << j for j, v in enumerate(row)))
        return cls(tuple(rows), ncols)

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "BitMatrix":
        return cls((0,) * nrows, ncols)

    @classmethod
    def identity(cls, size: int) -> "BitMatrix":
        return cls(tuple(1 << i for i in range(size)), size)

    def to_lists(self) -> list[list[int]]:
        return [[(r >> j) & 1 for j in range(self.ncols)] for r in self.rows]

    def transpose(self) -> "BitMatrix":
        out = [0] * self.ncols
        for i, r in enumerate(self.rows):
            for j in range(self.ncols):
                if (r >> j) & 1:
                    out[j] |= 1 << i
        return BitMatrix(tuple(out), self.nrows)

    def rank(self) -> int:
        return rank(self)

    def __str__(self) -> str:
        return "\n".join("".join(str(v) for v in row) for row in self.to_lists())


def rank_of_rows(rows: Iterable[int]) -> int:
    """Rank of a set of row words, pivoting on the lowest set bit."""
    basis: dict[int, int] = {}
    for x in rows:
        while x:
            low = x & -x
            piv = basis.get(low)
            if piv is None:
                basis[low] = x
                break
            x ^= piv
    return len(basis)


def rank(m: BitMatrix) -> int:
    """GF(2) rank of ``m``; ``m`` itself is never modified."""
    return rank_of_rows(m.rows)


def kernel_count(m: BitMatrix) -> int:
    """Number of vectors ``x`` with ``m x = 0``, i.e. ``2**(ncols - rank)``."""
    nullity = m.ncols - rank(m)
    if nullity >= 127:
        raise OverflowError(f"kernel dimension {nullity} too large")
    return 1 << nullity


@dataclass(frozen=True, order=True)
class GF2Poly:
    bits: int = 0

    def __post_init__(self):
        if self.bits < 0 or self.bits >> (MAX_POLY_DEGREE + 1):
            raise DegreeOverflowError(f"coefficient word {self.bits:#x} out of range")

    @classmethod
    def from_coeffs(cls, coeffs: Sequence[int]) -> "GF2Poly":
        """Build from ``[c0, c1, ...]`` (constant term first)."""
        return cls(sum((c & 1) << i for i, c in enumerate(coeffs)))

    @property
    def degree(self) -> int | float:
        """Degree, or ``-inf`` for the zero polynomial."""
        return self.bits.bit_length() - 1 if self.bits else NEG_INF

    def is_zero(self) -> bool:
        return self.bits == 0

    def __add__(self, other: "GF2Poly") -> "GF2Poly":
        return GF2Poly(self.bits ^ other.bits)

    __sub__ = __add__

    def __mul__(self, other: "GF2Poly") -> "GF2Poly":
        return poly_mul(self, other)

    def coeff(self, i: int) -> int:
        return (self.bits >> i) & 1 if i >= 0 else 0

    def __repr__(self) -> str:
        if not self.bits:
            return "GF2Poly(0)"
        terms = []
        for i in range(self.bits.bit_length()):
            if (self.bits >> i) & 1:
                terms.append("1" if i == 0 else "T" if i == 1 else f"T^{i}")
        return f"GF2Poly({' + '.join(terms)})"


T = GF2Poly(0b10)
ONE = GF2Poly(1)
ZERO = GF2Poly(0)


def clmul(a: int, b: int) -> int:
    """Carry-less product of two coefficient words."""
    out = 0
    while a:
        if a & 1:
            out ^= b
        a >>= 1
        b <<= 1
    return out


def poly_mul(p: GF2Poly, q: GF2Poly) -> GF2Poly:
    if p.is_zero() or q.is_zero():
        return ZERO
    if p.degree + q.degree > MAX_POLY_DEGREE:
        raise DegreeOverflowError(
            f"product degree {p.degree + q.degree} exceeds {MAX_POLY_DEGREE}")
    return GF2Poly(clmul(p.bits, q.bits))


def det2(a: GF2Poly, b: GF2Poly, c: GF2Poly, d: GF2Poly) -> GF2Poly:
    """Determinant of ``[[a, b], [c, d]]`` over GF(2)[T]: ``a*d + b*c``."""
    for p in (a, b, c, d):
        if p.degree > 31:
            raise DegreeOverflowError("det2 entries must have degree <= 31")
    return poly_mul(a, d) + poly_mul(b, c)
