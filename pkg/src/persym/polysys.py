"""Brute-force counts over F2[T] with entries of degree at most 1.

PolyMatrix packing: entry (row j, column i) occupies bits ``2*(j*q + i)``
(constant term) and ``2*(j*q + i) + 1`` (coefficient of T), rows and columns
0-based.  U-assignments are scanned in increasing order of this integer.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache, partial
from itertools import product
from typing import Sequence

import numpy as np

from . import _kernels
from ._scan import check_budget, run_scan
from .errors import BudgetError, UnsupportedShapeError
from .gf2 import BitMatrix, GF2Poly, det2, kernel_count

ONE, T, T1 = GF2Poly(1), GF2Poly(2), GF2Poly(3)

# the six ordered couples that give rank one without a zero or repeated column
SPECIAL_COUPLES: tuple[tuple[GF2Poly, GF2Poly], ...] = (
    (T, T1), (T1, T), (ONE, T1), (T1, ONE), (ONE, T), (T, ONE),
)

OUTER_BUDGET_BITS = 26
CENSUS_BUDGET_BITS = 28


@dataclass(frozen=True)
class PolyMatrix:
    n: int
    q: int
    bits: int

    def __post_init__(self):
        if not 0 <= self.bits < 1 << (2 * self.n * self.q):
            raise ValueError("bits outside 2nq-bit range")

    @classmethod
    def from_entries(cls, entries: Sequence[Sequence[GF2Poly]]) -> "PolyMatrix":
        n, q = len(entries), len(entries[0])
        bits = 0
        for j, row in enumerate(entries):
            if len(row) != q:
                raise ValueError("ragged matrix")
            for i, p in enumerate(row):
                if p.degree > 1:
                    raise ValueError(f"entry {p} has degree > 1")
                bits |= p.bits << (2 * (j * q + i))
        return cls(n, q, bits)

    @classmethod
    def zeros(cls, n: int, q: int) -> "PolyMatrix":
        return cls(n, q, 0)

    def entry(self, j: int, i: int) -> GF2Poly:
        return GF2Poly((self.bits >> (2 * (j * self.q + i))) & 3)

    def row(self, j: int) -> tuple[GF2Poly, ...]:
        return tuple(self.entry(j, i) for i in range(self.q))

    def rows(self) -> list[tuple[GF2Poly, ...]]:
        return [self.row(j) for j in range(self.n)]


def rank_over_fraction_field(m: PolyMatrix) -> int:
    """Rank over F2(T) of an n x 2 matrix, from its 2 x 2 minors."""
    if m.q != 2:
        raise UnsupportedShapeError(f"only n x 2 matrices are supported, got q={m.q}")
    if m.bits == 0:
        return 0
    rows = m.rows()
    for a in range(m.n):
        for b in range(a + 1, m.n):
            if not det2(rows[a][0], rows[a][1], rows[b][0], rows[b][1]).is_zero():
                return 2
    return 1


@lru_cache(maxsize=None)
def _dependence_table() -> np.ndarray:
    # 4-bit row word: bits 0-1 first entry, bits 2-3 second entry
    tab = np.zeros((16, 16), np.int64)
    for r1 in range(16):
        for r2 in range(16):
            d = det2(GF2Poly(r1 & 3), GF2Poly(r1 >> 2), GF2Poly(r2 & 3), GF2Poly(r2 >> 2))
            tab[r1, r2] = int(d.is_zero())
    return tab


def census_n_by_2(n: int, *, threads: int = 1, progress: bool = False) -> tuple[int, int, int]:
    """(r0, r1, r2) over all 2^(4n) matrices."""
    check_budget(4 * n, CENSUS_BUDGET_BITS, "census")
    hist = run_scan(partial(_kernels.census_hist, n, _dependence_table()), 1 << (4 * n),
                    threads=threads, progress=progress, label=f"census n={n}")
    return tuple(hist)


def count_special_pairs(n: int, couple: tuple[GF2Poly, GF2Poly]) -> int:
    """Nonzero n x 2 matrices whose rows are all (0, 0) or ``couple``.

    Each such matrix is also checked to have rank one.
    """
    if couple not in SPECIAL_COUPLES:
        raise ValueError(f"{couple} is not one of the six special couples")
    zero = (GF2Poly(0), GF2Poly(0))
    count = 0
    for choice in product((zero, couple), repeat=n):
        m = PolyMatrix.from_entries(choice)
        if m.bits == 0:
            continue
        if rank_over_fraction_field(m) != 1:
            raise AssertionError(f"special-couple matrix of rank != 1: {choice}")
        count += 1
    return count


def constraint_matrix(u: PolyMatrix, k: int) -> BitMatrix:
    """GF(2) system whose kernel is the set of (Y_1..Y_q), deg Y_i <= k-1, with U Y = 0.

    Column ``i*k + d`` is the T^d coefficient of Y_{i+1}; row ``j*(k+1) + e``
    is the T^e coefficient of equation j.
    """
    q = u.q
    if k * q > 62 or u.n * (k + 1) > 63:
        raise BudgetError(max(k * q, u.n * (k + 1)), 62, "constraint matrix")
    rows = []
    for j in range(u.n):
        for e in range(k + 1):
            word = 0
            for i in range(q):
                p = u.entry(j, i)
                for d in range(k):
                    if p.coeff(e - d):
                        word ^= 1 << (i * k + d)
            rows.append(word)
    return BitMatrix(tuple(rows), k * q)


def count_Y_solutions_fixed_U(u: PolyMatrix, k: int) -> int:
    return kernel_count(constraint_matrix(u, k))


def count_Rq(
    n: int,
    k: int,
    q: int,
    method: str = "auto",
    *,
    budget_bits: int | None = None,
    threads: int = 1,
    progress: bool = False,
) -> int:
    """Number of solutions (Y, U) of U Y = 0 with deg Y_i <= k-1, deg U <= 1.

    ``method="u"`` sums the kernel size over all 2^(2nq) U-assignments.
    ``method="y"`` sums N(Y)^n over all Y-tuples, where N(Y) counts the
    single U-rows annihilating Y.  ``"auto"`` picks the cheaper scan.
    """
    if n < 1 or k < 1 or q < 1:
        raise ValueError("need n, k, q >= 1")
    if method == "auto":
        u_work = (1 << (2 * n * q)) * n * (k + 1)
        y_work = (1 << (k * q)) * (1 << (2 * q)) * q
        method = "u" if u_work <= y_work and k * q <= 62 else "y"
    if method == "u":
        check_budget(2 * n * q, OUTER_BUDGET_BITS if budget_bits is None else budget_bits,
                     "U-scan")
        if k * q > 62 or n * (k + 1) > 63:
            raise BudgetError(max(k * q, n * (k + 1)), 62, "constraint matrix")
        hist = run_scan(partial(_kernels.rq_u_scan_hist, n, k, q), 1 << (2 * n * q),
                        threads=threads, progress=progress, label=f"R_{q} U-scan")
        width = k * q
        return sum(c << (width - r) for r, c in enumerate(hist))
    if method == "y":
        check_budget(k * q, OUTER_BUDGET_BITS if budget_bits is None else budget_bits,
                     "Y-scan")
        hist = run_scan(partial(_kernels.rq_y_scan_hist, k, q), 1 << (k * q),
                        threads=threads, progress=progress, label=f"R_{q} Y-scan")
        return sum(c * v ** n for v, c in enumerate(hist))
    raise ValueError(f"unknown method {method!r}")


def count_Rq_literal(n: int, k: int, q: int) -> int:
    """Pure-Python U-scan built on count_Y_solutions_fixed_U; tiny sizes only."""
    if 2 * n * q > 16:
        raise BudgetError(2 * n * q, 16, "literal U-scan")
    return sum(count_Y_solutions_fixed_U(PolyMatrix(n, q, u), k) for u in range(1 << (2 * n * q)))


def classify_r2(u: PolyMatrix) -> str:
    """Which case of the R_2 proof a U-assignment falls into."""
    r = rank_over_fraction_field(u)
    if r == 0:
        return "zero"
    if r == 2:
        return "rank-two"
    col0 = [u.entry(j, 0) for j in range(u.n)]
    col1 = [u.entry(j, 1) for j in range(u.n)]
    if not any(p.bits for p in col0):
        return "first-column-zero"
    if not any(p.bits for p in col1):
        return "second-column-zero"
    if col0 == col1:
        return "equal-columns"
    return "special-couples"


def decompose_r2(n: int, k: int) -> dict[str, tuple[int, int]]:
    """Per-class (number of U, number of solutions) for R_2."""
    if 4 * n > 16:
        raise BudgetError(4 * n, 16, "R_2 decomposition")
    out: dict[str, list[int]] = {}
    for bits in range(1 << (4 * n)):
        u = PolyMatrix(n, 2, bits)
        cls = classify_r2(u)
        if cls == "special-couples":
            rows = {r for r in u.rows() if r != (GF2Poly(0), GF2Poly(0))}
            if len(rows) != 1 or next(iter(rows)) not in SPECIAL_COUPLES:
                raise AssertionError(f"unexpected rank-one matrix {u.rows()}")
        acc = out.setdefault(cls, [0, 0])
        acc[0] += 1
        acc[1] += count_Y_solutions_fixed_U(u, k)
    return {c: tuple(v) for c, v in out.items()}
