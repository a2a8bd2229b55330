"""n-times persymmetric 2n x k matrices over GF(2) and their rank census.

Seed layout: bit ``(j-1)*(k+1) + (i-1)`` of the seed integer holds
alpha_i^(j), for blocks ``1 <= j <= n`` and coefficients ``1 <= i <= k+1``.
Block j contributes the rows ``(alpha_1 .. alpha_k)`` and
``(alpha_2 .. alpha_{k+1})``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache, partial
from typing import Sequence

from . import _kernels
from ._scan import check_budget, run_scan
from .gf2 import MAX_COLS, BitMatrix, rank


@dataclass(frozen=True)
class Seed:
    n: int
    k: int
    value: int

    def __post_init__(self):
        if self.n < 1 or self.k < 1:
            raise ValueError("need n >= 1 and k >= 1")
        if self.k > MAX_COLS:
            raise ValueError(f"k={self.k} exceeds {MAX_COLS} columns")
        if not 0 <= self.value < 1 << self.nbits:
            raise ValueError(f"seed {self.value} outside [0, 2^{self.nbits})")

    @property
    def nbits(self) -> int:
        return (self.k + 1) * self.n

    @classmethod
    def from_blocks(cls, blocks: Sequence[Sequence[int]]) -> "Seed":
        """``blocks[j-1] = (alpha_1^(j), ..., alpha_{k+1}^(j))``."""
        n = len(blocks)
        w = len(blocks[0])
        value = 0
        for j, blk in enumerate(blocks):
            if len(blk) != w:
                raise ValueError("all blocks need k+1 coefficients")
            for i, a in enumerate(blk):
                value |= (a & 1) << (j * w + i)
        return cls(n, w - 1, value)

    def block_word(self, j: int) -> int:
        """Coefficients of block ``j`` (1-based) as a word, bit i-1 = alpha_i."""
        w = self.k + 1
        return (self.value >> ((j - 1) * w)) & ((1 << w) - 1)

    def alpha(self, i: int, j: int) -> int:
        return (self.block_word(j) >> (i - 1)) & 1

    def blocks(self) -> list[list[int]]:
        return [[self.alpha(i, j) for i in range(1, self.k + 2)] for j in range(1, self.n + 1)]


@dataclass(frozen=True)
class RankDistribution:
    n: int
    k: int
    counts: tuple[int, ...]

    def __post_init__(self):
        if len(self.counts) != self.k + 1:
            raise ValueError(f"expected {self.k + 1} counts, got {len(self.counts)}")

    def __getitem__(self, i: int) -> int:
        return self.counts[i]

    def __iter__(self):
        return iter(self.counts)

    def total(self) -> int:
        return sum(self.counts)


def build_matrix(s: Seed) -> BitMatrix:
    cm = (1 << s.k) - 1
    rows = []
    for j in range(1, s.n + 1):
        blk = s.block_word(j)
        rows.append(blk & cm)
        rows.append(blk >> 1)
    return BitMatrix(tuple(rows), s.k)


def rank_of_seed(s: Seed) -> int:
    return rank(build_matrix(s))


def enumerate_distribution(
    n: int,
    k: int,
    budget_bits: int | None = None,
    threads: int = 1,
    *,
    chunks: int | None = None,
    progress: bool = False,
) -> RankDistribution:
    """Exact rank counts Gamma_0..Gamma_k over all 2^((k+1)n) seeds.

    Raises BudgetError when (k+1)n exceeds the budget (default 30 bits,
    overridable by argument or $PERSYM_BUDGET_BITS).
    """
    if n < 1 or k < 1:
        raise ValueError("need n >= 1 and k >= 1")
    nbits = (k + 1) * n
    check_budget(nbits, budget_bits)
    counts = run_scan(partial(_kernels.persym_rank_hist, n, k), 1 << nbits,
                      threads=threads, chunks=chunks, progress=progress,
                      label=f"enumerate n={n} k={k}")
    return RankDistribution(n, k, tuple(counts))


@lru_cache(maxsize=64)
def cached_distribution(n: int, k: int, budget_bits: int | None = None) -> RankDistribution:
    """Memoised :func:`enumerate_distribution` for repeated verification runs."""
    return enumerate_distribution(n, k, budget_bits)
