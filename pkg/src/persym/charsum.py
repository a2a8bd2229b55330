"""The character E on truncated Laurent tails and the exponential sum f_k.

A tail ``t = sum_i alpha_i T^(-i)`` is stored as a word with bit ``i-1``
equal to alpha_i, the same layout a seed uses for one block.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import _kernels
from .errors import BudgetError, DegreeOverflowError
from .gf2 import GF2Poly, poly_mul
from .persymmetric import Seed

MAX_K = 16


@dataclass(frozen=True)
class LaurentTail:
    coeffs: tuple[int, ...]  # (alpha_1, alpha_2, ...)

    @classmethod
    def from_word(cls, word: int, length: int) -> "LaurentTail":
        return cls(tuple((word >> i) & 1 for i in range(length)))

    @property
    def word(self) -> int:
        return sum((a & 1) << i for i, a in enumerate(self.coeffs))

    def __len__(self) -> int:
        return len(self.coeffs)


def char_E_of_product(t: LaurentTail, y: GF2Poly, u: GF2Poly, k: int | None = None) -> int:
    """E(t * y * u): +1 or -1 according to the T^-1 coefficient of the product.

    With ``k`` given, enforces deg y <= k-1; deg u <= 1 always.
    """
    if u.degree > 1:
        raise DegreeOverflowError(f"deg u = {u.degree} > 1")
    if k is not None and y.degree > k - 1:
        raise DegreeOverflowError(f"deg y = {y.degree} > k-1 = {k - 1}")
    p = poly_mul(y, u)
    if p.degree >= len(t):
        raise DegreeOverflowError("tail too short for this product")
    # T^-1 coefficient of (sum alpha_i T^-i)(sum p_m T^m) is sum_m alpha_{m+1} p_m
    parity = bin(p.bits & t.word).count("1") & 1
    return -1 if parity else 1


def _check(tails: Sequence[LaurentTail], k: int) -> None:
    if not 1 <= k <= MAX_K:
        raise BudgetError(k, MAX_K, "f_k evaluation (k)")
    for t in tails:
        if len(t) != k + 1:
            raise ValueError(f"each tail must carry exactly k+1 = {k + 1} coefficients")


def tails_to_seed(tails: Sequence[LaurentTail]) -> Seed:
    return Seed.from_blocks([list(t.coeffs) for t in tails])


def seed_to_tails(s: Seed) -> list[LaurentTail]:
    return [LaurentTail.from_word(s.block_word(j), s.k + 1) for j in range(1, s.n + 1)]


def f_k_eval(tails: Sequence[LaurentTail], k: int) -> int:
    """sum over deg Y <= k-1 of prod_j sum over deg U_j <= 1 of E(t_j Y U_j)."""
    _check(tails, k)
    seed = tails_to_seed(tails)
    return int(_kernels.f_k_values(seed.n, k, np.array([seed.value], np.int64))[0])


def f_k_eval_many(n: int, k: int, seeds: np.ndarray) -> np.ndarray:
    """Vectorised f_k over an array of seed integers."""
    if not 1 <= k <= MAX_K:
        raise BudgetError(k, MAX_K, "f_k evaluation (k)")
    return _kernels.f_k_values(n, k, np.asarray(seeds, dtype=np.int64))


def f_k_naive(tails: Sequence[LaurentTail], k: int) -> int:
    """Unfactored sum over all 2^(k+2n) (Y, U_1..U_n); for tiny cases.

    Tails may be longer than k+1; the extra coefficients never matter.
    """
    n = len(tails)
    if k + 2 * n > 18:
        raise BudgetError(k + 2 * n, 18, "naive f_k")
    total = 0
    for y in range(1 << k):
        Y = GF2Poly(y)
        for us in range(1 << (2 * n)):
            sign = 1
            for j, t in enumerate(tails):
                sign *= char_E_of_product(t, Y, GF2Poly((us >> (2 * j)) & 3))
            total += sign
    return total
