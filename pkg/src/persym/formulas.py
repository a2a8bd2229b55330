"""Closed-form counts, evaluated with exact integer and dyadic arithmetic.

Every formula carries a provenance id and the (k, n) range on which it is
claimed.  Queries outside that range return :class:`NotCovered` instead of
extrapolating.  The ids are:

``gamma0``            Gamma_0 = 1
``gamma1-k1``         Gamma_1 = 2^(2n) - 1 when k = 1
``gamma1``            Gamma_1 = 3 (2^n - 1) when k >= 2
``table-k2`` .. ``table-k6``   full rank tables for k = 2 .. 6
``gamma2-general``    postulated Gamma_2 for k >= 3
``gamma3-general``    postulated Gamma_3 for k >= 4
``fixture-gamma2``, ``fixture-gamma3``   small-n values used to fit the postulates
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .dyadic import Dyadic
from .errors import NonIntegralError

# rows that were obtained by assuming the general Gamma_2 / Gamma_3 forms
POSTULATED = {"gamma2-general", "gamma3-general", "table-k5", "table-k6"}


@dataclass(frozen=True)
class FormulaResult:
    value: int
    provenance: str
    validity: str
    in_range: bool = True

    def __int__(self) -> int:
        return self.value


@dataclass(frozen=True)
class NotCovered:
    n: int
    k: int
    i: int
    reason: str = "no closed form stated"

    def __bool__(self) -> bool:
        return False


def _p(n: int) -> int:
    return 1 << n


# Each table entry maps i -> function of n.
_TABLES: dict[int, dict[int, Callable[[int], int]]] = {
    2: {
        2: lambda n: _p(3 * n) - 3 * _p(n) + 2,
    },
    3: {
        2: lambda n: 7 * _p(2 * n) - 9 * _p(n) + 2,
        3: lambda n: _p(4 * n) - 7 * _p(2 * n) + 6 * _p(n),
    },
    4: {
        2: lambda n: 7 * _p(2 * n) + 7 * _p(n) - 14,
        3: lambda n: 15 * _p(3 * n) - 21 * _p(2 * n) - 42 * _p(n) + 48,
        4: lambda n: _p(5 * n) - 15 * _p(3 * n) + 7 * _p(2 * n + 1) + _p(n + 5) - 32,
    },
    5: {
        2: lambda n: 7 * _p(2 * n) + 39 * _p(n) - 46,
        3: lambda n: 15 * _p(3 * n) + 91 * _p(2 * n) - 189 * _p(n + 1) + 272,
        4: lambda n: 31 * _p(4 * n) - 45 * _p(3 * n) - 161 * _p(2 * n + 1) + 51 * _p(n + 4) - 480,
        5: lambda n: (_p(6 * n) - 31 * _p(4 * n) + 15 * _p(3 * n + 1) + 7 * _p(2 * n + 5)
                      - 15 * _p(n + 5) + 256),
    },
    6: {
        2: lambda n: 7 * _p(2 * n) + 103 * _p(n) - 110,
        3: lambda n: 15 * _p(3 * n) + 315 * _p(2 * n) - 1050 * _p(n) + 720,
        4: lambda n: 31 * _p(4 * n) + 515 * _p(3 * n) - 2450 * _p(2 * n) + 3280 * _p(n) - 1376,
        5: lambda n: (63 * _p(5 * n) - 93 * _p(4 * n) - 1650 * _p(3 * n) + 5040 * _p(2 * n)
                      - 4128 * _p(n) + 768),
        6: lambda n: (_p(7 * n) - 63 * _p(5 * n) + 62 * _p(4 * n) + 1120 * _p(3 * n)
                      - 2912 * _p(2 * n) + 1792 * _p(n)),
    },
}

TABLE_KS = (1, 2, 3, 4, 5, 6)


def gamma1(n: int, k: int) -> FormulaResult:
    if k == 1:
        return FormulaResult(_p(2 * n) - 1, "gamma1-k1", "k = 1")
    return FormulaResult(3 * (_p(n) - 1), "gamma1", "k >= 2")


def gamma2_general(n: int, k: int) -> int:
    """Postulated Gamma_2, claimed for k >= 3."""
    return 7 * _p(2 * n) + (_p(k + 1) - 25) * _p(n) - _p(k + 1) + 18


def gamma3_general(n: int, k: int) -> int:
    """Postulated Gamma_3, claimed for k >= 4."""
    return (15 * _p(3 * n) + (7 * _p(k) - 133) * _p(2 * n) + (294 - 21 * _p(k)) * _p(n)
            - 176 + 14 * _p(k))


def table_value(n: int, k: int, i: int) -> FormulaResult | NotCovered:
    """Entry of the full rank table for 1 <= k <= 6."""
    if k not in TABLE_KS or not 0 <= i <= k:
        return NotCovered(n, k, i, "no table for this k")
    if i == 0:
        return FormulaResult(1, "gamma0", "k >= 1")
    if i == 1:
        return gamma1(n, k)
    return FormulaResult(_TABLES[k][i](n), f"table-k{k}", f"k = {k}")


def gamma_closed(n: int, k: int, i: int) -> FormulaResult | NotCovered:
    """Closed form for Gamma_i at (n, k), when one is stated."""
    if n < 1 or k < 1 or not 0 <= i <= k:
        raise ValueError(f"need n >= 1, k >= 1, 0 <= i <= k; got n={n}, k={k}, i={i}")
    if i == 0:
        return FormulaResult(1, "gamma0", "k >= 1")
    if i == 1:
        return gamma1(n, k)
    if i == 2 and k >= 3:
        return FormulaResult(gamma2_general(n, k), "gamma2-general", "k >= 3")
    if i == 3 and k >= 4:
        return FormulaResult(gamma3_general(n, k), "gamma3-general", "k >= 4")
    if k <= 6:
        return table_value(n, k, i)
    return NotCovered(n, k, i)


# Smallest k at which each (n, i) fixture agrees with exhaustive enumeration;
# checked for every k with (k+1)n <= 30.
FIXTURE_K_MIN = {
    (1, 2): 2, (2, 2): 2, (3, 2): 3,
    (1, 3): 3, (2, 3): 3, (3, 3): 3,
}


def gamma_fixture_small(n: int, k: int, i: int) -> FormulaResult:
    """Gamma_2, Gamma_3 at n = 1, 2, 3 as affine functions of 2^(k+1).

    Outside the range where the expression is a true count the value is still
    returned, with ``in_range=False``.
    """
    if n not in (1, 2, 3) or i not in (2, 3) or k < i:
        raise ValueError("fixtures exist only for n in {1,2,3}, i in {2,3}, k >= i")
    kmin = FIXTURE_K_MIN[(n, i)]
    c = _p(k + 1)
    if i == 2:
        value = {1: c - 4, 2: 3 * c + 30, 3: 7 * c + 266}[n]
    else:
        value = {1: 0, 2: 21 * c - 168, 3: 147 * c + 1344}[n]
    return FormulaResult(value, f"fixture-gamma{i}", f"k >= {kmin}", k >= kmin)


def total_count(n: int, k: int) -> int:
    return _p((k + 1) * n)


def r1_formula(n: int, k: int) -> int:
    return _p(2 * n) + _p(k) - 1


def r2_formula(n: int, k: int) -> int:
    return (_p(2 * k) + 3 * (_p(2 * n) - 1) * _p(k) + 6 * (_p(n) - 1) * _p(k - 1)
            + _p(4 * n) - 3 * _p(2 * n) - 6 * _p(n) + 8)


def r2_terms(n: int, k: int) -> dict[str, int]:
    """The six per-class contributions that add up to r2_formula."""
    return {
        "zero": _p(2 * k),
        "first-column-zero": (_p(2 * n) - 1) * _p(k),
        "second-column-zero": (_p(2 * n) - 1) * _p(k),
        "equal-columns": (_p(2 * n) - 1) * _p(k),
        "special-couples": 6 * (_p(n) - 1) * _p(k - 1),
        "rank-two": _p(4 * n) - 3 * _p(2 * n) - 6 * _p(n) + 8,
    }


def weighted_sum(counts, q: int) -> Dyadic:
    """sum_i counts[i] * 2^(-i q)."""
    acc = Dyadic(0)
    for i, g in enumerate(counts):
        acc = acc + Dyadic(int(g), -i * q)
    return acc


def rq_from_distribution(q: int, n: int, k: int, dist) -> int:
    """R_q recovered from a rank distribution via the moment identity.

    ``dist`` is a RankDistribution or any sequence of Gamma_0..Gamma_k.
    The identity is claimed for k <= 2n; callers may still evaluate it
    outside that range.
    """
    counts = list(dist)
    if len(counts) != k + 1:
        raise ValueError(f"expected {k + 1} counts, got {len(counts)}")
    value = weighted_sum(counts, q) * Dyadic.pow2(q * (2 * n + k) - (k + 1) * n)
    if not value.is_integer():
        raise NonIntegralError(f"R_{q} from distribution is {value}, not an integer")
    return value.to_int()


def moment_rhs(n: int, k: int, order: int) -> Dyadic:
    """Right-hand side of sum_i Gamma_i 2^(-order*i)."""
    P = Dyadic.pow2
    if order == 1:
        return P(n + k * (n - 1)) + P((k - 1) * n) - P((k - 1) * n - k)
    if order == 2:
        return (P(n + k * (n - 2))
                + P(-n + k * (n - 2)) * (3 * _p(k) - 3)
                + P(-2 * n + k * (n - 2)) * (6 * _p(k - 1) - 6)
                + P(-3 * n + k * n)
                - P(n * (k - 3) - k) * 6
                + P(-3 * n + k * (n - 2)) * 8)
    raise ValueError("order must be 1 or 2")


def rank_dist_n_by_2_formula(n: int) -> tuple[int, int, int]:
    return (1, 3 * (_p(2 * n) - 1) + 6 * (_p(n) - 1), _p(4 * n) - 3 * _p(2 * n) - 6 * _p(n) + 8)
