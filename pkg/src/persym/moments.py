"""Solving the three aggregate moment equations for unknown rank counts.

Every Gamma_i satisfies

    sum_i Gamma_i             = 2^((k+1)n)
    sum_i Gamma_i 2^(-i)      = moment_rhs(n, k, 1)
    sum_i Gamma_i 2^(-2i)     = moment_rhs(n, k, 2)

With Gamma_0 and Gamma_1 known, this pins down up to three further counts.
For k = 5 and k = 6 the postulated Gamma_2 / Gamma_3 forms must be supplied.
All arithmetic is exact over the dyadic rationals.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .dyadic import Dyadic
from .errors import (InconsistentSystemError, NegativeCountError, NonIntegralError,
                     UnderdeterminedError)
from .formulas import (gamma1, gamma2_general, gamma3_general,
                       gamma_fixture_small, moment_rhs, total_count)
from .persymmetric import RankDistribution


@dataclass(frozen=True)
class MomentSystem:
    n: int
    k: int
    knowns: dict[int, int] = field(default_factory=dict)

    @classmethod
    def standard(cls, n: int, k: int, postulates: bool = False) -> "MomentSystem":
        """Gamma_0 = 1 and Gamma_1 (k >= 2), plus the postulated forms when asked."""
        knowns = {0: 1}
        if k >= 2:
            knowns[1] = gamma1(n, k).value
        if postulates:
            if k >= 3:
                knowns[2] = gamma2_general(n, k)
            if k >= 4:
                knowns[3] = gamma3_general(n, k)
        return cls(n, k, knowns)

    @property
    def unknowns(self) -> list[int]:
        return [i for i in range(self.k + 1) if i not in self.knowns]

    def equations(self) -> list[tuple[list[Dyadic], Dyadic]]:
        """Rows (coefficients of the unknowns, right-hand side), knowns moved across."""
        rhs = [Dyadic(total_count(self.n, self.k)),
               moment_rhs(self.n, self.k, 1),
               moment_rhs(self.n, self.k, 2)]
        rows = []
        for order, b in enumerate(rhs):
            for i, g in self.knowns.items():
                b = b - Dyadic(g, -order * i)
            rows.append(([Dyadic.pow2(-order * i) for i in self.unknowns], b))
        return rows


def solve_exact(rows: list[tuple[list[Dyadic], Dyadic]]) -> list[Dyadic]:
    """Fraction-free elimination over Z[1/2]; extra rows must be satisfied exactly.

    Raises NonIntegralError when the solution leaves the dyadic rationals and
    InconsistentSystemError when a surplus equation fails.
    """
    m = len(rows[0][0]) if rows else 0
    if m > len(rows):
        raise UnderdeterminedError(f"{m} unknowns but only {len(rows)} equations")
    a = [list(coef) + [b] for coef, b in rows]
    prev = Dyadic(1)
    piv_rows = []
    r = 0
    for c in range(m):
        p = next((i for i in range(r, len(a)) if not a[i][c].is_zero()), None)
        if p is None:
            raise UnderdeterminedError("singular moment system")
        a[r], a[p] = a[p], a[r]
        for i in range(r + 1, len(a)):
            a[i] = [(a[r][c] * a[i][j] - a[i][c] * a[r][j]).exact_div(prev)
                    for j in range(m + 1)]
        prev = a[r][c]
        piv_rows.append(r)
        r += 1
    for i in range(m, len(a)):
        if not a[i][m].is_zero():
            raise InconsistentSystemError("surplus moment equation is violated")
    x = [Dyadic(0)] * m
    for c in reversed(range(m)):
        acc = a[c][m]
        for j in range(c + 1, m):
            acc = acc - a[c][j] * x[j]
        x[c] = acc.exact_div(a[c][c])
    return x


def solve_moments(sys: MomentSystem) -> RankDistribution:
    unknowns = sys.unknowns
    if len(unknowns) > 3:
        raise UnderdeterminedError(
            f"{len(unknowns)} unknown counts (indices {unknowns}) but only 3 equations; "
            "supply the postulated Gamma_2/Gamma_3 forms")
    try:
        sol = solve_exact(sys.equations())
    except NonIntegralError as exc:
        raise NonIntegralError(f"moment system for n={sys.n}, k={sys.k} has no integral "
                               f"solution: {exc}") from exc
    counts = dict(sys.knowns)
    for i, v in zip(unknowns, sol):
        if not v.is_integer():
            raise NonIntegralError(f"Gamma_{i} = {v} is not an integer")
        counts[i] = v.to_int()
        if counts[i] < 0:
            raise NegativeCountError(f"Gamma_{i} = {counts[i]} is negative")
    return RankDistribution(sys.n, sys.k, tuple(counts[i] for i in range(sys.k + 1)))


def fit_ansatz_coefficients(target: str, k: int) -> tuple[int, ...]:
    """Refit the leading-term ansatz of Gamma_2 or Gamma_3 to the n = 1, 2, 3 fixtures.

    gamma2: 7*4^n + a*2^n + b, returns (a, b).
    gamma3: 15*8^n + a*4^n + b*2^n + c, returns (a, b, c).
    """
    if target == "gamma2":
        i, lead, powers = 2, 7, (1,)
        if k < 3:
            raise ValueError("the Gamma_2 ansatz is fitted for k >= 3")
    elif target == "gamma3":
        i, lead, powers = 3, 15, (2, 1)
        if k < 4:
            raise ValueError("the Gamma_3 ansatz is fitted for k >= 4")
    else:
        raise ValueError(f"unknown target {target!r}")
    rows = []
    for n in (1, 2, 3):
        fx = gamma_fixture_small(n, k, i)
        if not fx.in_range:
            raise ValueError(f"fixture n={n} is not a valid count at k={k}")
        known = fx.value - lead * (1 << (i * n))
        rows.append(([Dyadic(1 << (p * n)) for p in powers] + [Dyadic(1)], Dyadic(known)))
    sol = solve_exact(rows)
    return tuple(v.to_int() for v in sol)
