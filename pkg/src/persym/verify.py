"""Named verification suites comparing closed forms with independent brute force."""

from __future__ import annotations

import time
from dataclasses import asdict, dataclass, field
from typing import Any, Callable

import numpy as np

from . import _kernels
from .charsum import f_k_eval_many
from .errors import PersymError
from .formulas import (FIXTURE_K_MIN, gamma_closed, gamma_fixture_small, r1_formula,
                       r2_formula, r2_terms, rank_dist_n_by_2_formula, rq_from_distribution, table_value)
from .moments import MomentSystem, fit_ansatz_coefficients, solve_moments
from .persymmetric import cached_distribution
from .polysys import (SPECIAL_COUPLES, census_n_by_2, count_Rq, count_special_pairs,
                      decompose_r2)

TRIPLE_6X6 = (1, 21, 1162, 20160, 258720, 1128960, 688128)


@dataclass
class CheckRecord:
    check_id: str
    inputs: dict[str, Any]
    expected: Any
    provenance: str
    computed: Any
    passed: bool


@dataclass
class VerificationReport:
    suite: str
    records: list[CheckRecord] = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.records)

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    def check(self, check_id: str, inputs: dict, expected, provenance: str, computed) -> bool:
        ok = expected == computed
        self.records.append(CheckRecord(check_id, dict(inputs), expected, provenance, computed, ok))
        return ok

    def failures(self) -> list[CheckRecord]:
        return [r for r in self.records if not r.passed]

    def extend(self, other: "VerificationReport") -> None:
        self.records.extend(other.records)
        self.wall_time += other.wall_time

    def to_dict(self) -> dict:
        return {"suite": self.suite, "status": self.status, "wall_time": self.wall_time,
                "records": [asdict(r) for r in self.records]}

    @classmethod
    def from_dict(cls, d: dict) -> "VerificationReport":
        return cls(d["suite"], [CheckRecord(**r) for r in d["records"]], d["wall_time"])


def _grid(n_values, k_values, max_bits: int):
    return [(n, k) for n in n_values for k in k_values if (k + 1) * n <= max_bits]


def suite_small_k_tables(max_bits: int = 30) -> VerificationReport:
    rep = VerificationReport("lemma52")
    for n, k in _grid(range(1, 6), range(1, 5), max_bits):
        d = cached_distribution(n, k)
        for i in range(k + 1):
            f = table_value(n, k, i)
            rep.check(f"table n={n} k={k} i={i}", {"n": n, "k": k, "i": i},
                      f.value, f.provenance, d[i])
    return rep


def suite_k5_k6_tables(max_bits: int = 30) -> VerificationReport:
    rep = VerificationReport("lemma56")
    for n, k in _grid(range(1, 4), (5, 6), max_bits):
        d = cached_distribution(n, k)
        for i in range(k + 1):
            f = table_value(n, k, i)
            rep.check(f"table n={n} k={k} i={i}", {"n": n, "k": k, "i": i},
                      f.value, f.provenance, d[i])
    if 21 <= max_bits:
        rep.check("triple 6x6 vector", {"n": 3, "k": 6}, list(TRIPLE_6X6),
                  "triple-6x6-vector", list(cached_distribution(3, 6)))
    return rep


def suite_r2_closed_form(n_max: int = 3, k_max: int = 4) -> VerificationReport:
    rep = VerificationReport("thm41")
    for n in range(1, n_max + 1):
        for k in range(1, k_max + 1):
            inp = {"n": n, "k": k}
            rep.check(f"R2 n={n} k={k}", inp, r2_formula(n, k), "r2-formula",
                      count_Rq(n, k, 2, method="u"))
            parts = decompose_r2(n, k)
            for name, value in r2_terms(n, k).items():
                got = parts.get(name, (0, 0))[1]
                rep.check(f"R2 class {name} n={n} k={k}", inp, value, f"r2-term:{name}", got)
    return rep


def moment_identity_grid(max_bits: int = 30) -> list[tuple[int, int]]:
    """(n, k) with k <= 2n whose enumeration fits in ``max_bits``."""
    out = []
    n = 1
    while 2 * n <= max_bits:
        for k in range(1, 2 * n + 1):
            if (k + 1) * n <= max_bits:
                out.append((n, k))
        n += 1
    return out


def suite_moment_identity(max_bits: int = 30, qs=(1, 2, 3)) -> VerificationReport:
    rep = VerificationReport("eq21")
    for n, k in moment_identity_grid(max_bits):
        d = cached_distribution(n, k)
        for q in qs:
            inp = {"n": n, "k": k, "q": q}
            via_dist = rq_from_distribution(q, n, k, d)
            rep.check(f"R{q} oracle vs moment n={n} k={k}", inp, via_dist,
                      "moment-identity", count_Rq(n, k, q))
            if q == 1:
                rep.check(f"R1 formula n={n} k={k}", inp, r1_formula(n, k), "r1-formula", via_dist)
            if q == 2:
                rep.check(f"R2 formula n={n} k={k}", inp, r2_formula(n, k), "r2-formula", via_dist)
    return rep


def suite_nby2(n_max: int = 7) -> VerificationReport:
    rep = VerificationReport("nby2")
    for n in range(1, n_max + 1):
        rep.check(f"census n={n}", {"n": n}, list(rank_dist_n_by_2_formula(n)),
                  "census-formula", list(census_n_by_2(n)))
        for couple in SPECIAL_COUPLES:
            name = f"({couple[0]!r}, {couple[1]!r})"
            rep.check(f"special couple {name} n={n}", {"n": n, "couple": name},
                      (1 << n) - 1, "special-couple-count", count_special_pairs(n, couple))
    return rep


def charsum_exhaustive_cases(max_bits: int = 16) -> list[tuple[int, int]]:
    return [(n, k) for n in range(1, max_bits) for k in range(1, max_bits)
            if n * (k + 1) <= max_bits]


def suite_charsum(random_samples: int = 10_000, seed: int = 12345,
                  max_bits: int = 16) -> VerificationReport:
    rep = VerificationReport("charsum")
    for n, k in charsum_exhaustive_cases(max_bits):
        seeds = np.arange(1 << (n * (k + 1)), dtype=np.int64)
        _charsum_check(rep, n, k, seeds, "exhaustive")
    rng = np.random.default_rng(seed)
    for n, k in ((2, 4), (3, 3), (3, 4)):
        seeds = rng.integers(0, 1 << (n * (k + 1)), size=random_samples, dtype=np.int64)
        _charsum_check(rep, n, k, seeds, "random")
    return rep


def _charsum_check(rep, n, k, seeds, mode):
    f = f_k_eval_many(n, k, seeds)
    ranks = _kernels.persym_ranks(n, k, seeds)
    expected = np.left_shift(np.int64(1), 2 * n + k - ranks)
    bad = int(np.count_nonzero(f != expected))
    rep.check(f"f_k {mode} n={n} k={k} ({len(seeds)} seeds)",
              {"n": n, "k": k, "seeds": int(len(seeds)), "mode": mode},
              0, "charsum-identity (mismatch count)", bad)


def suite_moments(max_bits: int = 30, k_fit_max: int = 16) -> VerificationReport:
    rep = VerificationReport("moments")
    for n, k in _grid(range(1, 31), range(1, 7), max_bits):
        d = cached_distribution(n, k)
        sol = solve_moments(MomentSystem.standard(n, k, postulates=k >= 5))
        rep.check(f"solve_moments n={n} k={k}", {"n": n, "k": k}, list(d.counts),
                  "enumeration", list(sol.counts))
    for k in range(3, k_fit_max + 1):
        rep.check(f"fit gamma2 k={k}", {"k": k}, [(1 << (k + 1)) - 25, -(1 << (k + 1)) + 18],
                  "gamma2-general", list(fit_ansatz_coefficients("gamma2", k)))
    for k in range(4, k_fit_max + 1):
        rep.check(f"fit gamma3 k={k}", {"k": k},
                  [7 * (1 << k) - 133, 294 - 21 * (1 << k), -176 + 14 * (1 << k)],
                  "gamma3-general", list(fit_ansatz_coefficients("gamma3", k)))
    return rep


def suite_fixtures(max_bits: int = 26) -> VerificationReport:
    """Small-n fixtures and every covered closed form, against enumeration."""
    rep = VerificationReport("fixtures")
    for (n, i), kmin in sorted(FIXTURE_K_MIN.items()):
        k = kmin
        while (k + 1) * n <= max_bits:
            f = gamma_fixture_small(n, k, i)
            rep.check(f"fixture n={n} k={k} i={i}", {"n": n, "k": k, "i": i},
                      f.value, f.provenance, cached_distribution(n, k)[i])
            k += 1
    n = 1
    while 2 * n <= max_bits:
        k = 1
        while (k + 1) * n <= max_bits:
            d = cached_distribution(n, k)
            for i in range(k + 1):
                f = gamma_closed(n, k, i)
                if f:
                    rep.check(f"closed n={n} k={k} i={i}", {"n": n, "k": k, "i": i},
                              f.value, f.provenance, d[i])
            k += 1
        n += 1
    return rep


def suite_stress(cases=((4, 5), (5, 5), (4, 6))) -> VerificationReport:
    """k=5,6 tables at sizes beyond the small cases, up to 2^30 seeds ((5,5))."""
    rep = VerificationReport("stress")
    for n, k in cases:
        d = cached_distribution(n, k, 30)
        for i in range(k + 1):
            f = table_value(n, k, i)
            rep.check(f"stress n={n} k={k} i={i}", {"n": n, "k": k, "i": i},
                      f.value, f.provenance, d[i])
    return rep


# Keys are the public suite names accepted by `persym verify --suite`.
SUITES: dict[str, Callable[[], VerificationReport]] = {
    "lemma52": suite_small_k_tables,
    "lemma56": suite_k5_k6_tables,
    "thm41": suite_r2_closed_form,
    "eq21": suite_moment_identity,
    "nby2": suite_nby2,
    "charsum": suite_charsum,
    "moments": suite_moments,
    "fixtures": suite_fixtures,
}
SLOW_SUITES = {"stress": suite_stress}


def run_suite(name: str) -> VerificationReport:
    """Run one named suite (or ``all``), timing it; errors become failed records."""
    t0 = time.perf_counter()
    if name == "all":
        rep = VerificationReport("all")
        for sub in SUITES:
            rep.extend(run_suite(sub))
        rep.wall_time = time.perf_counter() - t0
        return rep
    fn = SUITES.get(name) or SLOW_SUITES.get(name)
    if fn is None:
        raise KeyError(name)
    try:
        rep = fn()
    except PersymError as exc:
        rep = VerificationReport(name)
        rep.records.append(CheckRecord(f"{name} aborted", {}, None, "", repr(exc), False))
    rep.wall_time = time.perf_counter() - t0
    return rep
