"""Recover a full rank distribution from a handful of known counts plus the moment
equations, then check it against brute force when that is affordable."""

from __future__ import annotations

import argparse

from persym import MomentSystem, enumerate_distribution, solve_moments


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=3)
    ap.add_argument("--k", type=int, default=6)
    args = ap.parse_args()
    n, k = args.n, args.k

    system = MomentSystem.standard(n, k, postulates=k >= 5)
    print(f"known entries: {sorted(system.knowns)}   unknowns: {system.unknowns}")
    for coeffs, rhs in system.equations():
        lhs = " + ".join(f"{c.to_fraction()}*G{i}" for c, i in zip(coeffs, system.unknowns))
        print(f"   {lhs} = {rhs.to_fraction()}")
    sol = solve_moments(system)
    print("solved:", sol.counts)

    if (k + 1) * n <= 24:
        brute = enumerate_distribution(n, k).counts
        print("brute:", brute, "(match)" if list(brute) == list(sol.counts) else "(MISMATCH)")


if __name__ == "__main__":
    main()
