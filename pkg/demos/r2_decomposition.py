"""Split the number of solutions of the q=2 polynomial system by the rank class of the
U matrix, and put the brute-force totals next to the closed-form pieces."""

from __future__ import annotations

import argparse

from persym.formulas import r2_formula, r2_terms
from persym.polysys import decompose_r2


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=2)
    ap.add_argument("--k", type=int, default=3)
    args = ap.parse_args()
    n, k = args.n, args.k

    parts = decompose_r2(n, k)
    terms = r2_terms(n, k)
    print(f"{'class':<20}{'#U':>8}{'solutions':>12}{'formula':>12}")
    for name, value in terms.items():
        nu, sols = parts.get(name, (0, 0))
        print(f"{name:<20}{nu:>8}{sols:>12}{value:>12}")
    total = sum(s for _, s in parts.values())
    print(f"total {total}, closed form {r2_formula(n, k)}")


if __name__ == "__main__":
    main()
