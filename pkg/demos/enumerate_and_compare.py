"""Enumerate rank distributions of small persymmetric block matrices and compare them
with the closed forms, printing which entries each formula covers."""

from __future__ import annotations

import argparse

from persym import enumerate_distribution, gamma_closed


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-bits", type=int, default=20)
    args = ap.parse_args()

    for n in range(1, 6):
        for k in range(1, 7):
            if (k + 1) * n > args.max_bits:
                continue
            d = enumerate_distribution(n, k)
            cells = []
            for i, count in enumerate(d.counts):
                f = gamma_closed(n, k, i)
                mark = "." if not f else ("=" if f.value == count else "!")
                cells.append(f"{count}{mark}")
            print(f"n={n} k={k}: " + " ".join(cells))
    print("legend: '=' closed form agrees, '!' disagrees, '.' no closed form for that entry")


if __name__ == "__main__":
    main()
