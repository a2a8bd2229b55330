"""Evaluate the additive character sum over polynomial pairs for random Laurent tails
and watch it collapse to a power of two fixed by the rank of the associated matrix."""

from __future__ import annotations

import argparse
import random

from persym import LaurentTail, f_k_eval, rank_of_seed
from persym.charsum import tails_to_seed


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=2)
    ap.add_argument("--k", type=int, default=3)
    ap.add_argument("--samples", type=int, default=8)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args()
    n, k = args.n, args.k
    rng = random.Random(args.seed)

    for _ in range(args.samples):
        tails = [LaurentTail.from_word(rng.getrandbits(k + 1), k + 1) for _ in range(n)]
        f = f_k_eval(tails, k)
        r = rank_of_seed(tails_to_seed(tails))
        print(f"tails={[t.word for t in tails]} sum={f} rank={r} "
              f"2^(2n+k-rank)={1 << (2 * n + k - r)}")


if __name__ == "__main__":
    main()
