import numpy as np
import pytest

from persym import _kernels
from persym.charsum import (LaurentTail, char_E_of_product, f_k_eval, f_k_eval_many, f_k_naive,
                            seed_to_tails, tails_to_seed)
from persym.errors import DegreeOverflowError
from persym.gf2 import GF2Poly
from persym.persymmetric import Seed, rank_of_seed

ONE, T = GF2Poly(1), GF2Poly(2)


def tail(*coeffs):
    return LaurentTail(tuple(coeffs))


def test_char_E_examples():
    zero = tail(0, 0, 0, 0)
    for y in range(8):
        for u in range(4):
            assert char_E_of_product(zero, GF2Poly(y), GF2Poly(u)) == 1
    assert char_E_of_product(tail(1, 0), ONE, ONE) == -1
    assert char_E_of_product(tail(0, 1, 0), T, ONE) == -1
    assert char_E_of_product(tail(0, 1, 0), ONE, ONE) == 1


def test_char_E_degree_bounds():
    with pytest.raises(DegreeOverflowError):
        char_E_of_product(tail(1, 0, 0), ONE, GF2Poly(4))
    with pytest.raises(DegreeOverflowError):
        char_E_of_product(tail(1, 0, 0, 0), GF2Poly(4), ONE, k=2)


def test_f_k_examples():
    for n, k in [(1, 1), (2, 3), (3, 2)]:
        assert f_k_eval([tail(*[0] * (k + 1))] * n, k) == 2 ** (2 * n + k)
    assert f_k_eval([tail(1, 0)], 1) == 4 == f_k_naive([tail(1, 0)], 1)


def test_f_k_requires_exact_tail_length():
    with pytest.raises(ValueError):
        f_k_eval([tail(1, 0, 0)], 1)


@pytest.mark.parametrize("n,k", [(1, 1), (1, 3), (2, 2), (2, 3), (3, 1)])
def test_factored_equals_naive_sum(n, k):
    for v in range(1 << (n * (k + 1))):
        tails = seed_to_tails(Seed(n, k, v))
        assert f_k_eval(tails, k) == f_k_naive(tails, k)


def test_f_k_identity_random_seeds():
    rng = np.random.default_rng(3)
    n, k = 2, 3
    for v in rng.integers(0, 1 << (n * (k + 1)), size=50):
        s = Seed(n, k, int(v))
        assert f_k_eval(seed_to_tails(s), k) == 2 ** (2 * n + k - rank_of_seed(s))


@pytest.mark.parametrize("n,k", [(1, 8), (2, 5), (3, 3), (4, 2)])
def test_f_k_identity_exhaustive(n, k):
    seeds = np.arange(1 << (n * (k + 1)), dtype=np.int64)
    f = f_k_eval_many(n, k, seeds)
    r = _kernels.persym_ranks(n, k, seeds)
    assert np.array_equal(f, 2 ** (2 * n + k - r))


def test_coset_constancy_with_extra_coefficient():
    n, k = 2, 2
    for v in range(1 << (n * (k + 1))):
        tails = seed_to_tails(Seed(n, k, v))
        base = f_k_naive(tails, k)
        for extra in range(1 << n):
            wide = [LaurentTail(t.coeffs + ((extra >> j) & 1,)) for j, t in enumerate(tails)]
            assert f_k_naive(wide, k) == base


def test_inner_sums_are_0_2_or_4():
    for word in range(16):
        t = LaurentTail.from_word(word, 4)
        for y in range(8):
            inner = sum(char_E_of_product(t, GF2Poly(y), GF2Poly(u)) for u in range(4))
            assert inner in (0, 2, 4)


def test_tail_seed_roundtrip():
    s = Seed(3, 4, 0b10110_01101_11100)
    assert tails_to_seed(seed_to_tails(s)) == s
