import pytest

from persym.dyadic import Dyadic
from persym.errors import (InconsistentSystemError, NegativeCountError, NonIntegralError,
                           UnderdeterminedError)
from persym.formulas import gamma2_general, gamma3_general, table_value
from persym.moments import MomentSystem, fit_ansatz_coefficients, solve_exact, solve_moments
from persym.persymmetric import enumerate_distribution


def table_row(n, k):
    return tuple(table_value(n, k, i).value for i in range(k + 1))


def test_solve_k2():
    for n in range(1, 15):
        d = solve_moments(MomentSystem.standard(n, 2))
        assert d[2] == 2 ** (3 * n) - 3 * 2**n + 2


def test_solve_k4_with_gamma2_known():
    for n in range(2, 15):
        sys = MomentSystem(n, 4, {0: 1, 1: 3 * (2**n - 1), 2: gamma2_general(n, 4)})
        assert solve_moments(sys).counts == table_row(n, 4)


def test_solve_k6_with_postulates():
    for n in range(3, 15):
        assert solve_moments(MomentSystem.standard(n, 6, postulates=True)).counts == table_row(n, 6)


def test_solve_k1_overdetermined():
    for n in range(1, 10):
        assert solve_moments(MomentSystem.standard(n, 1)).counts == (1, 4**n - 1)


@pytest.mark.parametrize("n,k", [(n, k) for n in range(1, 10) for k in range(1, 7)
                                 if (k + 1) * n <= 22])
def test_solutions_match_enumeration(n, k):
    sol = solve_moments(MomentSystem.standard(n, k, postulates=k >= 5))
    assert sol == enumerate_distribution(n, k)


def test_underdetermined_without_postulates():
    with pytest.raises(UnderdeterminedError):
        solve_moments(MomentSystem.standard(2, 5))
    with pytest.raises(UnderdeterminedError):
        solve_moments(MomentSystem.standard(3, 7, postulates=True))


def test_corrupted_postulate_is_rejected_when_overdetermined():
    # k = 5 with both postulates leaves 2 unknowns for 3 equations
    n, k = 4, 5
    good = MomentSystem.standard(n, k, postulates=True).knowns
    for idx in (2, 3):
        for delta in (1, 2, 7):
            knowns = dict(good)
            knowns[idx] += delta
            with pytest.raises(InconsistentSystemError):
                solve_moments(MomentSystem(n, k, knowns))


def test_corrupted_postulate_at_k6_needs_enumeration():
    # Square system on nodes 2^-4, 2^-5, 2^-6: shifting a known count moves the
    # solution by integers, so only enumeration (or negativity) exposes it.
    n, k = 3, 6
    knowns = dict(MomentSystem.standard(n, k, postulates=True).knowns)
    knowns[2] += 1
    corrupted = solve_moments(MomentSystem(n, k, knowns))
    assert corrupted != enumerate_distribution(n, k)
    knowns[2] += 10**6
    with pytest.raises(NegativeCountError):
        solve_moments(MomentSystem(n, k, knowns))


def test_solve_exact_small():
    rows = [([Dyadic(1), Dyadic(1)], Dyadic(3)), ([Dyadic(1), Dyadic(-1)], Dyadic(1))]
    assert solve_exact(rows) == [Dyadic(2), Dyadic(1)]
    with pytest.raises(NonIntegralError):
        solve_exact([([Dyadic(3)], Dyadic(1))])


def test_fit_examples():
    assert fit_ansatz_coefficients("gamma2", 4) == (7, -14)
    assert fit_ansatz_coefficients("gamma3", 4) == (-21, -42, 48)
    assert fit_ansatz_coefficients("gamma2", 3) == (-9, 2)
    with pytest.raises(ValueError):
        fit_ansatz_coefficients("gamma2", 2)


def test_fit_reproduces_general_forms():
    for k in range(3, 17):
        a, b = fit_ansatz_coefficients("gamma2", k)
        for n in range(1, 10):
            assert 7 * 4**n + a * 2**n + b == gamma2_general(n, k)
    for k in range(4, 17):
        a, b, c = fit_ansatz_coefficients("gamma3", k)
        for n in range(1, 10):
            assert 15 * 8**n + a * 4**n + b * 2**n + c == gamma3_general(n, k)
