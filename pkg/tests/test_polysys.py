import itertools

import pytest

from persym.errors import BudgetError, UnsupportedShapeError
from persym.formulas import r2_formula, r2_terms, rank_dist_n_by_2_formula
from persym.gf2 import GF2Poly, poly_mul
from persym.polysys import (SPECIAL_COUPLES, PolyMatrix, census_n_by_2, constraint_matrix,
                            count_Rq, count_Rq_literal, count_special_pairs,
                            count_Y_solutions_fixed_U, decompose_r2, rank_over_fraction_field)

Z, ONE, T, T1 = GF2Poly(0), GF2Poly(1), GF2Poly(2), GF2Poly(3)


def y_solutions_literal(u: PolyMatrix, k: int) -> int:
    count = 0
    for ys in itertools.product(range(1 << k), repeat=u.q):
        ok = True
        for j in range(u.n):
            acc = 0
            for i, y in enumerate(ys):
                acc ^= poly_mul(GF2Poly(y), u.entry(j, i)).bits
            if acc:
                ok = False
                break
        count += ok
    return count


def rank_by_evaluation(m: PolyMatrix) -> int:
    """Rank from the minors evaluated at every point of GF(4).

    A minor has degree <= 2, so it is the zero polynomial iff it vanishes on
    all four elements.
    """
    # GF(4) = {0, 1, w, w+1} with w^2 = w + 1; elements as 2-bit ints
    def mul4(a, b):
        r = 0
        for i in range(2):
            if (b >> i) & 1:
                r ^= a << i
        if r & 4:
            r ^= 0b111
        return r

    def ev(p, x):
        return (p.bits & 1) ^ (mul4(x, 1) if p.bits & 2 else 0)

    rows = m.rows()
    if m.bits == 0:
        return 0
    for a, b in itertools.combinations(rows, 2):
        for x in range(4):
            if mul4(ev(a[0], x), ev(b[1], x)) ^ mul4(ev(a[1], x), ev(b[0], x)):
                return 2
    return 1


def test_polymatrix_roundtrip():
    m = PolyMatrix.from_entries([[T, T1], [ONE, Z]])
    assert m.entry(0, 0) == T and m.entry(0, 1) == T1 and m.entry(1, 0) == ONE
    assert m.rows() == [(T, T1), (ONE, Z)]
    with pytest.raises(ValueError):
        PolyMatrix.from_entries([[GF2Poly(4), Z]])


def test_rank_over_fraction_field_examples():
    assert rank_over_fraction_field(PolyMatrix.zeros(3, 2)) == 0
    assert rank_over_fraction_field(PolyMatrix.from_entries([[T, T], [T1, T1], [Z, Z]])) == 1
    assert rank_over_fraction_field(PolyMatrix.from_entries([[T, T1], [ONE, Z]])) == 2
    with pytest.raises(UnsupportedShapeError):
        rank_over_fraction_field(PolyMatrix.zeros(2, 3))


def test_rank_over_fraction_field_matches_evaluation_oracle():
    for bits in range(1 << 12):
        m = PolyMatrix(3, 2, bits)
        assert rank_over_fraction_field(m) == rank_by_evaluation(m)


@pytest.mark.parametrize("n", range(1, 5))
def test_census_matches_python_rank(n):
    counts = [0, 0, 0]
    for bits in range(1 << (4 * n)):
        counts[rank_over_fraction_field(PolyMatrix(n, 2, bits))] += 1
    assert census_n_by_2(n) == tuple(counts)


def test_census_examples():
    assert census_n_by_2(1) == (1, 15, 0)
    assert census_n_by_2(2) == (1, 63, 192) == rank_dist_n_by_2_formula(2)
    assert census_n_by_2(3) == (1, 231, 3864) == rank_dist_n_by_2_formula(3)
    with pytest.raises(BudgetError):
        census_n_by_2(8)


def test_special_pairs():
    assert count_special_pairs(1, (T, T1)) == 1
    assert count_special_pairs(3, (ONE, T1)) == 7
    assert count_special_pairs(4, (T, ONE)) == 15
    with pytest.raises(ValueError):
        count_special_pairs(2, (T, T))


def test_special_pairs_by_full_scan():
    n = 3
    for couple in SPECIAL_COUPLES:
        hits = 0
        for bits in range(1 << (4 * n)):
            rows = PolyMatrix(n, 2, bits).rows()
            if bits and all(r in ((Z, Z), couple) for r in rows):
                hits += 1
        assert hits == count_special_pairs(n, couple) == 2**n - 1


def test_count_y_solutions_examples():
    single = PolyMatrix.from_entries([[T, T1]])
    for k in range(1, 7):
        assert count_Y_solutions_fixed_U(single, k) == 2 ** (k - 1)
    for q in (1, 2, 3):
        for k in (1, 3):
            assert count_Y_solutions_fixed_U(PolyMatrix.zeros(2, q), k) == 2 ** (k * q)
    u = PolyMatrix.from_entries([[ONE, Z]])
    assert count_Y_solutions_fixed_U(u, 3) == 8 == y_solutions_literal(u, 3)


def test_count_y_solutions_matches_literal():
    for q in (1, 2):
        for bits in range(0, 1 << (4 * q), 3):
            u = PolyMatrix(2, q, bits)
            for k in (1, 2, 3):
                assert count_Y_solutions_fixed_U(u, k) == y_solutions_literal(u, k)


def test_constraint_matrix_shape():
    m = constraint_matrix(PolyMatrix.zeros(3, 2), 4)
    assert (m.nrows, m.ncols) == (15, 8)
    with pytest.raises(BudgetError):
        constraint_matrix(PolyMatrix.zeros(1, 3), 21)


def test_count_rq_examples():
    assert count_Rq(1, 1, 1) == 5
    assert count_Rq(2, 3, 2) == 688 == r2_formula(2, 3)
    assert count_Rq(2, 1, 2, method="y") == 304


@pytest.mark.parametrize("n,k,q", [(n, k, q) for n in (1, 2) for k in (1, 2, 3) for q in (1, 2, 3)
                                   if 2 * n * q <= 12])
def test_u_scan_y_scan_and_literal_agree(n, k, q):
    lit = count_Rq_literal(n, k, q)
    assert count_Rq(n, k, q, method="u") == lit
    assert count_Rq(n, k, q, method="y") == lit


def test_u_and_y_scans_agree_larger():
    for n, k, q in [(3, 4, 2), (3, 2, 3), (4, 5, 2), (2, 6, 3)]:
        assert count_Rq(n, k, q, method="u") == count_Rq(n, k, q, method="y")


def test_count_rq_budget():
    with pytest.raises(BudgetError):
        count_Rq(5, 2, 3, method="u")


@pytest.mark.parametrize("n,k", [(1, 1), (2, 2), (2, 4), (3, 3)])
def test_r2_decomposition(n, k):
    parts = decompose_r2(n, k)
    for name, value in r2_terms(n, k).items():
        assert parts.get(name, (0, 0))[1] == value, name
    assert parts["zero"][0] == 1
    assert parts["special-couples"][0] == 6 * (2**n - 1)
    assert parts.get("rank-two", (0, 0)) == (rank_dist_n_by_2_formula(n)[2],) * 2
