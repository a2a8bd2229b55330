"""Rank distributions of n-times persymmetric matrices over GF(2)."""

from .dyadic import Dyadic
from .errors import (BudgetError, DegreeOverflowError, InconsistentSystemError,
                     NegativeCountError, NonIntegralError, PersymError, UnderdeterminedError,
                     UnsupportedShapeError, WidthError)
from .formulas import (FormulaResult, NotCovered, gamma_closed, gamma_fixture_small,
                       moment_rhs, r1_formula, r2_formula, rank_dist_n_by_2_formula,
                       rq_from_distribution, total_count)
from .gf2 import BitMatrix, GF2Poly, det2, kernel_count, poly_mul, rank
from .moments import MomentSystem, fit_ansatz_coefficients, solve_moments
from .persymmetric import (RankDistribution, Seed, build_matrix, enumerate_distribution,
                           rank_of_seed)
from .polysys import (PolyMatrix, census_n_by_2, count_Rq, count_special_pairs,
                      count_Y_solutions_fixed_U, rank_over_fraction_field)
from .charsum import LaurentTail, char_E_of_product, f_k_eval

__version__ = "0.1.0"

__all__ = [
    "BitMatrix",
    "BudgetError",
    "build_matrix",
    "census_n_by_2",
    "char_E_of_product",
    "count_Rq",
    "count_special_pairs",
    "count_Y_solutions_fixed_U",
    "DegreeOverflowError",
    "det2",
    "Dyadic",
    "enumerate_distribution",
    "f_k_eval",
    "fit_ansatz_coefficients",
    "FormulaResult",
    "gamma_closed",
    "gamma_fixture_small",
    "GF2Poly",
    "InconsistentSystemError",
    "kernel_count",
    "LaurentTail",
    "moment_rhs",
    "MomentSystem",
    "NegativeCountError",
    "NonIntegralError",
    "NotCovered",
    "PersymError",
    "poly_mul",
    "PolyMatrix",
    "r1_formula",
    "r2_formula",
    "rank",
    "rank_dist_n_by_2_formula",
    "rank_of_seed",
    "rank_over_fraction_field",
    "RankDistribution",
    "rq_from_distribution",
    "Seed",
    "solve_moments",
    "total_count",
    "UnderdeterminedError",
    "UnsupportedShapeError",
    "WidthError",
]
