from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from persym.dyadic import Dyadic
from persym.errors import NonIntegralError

dyadics = st.builds(Dyadic, st.integers(-10**6, 10**6), st.integers(-40, 40))


def test_canonical_form():
    assert Dyadic(12, 0) == Dyadic(3, 2)
    assert (Dyadic(12).mantissa, Dyadic(12).exponent) == (3, 2)
    z = Dyadic(0, -7)
    assert (z.mantissa, z.exponent) == (0, 0)


@given(dyadics, dyadics)
def test_field_ops_match_fractions(a, b):
    fa, fb = a.to_fraction(), b.to_fraction()
    assert (a + b).to_fraction() == fa + fb
    assert (a - b).to_fraction() == fa - fb
    assert (a * b).to_fraction() == fa * fb
    assert (a < b) == (fa < fb)


@given(dyadics)
def test_canonical_invariant(a):
    assert a.mantissa % 2 == 1 or (a.mantissa == 0 and a.exponent == 0)


def test_exact_div():
    assert Dyadic(3, -2).exact_div(Dyadic(3, 1)) == Dyadic(1, -3)
    with pytest.raises(NonIntegralError):
        Dyadic(1).exact_div(3)


def test_integer_conversion():
    assert Dyadic(5, -1) + Dyadic(1, -1) == 3
    assert (Dyadic(5, -1) + Dyadic(1, -1)).to_int() == 3
    with pytest.raises(NonIntegralError):
        Dyadic(5, -1).to_int()
    assert Dyadic.coerce(Fraction(5, 2)) == Dyadic(5, -1)
