from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from simplicial_transfer.rationals import (
    UniPoly,
    bernoulli_number,
    bernoulli_polynomial,
    binomial,
    exp_series_ratio,
    factorial,
    parse_rational,
    rational_str,
)


def akiyama_tanigawa(n):
    """Independent oracle for B_0..B_n via the triangular scheme, adjusted to
    the B_1 = -1/2 convention (the scheme itself produces B_1 = +1/2)."""
    row = [Fraction(0)] * (n + 1)
    out = []
    for m in range(n + 1):
        row[m] = Fraction(1, m + 1)
        for j in range(m, 0, -1):
            row[j - 1] = j * (row[j - 1] - row[j])
        out.append(row[0])
    if n >= 1:
        out[1] = -out[1]
    return out


def test_factorial_values():
    assert factorial(0) == 1
    assert factorial(5) == 120
    assert factorial(10) == 3628800
    with pytest.raises(ValueError):
        factorial(-1)


def test_binomial_values():
    assert binomial(4, 2) == 6
    assert all(binomial(n, 0) == 1 for n in range(8))
    assert binomial(3, 5) == 0
    assert binomial(3, -1) == 0


def test_bernoulli_against_triangular_oracle():
    oracle = akiyama_tanigawa(16)
    for n in range(17):
        assert bernoulli_number(n) == oracle[n]


def test_bernoulli_small_values():
    assert bernoulli_number(0) == 1
    assert bernoulli_number(1) == Fraction(-1, 2)
    assert bernoulli_number(2) == Fraction(1, 6)
    assert bernoulli_number(3) == 0
    assert bernoulli_number(4) == Fraction(-1, 30)


def test_odd_bernoulli_vanish():
    for n in range(3, 16, 2):
        assert bernoulli_number(n) == 0


def test_bernoulli_polynomial_small():
    assert bernoulli_polynomial(0) == UniPoly((1,))
    assert bernoulli_polynomial(1) == UniPoly((Fraction(-1, 2), 1))
    assert bernoulli_polynomial(2) == UniPoly((Fraction(1, 6), -1, 1))


def test_bernoulli_polynomial_at_zero():
    for n in range(17):
        assert bernoulli_polynomial(n)(0) == bernoulli_number(n)


def test_exp_series_ratio_low_orders():
    series = exp_series_ratio(2)
    assert series[0] == UniPoly()
    assert series[1] == UniPoly((0, 1))
    assert series[2] == UniPoly((0, Fraction(-1, 2), Fraction(1, 2)))


def test_exp_series_ratio_matches_bernoulli():
    series = exp_series_ratio(8)
    for n in range(1, 9):
        closed = Fraction(1, factorial(n)) * (
            bernoulli_polynomial(n) - UniPoly((bernoulli_number(n),))
        )
        assert series[n] == closed


def test_unipoly_arithmetic():
    p = UniPoly((1, 2))
    q = UniPoly((0, 0, 3))
    assert p + q == UniPoly((1, 2, 3))
    assert p * q == UniPoly((0, 0, 3, 6))
    assert (p - p) == UniPoly()
    assert not UniPoly((0, 0))
    assert UniPoly((1, 1)).integral_01() == Fraction(3, 2)


def test_rational_round_trip():
    assert rational_str(Fraction(3, 2)) == "3/2"
    assert rational_str(Fraction(-7)) == "-7"
    assert parse_rational("3/2") == Fraction(3, 2)
    assert parse_rational("-7") == Fraction(-7)


@given(st.fractions(), st.fractions())
def test_rational_arithmetic_is_exact(a, c):
    assert (a + c) - c == a
