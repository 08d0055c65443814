import pytest
from hypothesis import given
from hypothesis import strategies as st

from contbinom.binomial import binom, binom_oracle, negative_pascal_holds, pascal_holds

from .oracles import gbinom


def test_classical():
    assert binom(5, 2) == 10
    assert binom(0, 0) == 1
    assert binom(60, 30) == 118264581564861424


def test_zero_conventions():
    assert binom(3, -1) == 0
    assert binom(2, 5) == 0
    assert binom(-4, -2) == 0


def test_minus_one_alternates():
    expected = [gbinom(-1, n) for n in range(7)]
    assert expected == [1, -1, 1, -1, 1, -1, 1]
    assert [binom(-1, n) for n in range(7)] == expected


def test_negative_upper():
    assert gbinom(-2, 1) == -2
    assert binom(-2, 1) == -2
    assert binom(-3, 2) == gbinom(-3, 2) == 6


def test_oracle_examples():
    assert binom_oracle(7, 3) == 35
    assert binom_oracle(-3, 2) == 6
    assert binom_oracle(0, 0) == 1
    with pytest.raises(ValueError):
        binom_oracle(3, -1)


@pytest.mark.parametrize("n", range(-60, 61, 7))
def test_oracle_agreement_rows(n):
    assert all(binom(n, k) == binom_oracle(n, k) == gbinom(n, k) for k in range(121))


def test_negative_pascal_examples():
    assert negative_pascal_holds(-1, 1)
    assert binom_oracle(-4, 3) == binom_oracle(-3, 3) - binom_oracle(-4, 2)
    assert negative_pascal_holds(-4, 3)


def test_negative_pascal_sweep():
    assert all(negative_pascal_holds(n, i) for n in range(-50, 0) for i in range(1, 101))


@pytest.mark.parametrize("n, i", [(0, 1), (-1, 0), (3, 2)])
def test_negative_pascal_domain(n, i):
    with pytest.raises(ValueError):
        negative_pascal_holds(n, i)


def test_classical_pascal():
    assert all(pascal_holds(n, k) for n in range(1, 61) for k in range(1, n + 1))
    # extends down to 0 choose 0 = (-1 choose 0) + (-1 choose -1)
    assert binom(0, 0) == binom(-1, 0) + binom(-1, -1)
    assert all(pascal_holds(n, k) for n in range(0, 61) for k in range(0, n + 1))


@given(st.integers(-200, -1), st.integers(0, 200))
def test_sign_law(n, k):
    value = binom(n, k)
    assert value != 0
    assert (value > 0) == (k % 2 == 0)


@given(st.integers(-300, 300), st.integers(-5, 150))
def test_matches_falling_factorial(n, k):
    assert binom(n, k) == gbinom(n, k)
