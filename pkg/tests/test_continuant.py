import pytest
from hypothesis import given
from hypothesis import strategies as st

from contbinom.continuant import (
    ContinuantStrategy,
    Mat2,
    base_matrix,
    chebyshev_u,
    continuant_general,
    det_exact,
    identity_matrix,
    interpolate,
    inverse_form,
    k_at_double,
    k_poly,
    k_sequence,
    m_general,
    m_power,
    tridiagonal,
)
from contbinom.poly import IntPoly, poly_const, poly_zero

from .oracles import det_fraction, det_leibniz, k_recurrence

STRATEGIES = list(ContinuantStrategy)


@pytest.mark.parametrize("strategy", STRATEGIES)
def test_base_cases(strategy):
    assert k_poly(0, strategy) == poly_const(1)
    assert k_poly(-1, strategy) == poly_zero()


@pytest.mark.parametrize("strategy", STRATEGIES)
def test_k3(strategy):
    assert k_recurrence(3) == [0, -2, 0, 1]
    assert list(k_poly(3, strategy).coeffs) == [0, -2, 0, 1]


def test_rejects_below_minus_one():
    with pytest.raises(ValueError):
        k_poly(-2)
    with pytest.raises(ValueError):
        m_power(0)
    with pytest.raises(ValueError):
        chebyshev_u(-1)
    with pytest.raises(ValueError):
        m_general([])


def test_matrix_power_matches_determinant_at_10():
    diag = tridiagonal([2] * 10)
    assert det_exact(diag) == det_fraction(diag) == k_poly(10)(2)
    assert k_poly(10, "matrix_power") == k_poly(10, "determinant_oracle")


@pytest.mark.parametrize("n", range(1, 65))
def test_four_strategies_agree(n):
    ref = IntPoly(tuple(k_recurrence(n)))
    for s in STRATEGIES:
        assert k_poly(n, s) == ref


def test_m_power_base_and_layout():
    assert m_power(1) == base_matrix()
    m5 = m_power(5)
    assert m5.a11 == k_poly(5)
    assert m5.a21 == k_poly(4)
    assert m5.a12 == -k_poly(4)
    assert m5.a22 == -k_poly(3)


@pytest.mark.parametrize("n", range(1, 65))
def test_power_strategies_and_det(n):
    sq = m_power(n, "square_and_multiply")
    assert sq == m_power(n, "repeated_multiply")
    assert sq.det() == poly_const(1)


def test_multiplicative():
    for a in range(1, 21):
        for b in range(1, 21):
            assert m_power(a + b) == m_power(a) @ m_power(b)


@pytest.mark.parametrize("n", [1, 2, 3, 9, 21])
def test_inverse_form(n):
    assert m_power(n) @ inverse_form(n) == identity_matrix()
    assert inverse_form(n) @ m_power(n) == identity_matrix()


def test_continuant_determinant_identity():
    ks = k_sequence(64)
    for n in range(1, 65):
        k_n, k_n1, k_n2 = ks[n + 1], ks[n], ks[n - 1]
        assert k_n1 * k_n1 - k_n * k_n2 == poly_const(1)


def test_parity_and_monic():
    for n in range(0, 65):
        p = k_poly(n)
        assert p.coeff(n) == 1
        assert all(c == 0 for d, c in enumerate(p.coeffs) if (n - d) % 2)


def test_general_small_cases():
    assert continuant_general([]) == 1
    assert continuant_general([7]) == 7
    assert continuant_general([-4]) == -4
    assert m_general([5]) == Mat2(5, -1, 1, 0)


def test_general_1_2_3_fixed_by_determinant():
    m = tridiagonal([1, 2, 3])
    assert m == [[1, 1, 0], [1, 2, 1], [0, 1, 3]]
    assert det_leibniz(m) == 2
    assert continuant_general([1, 2, 3]) == 2
    assert m_general([1, 2, 3]).a11 == 2


@given(st.lists(st.integers(-6, 6), min_size=1, max_size=6))
def test_m_general_entries_are_continuants(a):
    # [[K(a1..an), -K(a2..an)], [K(a1..a_{n-1}), -K(a2..a_{n-1})]]
    def det(seq):
        return det_leibniz(tridiagonal(seq)) if seq else 1

    m = m_general(a)
    assert m.a11 == det(a) == continuant_general(a)
    assert m.a12 == -det(a[1:])
    assert m.a21 == det(a[:-1])
    assert m.a22 == (-det(a[1:-1]) if len(a) >= 2 else 0)
    assert m.det() == 1


@pytest.mark.parametrize("x", range(-3, 4))
def test_specializations(x):
    for n in range(1, 13):
        assert continuant_general([x] * n) == k_poly(n)(x)
        assert m_general([x] * n) == m_power(n).map(lambda p: p(x))


@given(st.lists(st.lists(st.integers(-5, 5), min_size=5, max_size=5), min_size=5, max_size=5))
def test_det_exact_matches_leibniz(rows):
    assert det_exact(rows) == det_leibniz(rows)


@given(st.integers(1, 9).flatmap(lambda s: st.lists(st.lists(st.integers(-30, 30), min_size=s, max_size=s), min_size=s, max_size=s)))
def test_det_exact_matches_fraction_elimination(rows):
    assert det_exact(rows) == det_fraction(rows)


def test_det_exact_singular_and_swap():
    assert det_exact([[0, 1], [1, 0]]) == -1
    assert det_exact([[1, 2], [2, 4]]) == 0
    assert det_exact([]) == 1
    with pytest.raises(ValueError):
        det_exact([[1, 2]])


@given(st.lists(st.integers(-20, 20), max_size=10))
def test_interpolate_recovers_polynomial(coeffs):
    p = IntPoly(tuple(coeffs))
    size = max(len(p.coeffs), 1) + 2
    assert interpolate([p(x) for x in range(size)]) == p


def test_interpolate_rejects_non_integral():
    assert interpolate([0, 1, 0]).coeffs == (0, 2, -1)
    with pytest.raises(ArithmeticError):
        interpolate([0, 1, 1])  # (3x - x^2) / 2


def test_chebyshev_values():
    assert chebyshev_u(0).coeffs == (1,)
    assert chebyshev_u(1).coeffs == (0, 2)
    assert chebyshev_u(2).coeffs == (-1, 0, 4)


@pytest.mark.parametrize("n", range(0, 65))
def test_chebyshev_bridge(n):
    assert chebyshev_u(n) == k_at_double(n)
