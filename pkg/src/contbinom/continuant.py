"""Continuant polynomials K_n, Chebyshev U_n and the 2x2 matrices behind them.

``K_n(X)`` is the determinant of the n x n tridiagonal matrix with ``X`` on
the diagonal and 1 on both off-diagonals, with ``K_{-1} = 0`` and
``K_0 = 1``.  It can be produced four independent ways, selected by
:class:`ContinuantStrategy`:

* ``recurrence``: ``K_n = X K_{n-1} - K_{n-2}``;
* ``matrix_power``: the top-left entry of ``[[X, -1], [1, 0]]^n``;
* ``closed_form``: ``sum_k (-1)^k C(n-k, k) X^(n-2k)``;
* ``determinant_oracle``: exact elimination of the tridiagonal matrix at
  ``n + 1`` integer points, then interpolation.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import factorial
from typing import Any, Callable, Sequence

from .binomial import binom
from .poly import IntPoly, poly_const, poly_scale_var, poly_x, poly_zero


class ContinuantStrategy(str, enum.Enum):
    RECURRENCE = "recurrence"
    MATRIX_POWER = "matrix_power"
    CLOSED_FORM = "closed_form"
    DETERMINANT_ORACLE = "determinant_oracle"


class PowerStrategy(str, enum.Enum):
    REPEATED_MULTIPLY = "repeated_multiply"
    SQUARE_AND_MULTIPLY = "square_and_multiply"


@dataclass(frozen=True)
class Mat2:
    """2x2 matrix over any commutative ring whose elements support + - *.

    Used with :class:`IntPoly` entries for ``M_n(X)`` and with plain ints for
    ``M_n(a_1, ..., a_n)``.
    """

    a11: Any
    a12: Any
    a21: Any
    a22: Any

    def __matmul__(self, other: "Mat2") -> "Mat2":
        return Mat2(
            self.a11 * other.a11 + self.a12 * other.a21,
            self.a11 * other.a12 + self.a12 * other.a22,
            self.a21 * other.a11 + self.a22 * other.a21,
            self.a21 * other.a12 + self.a22 * other.a22,
        )

    def det(self) -> Any:
        return self.a11 * self.a22 - self.a12 * self.a21

    def map(self, f: Callable[[Any], Any]) -> "Mat2":
        return Mat2(f(self.a11), f(self.a12), f(self.a21), f(self.a22))

    def entries(self) -> tuple[Any, Any, Any, Any]:
        return (self.a11, self.a12, self.a21, self.a22)


def base_matrix() -> Mat2:
    """``[[X, -1], [1, 0]]`` over the polynomial ring."""
    return Mat2(poly_x(), poly_const(-1), poly_const(1), poly_zero())


def identity_matrix() -> Mat2:
    return Mat2(poly_const(1), poly_zero(), poly_zero(), poly_const(1))


def m_power(n: int, strategy: PowerStrategy | str = PowerStrategy.SQUARE_AND_MULTIPLY) -> Mat2:
    """``M_n(X) = [[X, -1], [1, 0]]^n`` for ``n >= 1``."""
    if n < 1:
        raise ValueError(f"m_power needs n >= 1, got {n}")
    strategy = PowerStrategy(strategy)
    base = base_matrix()
    if strategy is PowerStrategy.REPEATED_MULTIPLY:
        acc = base
        for _ in range(n - 1):
            acc = acc @ base
        return acc
    # most significant bit first
    acc = base
    for bit in bin(n)[3:]:
        acc = acc @ acc
        if bit == "1":
            acc = acc @ base
    return acc


def inverse_form(n: int) -> Mat2:
    """The explicit inverse of ``M_n(X)``: ``[[-K_{n-2}, K_{n-1}], [-K_{n-1}, K_n]]``.

    Lets callers stay in Z[X] instead of inverting; ``m_power(n) @ inverse_form(n)``
    is the identity.
    """
    if n < 1:
        raise ValueError(f"inverse_form needs n >= 1, got {n}")
    ks = k_sequence(n)  # ks[i + 1] is K_i
    k_n, k_n1, k_n2 = ks[n + 1], ks[n], ks[n - 1]
    return Mat2(-k_n2, k_n1, -k_n1, k_n)


def k_sequence(n_max: int) -> list[IntPoly]:
    """``[K_{-1}, K_0, ..., K_{n_max}]`` by the three-term recurrence."""
    if n_max < -1:
        raise ValueError(f"continuant index must be >= -1, got {n_max}")
    x = poly_x()
    seq = [poly_zero(), poly_const(1)]
    for _ in range(n_max):
        seq.append(x * seq[-1] - seq[-2])
    return seq[: n_max + 2]


def _k_closed_form(n: int) -> IntPoly:
    coeffs = [0] * (n + 1)
    for k in range(n // 2 + 1):
        coeffs[n - 2 * k] = (-1) ** k * binom(n - k, k)
    return IntPoly(tuple(coeffs))


def k_poly(n: int, strategy: ContinuantStrategy | str = ContinuantStrategy.RECURRENCE) -> IntPoly:
    """The continuant polynomial ``K_n(X)`` for ``n >= -1``."""
    if n < -1:
        raise ValueError(f"continuant index must be >= -1, got {n}")
    strategy = ContinuantStrategy(strategy)
    if n == -1:
        return poly_zero()
    if n == 0:
        return poly_const(1)
    if strategy is ContinuantStrategy.RECURRENCE:
        return k_sequence(n)[-1]
    if strategy is ContinuantStrategy.MATRIX_POWER:
        return m_power(n).a11
    if strategy is ContinuantStrategy.CLOSED_FORM:
        return _k_closed_form(n)
    return _k_by_determinant(n)


# --- generic exact determinant (independent of the recurrence) -------------


def det_exact(matrix: Sequence[Sequence[int]]) -> int:
    """Determinant of a square integer matrix by fraction-free elimination.

    Eliminating row ``r`` against pivot row ``c`` replaces it with
    ``p * row_r - f * row_c``; that scales the determinant by ``p``, which is
    divided back out exactly at the end.  Rows already zero in the pivot
    column are left alone, so sparse (e.g. tridiagonal) input stays cheap.
    """
    size = len(matrix)
    a = [[int(v) for v in row] for row in matrix]
    if any(len(row) != size for row in a):
        raise ValueError("matrix must be square")
    numerator, denominator = 1, 1
    for col in range(size):
        pivot_row = next((r for r in range(col, size) if a[r][col]), None)
        if pivot_row is None:
            return 0
        if pivot_row != col:
            a[col], a[pivot_row] = a[pivot_row], a[col]
            numerator = -numerator
        top = a[col]
        pivot = top[col]
        numerator *= pivot
        for r in range(col + 1, size):
            f = a[r][col]
            if not f:
                continue
            row = a[r]
            for j in range(col + 1, size):
                row[j] = pivot * row[j] - f * top[j]
            row[col] = 0
            denominator *= pivot
    q, rem = divmod(numerator, denominator)
    if rem:
        raise ArithmeticError("fraction-free elimination left a remainder")
    return q


def tridiagonal(diagonal: Sequence[int]) -> list[list[int]]:
    size = len(diagonal)
    m = [[0] * size for _ in range(size)]
    for i, d in enumerate(diagonal):
        m[i][i] = d
        if i + 1 < size:
            m[i][i + 1] = 1
            m[i + 1][i] = 1
    return m


def interpolate(values: Sequence[int]) -> IntPoly:
    """The polynomial of degree < len(values) taking ``values[j]`` at ``x = j``.

    Newton forward differences in integers, expanded over the falling
    factorials ``x(x-1)...(x-j+1)`` with the common denominator ``m!``
    divided out exactly at the end.
    """
    m = len(values) - 1
    if m < 0:
        return poly_zero()
    diffs = list(values)
    newton = []
    for _ in range(m + 1):
        newton.append(diffs[0])
        diffs = [diffs[i + 1] - diffs[i] for i in range(len(diffs) - 1)]
    total = [0] * (m + 1)
    falling = [1]  # coefficients of x(x-1)...(x-j+1)
    scale = factorial(m)  # m! / j!
    for j, delta in enumerate(newton):
        w = delta * scale
        for d, c in enumerate(falling):
            total[d] += w * c
        falling = [0] + falling
        for d in range(len(falling) - 1):
            falling[d] -= j * falling[d + 1]
        if j < m:
            scale //= j + 1
    den = factorial(m)
    out = []
    for c in total:
        q, rem = divmod(c, den)
        if rem:
            raise ArithmeticError("interpolated polynomial is not integral")
        out.append(q)
    return IntPoly(tuple(out))


def _k_by_determinant(n: int) -> IntPoly:
    samples = [det_exact(tridiagonal([x] * n)) for x in range(n + 1)]
    return interpolate(samples)


# --- general continuants with integer entries -------------------------------


def _continuant_recurrence(a: Sequence[int]) -> int:
    prev, cur = 0, 1
    for value in a:
        prev, cur = cur, value * cur - prev
    return cur


def continuant_general(a: Sequence[int], cross_check: bool = True) -> int:
    """``K_n(a_1, ..., a_n)``: the tridiagonal determinant with diagonal ``a``.

    Computed by cofactor expansion along the first column (a three-term
    recurrence); with ``cross_check`` the generic determinant is computed too
    and a disagreement raises.
    """
    value = _continuant_recurrence(a)
    if cross_check and a:
        oracle = det_exact(tridiagonal(a))
        if oracle != value:
            raise ArithmeticError(f"continuant mismatch on {list(a)}: {value} != {oracle}")
    return value


def m_general(a: Sequence[int]) -> Mat2:
    """``[[a_n, -1], [1, 0]] ... [[a_1, -1], [1, 0]]`` as an integer matrix.

    The result is ``[[K_n(a_1..a_n), -K_{n-1}(a_2..a_n)],
    [K_{n-1}(a_1..a_{n-1}), -K_{n-2}(a_2..a_{n-1})]]``.
    """
    if not a:
        raise ValueError("m_general needs a nonempty sequence")
    acc = Mat2(1, 0, 0, 1)
    for value in a:
        acc = Mat2(value, -1, 1, 0) @ acc
    return acc


# --- Chebyshev polynomials of the second kind -------------------------------


def chebyshev_u(n: int) -> IntPoly:
    """``U_n`` from ``U_0 = 1``, ``U_1 = 2X``, ``U_{n+2} = 2X U_{n+1} - U_n``."""
    if n < 0:
        raise ValueError(f"chebyshev_u needs n >= 0, got {n}")
    two_x = IntPoly((0, 2))
    prev, cur = poly_const(1), two_x
    if n == 0:
        return prev
    for _ in range(n - 1):
        prev, cur = cur, two_x * cur - prev
    return cur


def k_at_double(n: int) -> IntPoly:
    """``K_n(2X)``."""
    return poly_scale_var(k_poly(n), 2)
