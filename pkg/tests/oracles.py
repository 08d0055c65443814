"""Independent reference computations used only by the tests.

Nothing here imports the package: these are the slow, obvious versions that
the library is checked against.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations
from math import factorial, prod


def gbinom(n: int, k: int) -> int:
    """Falling factorial over k!, zero for negative k."""
    if k < 0:
        return 0
    return prod(n - j for j in range(k)) // factorial(k)


def left_direct(n: int, l: int) -> int:
    return sum(gbinom(n - i, i) * gbinom(l + i, 2 * i + 1) for i in range(l + 1))


def right_direct(n: int, l: int) -> int:
    return sum(gbinom(n - i, i - 1) * gbinom(l + i, 2 * i) for i in range(l + 1))


def poly_mul_dict(a: list[int], b: list[int]) -> list[int]:
    """Schoolbook product via a degree->coefficient dict, stripped."""
    acc: dict[int, int] = {}
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            acc[i + j] = acc.get(i + j, 0) + x * y
    return strip([acc.get(d, 0) for d in range(max(acc, default=-1) + 1)])


def poly_add_dict(a: list[int], b: list[int], sign: int = 1) -> list[int]:
    size = max(len(a), len(b))
    return strip([(a[d] if d < len(a) else 0) + sign * (b[d] if d < len(b) else 0) for d in range(size)])


def strip(c: list[int]) -> list[int]:
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return c


def k_recurrence(n: int) -> list[int]:
    """Coefficient list of K_n by the three-term recurrence on plain lists."""
    prev, cur = [], [1]
    for _ in range(n):
        prev, cur = cur, poly_add_dict([0] + cur, prev, -1)
    return cur if n >= 0 else []


def det_leibniz(m: list[list[int]]) -> int:
    """Determinant by summing over all permutations (tiny matrices only)."""
    size = len(m)
    total = 0
    for perm in permutations(range(size)):
        inversions = sum(1 for i in range(size) for j in range(i + 1, size) if perm[i] > perm[j])
        total += (-1) ** inversions * prod(m[i][perm[i]] for i in range(size))
    return total


def det_fraction(m: list[list[int]]) -> int:
    """Determinant by plain Gaussian elimination over Fractions with pivoting."""
    a = [[Fraction(v) for v in row] for row in m]
    size, det = len(a), Fraction(1)
    for c in range(size):
        p = next((r for r in range(c, size) if a[r][c] != 0), None)
        if p is None:
            return 0
        if p != c:
            a[c], a[p] = a[p], a[c]
            det = -det
        det *= a[c][c]
        for r in range(c + 1, size):
            f = a[r][c] / a[c][c]
            for j in range(c, size):
                a[r][j] -= f * a[c][j]
    assert det.denominator == 1
    return det.numerator
