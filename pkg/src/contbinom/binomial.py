"""Binomial coefficients on all of Z x Z.

Convention:

* ``binom(n, k) = 0`` for ``k < 0``;
* ``binom(n, k) = (-1)^k * binom(k - n - 1, k)`` for ``n < 0 <= k``;
* ``binom(n, k) = 0`` for ``0 <= n < k``;
* the usual ``n! / (k! (n-k)!)`` otherwise.

With this convention the falling-factorial formula
``n (n-1) ... (n-k+1) / k!`` holds for every integer ``n`` and ``k >= 0``.
"""

from __future__ import annotations

from functools import lru_cache
from math import factorial


@lru_cache(maxsize=1 << 16)
def _classical(n: int, k: int) -> int:
    # 0 <= k <= n
    k = min(k, n - k)
    acc = 1
    for j in range(1, k + 1):
        acc = acc * (n - j + 1) // j
    return acc


def binom(n: int, k: int) -> int:
    if k < 0:
        return 0
    if n < 0:
        # k - n - 1 >= k >= 0, so this always lands in the classical branch
        value = _classical(k - n - 1, k)
        return -value if k & 1 else value
    if k > n:
        return 0
    return _classical(n, k)


def binom_oracle(n: int, k: int) -> int:
    """Falling factorial ``n (n-1) ... (n-k+1)`` divided exactly by ``k!``."""
    if k < 0:
        raise ValueError(f"oracle needs k >= 0, got {k}")
    num = 1
    for j in range(k):
        num *= n - j
    den = factorial(k)
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"inexact division for binom({n}, {k}): remainder {r}")
    return q


def negative_pascal_holds(n: int, i: int) -> bool:
    """Check ``binom(n, i) == binom(n+1, i) - binom(n, i-1)`` for ``n < 0, i >= 1``."""
    if n >= 0 or i < 1:
        raise ValueError(f"negative Pascal rule needs n < 0 and i >= 1, got n={n}, i={i}")
    return binom(n, i) == binom(n + 1, i) - binom(n, i - 1)


def pascal_holds(n: int, k: int) -> bool:
    """Ordinary Pascal rule ``binom(n, k) == binom(n-1, k) + binom(n-1, k-1)``."""
    return binom(n, k) == binom(n - 1, k) + binom(n - 1, k - 1)
