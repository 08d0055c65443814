"""The two binomial sums, the lemma ladder behind their equality, and checks.

For non-negative ``n`` and ``l``::

    left(n, l)  = sum_{i=0}^{l} C(n-i, i)   C(l+i, 2i+1)
    right(n, l) = sum_{i=0}^{l} C(n-i, i-1) C(l+i, 2i)

are equal, with ``C`` the all-integers binomial of :mod:`contbinom.binomial`
(negative upper indices show up as soon as ``l > n``).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator

from .binomial import binom
from .continuant import k_sequence
from .poly import IntPoly

DEFAULT_SUBSET_CAP = 4096


def left_term(n: int, l: int, i: int) -> int:
    return binom(n - i, i) * binom(l + i, 2 * i + 1)


def right_term(n: int, l: int, i: int) -> int:
    return binom(n - i, i - 1) * binom(l + i, 2 * i)


def signed_term(n: int, l: int, i: int) -> int:
    """``right_term - left_term``, the summand of the boundary and tail sums."""
    return right_term(n, l, i) - left_term(n, l, i)


def _check_nonneg(n: int, l: int) -> None:
    if n < 0 or l < 0:
        raise ValueError(f"n and l must be non-negative, got n={n}, l={l}")


def left_sum(n: int, l: int) -> int:
    _check_nonneg(n, l)
    return sum(left_term(n, l, i) for i in range(l + 1))


def right_sum(n: int, l: int) -> int:
    _check_nonneg(n, l)
    return sum(right_term(n, l, i) for i in range(l + 1))


@dataclass(frozen=True)
class IdentityReport:
    n: int
    l: int
    left: int
    right: int

    @property
    def equal(self) -> bool:
        return self.left == self.right

    def as_dict(self) -> dict:
        return {"n": self.n, "l": self.l, "left": self.left, "right": self.right, "equal": self.equal}


def identity_report(n: int, l: int) -> IdentityReport:
    return IdentityReport(n, l, left_sum(n, l), right_sum(n, l))


def common_value(n: int, l: int) -> int:
    """The shared value of both sums; raises if they ever disagree."""
    report = identity_report(n, l)
    if not report.equal:
        raise ArithmeticError(f"sums differ at n={n}, l={l}: {report.left} != {report.right}")
    return report.left


# --- boundary sum for l > n -------------------------------------------------


def boundary_sum(n: int, l: int) -> int:
    return sum(signed_term(n, l, i) for i in range(n + 1))


def lemma23_check(n: int, l: int) -> bool:
    """For ``l > n >= 0``: the first ``n + 1`` signed terms add to ``(-1)^(n+1) C(l, n+1)``."""
    if not 0 <= n < l:
        raise ValueError(f"needs 0 <= n < l, got n={n}, l={l}")
    return boundary_sum(n, l) == (-1) ** (n + 1) * binom(l, n + 1)


# --- the u / v sequences ----------------------------------------------------


def u_kn(k: int, n: int) -> int:
    """``(-1)^n C(n+k, n+1)``."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    value = binom(n + k, n + 1)
    return -value if n & 1 else value


def _v_terms(k: int, n: int, start: int) -> int:
    l = n + k
    return sum(signed_term(n, l, i) for i in range(start, n + k + 1))


def v_kn(k: int, n: int) -> int:
    """Tail sum ``sum_{i=n+1}^{n+k} [C(n-i, i-1) C(n+k+i, 2i) - C(n-i, i) C(n+k+i, 2i+1)]``.

    Summed over the literal range; the terms with ``i < 0`` must vanish, which
    is asserted against the range clipped at zero.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    literal = _v_terms(k, n, n + 1)
    clipped = _v_terms(k, n, max(0, n + 1))
    assert literal == clipped, (k, n, literal, clipped)
    return literal


class UVLemma(str, enum.Enum):
    LEMMA25 = "lemma25"  # v(k+1, n+1) = v(k, n+1) - v(k+1, n),   n >= 0
    LEMMA26 = "lemma26"  # v(k+1, 0)   = 1 + v(k, 0) - v(k+1, -1)
    LEMMA27 = "lemma27"  # v(k+1, n)   = v(k, n) - v(k+1, n-1),   n <= -1


def uv_recurrence_check(kind: UVLemma | str, k: int, n: int = 0) -> bool:
    kind = UVLemma(kind)
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if kind is UVLemma.LEMMA25:
        if n < 0:
            raise ValueError(f"lemma25 needs n >= 0, got {n}")
        return v_kn(k + 1, n + 1) == v_kn(k, n + 1) - v_kn(k + 1, n)
    if kind is UVLemma.LEMMA26:
        if n != 0:
            raise ValueError(f"lemma26 is stated at n = 0 only, got {n}")
        return v_kn(k + 1, 0) == 1 + v_kn(k, 0) - v_kn(k + 1, -1)
    if n > -1:
        raise ValueError(f"lemma27 needs n <= -1, got {n}")
    return v_kn(k + 1, n) == v_kn(k, n) - v_kn(k + 1, n - 1)


def u_recurrence_check(k: int, n: int) -> bool:
    return u_kn(k + 1, n + 1) == u_kn(k, n + 1) - u_kn(k + 1, n)


def s_ab(n: int, k: int, a: int, b: int) -> int:
    """Partial signed sum over ``i = a..b`` at ``l = n + k``."""
    if n < 0 or k < 1:
        raise ValueError(f"needs n >= 0 and k >= 1, got n={n}, k={k}")
    if not 0 <= a <= b <= n + k:
        raise ValueError(f"needs 0 <= a <= b <= n+k, got a={a}, b={b}, n+k={n + k}")
    l = n + k
    return sum(signed_term(n, l, i) for i in range(a, b + 1))


# --- reading the sums off continuant products --------------------------------


@dataclass(frozen=True)
class ExtractionResult:
    n: int
    l: int
    coeff_a: int  # degree n+1 coefficient of K_n K_{2l-1}
    coeff_b: int  # degree n+1 coefficient of K_{n-1} K_{2l}
    left: int
    right: int
    # -K_n K_{2l-1} + K_{n-1} K_{2l} equals K_{n-2l-1} when 2l+1 <= n, else -K_{2l-n-1}
    product_identity: bool

    @property
    def ok(self) -> bool:
        sign = (-1) ** (self.l + 1)
        return (
            self.coeff_a == self.coeff_b
            and self.coeff_a == sign * self.left
            and self.coeff_a == sign * self.right
            and self.product_identity
        )


def coeff_extraction(n: int, l: int, ks: list[IntPoly] | None = None) -> ExtractionResult:
    """Compare degree ``n+1`` coefficients of ``K_n K_{2l-1}`` and ``K_{n-1} K_{2l}``.

    ``ks`` may be a precomputed ``k_sequence`` at least ``max(n, 2l)`` long.
    """
    if not 1 <= l <= n:
        raise ValueError(f"needs 1 <= l <= n, got n={n}, l={l}")
    top = max(n, 2 * l)
    if ks is None or len(ks) < top + 2:
        ks = k_sequence(top)

    def K(i: int) -> IntPoly:
        return ks[i + 1]

    prod_a = K(n) * K(2 * l - 1)
    prod_b = K(n - 1) * K(2 * l)
    combo = prod_b - prod_a
    if 2 * l + 1 <= n:
        identity = combo == K(n - 2 * l - 1)
    else:
        identity = combo == -K(2 * l - n - 1)
    return ExtractionResult(
        n, l, prod_a.coeff(n + 1), prod_b.coeff(n + 1), left_sum(n, l), right_sum(n, l), identity
    )


def coeff_extraction_check(n: int, l: int) -> bool:
    return coeff_extraction(n, l).ok


# --- subset sums -------------------------------------------------------------


@dataclass(frozen=True)
class SubsetRecord:
    subset: tuple[int, ...]
    u: int
    v: int


@dataclass(frozen=True)
class Collision:
    u_subset: tuple[int, ...]
    v_subset: tuple[int, ...]
    value: int


@dataclass
class SubsetAnalysis:
    n: int
    l: int
    records: list[SubsetRecord]
    collisions: list[Collision] = field(default_factory=list)

    @property
    def full_value(self) -> int:
        return self.records[-1].u

    @property
    def targets(self) -> list[int]:
        return sorted({c.value for c in self.collisions})

    def claim_holds(self) -> bool:
        """Does ``u_I = v_J`` for some ``J`` exactly when ``u_I`` is 0 or the full sum?"""
        v_values = {r.v for r in self.records}
        full = self.full_value
        return all((r.u in v_values) == (r.u == 0 or r.u == full) for r in self.records)


def iter_subsets(l: int) -> Iterator[tuple[int, ...]]:
    """Nonempty subsets of ``{0..l}``, by size then lexicographically."""
    indices = range(l + 1)
    for size in range(1, l + 2):
        yield from combinations(indices, size)


def subset_sums(n: int, l: int, cap: int = DEFAULT_SUBSET_CAP) -> SubsetAnalysis:
    _check_nonneg(n, l)
    if 2 ** (l + 1) > cap:
        raise ValueError(f"2^(l+1) = {2 ** (l + 1)} subsets exceeds cap {cap}")
    lt = [left_term(n, l, i) for i in range(l + 1)]
    rt = [right_term(n, l, i) for i in range(l + 1)]
    records = [
        SubsetRecord(s, sum(lt[i] for i in s), sum(rt[i] for i in s)) for s in iter_subsets(l)
    ]
    by_v: dict[int, list[tuple[int, ...]]] = {}
    for r in records:
        by_v.setdefault(r.v, []).append(r.subset)
    collisions = [
        Collision(r.subset, j, r.u) for r in records for j in by_v.get(r.u, ())
    ]
    return SubsetAnalysis(n, l, records, collisions)
