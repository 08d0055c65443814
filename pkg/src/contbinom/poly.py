"""Dense univariate polynomials with exact integer coefficients.

A polynomial is stored as a tuple of Python ints in ascending degree order,
so ``(1, 0, -2)`` is ``1 - 2X^2``.  Trailing zeros are always stripped; the
zero polynomial is the empty tuple and has degree ``NEG_INF``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence, Union

# Degree of the zero polynomial. A float so that deg(p*q) = deg(p) + deg(q)
# still holds when a factor is zero, and so it never equals an int.
NEG_INF = float("-inf")

Degree = Union[int, float]


def _strip(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class IntPoly:
    coeffs: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", _strip(int(c) for c in self.coeffs))

    @property
    def degree(self) -> Degree:
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, d: int) -> int:
        return poly_coeff(self, d)

    def __call__(self, x):
        """Evaluate at ``x`` by Horner's rule (any ring element works)."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: "IntPoly | int") -> "IntPoly":
        other = _lift(other)
        return NotImplemented if other is None else poly_add(self, other)

    __radd__ = __add__

    def __sub__(self, other: "IntPoly | int") -> "IntPoly":
        other = _lift(other)
        return NotImplemented if other is None else poly_sub(self, other)

    def __rsub__(self, other: "IntPoly | int") -> "IntPoly":
        other = _lift(other)
        return NotImplemented if other is None else poly_sub(other, self)

    def __mul__(self, other: "IntPoly | int") -> "IntPoly":
        other = _lift(other)
        return NotImplemented if other is None else poly_mul(self, other)

    __rmul__ = __mul__

    def __neg__(self) -> "IntPoly":
        return IntPoly(tuple(-c for c in self.coeffs))

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for d in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[d]
            if c == 0:
                continue
            mag = abs(c)
            if d == 0:
                body = str(mag)
            else:
                mono = "X" if d == 1 else f"X^{d}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def _lift(value: object) -> IntPoly | None:
    if isinstance(value, IntPoly):
        return value
    if isinstance(value, int):
        return poly_const(value)
    return None


def poly_zero() -> IntPoly:
    return IntPoly(())


def poly_const(c: int) -> IntPoly:
    return IntPoly((c,))


def poly_x() -> IntPoly:
    return IntPoly((0, 1))


def poly_from(coeffs: Sequence[int]) -> IntPoly:
    return IntPoly(tuple(coeffs))


def poly_add(p: IntPoly, q: IntPoly) -> IntPoly:
    a, b = p.coeffs, q.coeffs
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return IntPoly(tuple(out))


def poly_sub(p: IntPoly, q: IntPoly) -> IntPoly:
    a, b = p.coeffs, q.coeffs
    out = list(a) + [0] * max(0, len(b) - len(a))
    for i, c in enumerate(b):
        out[i] -= c
    return IntPoly(tuple(out))


def poly_mul(p: IntPoly, q: IntPoly) -> IntPoly:
    a, b = p.coeffs, q.coeffs
    if not a or not b:
        return IntPoly(())
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            if y:
                out[i + j] += x * y
    return IntPoly(tuple(out))


def poly_coeff(p: IntPoly, d: int) -> int:
    if d < 0:
        raise ValueError(f"coefficient index must be >= 0, got {d}")
    return p.coeffs[d] if d < len(p.coeffs) else 0


def poly_degree(p: IntPoly) -> Degree:
    return p.degree


def poly_scale_var(p: IntPoly, c: int) -> IntPoly:
    """Substitute ``X -> c*X``."""
    out, power = [], 1
    for coeff in p.coeffs:
        out.append(coeff * power)
        power *= c
    return IntPoly(tuple(out))
