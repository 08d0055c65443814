"""Exact continuant polynomials, all-integer binomials and a curious binomial-sum identity."""

from .binomial import binom, binom_oracle, negative_pascal_holds
from .continuant import (
    ContinuantStrategy,
    Mat2,
    PowerStrategy,
    chebyshev_u,
    continuant_general,
    k_poly,
    m_general,
    m_power,
)
from .identity import (
    IdentityReport,
    SubsetRecord,
    coeff_extraction_check,
    identity_report,
    left_sum,
    lemma23_check,
    right_sum,
    s_ab,
    subset_sums,
    u_kn,
    uv_recurrence_check,
    v_kn,
)
from .poly import NEG_INF, IntPoly, poly_add, poly_coeff, poly_const, poly_degree, poly_mul, poly_sub, poly_x, poly_zero

__all__ = [
    "NEG_INF",
    "ContinuantStrategy",
    "IdentityReport",
    "IntPoly",
    "Mat2",
    "PowerStrategy",
    "SubsetRecord",
    "binom",
    "binom_oracle",
    "chebyshev_u",
    "coeff_extraction_check",
    "continuant_general",
    "identity_report",
    "k_poly",
    "left_sum",
    "lemma23_check",
    "m_general",
    "m_power",
    "negative_pascal_holds",
    "poly_add",
    "poly_coeff",
    "poly_const",
    "poly_degree",
    "poly_mul",
    "poly_sub",
    "poly_x",
    "poly_zero",
    "right_sum",
    "s_ab",
    "subset_sums",
    "u_kn",
    "uv_recurrence_check",
    "v_kn",
]
