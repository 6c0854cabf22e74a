"""Inductive valuations, Newton polygons and p-adic factorization over Q.

Polynomials are passed as strings such as ``"x^3-x^2-2*x-8"``; rational results come back as
``fractions.Fraction`` and infinite values as ``math.inf``.
"""

from ._maclane import (
    FactorReport,
    InputError,
    MathError,
    Valuation,
    factor,
    factor_json,
    is_key_poly,
    newton_polygon,
    okutsu_equiv,
    residual_polynomial,
    verify,
    vp,
)

__all__ = [
    "FactorReport",
    "InputError",
    "MathError",
    "Valuation",
    "factor",
    "factor_json",
    "is_key_poly",
    "newton_polygon",
    "okutsu_equiv",
    "residual_polynomial",
    "verify",
    "vp",
]
