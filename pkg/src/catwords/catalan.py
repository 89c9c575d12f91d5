"""The Catalan number series and its defining identity."""

from __future__ import annotations

from .polyring import Polynomial, Series, series_mul

__all__ = [
    "catalan_numbers",
    "catalan_polynomial",
    "catalan_series",
    "check_functional_equation",
    "functional_equation_holds",
]


def catalan_numbers(order: int) -> list[int]:
    """Catalan numbers C_0..C_order via C_{n+1} = C_n * 2(2n+1) / (n+2).

    The division is exact at every step, so the whole computation stays in
    integers.
    """
    if order < 0:
        raise ValueError(f"order must be >= 0, got {order}")
    values = [1]
    for n in range(order):
        quotient, remainder = divmod(values[-1] * 2 * (2 * n + 1), n + 2)
        assert remainder == 0
        values.append(quotient)
    return values


def catalan_series(order: int) -> Series:
    """The series whose z^n coefficient is the n-th Catalan number."""
    return Series([Polynomial.constant(c) for c in catalan_numbers(order)])


def catalan_polynomial(order: int) -> Polynomial:
    """The truncated Catalan series as a polynomial in z (used as a tail value)."""
    return catalan_series(order).as_polynomial()


def functional_equation_holds(series: Series) -> bool:
    """Whether 1 + z * S(z)^2 == S(z) exactly through the order of S."""
    lhs = series_mul(series, series).shift(1) + 1
    return lhs == series


def check_functional_equation(order: int) -> bool:
    """Whether the Catalan series satisfies its defining identity through ``order``."""
    if order < 1:
        raise ValueError(f"order must be >= 1, got {order}")
    return functional_equation_holds(catalan_series(order))
