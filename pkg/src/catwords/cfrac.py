"""Continued-fraction convergents and the generating functions they produce.

The fraction 1/(1 - a1/(1 - a2/(1 - ...))) is truncated at depth n by the
three-term recurrences

    h_i = h_{i-1} - a_i * h_{i-2},    k_i = k_{i-1} - a_i * k_{i-2}

with seeds h_{-1} = 0, h_0 = 1, k_{-1} = 1, k_0 = 1, giving the convergent
h_n / k_n.  With partial quotients a_i = z * v_i the expansion of h_n / k_n
counts Catalan words by length (powers of z) and by letter occurrences
(powers of v_i).  What happens beyond the truncation depth is controlled by
a formal tail symbol C multiplied onto the final quotient: substituting
C -> 1 forbids letters larger than the depth, while substituting the Catalan
series for C leaves them unrestricted and unweighted.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .catalan import catalan_polynomial
from .polyring import (
    C,
    Polynomial,
    PolynomialLike,
    Series,
    V,
    Z,
    letter,
    series_div,
    series_from_poly,
)

__all__ = [
    "Convergent",
    "InsufficientQuotients",
    "LetterGF",
    "PartialQuotient",
    "TAIL_CATALAN",
    "TAIL_ONE",
    "bounded_letter_series",
    "convergent",
    "expand_ratio",
    "generic_quotients",
    "gf_full",
    "letter_gf_series",
    "rational_form",
    "tail_convergent",
    "uniform_quotients",
    "unweighted_series",
]

TAIL_ONE = "one"
TAIL_CATALAN = "catalan"

_Z = Polynomial.var(Z)
_V = Polynomial.var(V)
_C = Polynomial.var(C)
_ONE = Polynomial.one()


class InsufficientQuotients(ValueError):
    """Fewer partial quotients were supplied than the requested depth."""


@dataclass(frozen=True)
class PartialQuotient:
    """Numerator a_i at depth i of the continued fraction."""

    index: int
    value: Polynomial

    def __post_init__(self) -> None:
        if self.index < 1:
            raise ValueError(f"quotient index must be >= 1, got {self.index}")


@dataclass(frozen=True)
class Convergent:
    """The numerator/denominator pair (h, k) at a truncation depth.

    ``tail`` records how the final quotient was closed off: None for a plain
    truncation, "one" when it was multiplied by 1, "C" when it carries the
    formal tail symbol.
    """

    depth: int
    h: Polynomial
    k: Polynomial
    tail: str | None = None

    def __post_init__(self) -> None:
        if self.k.constant_term != 1:
            raise ValueError("convergent denominator must have constant term 1")


@dataclass(frozen=True)
class LetterGF:
    """Closed rational form over {z, V, C} tracking one letter's occurrences."""

    letter: int
    numerator: Polynomial
    denominator: Polynomial

    def __post_init__(self) -> None:
        if self.letter < 1:
            raise ValueError(f"letter must be >= 1, got {self.letter}")
        if self.denominator.constant_term != 1:
            raise ValueError("denominator must have constant term 1")

    def to_json_obj(self) -> dict:
        return {
            "letter": self.letter,
            "numerator": self.numerator.to_json_obj(),
            "denominator": self.denominator.to_json_obj(),
        }

    @classmethod
    def from_json_obj(cls, obj: dict) -> "LetterGF":
        return cls(
            letter=int(obj["letter"]),
            numerator=Polynomial.from_json_obj(obj["numerator"]),
            denominator=Polynomial.from_json_obj(obj["denominator"]),
        )


def generic_quotients(n: int) -> list[PartialQuotient]:
    """Partial quotients z*v_1, ..., z*v_n: every letter is tracked separately."""
    return [PartialQuotient(i, _Z * Polynomial.var(letter(i))) for i in range(1, n + 1)]


def uniform_quotients(n: int) -> list[PartialQuotient]:
    """Partial quotients z, ..., z: letters carry no weight."""
    return [PartialQuotient(i, _Z) for i in range(1, n + 1)]


def _quotient_values(depth: int, quotients: Sequence[PartialQuotient]) -> list[Polynomial]:
    if depth < 0:
        raise ValueError(f"depth must be >= 0, got {depth}")
    if len(quotients) < depth:
        raise InsufficientQuotients(f"need {depth} quotients, got {len(quotients)}")
    return [q.value for q in quotients[:depth]]


def _run_recurrences(values: Sequence[Polynomial]) -> tuple[Polynomial, Polynomial]:
    h_prev, h_cur = Polynomial.zero(), _ONE
    k_prev, k_cur = _ONE, _ONE
    for a in values:
        h_prev, h_cur = h_cur, h_cur - a * h_prev
        k_prev, k_cur = k_cur, k_cur - a * k_prev
    return h_cur, k_cur


def convergent(depth: int, quotients: Sequence[PartialQuotient]) -> Convergent:
    """The plain convergent h_depth / k_depth."""
    h, k = _run_recurrences(_quotient_values(depth, quotients))
    return Convergent(depth, h, k, tail=None)


def tail_convergent(
    depth: int, quotients: Sequence[PartialQuotient], tail_factor: PolynomialLike
) -> Convergent:
    """Convergent whose final quotient is multiplied by a tail factor.

    The factor must be 1 (identical to the plain convergent) or the formal
    symbol C (to be eliminated later by substitution).
    """
    if depth < 1:
        raise ValueError("a tail requires depth >= 1")
    if tail_factor == _ONE:
        tag = "one"
    elif tail_factor == _C:
        tag = "C"
    else:
        raise ValueError("tail factor must be 1 or the symbol C")
    values = _quotient_values(depth, quotients)
    values[-1] = values[-1] * tail_factor
    h, k = _run_recurrences(values)
    return Convergent(depth, h, k, tail=tag)


def expand_ratio(numerator: Polynomial, denominator: Polynomial, order: int) -> Series:
    """Expand numerator / denominator as a series through the given order."""
    num = series_from_poly(numerator, order)
    den = series_from_poly(denominator, order)
    return series_div(num, den)


def _tail_substitution(tail_mode: str, order: int) -> dict:
    if tail_mode == TAIL_ONE:
        return {C: _ONE}
    if tail_mode == TAIL_CATALAN:
        return {C: catalan_polynomial(order)}
    raise ValueError(f"unknown tail mode: {tail_mode!r}")


def _expand_with_tail(conv: Convergent, tail_mode: str, order: int) -> Series:
    sub = _tail_substitution(tail_mode, order)
    return expand_ratio(conv.h.specialize(sub), conv.k.specialize(sub), order)


def gf_full(depth: int, tail_mode: str, order: int) -> Series:
    """Multivariate expansion of the depth-n convergent.

    The z^m coefficient is the sum, over Catalan words of length m (letters
    restricted to <= depth when tail_mode is "one"), of prod_j v_j^(number of
    occurrences of letter j).
    """
    if depth < 1:
        raise ValueError(f"depth must be >= 1, got {depth}")
    if order < 0:
        raise ValueError(f"order must be >= 0, got {order}")
    conv = tail_convergent(depth, generic_quotients(depth), _C)
    return _expand_with_tail(conv, tail_mode, order)


def unweighted_series(depth: int, tail_mode: str, order: int) -> Series:
    """Expansion of the depth-n convergent with every letter weight set to 1."""
    if depth < 1:
        raise ValueError(f"depth must be >= 1, got {depth}")
    if order < 0:
        raise ValueError(f"order must be >= 0, got {order}")
    conv = tail_convergent(depth, uniform_quotients(depth), _C)
    return _expand_with_tail(conv, tail_mode, order)


def rational_form(letter_index: int) -> LetterGF:
    """Closed rational form for one tracked letter.

    The convergent depth equals the letter: quotients below it are z, the
    final quotient is z*V, and the tail symbol C absorbs everything deeper.
    """
    if letter_index < 1:
        raise ValueError(f"letter must be >= 1, got {letter_index}")
    quotients = uniform_quotients(letter_index - 1)
    quotients.append(PartialQuotient(letter_index, _Z * _V))
    conv = tail_convergent(letter_index, quotients, _C)
    return LetterGF(letter_index, conv.h, conv.k)


def letter_gf_series(letter_index: int, order: int) -> Series:
    """Series whose z^n coefficient records, per power of V, how many length-n
    words contain the tracked letter exactly that many times."""
    if order < 0:
        raise ValueError(f"order must be >= 0, got {order}")
    form = rational_form(letter_index)
    sub = _tail_substitution(TAIL_CATALAN, order)
    return expand_ratio(
        form.numerator.specialize(sub), form.denominator.specialize(sub), order
    )


def bounded_letter_series(max_letter: int, order: int) -> Series:
    """Counting series for Catalan words whose letters never exceed max_letter."""
    if max_letter < 1:
        raise ValueError(f"max_letter must be >= 1, got {max_letter}")
    return unweighted_series(max_letter, TAIL_ONE, order)
