"""Brute-force ground truth: enumerate Catalan words and tally exact statistics.

A Catalan word a_1 ... a_n has a_1 = 1 and a_{i+1} <= a_i + 1.  Enumeration
runs an explicit lexicographic-successor loop (no recursion), so long words
are cheap and the strictly increasing yield order is part of the contract.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

from .polyring import Monomial, Polynomial, V, letter

CatalanWord = tuple[int, ...]

__all__ = [
    "CatalanWord",
    "Histogram",
    "UnderTracked",
    "bounded_count",
    "enumerate_words",
    "format_word",
    "is_catalan_word",
    "letter_histogram",
    "monomial_multiset",
]


class UnderTracked(ValueError):
    """monomial_multiset was given fewer variables than a word could use."""


def is_catalan_word(letters: Iterable[int]) -> bool:
    seq = tuple(letters)
    if not seq:
        return True
    if seq[0] != 1:
        return False
    return all(1 <= nxt <= prev + 1 for prev, nxt in zip(seq, seq[1:]))


def enumerate_words(n: int, max_letter: int | None = None) -> Iterator[tuple[int, ...]]:
    """Yield every Catalan word of length n exactly once, in lexicographic order.

    With ``max_letter`` set, words containing a larger letter are skipped.
    The word count is the n-th Catalan number when unbounded.
    """
    if n < 0:
        raise ValueError(f"length must be >= 0, got {n}")
    if max_letter is not None and max_letter < 1:
        raise ValueError(f"max_letter must be >= 1, got {max_letter}")
    if n == 0:
        yield ()
        return
    word = [1] * n
    while True:
        yield tuple(word)
        # Advance to the lexicographic successor: bump the rightmost letter
        # that may still grow, reset everything after it to 1.
        i = n - 1
        while i > 0:
            cap = word[i - 1] + 1
            if max_letter is not None and max_letter < cap:
                cap = max_letter
            if word[i] < cap:
                word[i] += 1
                for j in range(i + 1, n):
                    word[j] = 1
                break
            i -= 1
        else:
            return


def format_word(word: tuple[int, ...]) -> str:
    """Render a word: digits run together, '.'-separated once any letter has two digits."""
    if any(a >= 10 for a in word):
        return ".".join(str(a) for a in word)
    return "".join(str(a) for a in word)


@dataclass(frozen=True)
class Histogram:
    """How many length-n words contain the tracked letter exactly k times, per k."""

    letter: int
    length: int
    counts: Mapping[int, int]

    def total(self) -> int:
        return sum(self.counts.values())

    def as_polynomial(self) -> Polynomial:
        """The histogram encoded as a polynomial in V: sum of counts[k] * V^k."""
        terms = {}
        for k, count in self.counts.items():
            mono = Monomial({V: k}) if k else Monomial()
            terms[mono] = count
        return Polynomial(terms)

    def to_csv(self) -> str:
        lines = ["k,count"]
        lines.extend(f"{k},{self.counts[k]}" for k in sorted(self.counts))
        return "\n".join(lines) + "\n"


def letter_histogram(n: int, i: int) -> Histogram:
    """Occurrence histogram of letter i over all length-n words (streaming tally)."""
    if i < 1:
        raise ValueError(f"letter must be >= 1, got {i}")
    counts: dict[int, int] = {}
    for word in enumerate_words(n):
        k = word.count(i)
        counts[k] = counts.get(k, 0) + 1
    return Histogram(letter=i, length=n, counts=dict(sorted(counts.items())))


def monomial_multiset(n: int, num_vars: int) -> Polynomial:
    """Sum over length-n words of prod_j v_j^(occurrences of letter j).

    This is the exact value the symbolic pipeline must reproduce as the z^n
    coefficient of its multivariate expansion.  num_vars must be at least n
    so that no occurring letter escapes tracking.
    """
    if num_vars < n:
        raise UnderTracked(f"need at least {n} tracked variables, got {num_vars}")
    acc: dict[Monomial, int] = {}
    for word in enumerate_words(n):
        occurrences = Counter(word)
        mono = Monomial({letter(j): count for j, count in occurrences.items()})
        acc[mono] = acc.get(mono, 0) + 1
    return Polynomial(acc)


def bounded_count(n: int, h: int) -> int:
    """Number of length-n Catalan words whose letters never exceed h."""
    if h < 1:
        raise ValueError(f"max letter must be >= 1, got {h}")
    return sum(1 for _ in enumerate_words(n, max_letter=h))
