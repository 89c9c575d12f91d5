"""Command-line front end: expansions, closed forms, enumeration, verification.

Exit codes: 0 on success, 1 when verification fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from . import catalan, cfrac, oracle
from .polyring import Polynomial, Series

FORMATS = ("plain", "json", "csv")
DEFAULT_VERIFY_LETTERS = (1, 2, 3, 4, 5)

__all__ = [
    "Check",
    "VerifyReport",
    "build_parser",
    "main",
    "render_verify",
    "run_cfrac",
    "run_enumerate",
    "run_expand",
    "run_rational",
    "run_verify",
]


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {text}")
    return value


def _nonnegative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {text}")
    return value


def _json_text(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _csv_text(header: Sequence[str], rows: Iterable[Sequence]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def _render_series(series: Series, fmt: str) -> str:
    if fmt == "plain":
        return series.format_plain() + "\n"
    if fmt == "json":
        return _json_text(series.to_json_obj())
    if fmt == "csv":
        rows = [
            [n, series.coefficient(n).format_plain(ascending=True)]
            for n in range(series.order + 1)
        ]
        return _csv_text(["n", "coefficient"], rows)
    raise ValueError(f"unknown format: {fmt!r}")


def run_expand(letter_index: int, order: int, fmt: str = "plain") -> str:
    """Render the per-letter occurrence series."""
    return _render_series(cfrac.letter_gf_series(letter_index, order), fmt)


def run_cfrac(depth: int, tail: str, order: int, generic: bool, fmt: str = "plain") -> str:
    """Render the expansion of a convergent at the given depth."""
    if generic:
        series = cfrac.gf_full(depth, tail, order)
    else:
        series = cfrac.unweighted_series(depth, tail, order)
    return _render_series(series, fmt)


def run_rational(letter_index: int, fmt: str = "plain") -> str:
    """Render the closed rational form for one tracked letter."""
    form = cfrac.rational_form(letter_index)
    if fmt == "plain":
        return (
            f"numerator: {form.numerator.format_plain()}\n"
            f"denominator: {form.denominator.format_plain()}\n"
        )
    if fmt == "json":
        return _json_text(form.to_json_obj())
    if fmt == "csv":
        rows = [
            ["numerator", form.numerator.format_plain()],
            ["denominator", form.denominator.format_plain()],
        ]
        return _csv_text(["part", "polynomial"], rows)
    raise ValueError(f"unknown format: {fmt!r}")


def iter_enumerate(
    length: int,
    max_letter: int | None = None,
    histogram_letter: int | None = None,
    fmt: str = "plain",
) -> Iterator[str]:
    """Stream rendered output for the enumerate command, one chunk at a time."""
    if histogram_letter is not None:
        hist = oracle.letter_histogram(length, histogram_letter)
        if fmt == "plain":
            yield "".join(f"{k}: {hist.counts[k]}\n" for k in sorted(hist.counts))
        elif fmt == "json":
            yield _json_text(
                {
                    "letter": hist.letter,
                    "length": hist.length,
                    "counts": {str(k): hist.counts[k] for k in sorted(hist.counts)},
                }
            )
        elif fmt == "csv":
            yield hist.to_csv()
        else:
            raise ValueError(f"unknown format: {fmt!r}")
        return
    if fmt == "plain":
        for word in oracle.enumerate_words(length, max_letter):
            yield oracle.format_word(word) + "\n"
    elif fmt == "csv":
        yield "word\n"
        for word in oracle.enumerate_words(length, max_letter):
            yield oracle.format_word(word) + "\n"
    elif fmt == "json":
        words = [oracle.format_word(w) for w in oracle.enumerate_words(length, max_letter)]
        yield _json_text({"length": length, "max_letter": max_letter, "words": words})
    else:
        raise ValueError(f"unknown format: {fmt!r}")


def run_enumerate(
    length: int,
    max_letter: int | None = None,
    histogram_letter: int | None = None,
    fmt: str = "plain",
) -> str:
    return "".join(iter_enumerate(length, max_letter, histogram_letter, fmt))


@dataclass(frozen=True)
class Check:
    description: str
    status: str  # "pass" or "fail"
    expected: str
    actual: str


@dataclass(frozen=True)
class VerifyReport:
    checks: tuple[Check, ...]
    words_enumerated: int

    @property
    def passed(self) -> int:
        return sum(1 for c in self.checks if c.status == "pass")

    @property
    def failed(self) -> int:
        return len(self.checks) - self.passed

    @property
    def ok(self) -> bool:
        return self.failed == 0


def run_verify(max_length: int, letters: Sequence[int] | None = None) -> VerifyReport:
    """Cross-check the symbolic pipeline against brute-force enumeration.

    For every length n up to max_length: word count vs the Catalan number,
    the multivariate z^n coefficient vs the enumerated monomial multiset,
    per-letter histograms vs the letter series, and bounded counts vs the
    bounded series.  Then the determinant identity of the convergents is
    checked symbolically through depth min(max_length, 10).
    """
    if max_length < 1:
        raise ValueError(f"max_length must be >= 1, got {max_length}")
    tracked = sorted(set(letters)) if letters else list(DEFAULT_VERIFY_LETTERS)
    if any(i < 1 for i in tracked):
        raise ValueError("letters must all be >= 1")

    checks: list[Check] = []
    words_total = 0

    def add(description: str, expected, actual) -> None:
        status = "pass" if expected == actual else "fail"
        checks.append(Check(description, status, str(expected), str(actual)))

    cat = catalan.catalan_numbers(max_length)
    for n in range(1, max_length + 1):
        count = sum(1 for _ in oracle.enumerate_words(n))
        words_total += count
        add(f"n={n} word count", cat[n], count)

        multiset = oracle.monomial_multiset(n, n)
        full = cfrac.gf_full(n, cfrac.TAIL_CATALAN, n)
        add(f"n={n} multivariate coefficient", multiset, full.coefficient(n))

        for i in tracked:
            hist = oracle.letter_histogram(n, i)
            hist_text = "{" + ",".join(f"{k}:{v}" for k, v in sorted(hist.counts.items())) + "}"
            series = cfrac.letter_gf_series(i, n)
            add(f"n={n},i={i} histogram {hist_text}", hist.as_polynomial(), series.coefficient(n))

        for h in range(1, n + 1):
            bounded = oracle.bounded_count(n, h)
            series = cfrac.bounded_letter_series(h, n)
            add(f"n={n},h={h} bounded count", Polynomial.constant(bounded), series.coefficient(n))

    for depth in range(1, min(max_length, 10) + 1):
        quotients = cfrac.generic_quotients(depth)
        upper = cfrac.convergent(depth, quotients)
        lower = cfrac.convergent(depth - 1, quotients)
        determinant = upper.h * lower.k - lower.h * upper.k
        product = Polynomial.one()
        for quotient in quotients:
            product = product * quotient.value
        add(f"determinant identity depth {depth}", product, determinant)

    return VerifyReport(tuple(checks), words_total)


def render_verify(report: VerifyReport, fmt: str = "plain") -> str:
    if fmt == "plain":
        lines = []
        for c in report.checks:
            if c.status == "pass":
                lines.append(f"PASS {c.description}")
            else:
                lines.append(f"FAIL {c.description}: expected {c.expected}, actual {c.actual}")
        lines.append(
            f"{report.passed} passed, {report.failed} failed, "
            f"{report.words_enumerated} words enumerated"
        )
        return "\n".join(lines) + "\n"
    if fmt == "json":
        return _json_text(
            {
                "checks": [
                    {
                        "description": c.description,
                        "status": c.status,
                        "expected": c.expected,
                        "actual": c.actual,
                    }
                    for c in report.checks
                ],
                "summary": {
                    "passed": report.passed,
                    "failed": report.failed,
                    "words_enumerated": report.words_enumerated,
                },
            }
        )
    if fmt == "csv":
        rows = [[c.status, c.description, c.expected, c.actual] for c in report.checks]
        return _csv_text(["status", "description", "expected", "actual"], rows)
    raise ValueError(f"unknown format: {fmt!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="catwords",
        description="Generating functions and exact statistics for Catalan words.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="plain", help="output format")
    common.add_argument("--output", metavar="PATH", help="write to PATH instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser(
        "expand",
        parents=[common],
        help="series for one tracked letter (coefficients are polynomials in V)",
    )
    p.add_argument("--letter", type=_positive, required=True, help="letter to track (>= 1)")
    p.add_argument("--order", type=_nonnegative, required=True, help="truncation order")

    p = sub.add_parser(
        "cfrac", parents=[common], help="expand a convergent of the continued fraction"
    )
    p.add_argument("--depth", type=_positive, required=True, help="truncation depth (>= 1)")
    p.add_argument(
        "--tail",
        choices=(cfrac.TAIL_ONE, cfrac.TAIL_CATALAN),
        default=cfrac.TAIL_CATALAN,
        help="close the fraction with 1 (letters bounded by the depth) or the Catalan series",
    )
    p.add_argument("--order", type=_nonnegative, required=True, help="truncation order")
    p.add_argument(
        "--generic",
        action="store_true",
        help="keep one weight variable per letter instead of setting them all to 1",
    )

    p = sub.add_parser(
        "rational", parents=[common], help="closed rational form for one tracked letter"
    )
    p.add_argument("--letter", type=_positive, required=True, help="letter to track (>= 1)")

    p = sub.add_parser(
        "enumerate",
        parents=[common],
        help="list Catalan words, or tally one letter's occurrences",
    )
    p.add_argument("--length", type=_nonnegative, required=True, help="word length (>= 0)")
    group = p.add_mutually_exclusive_group()
    group.add_argument(
        "--max-letter", type=_positive, help="only words whose letters stay <= this bound"
    )
    group.add_argument(
        "--histogram-letter", type=_positive, help="emit the occurrence histogram of this letter"
    )

    p = sub.add_parser(
        "verify",
        parents=[common],
        help="cross-check the symbolic pipeline against brute-force enumeration",
    )
    p.add_argument("--max-length", type=_positive, default=10, help="largest word length checked")
    p.add_argument(
        "--letters",
        type=_positive,
        nargs="+",
        help="letters whose histograms are checked (default: 1 2 3 4 5)",
    )

    return parser


def _write_chunks(chunks: Iterable[str], path: str | None) -> None:
    if path is None:
        for chunk in chunks:
            sys.stdout.write(chunk)
        sys.stdout.flush()
        return
    with open(path, "w", encoding="utf-8", newline="") as handle:
        for chunk in chunks:
            handle.write(chunk)


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    status = 0
    if args.command == "expand":
        chunks: Iterable[str] = [run_expand(args.letter, args.order, args.format)]
    elif args.command == "cfrac":
        chunks = [run_cfrac(args.depth, args.tail, args.order, args.generic, args.format)]
    elif args.command == "rational":
        chunks = [run_rational(args.letter, args.format)]
    elif args.command == "enumerate":
        chunks = iter_enumerate(args.length, args.max_letter, args.histogram_letter, args.format)
    else:
        report = run_verify(args.max_length, args.letters)
        chunks = [render_verify(report, args.format)]
        status = 0 if report.ok else 1
    _write_chunks(chunks, args.output)
    return status
