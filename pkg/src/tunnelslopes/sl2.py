"""Determinant-1 integer 2x2 matrices as words in the generators U and L.

U is upper unitriangular, L lower unitriangular. A word is a sequence of
exponents (a1, b1, a2, b2, ...) read as U^a1 L^b1 U^a2 L^b2 and so on; a
matrix built from a word remembers it, which lets the continued-fraction
entries of the word be read off and cross-checked against the matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Tuple

from .contfrac import cf_eval, even_cf_expand, sum_a
from .rationals import INFINITY, ProjectiveRational


class ParityError(ValueError):
    """An operation that needs an odd numerator was handed an even one."""


@dataclass(frozen=True)
class SL2Matrix:
    """Rows (q s / p r) with q*r - s*p = 1, optionally carrying its word."""

    q: int
    s: int
    p: int
    r: int
    word: Optional[Tuple[int, ...]] = None

    def __post_init__(self):
        if self.q * self.r - self.s * self.p != 1:
            raise ValueError(
                f"determinant of ({self.q} {self.s} / {self.p} {self.r}) is not 1"
            )

    def __mul__(self, other: "SL2Matrix") -> "SL2Matrix":
        return SL2Matrix(
            self.q * other.q + self.s * other.p,
            self.q * other.s + self.s * other.r,
            self.p * other.q + self.r * other.p,
            self.p * other.s + self.r * other.r,
        )

    def __eq__(self, other) -> bool:
        # The defining word is provenance, not part of the value.
        if not isinstance(other, SL2Matrix):
            return NotImplemented
        return (self.q, self.s, self.p, self.r) == (other.q, other.s, other.p, other.r)

    def __hash__(self) -> int:
        return hash((self.q, self.s, self.p, self.r))

    def inverse(self) -> "SL2Matrix":
        return SL2Matrix(self.r, -self.s, -self.p, self.q)

    def transpose(self) -> "SL2Matrix":
        return SL2Matrix(self.q, self.p, self.s, self.r)

    def determinant(self) -> int:
        return self.q * self.r - self.s * self.p

    def first_column_slope(self) -> ProjectiveRational:
        if self.p == 0:
            return INFINITY
        return Fraction(self.q, self.p)


IDENTITY = SL2Matrix(1, 0, 0, 1)


def generator_power(which: str, exponent: int) -> SL2Matrix:
    """U^e = (1 e / 0 1) or L^e = (1 0 / e 1)."""
    if which == "U":
        return SL2Matrix(1, exponent, 0, 1, word=(exponent,))
    if which == "L":
        return SL2Matrix(1, 0, exponent, 1, word=(0, exponent))
    raise ValueError(f"generator must be 'U' or 'L', got {which!r}")


def word_product(exponents: Iterable[int]) -> SL2Matrix:
    """Product of alternating generator powers, U first; empty word is the identity."""
    exps = tuple(exponents)
    m = IDENTITY
    for i, e in enumerate(exps):
        g = SL2Matrix(1, e, 0, 1) if i % 2 == 0 else SL2Matrix(1, 0, e, 1)
        m = m * g
    return SL2Matrix(m.q, m.s, m.p, m.r, word=exps)


def _quotient(numerator: int, denominator: int) -> ProjectiveRational:
    if denominator == 0:
        return INFINITY
    return Fraction(numerator, denominator)


def cf_entries_from_word(m: SL2Matrix) -> Tuple[ProjectiveRational, ...]:
    """The four continued fractions a word matrix encodes.

    Returns (q/p, s/r, q/s, p/r) and checks each against the evaluation of
    the matching entry sequence: the word itself, the word without its last
    entry, the reversed word, and the reversed word without its last entry.
    Words of odd length are padded with a final zero exponent, which leaves
    the matrix unchanged.
    """
    if m.word is None:
        raise ValueError("matrix does not carry a defining word")
    if len(m.word) == 0:
        raise ValueError("the empty word has no continued-fraction entries")
    word = m.word if len(m.word) % 2 == 0 else m.word + (0,)
    reverse = tuple(reversed(word))
    quartet = (
        _quotient(m.q, m.p),
        _quotient(m.s, m.r),
        _quotient(m.q, m.s),
        _quotient(m.p, m.r),
    )
    evaluated = (
        cf_eval(word),
        cf_eval(word[:-1]),
        cf_eval(reverse),
        cf_eval(reverse[:-1]),
    )
    for label, got, want in zip(("q/p", "s/r", "q/s", "p/r"), quartet, evaluated):
        if got != want:
            raise ArithmeticError(
                f"dictionary identity {label} failed for word {word}: "
                f"matrix gives {got!r}, continued fraction gives {want!r}"
            )
    return quartet


def change_of_basis(x) -> SL2Matrix:
    """The coordinate-change matrix attached to an odd-numerator slope.

    For x = q/p with even expansion [2a1, 2b1, ..., 2an, bn] this is the
    word U^2a1 L^2b1 ... U^2an L^bn U^t with t = 2*sum(ai) for p odd and
    t = -2*sum(ai) for p even.
    """
    x = Fraction(x)
    if x.numerator % 2 == 0:
        raise ParityError(f"change of basis needs an odd numerator, got {x}")
    expansion = even_cf_expand(x)
    twist = 2 * sum_a(expansion)
    if x.denominator % 2 == 0:
        twist = -twist
    return word_product(expansion.entries() + (twist,))
