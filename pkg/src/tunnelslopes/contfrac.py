"""Continued fractions and the parity-constrained even expansion.

A continued fraction word [c1, ..., cm] evaluates right to left through
c + 1/x on the projective line, so entries may be integers, rationals, or
infinity, and a zero entry collapses its neighbours instead of crashing.

Every rational q/p has exactly one expansion of the shape

    [2a1, 2b1, ..., 2b(k-1), 2ak]        when q is even, and
    [2a1, 2b1, ..., 2ak, bk]             when q is odd,

with every entry nonzero except possibly the leading 2a1, with bk carrying
the parity of p, and with ak and bk sharing a sign whenever bk is 1 or -1.
``even_cf_expand`` computes it by a greedy Euclidean descent: each
even-forced position takes the even integer nearest the current value and
recurses on the reciprocal of the remainder. Denominators strictly decrease,
so the walk ends on an integer. An integer u reached on an even-forced
position is split as (u - 1) + 1/1 or (u + 1) + 1/(-1), which is exactly the
sign normalization the closing pair needs; no backtracking is ever required
because nearest-even ties would need an odd integer at a non-terminal
position, and the descent never produces one.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Tuple

from .rationals import INFINITY, ProjectiveRational, projective_add_invert


def cf_eval(entries: Iterable[ProjectiveRational]) -> ProjectiveRational:
    """Evaluate a continued fraction word right to left."""
    word = list(entries)
    if not word:
        raise ValueError("empty continued fraction")
    last = word[-1]
    acc: ProjectiveRational = last if last is INFINITY else Fraction(last)
    for c in reversed(word[:-1]):
        acc = projective_add_invert(c, acc)
    return acc


def negate_cf(entries: Sequence[ProjectiveRational]) -> Tuple[ProjectiveRational, ...]:
    """Entrywise negation; evaluation of the result is the negated value."""
    if not entries:
        raise ValueError("empty continued fraction")
    return tuple(INFINITY if c is INFINITY else -Fraction(c) for c in entries)


@dataclass(frozen=True)
class EvenCF:
    """The even expansion of a rational, stored by its halved entries.

    ``a_entries`` holds a1..ak (the word carries 2*ai), ``b_entries`` holds
    b1..b(k-1) (the word carries 2*bi) plus, when ``has_final_b``, the closing
    bk exactly as it appears in the word.
    """

    a_entries: Tuple[int, ...]
    b_entries: Tuple[int, ...]
    has_final_b: bool

    def __post_init__(self):
        k = len(self.a_entries)
        if k == 0:
            raise ValueError("an even expansion needs at least one a entry")
        expected_b = k - 1 + (1 if self.has_final_b else 0)
        if len(self.b_entries) != expected_b:
            raise ValueError(
                f"expected {expected_b} b entries for k={k}, got {len(self.b_entries)}"
            )
        if any(a == 0 for a in self.a_entries[1:]):
            raise ValueError("only the leading a entry may be zero")
        if any(b == 0 for b in self.b_entries):
            raise ValueError("b entries must be nonzero")
        if self.has_final_b:
            a_last, b_last = self.a_entries[-1], self.b_entries[-1]
            if abs(b_last) == 1 and a_last != 0 and (a_last > 0) != (b_last > 0):
                raise ValueError(
                    f"closing pair ({a_last}, {b_last}) must share a sign when bk is +-1"
                )

    def entries(self) -> Tuple[int, ...]:
        """The raw word (2a1, 2b1, ..., 2ak[, bk])."""
        word = []
        for i, a in enumerate(self.a_entries):
            word.append(2 * a)
            if i < len(self.a_entries) - 1:
                word.append(2 * self.b_entries[i])
        if self.has_final_b:
            word.append(self.b_entries[-1])
        return tuple(word)

    def value(self) -> Fraction:
        v = cf_eval(self.entries())
        assert v is not INFINITY
        return v

    def __str__(self) -> str:
        return "[" + ", ".join(str(e) for e in self.entries()) + "]"


def _nearest_even(x: Fraction) -> int:
    # floor(x/2 + 1/2), doubled; ties would need x to be an odd integer,
    # which the callers exclude.
    n, d = x.numerator, x.denominator
    return 2 * ((n + d) // (2 * d))


def even_cf_expand(x) -> EvenCF:
    """The unique constraint-satisfying even expansion of a rational."""
    x = Fraction(x)
    raw: list[int] = []
    at_a_slot = True
    while True:
        u, v = x.numerator, x.denominator
        if v == 1:
            if not at_a_slot:
                raw.append(u)  # closing bk, parity forced by the descent
                break
            if u % 2 == 0:
                raw.append(u)  # closing 2ak, the even-numerator form
                break
            if u > 0:
                raw.extend((u - 1, 1))
            else:
                raw.extend((u + 1, -1))
            break
        e = _nearest_even(x)
        raw.append(e)
        x = 1 / (x - e)
        at_a_slot = not at_a_slot
    return _even_cf_from_raw(raw)


def _even_cf_from_raw(raw: Sequence[int]) -> EvenCF:
    has_final_b = len(raw) % 2 == 0
    a_raw = raw[0::2]
    b_raw = raw[1::2]
    a_entries = tuple(e // 2 for e in a_raw)
    if has_final_b:
        b_entries = tuple(e // 2 for e in b_raw[:-1]) + (b_raw[-1],)
    else:
        b_entries = tuple(e // 2 for e in b_raw)
    return EvenCF(a_entries, b_entries, has_final_b)


def sum_a(e: EvenCF) -> int:
    """The sum of the a entries, the twist count of the change of basis."""
    return sum(e.a_entries)
