"""Cabling slopes of the depth-one tunnels of 2-bridge knots.

A 2-bridge knot is classified by a fraction b/a with b odd; adding multiples
of b to a normalizes it so that |b/a| > 1, and either of the two admissible
residues may be used. The even expansion of the normalized fraction is then
rewritten so every upper entry is a single full twist (each 2ai becomes
[2, 0, 2, ..., 2] with matching signs), one cabling per unit. Walking the
units from the last to the first yields an explicit twist count k for each
cabling and from it the cabling slope, 2 + 1/k or -2 + 1/k depending on a
strand parity that the final lower entry controls. The first cabling instead
contributes a residue mod 1. All of the selection bits are zero for these
tunnels.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import List, Tuple

from .contfrac import EvenCF, cf_eval, even_cf_expand
from .rationals import ResidueSlope, residue_of
from .tunnels import TunnelParams


class LinkInvariantError(ValueError):
    """b even is the invariant of a 2-bridge link, which has only its upper
    and lower (single-cabling) tunnels and no cabling sequence here."""


class TrivialKnotError(ValueError):
    """b = +-1 is the trivial knot, which has no 2-bridge tunnel data."""


class CablingContradictionError(RuntimeError):
    """A twist count of zero would mean a cabling of infinite slope."""


@dataclass(frozen=True)
class CablingStep:
    """One cabling beyond the first: its unit index, twist count, strand
    parity, and resulting slope."""

    index: int
    k: int
    parity: str
    slope: Fraction

    def __post_init__(self):
        if self.parity not in ("even", "odd"):
            raise ValueError(f"parity must be 'even' or 'odd', got {self.parity!r}")
        if self.k == 0:
            raise CablingContradictionError("twist count 0 gives an infinite slope")
        base = 2 if self.parity == "even" else -2
        if self.slope != base + Fraction(1, self.k):
            raise ValueError(
                f"slope {self.slope} does not equal {base} + 1/{self.k}"
            )


@dataclass(frozen=True)
class TwoBridgeForm:
    """A normalized 2-bridge invariant with its unit-rewritten expansion."""

    b: int
    a: int
    expansion: EvenCF
    unit_a: Tuple[int, ...]
    unit_b: Tuple[int, ...]

    def __post_init__(self):
        if self.b % 2 == 0:
            raise LinkInvariantError(f"b = {self.b} is even")
        if self.a == 0 or abs(self.a) >= abs(self.b):
            raise ValueError(f"|{self.b}/{self.a}| must exceed 1")
        if gcd(abs(self.b), abs(self.a)) != 1:
            raise ValueError(f"{self.b} and {self.a} are not coprime")
        if len(self.unit_a) != len(self.unit_b):
            raise ValueError("unit sequences must have equal length")
        if any(u not in (1, -1) for u in self.unit_a):
            raise ValueError("unit a entries must be +-1")
        if self.unit_b[-1] == 0:
            raise ValueError("the final unit b entry must be nonzero")
        if len(self.unit_a) != sum(abs(a) for a in self.expansion.a_entries):
            raise ValueError("unit count must equal the total twist count")
        if cf_eval(_unit_word(self.unit_a, self.unit_b)) != Fraction(self.b, self.a):
            raise ValueError("unit rewrite does not evaluate back to b/a")


def _unit_word(unit_a: Tuple[int, ...], unit_b: Tuple[int, ...]) -> Tuple[int, ...]:
    word = []
    for u, b in zip(unit_a, unit_b[:-1]):
        word.extend((2 * u, 2 * b))
    word.extend((2 * unit_a[-1], unit_b[-1]))
    return tuple(word)


def unit_rewrite(e: EvenCF) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """Expand every a entry into signed units, padding with zero b entries.

    The value is unchanged and the closing b entry stays put; the number of
    units is the sum of |ai|.
    """
    if not e.has_final_b:
        raise ValueError("unit rewrite needs the odd-numerator (knot) form")
    if any(a == 0 for a in e.a_entries):
        raise ValueError("unit rewrite needs every a entry nonzero (|value| > 1)")
    unit_a: List[int] = []
    unit_b: List[int] = []
    for i, a in enumerate(e.a_entries):
        unit = 1 if a > 0 else -1
        unit_a.extend([unit] * abs(a))
        unit_b.extend([0] * (abs(a) - 1))
        unit_b.append(e.b_entries[i])
    return tuple(unit_a), tuple(unit_b)


def make_form(b: int, a: int) -> TwoBridgeForm:
    """Build the form for an already-normalized invariant b/a."""
    if b < 0:
        b, a = -b, -a
    if b % 2 == 0:
        raise LinkInvariantError(
            f"b = {b} is even: a 2-bridge link has only its upper and lower tunnels"
        )
    if b == 1:
        raise TrivialKnotError("b = 1 names the trivial knot")
    if a == 0:
        raise ValueError("a reduced to 0: b/a is degenerate")
    if gcd(b, abs(a)) != 1:
        raise ValueError(f"{b} and {a} are not coprime")
    if abs(a) >= b:
        raise ValueError(
            f"|{b}/{a}| does not exceed 1: normalize a by multiples of {b} first"
        )
    expansion = even_cf_expand(Fraction(b, a))
    unit_a, unit_b = unit_rewrite(expansion)
    return TwoBridgeForm(b, a, expansion, unit_a, unit_b)


def normalize_input(b: int, a: int) -> List[TwoBridgeForm]:
    """The forms for both residues a' = a (mod b) with |b/a'| > 1.

    For every valid input exactly two residues qualify, one positive and one
    negative; the positive one comes first.
    """
    if b < 0:
        b, a = -b, -a
    if b % 2 == 0:
        raise LinkInvariantError(
            f"b = {b} is even: a 2-bridge link has only its upper and lower tunnels"
        )
    if b == 1:
        raise TrivialKnotError("b = 1 names the trivial knot")
    if gcd(b, abs(a)) != 1:
        raise ValueError(f"{b} and {a} are not coprime")
    residue = a % b
    return [make_form(b, residue), make_form(b, residue - b)]


def cabling_steps(form: TwoBridgeForm) -> Tuple[ResidueSlope, Tuple[CablingStep, ...]]:
    """The first-cabling residue and the later cablings in construction order."""
    unit_a, unit_b = form.unit_a, form.unit_b
    count = len(unit_a)
    b_last = unit_b[-1]
    if unit_a[-1] == 1:
        k_first = b_last
        m0 = residue_of(Fraction(b_last, 2 * b_last + 1))
    else:
        k_first = b_last - 1
        m0 = residue_of(Fraction(b_last - 1, 2 * b_last - 1))
    if k_first == 0:
        raise CablingContradictionError("first cabling has twist count 0")
    steps: List[CablingStep] = []
    for i in range(count - 1, 0, -1):
        successor = unit_a[i]
        current = unit_a[i - 1]
        b_i = unit_b[i - 1]
        if successor == 1:
            parity = "even" if (b_last + 1) % 2 == 0 else "odd"
            k = 2 * b_i + 1 if current == 1 else 2 * b_i
        else:
            parity = "even" if b_last % 2 == 0 else "odd"
            k = 2 * b_i if current == 1 else 2 * b_i - 1
        if k == 0:
            raise CablingContradictionError(f"cabling {i} has twist count 0")
        base = 2 if parity == "even" else -2
        steps.append(CablingStep(index=i, k=k, parity=parity, slope=base + Fraction(1, k)))
    return m0, tuple(steps)


def two_bridge_slopes(form: TwoBridgeForm) -> TunnelParams:
    """The full cabling-parameter tuple of the knot's depth-one tunnel."""
    m0, steps = cabling_steps(form)
    slopes = tuple(step.slope for step in steps)
    return TunnelParams(m0, slopes, (0,) * max(len(slopes) - 1, 0))
