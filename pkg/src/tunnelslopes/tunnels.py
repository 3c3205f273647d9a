"""Cabling-parameter tuples of knot and link tunnels.

A tunnel is recorded as ((m0, m1, ..., mn), (s2, ..., sn)): a residue mod 1
for the first cabling, a rational slope for each later cabling, and one bit
per cabling from the third on. Validation enforces the parity rules that
make a tuple realizable: every numerator before the last is odd (the
residue's denominator playing that role for m0), and only the final slope
may be even, in which case the tunnel belongs to a two-component link.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Dict, Tuple

from .rationals import INFINITY, ResidueSlope, render


class ValidationError(ValueError):
    """A tuple violates one of the parameterization rules."""

    def __init__(self, rule: str, message: str):
        super().__init__(f"{rule}: {message}")
        self.rule = rule


class ParseError(ValueError):
    """Malformed tuple text."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class TunnelKind(Enum):
    TRIVIAL_KNOT = "TrivialKnot"
    TRIVIAL_LINK = "TrivialLink"
    SIMPLE_KNOT = "SimpleKnot"
    SIMPLE_LINK = "SimpleLink"
    SEMISIMPLE = "Semisimple"
    REGULAR = "Regular"


class Target(Enum):
    KNOT = "Knot"
    LINK = "Link"


@dataclass(frozen=True)
class TunnelClass:
    kind: TunnelKind
    target: Target


@dataclass(frozen=True)
class TunnelParams:
    """The cabling parameters (m0, m1, ..., mn; s2, ..., sn) of a tunnel."""

    m0: ResidueSlope
    slopes: Tuple[Fraction, ...] = ()
    binaries: Tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "slopes", tuple(Fraction(m) for m in self.slopes))
        object.__setattr__(self, "binaries", tuple(int(s) for s in self.binaries))


def validate(t: TunnelParams) -> TunnelClass:
    """Check every tuple rule and classify the tunnel."""
    n = len(t.slopes)
    for s in t.binaries:
        if s not in (0, 1):
            raise ValidationError("binary-values", f"binaries must be 0 or 1, got {s}")
    expected = max(n - 1, 0)
    if len(t.binaries) != expected:
        raise ValidationError(
            "binaries-length",
            f"{n} cabling slopes need {expected} binaries, got {len(t.binaries)}",
        )
    if t.m0.is_infinite:
        if n:
            raise ValidationError(
                "trivial-link-arity", "the infinite residue admits no further cablings"
            )
        return TunnelClass(TunnelKind.TRIVIAL_LINK, Target.LINK)
    if t.m0.value == 0:
        if n:
            raise ValidationError(
                "primitive-arity", "the zero residue admits no further cablings"
            )
        return TunnelClass(TunnelKind.TRIVIAL_KNOT, Target.KNOT)
    q0 = t.m0.denominator
    if n == 0:
        if q0 % 2 == 1:
            return TunnelClass(TunnelKind.SIMPLE_KNOT, Target.KNOT)
        return TunnelClass(TunnelKind.SIMPLE_LINK, Target.LINK)
    if q0 % 2 == 0:
        raise ValidationError(
            "m0-denominator-parity",
            f"m0 = {t.m0} has even denominator, so its cabling ends the sequence",
        )
    for i, m in enumerate(t.slopes[:-1], start=1):
        if m.numerator % 2 == 0:
            raise ValidationError(
                "intermediate-numerator-parity",
                f"m{i} = {render(m)} has even numerator before the final cabling",
            )
    target = Target.KNOT if t.slopes[-1].numerator % 2 == 1 else Target.LINK
    kind = TunnelKind.SEMISIMPLE if all(s == 0 for s in t.binaries) else TunnelKind.REGULAR
    return TunnelClass(kind, target)


def mirror(t: TunnelParams) -> TunnelParams:
    """The parameters of the mirror-image tunnel: every slope negated."""
    return TunnelParams(t.m0.negated(), tuple(-m for m in t.slopes), t.binaries)


def is_amphichiral(t: TunnelParams) -> bool:
    """Whether the tunnel equals its own mirror image."""
    return mirror(t) == t


def linking_number(t: TunnelParams) -> int:
    """Half the final even numerator (or even residue denominator) of a link tunnel."""
    cls = validate(t)
    if cls.target is not Target.LINK:
        raise ValueError("linking number is defined only for link tunnels")
    if t.m0.is_infinite:
        return 0
    if not t.slopes:
        return t.m0.denominator // 2
    return abs(t.slopes[-1].numerator) // 2


def serialize(t: TunnelParams) -> str:
    """Stable text form: '[ p/q ], m1, ..., mn ; s2...sn' (bits only when n >= 2)."""
    parts = [str(t.m0)]
    parts.extend(render(m) for m in t.slopes)
    text = ", ".join(parts)
    if len(t.slopes) >= 2:
        text += " ; " + "".join(str(s) for s in t.binaries)
    return text


_RESIDUE_RE = re.compile(r"\s*\[\s*(-?\d+)(?:\s*/\s*(-?\d+))?\s*\]")


def parse(text: str) -> TunnelParams:
    """Inverse of serialize, raising ParseError with a position on bad input."""
    match = _RESIDUE_RE.match(text)
    if not match:
        raise ParseError("expected a residue of the form '[ p/q ]'", 0)
    num = int(match.group(1))
    if match.group(2) is None:
        m0 = ResidueSlope(Fraction(num) % 1)
    else:
        den = int(match.group(2))
        if den == 0:
            if num == 0:
                raise ParseError("residue 0/0 is degenerate", match.start(1))
            m0 = ResidueSlope(INFINITY)
        else:
            m0 = ResidueSlope(Fraction(num, den) % 1)
    rest = text[match.end():]
    offset = match.end()
    slope_part, semicolon, bits_part = rest.partition(";")
    slopes = []
    stripped = slope_part.strip()
    if stripped:
        if not stripped.startswith(","):
            raise ParseError("expected ',' before the cabling slopes", offset)
        cursor = offset + slope_part.index(",") + 1
        for token in stripped[1:].split(","):
            cleaned = token.strip()
            if not cleaned:
                raise ParseError("empty slope entry", cursor)
            try:
                slopes.append(Fraction(cleaned))
            except (ValueError, ZeroDivisionError):
                raise ParseError(f"bad slope {cleaned!r}", cursor) from None
            cursor += len(token) + 1
    binaries: Tuple[int, ...] = ()
    if semicolon:
        bits = bits_part.strip()
        bit_pos = text.index(";", offset)
        if not bits:
            raise ParseError("missing binary string after ';'", bit_pos)
        if any(c not in "01" for c in bits):
            raise ParseError(f"binary string {bits!r} must use only 0 and 1", bit_pos)
        binaries = tuple(int(c) for c in bits)
    return TunnelParams(m0, tuple(slopes), binaries)


def to_export(t: TunnelParams) -> Dict[str, object]:
    """Machine-readable form: m0, slopes, binaries, class, target, and the
    linking number when the tunnel belongs to a link. Rationals are rendered
    as exact strings so arbitrary precision survives the trip through JSON."""
    cls = validate(t)
    doc: Dict[str, object] = {
        "m0": render(t.m0.value),
        "slopes": [render(m) for m in t.slopes],
        "binaries": list(t.binaries),
        "class": cls.kind.value,
        "target": cls.target.value,
    }
    if cls.target is Target.LINK:
        doc["linking_number"] = linking_number(t)
    return doc
