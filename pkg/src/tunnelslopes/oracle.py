"""Exhaustive and randomized cross-checks, shipped so the command line can
re-certify the two load-bearing facts on demand: the even expansion is the
unique constraint-satisfying one at desk scale, and word matrices encode
exactly the continued fractions of their words.

The enumeration works on raw entry tuples and evaluates them with its own
plain fold, so it shares nothing with the expansion routine it certifies.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterator, List, Tuple

from .contfrac import cf_eval, even_cf_expand
from .rationals import INFINITY, render
from .sl2 import word_product


@dataclass(frozen=True)
class OracleReport:
    name: str
    checked: int
    violations: Tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def summary(self) -> str:
        status = "ok" if self.ok else "FAIL"
        line = f"{self.name}: {status} ({self.checked} checked)"
        if self.violations:
            line += "".join(f"\n  {v}" for v in self.violations)
        return line


def _eval_raw(entries: Tuple[int, ...]) -> Fraction:
    # Constraint-satisfying sequences never hit a zero tail, so a plain
    # Fraction fold suffices here.
    acc = Fraction(entries[-1])
    for c in reversed(entries[:-1]):
        acc = c + 1 / acc
    return acc


def _candidate_sequences(
    length: int, max_entry: int, enforce_sign_rule: bool
) -> Iterator[Tuple[int, ...]]:
    evens = [e for e in range(-max_entry, max_entry + 1) if e % 2 == 0]
    evens_nonzero = [e for e in evens if e != 0]
    nonzero = [e for e in range(-max_entry, max_entry + 1) if e != 0]

    def extend(prefix: List[int]) -> Iterator[Tuple[int, ...]]:
        i = len(prefix)
        if i == length:
            yield tuple(prefix)
            return
        if i % 2 == 0:
            choices = evens if i == 0 else evens_nonzero
        elif i == length - 1:
            choices = []
            for e in nonzero:
                if enforce_sign_rule and abs(e) == 1:
                    a_prev = prefix[-1]
                    if a_prev != 0 and (a_prev > 0) != (e > 0):
                        continue
                choices.append(e)
        else:
            choices = evens_nonzero
        for e in choices:
            prefix.append(e)
            yield from extend(prefix)
            prefix.pop()

    yield from extend([])


def enumerate_even_cfs(
    max_len: int, max_entry: int, enforce_sign_rule: bool = True
) -> Dict[Fraction, List[Tuple[int, ...]]]:
    """Every constraint-satisfying even word within the bounds, grouped by value.

    Words are raw entry tuples with |entry| <= max_entry and at most max_len
    entries. Disabling the sign rule is an ablation hook that should make
    duplicates appear.
    """
    if max_len > 5 or max_entry > 8:
        raise ValueError("enumeration bounds are desk scale: max_len <= 5, max_entry <= 8")
    grouped: Dict[Fraction, List[Tuple[int, ...]]] = {}
    for length in range(1, max_len + 1):
        for seq in _candidate_sequences(length, max_entry, enforce_sign_rule):
            grouped.setdefault(_eval_raw(seq), []).append(seq)
    return grouped


def check_uniqueness(enumeration: Dict[Fraction, List[Tuple[int, ...]]]) -> OracleReport:
    """Assert one expansion per value and that the expander reproduces it."""
    violations = []
    for value, seqs in enumeration.items():
        if len(seqs) > 1:
            listed = ", ".join(str(list(s)) for s in sorted(seqs))
            violations.append(f"{render(value)} has {len(seqs)} expansions: {listed}")
            continue
        produced = even_cf_expand(value).entries()
        if produced != seqs[0]:
            violations.append(
                f"{render(value)}: expand gives {list(produced)}, "
                f"enumeration has {list(seqs[0])}"
            )
    return OracleReport(
        "even-cf uniqueness", checked=len(enumeration), violations=tuple(sorted(violations))
    )


_EXPONENTS = [e for e in range(-5, 6) if e != 0]


def random_word_dictionary_check(samples: int, seed: int) -> OracleReport:
    """Check all four continued-fraction identities on random generator words.

    Words have one to four (a, b) exponent pairs drawn from [-5, 5] without
    zero. The identities are evaluated from scratch here rather than through
    the library's own checking helper. Deterministic for a fixed seed.
    """
    if samples < 0:
        raise ValueError("sample count must be nonnegative")
    rng = random.Random(seed)
    violations = []
    for _ in range(samples):
        pairs = rng.randint(1, 4)
        word = tuple(rng.choice(_EXPONENTS) for _ in range(2 * pairs))
        m = word_product(word)
        reverse = tuple(reversed(word))
        checks = (
            ("q/p", m.q, m.p, word),
            ("s/r", m.s, m.r, word[:-1]),
            ("q/s", m.q, m.s, reverse),
            ("p/r", m.p, m.r, reverse[:-1]),
        )
        for label, num, den, entries in checks:
            matrix_side = INFINITY if den == 0 else Fraction(num, den)
            cf_side = cf_eval(entries)
            if matrix_side != cf_side:
                violations.append(
                    f"word {word} {label}: matrix {render(matrix_side)}, "
                    f"continued fraction {render(cf_side)}"
                )
    return OracleReport(
        "cf/matrix dictionary", checked=samples, violations=tuple(sorted(violations))
    )


def selfcheck() -> List[OracleReport]:
    """The standard certification run used by the command line."""
    enumeration = enumerate_even_cfs(4, 6)
    return [check_uniqueness(enumeration), random_word_dictionary_check(200, 1)]
