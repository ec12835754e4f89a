"""Shared corpus and independent oracles for the test suite."""

from __future__ import annotations

import math
import random
from fractions import Fraction

import pytest

from takagi import DigitExpansion

# Golden corpus: small rationals covering every classifier case, both
# signs, points above 1, and dyadics at several levels.
NONDYADIC_CORPUS = [
    Fraction(1, 3),
    Fraction(2, 3),
    Fraction(2, 5),
    Fraction(1, 5),
    Fraction(1, 9),
    Fraction(5, 12),
    Fraction(11, 12),
    Fraction(1, 6),
    Fraction(5, 6),
    Fraction(5, 24),
    Fraction(1, 7),
    Fraction(3, 7),
    Fraction(2, 7),
    Fraction(7, 3),
    Fraction(-1, 3),
    Fraction(-2, 5),
]

DYADIC_CORPUS = [
    Fraction(0),
    Fraction(1),
    Fraction(1, 2),
    Fraction(1, 4),
    Fraction(3, 4),
    Fraction(3, 8),
    Fraction(5, 16),
    Fraction(1, 1024),
    Fraction(-3, 4),
    Fraction(5, 2),
]

CORPUS = NONDYADIC_CORPUS + DYADIC_CORPUS


def series_phi(q: Fraction) -> Fraction:
    """Independent distance-to-integer, used only by test oracles."""
    frac = q - math.floor(q)
    return min(frac, 1 - frac)


def series_partial_sum(q: Fraction, terms: int) -> Fraction:
    """Partial sum of the defining series sum 2^-n phi(2^n q).

    Independent oracle: the true value lies in
    [partial, partial + 2^-terms].
    """
    total = Fraction(0)
    for n in range(terms):
        total += series_phi(q * 2**n) / 2**n
    return total


def assert_series_bracket(q: Fraction, value: Fraction, terms: int = 80) -> None:
    """Check an exact value against the series-sum bracket."""
    lo = series_partial_sum(q, terms)
    hi = lo + Fraction(1, 2**terms)
    assert lo <= value <= hi, f"value {value} for {q} outside series bracket [{lo}, {hi}]"


def digit_stream_oracle(q: Fraction, count: int) -> list[int]:
    """First ``count`` fraction digits by repeated doubling (no cycle logic)."""
    frac = q - math.floor(q)
    out = []
    for _ in range(count):
        frac *= 2
        bit = math.floor(frac)
        out.append(bit)
        frac -= bit
    return out


def random_expansion(
    rng: random.Random,
    max_preperiod: int = 8,
    max_period: int = 8,
    int_part: int = 0,
) -> DigitExpansion:
    """A random canonical expansion with bounded digit blocks."""
    pre = [rng.randint(0, 1) for _ in range(rng.randint(0, max_preperiod))]
    per = [rng.randint(0, 1) for _ in range(rng.randint(1, max_period))]
    return DigitExpansion.from_parts(int_part, pre, per)


def random_rational(rng: random.Random, max_den: int) -> Fraction:
    """Uniform-ish random rational in [0, 1)."""
    den = rng.randint(1, max_den)
    return Fraction(rng.randrange(0, den) if den > 1 else 0, den)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(0x7A4A61)
