"""Eventually periodic binary expansions of rational numbers.

Every rational x is written as

    x = int_part + 0.b_1 b_2 ... b_P (c_1 ... c_L)   (base 2)

with ``int_part = floor(x)`` so the fraction digits are always in {0, 1}.
The preperiod ``b`` is finite, the period ``c`` repeats forever.  The
canonical form is unique: the period is primitive (not a repetition of a
shorter block), never all-ones (a trailing ...0111... is folded into the
terminating form), and the preperiod is as short as possible.  Dyadic
rationals are exactly the expansions with period ``(0,)``.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, ParseError

Rational = Fraction

_EXPANSION_RE = re.compile(r"^([+-]?\d+)\.([01]*)(?:\(([01]+)\))?$")


def _check_bits(bits: tuple[int, ...], what: str) -> None:
    for b in bits:
        if b not in (0, 1):
            raise ValueError(f"{what} contains non-bit value {b!r}")


@dataclass(frozen=True)
class DigitExpansion:
    """Canonical eventually periodic binary expansion of a rational.

    Construct via :meth:`from_rational`, :meth:`from_parts` or
    :meth:`parse`; the raw constructor rejects non-canonical input.
    """

    int_part: int
    preperiod: tuple[int, ...]
    period: tuple[int, ...]

    def __post_init__(self) -> None:
        _check_bits(self.preperiod, "preperiod")
        _check_bits(self.period, "period")
        if not self.period:
            raise ValueError("period must be nonempty (use (0,) for terminating expansions)")
        if all(b == 1 for b in self.period):
            raise ValueError("all-ones period is not canonical; fold the carry")
        L = len(self.period)
        for d in range(1, L):
            if L % d == 0 and self.period == self.period[:d] * (L // d):
                raise ValueError(f"period {self.period} is a repetition of a block of length {d}")
        if self.preperiod and self.preperiod[-1] == self.period[-1]:
            raise ValueError("preperiod is not minimal: its last bit can be absorbed into the period")

    # -- constructors -------------------------------------------------

    @classmethod
    def from_rational(cls, q: Fraction | int) -> "DigitExpansion":
        """Expand a rational by binary long division with cycle detection.

        The remainder sequence determines the digits, so the first repeated
        remainder yields the minimal preperiod and the primitive period.
        """
        q = Fraction(q)
        k = math.floor(q)
        frac = q - k
        num, den = frac.numerator, frac.denominator
        bits: list[int] = []
        seen: dict[int, int] = {}
        r = num
        while r not in seen:
            seen[r] = len(bits)
            r *= 2
            bits.append(r // den)
            r %= den
        start = seen[r]
        return cls(k, tuple(bits[:start]), tuple(bits[start:]))

    @classmethod
    def from_parts(
        cls,
        int_part: int,
        preperiod: tuple[int, ...] | list[int],
        period: tuple[int, ...] | list[int],
    ) -> "DigitExpansion":
        """Build from arbitrary (possibly non-canonical) digit blocks."""
        pre = tuple(preperiod)
        per = tuple(period)
        _check_bits(pre, "preperiod")
        _check_bits(per, "period")
        if not per:
            per = (0,)
        value = Fraction(int_part)
        for i, b in enumerate(pre, start=1):
            value += Fraction(b, 2**i)
        block = 0
        for b in per:
            block = 2 * block + b
        value += Fraction(block, 2 ** len(per) - 1) / 2 ** len(pre)
        return cls.from_rational(value)

    @classmethod
    def parse(cls, text: str) -> "DigitExpansion":
        """Parse the text form ``k.pre(per)``, e.g. ``0.01(10)``.

        The period may be omitted for terminating expansions (``0.11``).
        Input is canonicalized, so ``parse(str(e)) == e`` always holds.
        """
        m = _EXPANSION_RE.match(text.strip())
        if m is None:
            raise ParseError(f"cannot parse expansion literal {text!r}: expected 'k.pre(per)' in binary")
        int_part = int(m.group(1))
        pre = tuple(int(ch) for ch in m.group(2))
        per = tuple(int(ch) for ch in m.group(3)) if m.group(3) else (0,)
        return cls.from_parts(int_part, pre, per)

    # -- basic queries ------------------------------------------------

    @property
    def preperiod_len(self) -> int:
        return len(self.preperiod)

    @property
    def period_len(self) -> int:
        return len(self.period)

    @property
    def is_dyadic(self) -> bool:
        """True iff the expansion terminates, i.e. x = k / 2^n."""
        return self.period == (0,)

    def digit(self, n: int) -> int:
        """The n-th fraction digit a_n, 1-indexed."""
        if n < 1:
            raise ValueError(f"digit index must be >= 1, got {n}")
        P = len(self.preperiod)
        if n <= P:
            return self.preperiod[n - 1]
        return self.period[(n - P - 1) % len(self.period)]

    def digits(self, count: int) -> tuple[int, ...]:
        """The first ``count`` fraction digits."""
        return tuple(self.digit(n) for n in range(1, count + 1))

    def to_rational(self) -> Fraction:
        value = Fraction(self.int_part)
        for i, b in enumerate(self.preperiod, start=1):
            value += Fraction(b, 2**i)
        block = 0
        for b in self.period:
            block = 2 * block + b
        value += Fraction(block, 2 ** len(self.period) - 1) / 2 ** len(self.preperiod)
        return value

    def fractional_value(self) -> Fraction:
        """Value of the digit stream alone, in [0, 1)."""
        return self.to_rational() - self.int_part

    def __str__(self) -> str:
        pre = "".join(str(b) for b in self.preperiod)
        per = "".join(str(b) for b in self.period)
        return f"{self.int_part}.{pre}({per})"


@dataclass(frozen=True)
class NeighborBracket:
    """Consecutive level-n grid points enclosing a non-dyadic x.

    ``x_n < x < y_n`` with ``y_n - x_n = 2^-(n-1)`` and midpoint ``c_n``.
    """

    x_n: Fraction
    c_n: Fraction
    y_n: Fraction
    level: int


def rational_to_expansion(q: Fraction | int) -> DigitExpansion:
    return DigitExpansion.from_rational(q)


def expansion_to_rational(e: DigitExpansion) -> Fraction:
    return e.to_rational()


def digit(e: DigitExpansion, n: int) -> int:
    return e.digit(n)


def neighbor_bracket(e: DigitExpansion, n: int) -> NeighborBracket:
    """Level-n grid cell around a non-dyadic point.

    x_n is the largest multiple of 2^-(n-1) below x.  Dyadic input is
    rejected: x would eventually land on a grid point and the open cell
    around it is ill-defined.
    """
    if n < 1:
        raise ValueError(f"bracket level must be >= 1, got {n}")
    if e.is_dyadic:
        raise DomainError(f"neighbor bracket undefined at dyadic point {e.to_rational()}")
    x = e.to_rational()
    scale = 2 ** (n - 1)
    x_n = Fraction(math.floor(x * scale), scale)
    y_n = x_n + Fraction(1, scale)
    return NeighborBracket(x_n=x_n, c_n=(x_n + y_n) / 2, y_n=y_n, level=n)


def reduce_to_unit(e: DigitExpansion) -> tuple[DigitExpansion, bool]:
    """Map x into [0, 1) using the function's symmetries.

    Negative x is reflected first (value is even in x), then shifted by
    periodicity.  The flag records whether a reflection was applied,
    since reflection swaps left- and right-sided derivative data.
    """
    x = e.to_rational()
    flipped = x < 0
    if flipped:
        x = -x
    x -= math.floor(x)
    return DigitExpansion.from_rational(x), flipped
