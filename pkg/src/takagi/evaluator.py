"""Exact evaluation of the Takagi function and its building blocks.

The function is the sum of the sawtooth layers g_k(x) = dist(x, D_k),
where D_k is the grid of spacing 2^-(k-1).  For rational x the digit
stream is eventually periodic, the layer values repeat scaled by 2^-L
per period, and the whole series collapses to an exact rational.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .digits import DigitExpansion

_TWO_THIRDS = Fraction(2, 3)


def _as_fraction(q: Fraction | DigitExpansion | int) -> Fraction:
    if isinstance(q, DigitExpansion):
        return q.to_rational()
    return Fraction(q)


def phi(q: Fraction | int) -> Fraction:
    """Distance from q to the nearest integer; range [0, 1/2]."""
    q = Fraction(q)
    frac = q - math.floor(q)
    return min(frac, 1 - frac)


def g_k(q: Fraction | int, k: int) -> Fraction:
    """Distance from q to the level-k grid of spacing 2^-(k-1)."""
    if k < 1:
        raise ValueError(f"layer index must be >= 1, got {k}")
    q = Fraction(q)
    scale = 2 ** (k - 1)
    return phi(q * scale) / scale


def g_k_digit_formula(e: DigitExpansion, k: int) -> Fraction:
    """Layer value from the digits: a_k / 2^k + (1 - 2 a_k) * tail.

    ``tail`` is the exact value of the digits beyond position k, a
    closed-form rational thanks to eventual periodicity.  Must agree
    with the distance-based :func:`g_k` on the same point.
    """
    if k < 1:
        raise ValueError(f"layer index must be >= 1, got {k}")
    a = e.digit(k)
    head = sum(Fraction(e.digit(j), 2**j) for j in range(1, k + 1))
    tail = e.fractional_value() - head
    return Fraction(a, 2**k) + (1 - 2 * a) * tail


def G_n(q: Fraction | int, n: int) -> Fraction:
    """Partial sum of the first n layers."""
    if n < 1:
        raise ValueError(f"term count must be >= 1, got {n}")
    q = Fraction(q)
    return sum(g_k(q, k) for k in range(1, n + 1))


def takagi_exact(q: Fraction | DigitExpansion | int) -> Fraction:
    """Exact value of the Takagi function at a rational point.

    The tail after k digits of the fraction part is r_k / (den * 2^k)
    with r_k the long-division remainder, so each layer is the integer
    a_k * den + (1 - 2 a_k) * r_k over den * 2^k.  Layers repeat scaled
    by 2^-L beyond the preperiod, so one period block and a geometric
    factor finish the series; the whole sum is assembled in integer
    arithmetic and reduced once.
    """
    x = _as_fraction(q)
    frac = x - math.floor(x)
    num, den = frac.numerator, frac.denominator
    bits: list[int] = []
    rems: list[int] = []
    seen: dict[int, int] = {}
    r = num
    while r not in seen:
        seen[r] = len(bits)
        r *= 2
        bits.append(r // den)
        r %= den
        rems.append(r)
    P = seen[r]
    L = len(bits) - P
    head_acc = 0
    for k in range(P):
        head_acc = (head_acc << 1) + (den - rems[k] if bits[k] else rems[k])
    block_acc = 0
    for k in range(P, P + L):
        block_acc = (block_acc << 1) + (den - rems[k] if bits[k] else rems[k])
    geom = 2**L - 1
    return Fraction(head_acc * geom + block_acc, den * 2**P * geom)


@dataclass(frozen=True)
class CertifiedValue:
    """Partial sum with a rigorous tail bound: |T(x) - value| <= error_bound."""

    value: Fraction
    error_bound: Fraction
    terms_used: int

    @property
    def lower(self) -> Fraction:
        return self.value - self.error_bound

    @property
    def upper(self) -> Fraction:
        return self.value + self.error_bound

    def contains(self, v: Fraction) -> bool:
        return self.lower <= v <= self.upper


def takagi_certified(q: Fraction | int, n_terms: int) -> CertifiedValue:
    """Bracket T(q) by the n-term partial sum; the tail is at most 2^-n."""
    if n_terms < 1:
        raise ValueError(f"term count must be >= 1, got {n_terms}")
    q = Fraction(q)
    return CertifiedValue(
        value=G_n(q, n_terms),
        error_bound=Fraction(1, 2**n_terms),
        terms_used=n_terms,
    )


class TailSplit(NamedTuple):
    hat_x: Fraction
    tilde_x: Fraction
    hat_t: Fraction
    tilde_t: Fraction


def split_tail(e: DigitExpansion, m: int) -> TailSplit:
    """Split point and value at layer index m.

    hat_x carries digits 1..m-1, tilde_x the rest; hat_t sums layers
    below m, tilde_t the layers from m on.  The tail piece satisfies
    the scaling identity tilde_t = T(2^(m-1) * tilde_x) / 2^(m-1).
    """
    if m < 1:
        raise ValueError(f"split index must be >= 1, got {m}")
    x = e.to_rational()
    hat_x = sum(Fraction(e.digit(j), 2**j) for j in range(1, m))
    tilde_x = e.fractional_value() - hat_x
    hat_t = sum(g_k(x, k) for k in range(1, m))
    tilde_t = takagi_exact(x) - hat_t
    return TailSplit(hat_x=hat_x, tilde_x=tilde_x, hat_t=hat_t, tilde_t=tilde_t)


def takagi_max_value() -> Fraction:
    """The global maximum value of the function."""
    return _TWO_THIRDS
