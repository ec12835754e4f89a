"""Membership tests for the maximum set and the superdifferentiability sets.

Three digit-defined sets matter here: the set of points where the
function attains its maximum 2/3 (odd/even digit pairs each sum to 1),
the countable set of points with an eventually alternating digit tail
(interval-valued superdifferential), and the full superdifferentiability
set (pairs sum to 1 from some index on), which decomposes as a dyadic
head plus a scaled maximum-set point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .digits import DigitExpansion
from .differentials import CaseTag, classify
from .evaluator import takagi_exact, takagi_max_value

SET_M = "M"
SET_A = "A"
SET_SCRIPT_A = "ScriptA"


@dataclass(frozen=True)
class SetWitness:
    """Structural witness for membership in the superdifferentiability set.

    The member decomposes as dyadic_part + scaled_point / 2^(m-1), with
    dyadic_part on the level-m grid and scaled_point in the maximum set.
    """

    set_id: str
    m: int
    dyadic_part: Fraction
    scaled_point: Fraction


def in_M(e: DigitExpansion) -> bool:
    """Maximum-set test: digit pairs (a_1,a_2), (a_3,a_4), ... each sum to 1.

    The pair predicate is eventually periodic, so a window of length
    preperiod + lcm(2, period) decides it.  The integer part plays no
    role; the digit stream is tested as written.
    """
    P, L = e.preperiod_len, e.period_len
    n_max = P // 2 + math.lcm(2, L) // 2 + 1
    return all(e.digit(2 * n - 1) + e.digit(2 * n) == 1 for n in range(1, n_max + 1))


def in_A(e: DigitExpansion) -> int | None:
    """Minimal index from which consecutive digits always differ, if any."""
    cls = classify(e)
    if cls.case is CaseTag.TAIL_ALTERNATING:
        return cls.witness_m
    return None


def a_identity_member(m: int, k: int) -> Fraction:
    """A point of the alternating-tail set: 4 / (3 * 2^m) + k / 2^(m-1)."""
    if m < 1:
        raise ValueError(f"index must be >= 1, got {m}")
    return Fraction(4, 3 * 2**m) + Fraction(k, 2 ** (m - 1))


def in_script_A(e: DigitExpansion) -> SetWitness | None:
    """Decompose a superdifferentiable point, or return None.

    Splits off the digits below the classifier witness as a dyadic head
    and rescales the tail; the rescaled tail always lands in the maximum
    set.  A witness exists exactly when the superdifferential is
    nonempty.
    """
    cls = classify(e)
    if cls.case not in (CaseTag.TAIL_ALTERNATING, CaseTag.PAIR_SUMMING):
        return None
    m = cls.witness_m
    x = e.to_rational()
    tilde_x = e.fractional_value() - sum(Fraction(e.digit(j), 2**j) for j in range(1, m))
    scaled = tilde_x * 2 ** (m - 1)
    return SetWitness(
        set_id=SET_SCRIPT_A,
        m=m,
        dyadic_part=x - tilde_x,
        scaled_point=scaled,
    )


def max_value_check(e: DigitExpansion) -> bool:
    """True iff the exact function value equals the maximum 2/3."""
    return takagi_exact(e) == takagi_max_value()
