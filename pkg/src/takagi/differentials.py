"""Slope bookkeeping and the superdifferential classifier.

Off the dyadic grid each layer g_n is differentiable with slope
g'_n = 1 - 2 a_n, so the partial-sum slopes G'_n are integers read off
the digits.  Whether the digit tail eventually alternates, pairs up to
sum 1, or does neither decides the Frechet superdifferential: a unit
interval with integer endpoints, an integer singleton, or empty.  The
module also provides the exact difference-quotient identities (mirror
points, one-sided dyadic quotients) and a numerical Dini estimator used
to cross-validate the classifier.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .digits import DigitExpansion, neighbor_bracket
from .errors import DomainError
from .evaluator import takagi_exact

INF = float("inf")

# A sampled quotient beyond this magnitude is treated as divergent even
# without monotone growth across depths.
DIVERGENCE_THRESHOLD = 1000


def _require_non_dyadic(e: DigitExpansion, what: str) -> None:
    if e.is_dyadic:
        raise DomainError(f"{what} undefined at dyadic point {e.to_rational()}")


def g_prime(e: DigitExpansion, n: int) -> int:
    """Slope of layer n at a non-dyadic point: +1 for digit 0, -1 for 1."""
    _require_non_dyadic(e, "layer slope")
    return 1 - 2 * e.digit(n)


def G_prime_n(e: DigitExpansion, n: int) -> int:
    """Slope of the n-layer partial sum at a non-dyadic point."""
    _require_non_dyadic(e, "partial-sum slope")
    if n < 0:
        raise ValueError(f"slope index must be >= 0, got {n}")
    return n - 2 * sum(e.digit(k) for k in range(1, n + 1))


@dataclass(frozen=True)
class SlopeLimits:
    """liminf/limsup of the partial-sum slopes G'_n as n grows."""

    liminf: int | float
    limsup: int | float

    @property
    def finite(self) -> bool:
        return not (math.isinf(self.liminf) or math.isinf(self.limsup))

    @property
    def gap(self) -> int | float:
        return self.limsup - self.liminf


def slope_limits(e: DigitExpansion) -> SlopeLimits:
    """Limit behaviour of G'_n from one period window of prefix sums.

    If the period's slope sum is nonzero the sequence drifts to +-inf.
    Otherwise G'_(n+L) = G'_n for n >= P, so the recurrent values are
    exactly G'_P .. G'_(P+L-1); preperiod-only values occur finitely
    often and are not limit points.
    """
    _require_non_dyadic(e, "slope limits")
    P, L = e.preperiod_len, e.period_len
    s = sum(1 - 2 * b for b in e.period)
    if s > 0:
        return SlopeLimits(INF, INF)
    if s < 0:
        return SlopeLimits(-INF, -INF)
    prefix = 0
    window: list[int] = []
    for n in range(1, P + L):
        prefix += 1 - 2 * e.digit(n)
        if n >= P:
            window.append(prefix)
    if P == 0:
        window.append(0)  # G'_0 recurs at every multiple of L
    return SlopeLimits(min(window), max(window))


class CaseTag(enum.Enum):
    DYADIC = "Dyadic"
    TAIL_ALTERNATING = "TailAlternating"
    PAIR_SUMMING = "PairSumming"
    IRREGULAR = "Irregular"


@dataclass(frozen=True)
class Classification:
    """Which digit-tail case holds, with the minimal witness index.

    c_x = (m-1) - 2 * sum(a_j, j < m) is the candidate slope attached
    to the witness; absent for Dyadic and Irregular.
    """

    case: CaseTag
    witness_m: int | None = None
    c_x: int | None = None


def candidate_slope(e: DigitExpansion, m: int) -> int:
    """The integer c = (m-1) - 2 * (number of 1-digits before m)."""
    if m < 1:
        raise ValueError(f"witness index must be >= 1, got {m}")
    return (m - 1) - 2 * sum(e.digit(j) for j in range(1, m))


def is_tail_alternating_witness(e: DigitExpansion, m: int) -> bool:
    """True iff consecutive digits differ at every index n >= m."""
    if m < 1 or e.is_dyadic:
        return False
    P, L = e.preperiod_len, e.period_len
    end = max(P, m - 1) + L
    return all(e.digit(n) != e.digit(n + 1) for n in range(m, end + 1))


def is_pair_summing_witness(e: DigitExpansion, m: int) -> bool:
    """True iff the digit pairs (m+2i, m+2i+1) each sum to 1."""
    if m < 1 or e.is_dyadic:
        return False
    P, L = e.preperiod_len, e.period_len
    limit = max(P, m - 1) + 2 * math.lcm(2, L)
    i = 0
    while m + 2 * i + 1 <= limit:
        if e.digit(m + 2 * i) + e.digit(m + 2 * i + 1) != 1:
            return False
        i += 1
    return True


def classify(e: DigitExpansion) -> Classification:
    """Assign one of the four digit-tail cases, with minimal witness.

    The scans terminate because both conditions depend only on the digit
    stream shifted by the candidate index, which has finitely many shift
    classes modulo the period (and its parity).
    """
    if e.is_dyadic:
        return Classification(CaseTag.DYADIC)
    P, L = e.preperiod_len, e.period_len
    if is_tail_alternating_witness(e, P + 1):
        m = P + 1
        while m > 1 and e.digit(m - 1) != e.digit(m):
            m -= 1
        return Classification(CaseTag.TAIL_ALTERNATING, m, candidate_slope(e, m))
    for m in range(1, P + 2 * L + 1):
        if is_pair_summing_witness(e, m):
            return Classification(CaseTag.PAIR_SUMMING, m, candidate_slope(e, m))
    return Classification(CaseTag.IRREGULAR)


class SuperdiffKind(enum.Enum):
    EMPTY = "empty"
    SINGLETON = "singleton"
    INTERVAL = "interval"


@dataclass(frozen=True)
class Superdifferential:
    """Empty set, integer singleton, or unit interval [c, c+1]."""

    kind: SuperdiffKind
    lo: int | None = None
    hi: int | None = None

    def __post_init__(self) -> None:
        if self.kind is SuperdiffKind.EMPTY:
            if self.lo is not None or self.hi is not None:
                raise ValueError("empty result carries no endpoints")
            return
        for v in (self.lo, self.hi):
            if not isinstance(v, int):
                raise ValueError(f"endpoints must be integers, got {v!r}")
        if self.kind is SuperdiffKind.SINGLETON:
            if self.lo != self.hi:
                raise ValueError("singleton needs lo == hi")
        elif self.hi != self.lo + 1:
            raise ValueError("interval must have unit length")

    @classmethod
    def empty(cls) -> "Superdifferential":
        return cls(SuperdiffKind.EMPTY)

    @classmethod
    def singleton(cls, c: int) -> "Superdifferential":
        return cls(SuperdiffKind.SINGLETON, c, c)

    @classmethod
    def interval(cls, lo: int, hi: int) -> "Superdifferential":
        return cls(SuperdiffKind.INTERVAL, lo, hi)

    @property
    def is_empty(self) -> bool:
        return self.kind is SuperdiffKind.EMPTY

    def contains(self, v: Fraction | int) -> bool:
        if self.kind is SuperdiffKind.EMPTY:
            return False
        return self.lo <= v <= self.hi

    def elements(self) -> tuple[int, ...]:
        """The integer endpoints (both, for an interval)."""
        if self.kind is SuperdiffKind.EMPTY:
            return ()
        if self.kind is SuperdiffKind.SINGLETON:
            return (self.lo,)
        return (self.lo, self.hi)

    def __str__(self) -> str:
        if self.kind is SuperdiffKind.EMPTY:
            return "empty"
        if self.kind is SuperdiffKind.SINGLETON:
            return f"{{{self.lo}}}"
        return f"[{self.lo},{self.hi}]"


def _superdiff_from_witness(e: DigitExpansion, case: CaseTag, m: int) -> Superdifferential:
    c = candidate_slope(e, m)
    if case is CaseTag.TAIL_ALTERNATING:
        if e.digit(m) == 0:
            return Superdifferential.interval(c, c + 1)
        return Superdifferential.interval(c - 1, c)
    return Superdifferential.singleton(c)


def superdifferential(e: DigitExpansion) -> Superdifferential:
    """The Frechet superdifferential, by the digit-tail classification.

    Dyadic and irregular points get the empty set; an eventually
    alternating tail gives the unit interval c + [0,1] (digit 0 at the
    witness) or c + [-1,0] (digit 1); a pair-summing tail gives {c}.
    """
    cls = classify(e)
    if cls.case in (CaseTag.DYADIC, CaseTag.IRREGULAR):
        return Superdifferential.empty()
    return _superdiff_from_witness(e, cls.case, cls.witness_m)


def superdifferential_at_witness(e: DigitExpansion, m: int) -> Superdifferential:
    """Superdifferential computed from a caller-chosen valid witness.

    Any valid witness must give the same result; this entry point exists
    so that witness independence is testable rather than assumed.
    """
    if is_tail_alternating_witness(e, m):
        return _superdiff_from_witness(e, CaseTag.TAIL_ALTERNATING, m)
    if is_pair_summing_witness(e, m):
        return _superdiff_from_witness(e, CaseTag.PAIR_SUMMING, m)
    raise DomainError(f"{m} is not a valid witness index for {e}")


class Subdifferential(enum.Enum):
    """The Frechet subdifferential: all of R on the dyadic grid, else empty."""

    EMPTY = "empty"
    ALL_REALS = "R"


def subdifferential(e: DigitExpansion) -> Subdifferential:
    return Subdifferential.ALL_REALS if e.is_dyadic else Subdifferential.EMPTY


class MirrorQuotient(NamedTuple):
    x_prime: Fraction
    quotient: Fraction


def mirror_quotient(e: DigitExpansion, n: int) -> MirrorQuotient:
    """Reflect x through the left bracket point and take the quotient.

    x' = 2 x_n - x; the quotient (T(x') - T(x)) / (x' - x) is an exact
    integer predicted by :func:`predicted_mirror_slope`.
    """
    if n < 3:
        raise ValueError(f"mirror level must be >= 3, got {n}")
    _require_non_dyadic(e, "mirror quotient")
    x = e.to_rational()
    bracket = neighbor_bracket(e, n)
    x_prime = 2 * bracket.x_n - x
    quotient = (takagi_exact(x_prime) - takagi_exact(x)) / (x_prime - x)
    return MirrorQuotient(x_prime=x_prime, quotient=quotient)


def predicted_mirror_slope(e: DigitExpansion, n: int) -> int:
    """Digit-level prediction for the mirror quotient at level n.

    With j* the last index below n holding digit 1, the quotient equals
    G'_{j*} + 1 (equivalently G'_{n-2} when j* = n-1).  When no digit 1
    occurs before n the bracket never moved, x' is a pure reflection of
    x about an integer, and the quotient is 0 by symmetry.
    """
    if n < 3:
        raise ValueError(f"mirror level must be >= 3, got {n}")
    _require_non_dyadic(e, "mirror slope")
    for j in range(n - 1, 0, -1):
        if e.digit(j) == 1:
            return G_prime_n(e, j) + 1
    return 0


def dyadic_level(e: DigitExpansion) -> int:
    """Minimal n with x on the level-n grid (spacing 2^-(n-1))."""
    if not e.is_dyadic:
        raise DomainError(f"{e.to_rational()} is not dyadic")
    return e.preperiod_len + 1


def dyadic_quotient(e: DigitExpansion, p: int) -> Fraction:
    """Right difference quotient (T(x + 2^-p) - T(x)) * 2^p at a dyadic x.

    Grows linearly in p: it equals the sum of the first n right-hand
    layer slopes plus (p - n), with n the minimal grid level of x.
    """
    n = dyadic_level(e)
    if p < n + 1:
        raise ValueError(f"depth p must be >= {n + 1}, got {p}")
    x = e.to_rational()
    h = Fraction(1, 2**p)
    return (takagi_exact(x + h) - takagi_exact(x)) / h


def predicted_dyadic_slope(e: DigitExpansion, p: int) -> int:
    """Digit-level prediction for :func:`dyadic_quotient`."""
    n = dyadic_level(e)
    if p < n + 1:
        raise ValueError(f"depth p must be >= {n + 1}, got {p}")
    return sum(1 - 2 * e.digit(j) for j in range(1, n + 1)) + (p - n)


@dataclass(frozen=True)
class DiniEstimate:
    """Extremal sampled difference quotients near a point.

    d_minus_est is the minimum over sampled left steps (an upper proxy
    for the left liminf derivative), D_plus_est the maximum over sampled
    right steps (a lower proxy for the right limsup derivative).  Values
    are exact rationals of the sampled quotients; divergence flags fire
    on monotone growth across three consecutive depths or on magnitude
    beyond the configured threshold.
    """

    d_minus_est: Fraction
    D_plus_est: Fraction
    depth: int
    width: int
    divergent_up: bool
    divergent_down: bool


def _quotient_extremes(
    x: Fraction,
    t_x: Fraction,
    e: DigitExpansion | None,
    e_neg: DigitExpansion | None,
    depth: int,
    width: int,
) -> tuple[Fraction, Fraction]:
    lefts: list[Fraction] = []
    rights: list[Fraction] = []
    for j in range(1, width + 1):
        h = Fraction(j, 2**depth)
        rights.append((takagi_exact(x + h) - t_x) / h)
        lefts.append((takagi_exact(x - h) - t_x) / (-h))
    if e is not None:
        # low levels give mirror points far from x; a limit estimate only
        # admits samples that shrink with depth, so start at depth/2
        for n in range(max(3, depth // 2), depth + 1):
            lefts.append(mirror_quotient(e, n).quotient)
            # reflecting the bracket of -x yields exact right-side samples
            rights.append(-mirror_quotient(e_neg, n).quotient)
    return min(lefts), max(rights)


def dini_estimate(q: Fraction | int, depth: int = 24, width: int = 8) -> DiniEstimate:
    """Sample difference quotients on a dyadic grid plus mirror points.

    Steps are +-j * 2^-depth for j <= width; non-dyadic points also get
    the exact mirror quotients on both sides for levels in
    [depth/2, depth], a window that closes in on the point as the depth
    grows.  Samples at depth-2 and depth-1 feed divergence detection.
    """
    if depth < 4:
        raise DomainError(f"depth must be >= 4, got {depth}")
    if width < 2:
        raise DomainError(f"width must be >= 2, got {width}")
    x = Fraction(q)
    e = DigitExpansion.from_rational(x)
    t_x = takagi_exact(x)
    if e.is_dyadic:
        exp, exp_neg = None, None
    else:
        exp, exp_neg = e, DigitExpansion.from_rational(-x)
    mins: list[Fraction] = []
    maxs: list[Fraction] = []
    for d in (depth - 2, depth - 1, depth):
        lo, hi = _quotient_extremes(x, t_x, exp, exp_neg, d, width)
        mins.append(lo)
        maxs.append(hi)
    growing_up = maxs[0] < maxs[1] < maxs[2] and maxs[2] - maxs[0] >= 1
    growing_down = mins[0] > mins[1] > mins[2] and mins[0] - mins[2] >= 1
    return DiniEstimate(
        d_minus_est=mins[2],
        D_plus_est=maxs[2],
        depth=depth,
        width=width,
        divergent_up=growing_up or maxs[2] > DIVERGENCE_THRESHOLD,
        divergent_down=growing_down or mins[2] < -DIVERGENCE_THRESHOLD,
    )


def is_local_max(e: DigitExpansion) -> bool:
    """True iff the function has a local maximum at the point.

    Equivalent to 0 lying in the superdifferential: some valid witness
    has candidate slope 0, and the head piece is then flat while the
    tail piece is maximal.
    """
    return superdifferential(e).contains(0)
