"""Parsing of point literals and deterministic number rendering.

Points are accepted either as reduced-fraction text ("2/3", "-1/3", "7")
or as expansion literals ("0.01(10)").  Output renders rationals as
"p/q" and decimals at an explicit digit count, so records never contain
a bare binary float.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .digits import DigitExpansion
from .errors import ParseError

_RATIONAL_RE = re.compile(r"^([+-]?\d+)(?:/([+-]?\d+))?$")


def parse_point(text: str) -> Fraction:
    """Parse "p/q" or an expansion literal "k.pre(per)" to an exact value."""
    t = text.strip()
    if "." in t:
        return DigitExpansion.parse(t).to_rational()
    m = _RATIONAL_RE.match(t)
    if m is None:
        raise ParseError(f"cannot parse point {t!r}: expected 'p/q' or 'k.pre(per)'")
    num = int(m.group(1))
    if m.group(2) is None:
        return Fraction(num)
    den = int(m.group(2))
    if den == 0:
        raise ParseError(f"zero denominator in point {t!r}")
    return Fraction(num, den)


def fraction_str(q: Fraction) -> str:
    """Reduced-fraction rendering, e.g. "2/3", "-1/3", "0"."""
    return str(q)


def decimal_str(q: Fraction, digits: int = 12) -> str:
    """Exact decimal rendering with ``digits`` places, half away from zero."""
    if digits < 0:
        raise ValueError(f"digit count must be >= 0, got {digits}")
    sign = "-" if q < 0 else ""
    a = -q if q < 0 else q
    scale = 10**digits
    whole, rem = divmod(a.numerator * scale, a.denominator)
    if 2 * rem >= a.denominator:
        whole += 1
    int_part, frac_part = divmod(whole, scale)
    if digits == 0:
        return f"{sign}{int_part}"
    return f"{sign}{int_part}.{frac_part:0{digits}d}"
