"""Exact rational scalars.

All arithmetic in the package is exact: scalars are ``fractions.Fraction``
values, normalized to plain ``int`` whenever the denominator is 1.  Python's
numeric tower makes the two interoperable (``Fraction(3) == 3``), and integer
arithmetic is considerably faster in the brute-force loops, so normalization
is applied at every construction boundary.
"""

from __future__ import annotations

import re
from fractions import Fraction

Scalar = int | Fraction

_RATIONAL_RE = re.compile(r"^[+-]?\d+(?:/\d+)?$")


def norm(x) -> Scalar:
    """Normalize a scalar to int when integral, Fraction otherwise."""
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    raise TypeError(f"not an exact scalar: {x!r}")


def rational(num, den=1) -> Scalar:
    return norm(Fraction(num, den))


def parse_rational(text: str) -> Scalar:
    """Parse ``"p"`` or ``"p/q"``.  Decimals and whitespace are rejected."""
    if not isinstance(text, str) or not _RATIONAL_RE.match(text):
        raise ValueError(f"malformed rational {text!r} (expected 'p' or 'p/q')")
    if "/" in text:
        num, den = text.split("/")
        if int(den) == 0:
            raise ValueError(f"malformed rational {text!r} (zero denominator)")
        return norm(Fraction(int(num), int(den)))
    return int(text)


def format_rational(x: Scalar) -> str:
    """Canonical form: gcd-reduced, positive denominator, 'p' when integral."""
    x = norm(x)
    if isinstance(x, int):
        return str(x)
    return f"{x.numerator}/{x.denominator}"
