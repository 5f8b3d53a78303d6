"""Parsing and formatting of exact rationals for the CSV/JSON surfaces.

All numeric values cross the serialization boundary as ``num/den`` strings
in lowest terms, never as floats.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import ValidationError

_RATIONAL_RE = re.compile(r"^[+-]?\d+(?:/\d+)?$")


def parse_fraction(text: str) -> Fraction:
    """Parse ``"3/10"`` or ``"2"`` into an exact :class:`Fraction`."""
    text = text.strip()
    if not _RATIONAL_RE.match(text):
        raise ValidationError(f"malformed rational {text!r} (expected num or num/den)")
    if "/" in text:
        num, den = text.split("/")
        if int(den) == 0:
            raise ValidationError(f"zero denominator in rational {text!r}")
        return Fraction(int(num), int(den))
    return Fraction(int(text))


def parse_probability(text: str) -> Fraction:
    """Parse a rational and require it to lie in [0, 1]."""
    p = parse_fraction(text)
    if not 0 <= p <= 1:
        raise ValidationError(f"p must lie in [0,1], got {text}")
    return p


def format_fraction(q: Fraction) -> str:
    """Render a fraction as ``num/den`` in lowest terms (``0`` -> ``0/1``)."""
    return f"{q.numerator}/{q.denominator}"


def parse_grid(step_text: str) -> tuple[Fraction, ...]:
    """Expand a grid spec like ``1/64`` into the points k*step inside [0, 1].

    The spec names the step; the grid is every nonnegative multiple of the
    step that lies in [0, 1].
    """
    step = parse_fraction(step_text)
    if step <= 0 or step > 1:
        raise ValidationError(f"grid step must lie in (0,1], got {step_text}")
    points = []
    k = 0
    while k * step <= 1:
        points.append(k * step)
        k += 1
    return tuple(points)
