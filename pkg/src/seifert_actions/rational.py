"""Exact rational arithmetic: extended Euclid, lcm, and angles in Q/Z.

Everything downstream (presentation sums, torus phases, obstruction
witnesses) is exact; no floating point is used anywhere.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "Fraction",
    "RationalAngle",
    "ZERO_ANGLE",
    "angle",
    "ext_gcd",
    "lcm_list",
    "parse_fraction",
]

_FRACTION_RE = re.compile(r"^(-?\d+)(?:/(\d+))?$")


def ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, s, t) with g = gcd(a, b) > 0 and s*a + t*b = g."""
    if a == 0 and b == 0:
        raise ValueError("ext_gcd(0, 0) is undefined")
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def lcm_list(ns: list[int]) -> int:
    """Least common multiple of a nonempty list of positive integers."""
    if not ns:
        raise ValueError("lcm_list requires a nonempty list")
    for n in ns:
        if n < 1:
            raise ValueError(f"lcm_list entries must be >= 1, got {n}")
    return math.lcm(*ns)


def parse_fraction(text: str) -> Fraction:
    """Parse 'a' or 'a/b' (b > 0) into an exact Fraction."""
    m = _FRACTION_RE.match(text.strip())
    if m is None:
        raise ValueError(f"not a fraction: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(num, den)


@dataclass(frozen=True)
class RationalAngle:
    """An element of Q/Z stored by its canonical representative in [0, 1).

    Models a point exp(2*pi*i*t) of the unit circle additively, so that
    circle multiplication is angle addition.
    """

    value: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "value", self.value % 1)

    def __add__(self, other: RationalAngle) -> RationalAngle:
        return RationalAngle(self.value + other.value)

    def __sub__(self, other: RationalAngle) -> RationalAngle:
        return RationalAngle(self.value - other.value)

    def __neg__(self) -> RationalAngle:
        return RationalAngle(-self.value)

    def scale(self, k: int) -> RationalAngle:
        return RationalAngle(self.value * k)

    def is_zero(self) -> bool:
        return self.value == 0

    @property
    def order(self) -> int:
        """Order of the angle in Q/Z (1 for the zero angle)."""
        return self.value.denominator

    def __str__(self) -> str:
        return str(self.value)


def angle(numerator: int, denominator: int = 1) -> RationalAngle:
    return RationalAngle(Fraction(numerator, denominator))


ZERO_ANGLE = angle(0)
