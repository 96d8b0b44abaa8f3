"""Closed intervals of exact rationals; ``None`` stands for an infinite end."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


def _frac(x) -> Fraction | None:
    return None if x is None else Fraction(x)


@dataclass(frozen=True)
class Interval:
    lo: Fraction | None
    hi: Fraction | None

    def __init__(self, lo=None, hi=None):
        object.__setattr__(self, "lo", _frac(lo))
        object.__setattr__(self, "hi", _frac(hi))

    @classmethod
    def point(cls, x) -> "Interval":
        return cls(x, x)

    @classmethod
    def at_least(cls, x) -> "Interval":
        return cls(x, None)

    @property
    def is_empty(self) -> bool:
        return self.lo is not None and self.hi is not None and self.lo > self.hi

    @property
    def is_point(self) -> bool:
        return self.lo is not None and self.lo == self.hi

    def __contains__(self, x) -> bool:
        x = Fraction(x)
        return (self.lo is None or self.lo <= x) and (self.hi is None or x <= self.hi)

    def intersect(self, other: "Interval") -> "Interval":
        lo = self.lo if other.lo is None else other.lo if self.lo is None else max(self.lo, other.lo)
        hi = self.hi if other.hi is None else other.hi if self.hi is None else min(self.hi, other.hi)
        return Interval(lo, hi)

    def __add__(self, other: "Interval") -> "Interval":
        lo = None if self.lo is None or other.lo is None else self.lo + other.lo
        hi = None if self.hi is None or other.hi is None else self.hi + other.hi
        return Interval(lo, hi)

    def abs_lower_bound(self) -> Fraction:
        """Smallest ``|x|`` over the interval."""
        if self.lo is not None and self.lo > 0:
            return self.lo
        if self.hi is not None and self.hi < 0:
            return -self.hi
        return Fraction(0)

    def to_json(self) -> list:
        return [_num_json(self.lo), _num_json(self.hi)]

    def __str__(self) -> str:
        lo = "-inf" if self.lo is None else _num_text(self.lo)
        hi = "inf" if self.hi is None else _num_text(self.hi)
        return f"[{lo}, {hi}]"


def _num_text(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _num_json(x: Fraction | None):
    if x is None:
        return None
    # half-integers (the only non-integers that occur) are exact in binary
    return x.numerator if x.denominator == 1 else float(x)
