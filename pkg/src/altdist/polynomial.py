"""Sparse Laurent polynomials with integer coefficients.

Exponents live on a quarter-integer grid and are stored multiplied by 4, so
the bracket variable ``A`` and the Jones variable ``t`` (half-integer powers
for links with an even number of components) share one type.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping

GRID = 4


class LaurentPolynomial:
    __slots__ = ("_terms", "var")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = (), var: str = "t"):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, int] = {}
        for e4, c in items:
            acc[int(e4)] = acc.get(int(e4), 0) + int(c)
        self._terms = {e: c for e, c in acc.items() if c}
        self.var = var

    @classmethod
    def monomial(cls, exponent, coeff: int = 1, var: str = "t") -> "LaurentPolynomial":
        return cls({_scale(exponent): coeff}, var)

    @classmethod
    def constant(cls, c: int, var: str = "t") -> "LaurentPolynomial":
        return cls({0: c}, var)

    @property
    def terms(self) -> dict[int, int]:
        """Scaled exponent (x4) -> coefficient."""
        return dict(self._terms)

    def coefficients(self) -> dict[Fraction, int]:
        return {Fraction(e, GRID): c for e, c in sorted(self._terms.items())}

    def coefficient(self, exponent) -> int:
        return self._terms.get(_scale(exponent), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def max_degree(self) -> Fraction:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return Fraction(max(self._terms), GRID)

    def min_degree(self) -> Fraction:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return Fraction(min(self._terms), GRID)

    def span(self) -> Fraction:
        return self.max_degree() - self.min_degree()

    # arithmetic ---------------------------------------------------------

    def _coerce(self, other) -> "LaurentPolynomial":
        if isinstance(other, LaurentPolynomial):
            return other
        if isinstance(other, int):
            return LaurentPolynomial({0: other}, self.var)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc = dict(self._terms)
        for e, c in other._terms.items():
            acc[e] = acc.get(e, 0) + c
        return LaurentPolynomial(acc, self.var)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial({e: -c for e, c in self._terms.items()}, self.var)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                acc[e1 + e2] = acc.get(e1 + e2, 0) + c1 * c2
        return LaurentPolynomial(acc, self.var)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials can be inverted")
            (e, c), = self._terms.items()
            if c not in (1, -1):
                raise ValueError("only unit monomials can be inverted")
            return LaurentPolynomial({-e * (-n): c ** (-n)}, self.var)
        out = LaurentPolynomial({0: 1}, self.var)
        for _ in range(n):
            out = out * self
        return out

    def substitute_power(self, factor, var: str) -> "LaurentPolynomial":
        """Replace the variable ``x`` by ``y**factor`` (exponent rescaling)."""
        factor = Fraction(factor)
        acc = {}
        for e, c in self._terms.items():
            new = e * factor
            if new.denominator != 1:
                raise ValueError(f"exponent {Fraction(e, GRID)} leaves the quarter grid")
            acc[int(new)] = c
        return LaurentPolynomial(acc, var)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPolynomial({0: other}, self.var)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __repr__(self):
        return f"LaurentPolynomial({self.to_text()!r}, var={self.var!r})"

    def __str__(self):
        return self.to_text()

    # text form ----------------------------------------------------------

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for n, (e, c) in enumerate(sorted(self._terms.items())):
            mag = abs(c)
            power = _power_text(self.var, Fraction(e, GRID))
            if not power:
                body = str(mag)
            elif mag == 1:
                body = power
            else:
                body = f"{mag}*{power}"
            if n == 0:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    @classmethod
    def parse(cls, text: str, var: str = "t") -> "LaurentPolynomial":
        s = text.replace(" ", "")
        if s in ("", "0"):
            return cls({}, var)
        v = re.escape(var)
        term = re.compile(
            rf"([+-]?)(?:(\d+)\*?)?(?:{v}(?:\^(?:\((-?\d+(?:/\d+)?)\)|(-?\d+(?:/\d+)?)))?)?"
        )
        pos = 0
        acc: dict[int, int] = {}
        while pos < len(s):
            m = term.match(s, pos)
            if not m or m.end() == pos or (m.group(2) is None and var not in m.group(0)):
                raise ValueError(f"cannot parse polynomial at {s[pos:]!r}")
            sign = -1 if m.group(1) == "-" else 1
            coeff = int(m.group(2)) if m.group(2) else 1
            if var in m.group(0):
                exp = Fraction(m.group(3) or m.group(4) or "1")
            else:
                exp = Fraction(0)
            acc[_scale(exp)] = acc.get(_scale(exp), 0) + sign * coeff
            pos = m.end()
        return cls(acc, var)


def _scale(exponent) -> int:
    v = Fraction(exponent) * GRID
    if v.denominator != 1:
        raise ValueError(f"exponent {exponent} is not on the quarter grid")
    return int(v)


def _power_text(var: str, e: Fraction) -> str:
    if e == 0:
        return ""
    if e == 1:
        return var
    if e.denominator == 1:
        return f"{var}^{e.numerator}"
    return f"{var}^({e.numerator}/{e.denominator})"
