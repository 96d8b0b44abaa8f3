"""Unoriented 2-tangles and the closures used to build test diagrams.

A tangle is a list of crossings (4-tuples read counterclockwise, under
strand at positions 0 and 2) plus its four ends, listed counterclockwise as
``(SW, SE, NE, NW)``.  Labels are arbitrary hashables; every label occurs
exactly twice among crossing positions and ends.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Hashable

from .diagram import PlanarDiagram, assemble
from .errors import MalformedTokenError, TangleError

SW, SE, NE, NW = range(4)


@dataclass(frozen=True)
class Tangle:
    crossings: tuple[tuple[Hashable, ...], ...]
    ends: tuple[Hashable, Hashable, Hashable, Hashable]
    loops: int = 0

    @property
    def crossing_count(self) -> int:
        return len(self.crossings)

    def tagged(self, tag) -> "Tangle":
        return Tangle(
            tuple(tuple((tag, x) for x in c) for c in self.crossings),
            tuple((tag, x) for x in self.ends),
            self.loops,
        )

    def __add__(self, other: "Tangle") -> "Tangle":
        return horizontal_sum(self, other)

    def __mul__(self, other: "Tangle") -> "Tangle":
        return vertical_stack(self, other)

    def to_fragment(self) -> str:
        """Text form: PD terms on integer labels plus ``B1=.. B4=..``."""
        ids: dict = {}
        for c in self.crossings:
            for x in c:
                ids.setdefault(x, len(ids) + 1)
        for x in self.ends:
            ids.setdefault(x, len(ids) + 1)
        terms = ["X({},{},{},{})".format(*(ids[x] for x in c)) for c in self.crossings]
        terms += [f"B{n + 1}={ids[x]}" for n, x in enumerate(self.ends)]
        return " ".join(terms)


def _glue(crossings, ends, joins, loops) -> Tangle:
    """Identify pairs of labels; classes that close up without crossings become loops."""
    parent: dict = {}

    def find(x):
        parent.setdefault(x, x)
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in joins:
        ra, rb = find(a), find(b)
        if ra == rb:
            # joining the two ends of one crossingless arc
            loops += 1
        else:
            parent[ra] = rb
    new_crossings = tuple(tuple(find(x) for x in c) for c in crossings)
    new_ends = tuple(find(x) for x in ends)
    return Tangle(new_crossings, new_ends, loops)


def crossing(over: str = "/") -> Tangle:
    """Single crossing; ``over`` names the direction of the over-strand."""
    if over == "/":
        return Tangle(((SE, NE, NW, SW),), (SW, SE, NE, NW))
    if over == "\\":
        return Tangle(((SW, SE, NE, NW),), (SW, SE, NE, NW))
    raise TangleError(f"crossing type must be '/' or '\\', got {over!r}")


def zero_tangle() -> Tangle:
    """Two horizontal arcs (SW-SE and NW-NE)."""
    return Tangle((), ("s", "s", "n", "n"))


def infinity_tangle() -> Tangle:
    """Two vertical arcs (SW-NW and SE-NE)."""
    return Tangle((), ("w", "e", "e", "w"))


def horizontal_sum(t1: Tangle, t2: Tangle) -> Tangle:
    a, b = t1.tagged(0), t2.tagged(1)
    joins = [(a.ends[NE], b.ends[NW]), (a.ends[SE], b.ends[SW])]
    ends = (a.ends[SW], b.ends[SE], b.ends[NE], a.ends[NW])
    return _glue(a.crossings + b.crossings, ends, joins, t1.loops + t2.loops)


def vertical_stack(lower: Tangle, upper: Tangle) -> Tangle:
    a, b = lower.tagged(0), upper.tagged(1)
    joins = [(a.ends[NW], b.ends[SW]), (a.ends[NE], b.ends[SE])]
    ends = (a.ends[SW], a.ends[SE], b.ends[NE], b.ends[NW])
    return _glue(a.crossings + b.crossings, ends, joins, lower.loops + upper.loops)


def horizontal_twist(n: int) -> Tangle:
    """``|n|`` crossings in a row; positive ``n`` uses '\\'-over crossings."""
    if n == 0:
        return zero_tangle()
    out = crossing("\\" if n > 0 else "/")
    for _ in range(abs(n) - 1):
        out = out + crossing("\\" if n > 0 else "/")
    return out


def vertical_twist(n: int) -> Tangle:
    """``|n|`` crossings in a column; positive ``n`` uses '/'-over crossings."""
    if n == 0:
        return infinity_tangle()
    out = crossing("/" if n > 0 else "\\")
    for _ in range(abs(n) - 1):
        out = out * crossing("/" if n > 0 else "\\")
    return out


def _close(t: Tangle, joins, successor_hint=None) -> PlanarDiagram:
    glued = _glue(t.crossings, (), joins, t.loops)
    return assemble(glued.crossings, glued.loops, successor_hint=successor_hint)


def numerator(t: Tangle) -> PlanarDiagram:
    """Close with arcs NW-NE and SW-SE."""
    return _close(t, [(t.ends[NW], t.ends[NE]), (t.ends[SW], t.ends[SE])])


def denominator(t: Tangle) -> PlanarDiagram:
    """Close with arcs NW-SW and NE-SE."""
    return _close(t, [(t.ends[NW], t.ends[SW]), (t.ends[NE], t.ends[SE])])


def pretzel(*twists: int) -> PlanarDiagram:
    """Standard pretzel diagram: columns of vertical twists, summed and closed."""
    if not twists:
        raise TangleError("pretzel needs at least one column")
    t = vertical_twist(twists[0])
    for n in twists[1:]:
        t = t + vertical_twist(n)
    return numerator(t)


def rational_from_twists(twists: list[int]) -> Tangle:
    """Continued-fraction tangle: alternate horizontal and vertical twisting."""
    t = horizontal_twist(twists[0])
    for n, a in enumerate(twists[1:], start=1):
        t = t * vertical_twist(a) if n % 2 else t + horizontal_twist(a)
    return t


def random_tangle(rng, max_crossings: int = 7) -> Tangle:
    """Sum or stack single crossings onto a crossing, in random order and position."""
    t = crossing(rng.choice("/\\"))
    for _ in range(rng.randrange(max_crossings)):
        c = crossing(rng.choice("/\\"))
        op = rng.randrange(4)
        t = t + c if op == 0 else c + t if op == 1 else t * c if op == 2 else c * t
    return t


# ---------------------------------------------------------------------------
# text fragments

_FRAG_X = re.compile(r"X\((\d+),(\d+),(\d+),(\d+)\)$")
_FRAG_B = re.compile(r"B([1-4])=(\d+)$")


def parse_fragment(text: str) -> Tangle:
    """Parse ``X(a,b,c,d) ... B1=e B2=e B3=e B4=e`` (boundary counterclockwise)."""
    body = re.sub(r"\(\s*", "(", text.strip())
    body = re.sub(r"\s*([,=])\s*", r"\1", body)
    body = re.sub(r"\s*\)", ")", body)
    crossings = []
    ends: dict[int, int] = {}
    for token in body.split():
        m = _FRAG_X.match(token)
        if m:
            crossings.append(tuple(int(g) for g in m.groups()))
            continue
        m = _FRAG_B.match(token)
        if m:
            ends[int(m.group(1))] = int(m.group(2))
            continue
        raise MalformedTokenError(token)
    if sorted(ends) != [1, 2, 3, 4]:
        raise TangleError("fragment needs boundary labels B1..B4")
    counts: dict = {}
    for c in crossings:
        for x in c:
            counts[x] = counts.get(x, 0) + 1
    for x in ends.values():
        counts[x] = counts.get(x, 0) + 1
    bad = [x for x, n in counts.items() if n != 2]
    if bad:
        raise TangleError(f"labels {sorted(bad)} do not occur exactly twice")
    return Tangle(tuple(crossings), tuple(ends[n] for n in (1, 2, 3, 4)))
