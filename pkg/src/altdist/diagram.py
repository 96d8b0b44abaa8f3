"""Planar link diagrams.

A diagram is stored as a list of crossings in PD form.  Each crossing is a
4-tuple of edge labels read counterclockwise, starting from the incoming
under-edge, so the under-strand runs from slot 0 to slot 2 and the
over-strand joins slots 1 and 3.  Crossingless components carry no labels
and are only counted (``free_loops``).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Hashable, Iterable, Sequence

from .errors import (
    BraidWordError,
    CrossingIndexError,
    DiagramError,
    DisconnectedDiagramError,
    EdgeMultiplicityError,
    EmptyInputError,
    MalformedTokenError,
    OrientationError,
    PlanarityError,
)

Slot = tuple[int, int]  # (crossing index, position 0..3)


@dataclass(frozen=True)
class Crossing:
    incidences: tuple[int, int, int, int]
    sign: int

    def __post_init__(self):
        if len(self.incidences) != 4:
            raise DiagramError(f"crossing needs 4 incidences, got {self.incidences}")
        if self.sign not in (1, -1):
            raise DiagramError(f"crossing sign must be +1 or -1, got {self.sign}")

    @property
    def over_in(self) -> int:
        """Slot of the incoming over-edge."""
        return 3 if self.sign > 0 else 1

    @property
    def over_out(self) -> int:
        return 1 if self.sign > 0 else 3

    def changed(self) -> "Crossing":
        """The same crossing with over and under swapped."""
        a, b, c, d = self.incidences
        if self.sign > 0:
            # new under-strand is the old over-strand d -> b
            return Crossing((d, a, b, c), -1)
        return Crossing((b, c, d, a), 1)

    def pd(self) -> str:
        return "X({},{},{},{})".format(*self.incidences)


def is_over_slot(position: int) -> bool:
    return position % 2 == 1


# ---------------------------------------------------------------------------
# low-level helpers shared by the constructors


def _edge_slots(tuples: Sequence[Sequence[Hashable]]) -> dict:
    slots: dict = {}
    for k, tup in enumerate(tuples):
        for i, e in enumerate(tup):
            slots.setdefault(e, []).append((k, i))
    for e, where in slots.items():
        if len(where) != 2:
            raise EdgeMultiplicityError(e, len(where))
    return slots


def _other(slots: dict, e, slot: Slot) -> Slot:
    first, second = slots[e]
    return second if first == slot else first


def _trace_cycles(tuples, slots) -> list[list[tuple]]:
    """Strand cycles as lists of ``(edge, tail_slot, head_slot)``.

    The traversal direction of each cycle is arbitrary.
    """
    seen: set = set()
    cycles = []
    for start in sorted(slots, key=_sort_key):
        if start in seen:
            continue
        tail, head = slots[start]
        e = start
        cycle = []
        while True:
            seen.add(e)
            cycle.append((e, tail, head))
            k, i = head
            tail = (k, (i + 2) % 4)
            e = tuples[k][tail[1]]
            head = _other(slots, e, tail)
            if e == start and tail == cycle[0][1]:
                break
            if len(cycle) > 2 * len(slots):
                raise DiagramError("strand traversal does not close up")
        cycles.append(cycle)
    return cycles


def _sort_key(label):
    return (0, label, "") if isinstance(label, int) else (1, 0, repr(label))


def _reversed_cycle(cycle):
    return [(e, h, t) for e, t, h in reversed(cycle)]


def _orient_by_labels(cycle):
    """Orientation tie-break: start at the lowest label, step to label+1 if possible."""
    labels = [e for e, _, _ in cycle]
    if len(labels) < 2:
        return cycle
    p = labels.index(min(labels))
    nxt, prv = labels[(p + 1) % len(labels)], labels[p - 1]
    lo = labels[p]
    if nxt == lo + 1:
        return cycle
    if prv == lo + 1:
        return _reversed_cycle(cycle)
    return cycle if nxt <= prv else _reversed_cycle(cycle)


def _orient_by_hint(cycle, successor_hint):
    labels = [e for e, _, _ in cycle]
    pos = {e: n for n, e in enumerate(labels)}
    for e in sorted(labels):
        s = successor_hint.get(e)
        if s is None or s not in pos:
            continue
        if labels[(pos[e] + 1) % len(labels)] == s:
            return cycle
        if labels[pos[e] - 1] == s:
            return _reversed_cycle(cycle)
    return None


def _build(tuples, cycles, free_loops: int, relabel: bool) -> "PlanarDiagram":
    """Turn unoriented tuples plus oriented cycles into a validated diagram."""
    heads: dict = {}
    for cycle in cycles:
        for e, t, h in cycle:
            heads[e] = h
    crossings = []
    for k, tup in enumerate(tuples):
        tup = tuple(tup)
        if heads[tup[0]] == (k, 0):
            shift = 0
        elif heads[tup[2]] == (k, 2):
            shift = 2
        else:
            raise OrientationError(f"crossing {k} has no incoming under-strand")
        over_in = [pos for pos in (1, 3) if heads[tup[pos]] == (k, pos)]
        if len(over_in) != 1:
            raise OrientationError(f"crossing {k} has an inconsistent over-strand")
        tup = tup[shift:] + tup[:shift]
        crossings.append((tup, 1 if (over_in[0] - shift) % 4 == 3 else -1))
    if relabel:
        mapping = {}
        for cycle in sorted(cycles, key=lambda c: min(_sort_key(e) for e, _, _ in c)):
            labels = [e for e, _, _ in cycle]
            p = labels.index(min(labels, key=_sort_key))
            for e in labels[p:] + labels[:p]:
                mapping[e] = len(mapping) + 1
        crossings = [(tuple(mapping[e] for e in tup), s) for tup, s in crossings]
    return PlanarDiagram(tuple(Crossing(tup, s) for tup, s in crossings), free_loops)


def _heads_consistent(tuples, slots):
    """Cycles oriented by the under-strand directions recorded in PD tuples."""
    cycles = []
    for cycle in _trace_cycles(tuples, slots):
        fwd = sum(1 for _, _, h in cycle if h[1] == 0)
        back = sum(1 for _, _, h in cycle if h[1] == 2)
        if fwd and back:
            raise OrientationError(
                "under-strands along the component through edge "
                f"{cycle[0][0]} point in opposite directions"
            )
        if back:
            cycle = _reversed_cycle(cycle)
        elif not fwd:
            cycle = _orient_by_labels(cycle)
        cycles.append(cycle)
    return cycles


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PlanarDiagram:
    """An oriented link diagram on the sphere.

    Diagrams are immutable; all operations return new diagrams.
    """

    crossings: tuple[Crossing, ...] = ()
    free_loops: int = 0

    def __post_init__(self):
        if not self.crossings and self.free_loops < 1:
            raise EmptyInputError("a diagram needs at least one component")
        if self.free_loops < 0:
            raise DiagramError("free_loops must be non-negative")
        slots = _edge_slots([c.incidences for c in self.crossings])
        # orientation: every edge enters exactly one slot and leaves another
        for e, (s0, s1) in slots.items():
            ins = sum(self._is_in(s) for s in (s0, s1))
            if ins != 1:
                raise OrientationError(
                    f"edge {e} is {'incoming' if ins == 2 else 'outgoing'} at both ends"
                )
        self._check_euler()

    def _is_in(self, slot: Slot) -> bool:
        k, i = slot
        return i == 0 or i == self.crossings[k].over_in

    # -- basic data ------------------------------------------------------

    @property
    def crossing_count(self) -> int:
        return len(self.crossings)

    def __len__(self) -> int:
        return len(self.crossings)

    @cached_property
    def edge_slots(self) -> dict[int, list[Slot]]:
        return _edge_slots([c.incidences for c in self.crossings])

    @property
    def edges(self) -> list[int]:
        return sorted(self.edge_slots)

    @property
    def edge_count(self) -> int:
        return len(self.edge_slots)

    @cached_property
    def head(self) -> dict[int, Slot]:
        """Slot where each edge enters a crossing."""
        return {e: (s0 if self._is_in(s0) else s1) for e, (s0, s1) in self.edge_slots.items()}

    @cached_property
    def tail(self) -> dict[int, Slot]:
        return {e: _other(self.edge_slots, e, h) for e, h in self.head.items()}

    def successor(self, e: int) -> int:
        k, i = self.head[e]
        return self.crossings[k].incidences[(i + 2) % 4]

    def passes_over(self, e: int) -> bool:
        """Does the strand pass over at the crossing where edge ``e`` ends?"""
        return is_over_slot(self.head[e][1])

    @cached_property
    def components(self) -> tuple[tuple[int, ...], ...]:
        """Edge cycles in orientation order, each starting at its lowest label.

        Crossingless components are not listed; see ``free_loops``.
        """
        seen: set = set()
        comps = []
        for e in self.edges:
            if e in seen:
                continue
            cyc = [e]
            seen.add(e)
            nxt = self.successor(e)
            while nxt != e:
                cyc.append(nxt)
                seen.add(nxt)
                nxt = self.successor(nxt)
            comps.append(tuple(cyc))
        return tuple(comps)

    @property
    def component_count(self) -> int:
        return len(self.components) + self.free_loops

    def component_of(self, e: int) -> int:
        for n, comp in enumerate(self.components):
            if e in comp:
                return n
        raise KeyError(e)

    @property
    def signs(self) -> tuple[int, ...]:
        return tuple(c.sign for c in self.crossings)

    def pd_code(self) -> list[tuple[int, int, int, int]]:
        return [c.incidences for c in self.crossings]

    def to_text(self) -> str:
        terms = [c.pd() for c in self.crossings] + ["O"] * self.free_loops
        return " ".join(terms)

    def __str__(self) -> str:
        return self.to_text()

    # -- connectivity and faces -----------------------------------------

    @cached_property
    def piece_crossings(self) -> tuple[tuple[int, ...], ...]:
        """Crossing index sets of the connected pieces of the projection."""
        n = len(self.crossings)
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for (k0, _), (k1, _) in self.edge_slots.values():
            r0, r1 = find(k0), find(k1)
            if r0 != r1:
                parent[r0] = r1
        groups: dict[int, list[int]] = {}
        for k in range(n):
            groups.setdefault(find(k), []).append(k)
        return tuple(sorted(tuple(g) for g in groups.values()))

    @property
    def piece_count(self) -> int:
        return len(self.piece_crossings) + self.free_loops

    @property
    def is_connected(self) -> bool:
        return self.piece_count == 1

    def _face_orbits(self) -> list[list[Slot]]:
        seen: set = set()
        orbits = []
        for k in range(len(self.crossings)):
            for i in range(4):
                if (k, i) in seen:
                    continue
                orbit = []
                h = (k, i)
                while h not in seen:
                    seen.add(h)
                    orbit.append(h)
                    e = self.crossings[h[0]].incidences[h[1]]
                    k2, j = _other(self.edge_slots, e, h)
                    h = (k2, (j + 1) % 4)
                orbits.append(orbit)
        return orbits

    @cached_property
    def corner_faces(self) -> dict[Slot, int]:
        """Face index of the corner between positions ``i`` and ``i+1`` of crossing ``k``."""
        out = {}
        for n, orbit in enumerate(self._face_orbits()):
            for k, i in orbit:
                out[(k, (i - 1) % 4)] = n
        return out

    def _check_euler(self):
        orbits = self._face_orbits()
        for pc in self.piece_crossings:
            members = set(pc)
            faces = sum(1 for o in orbits if o[0][0] in members)
            v, e = len(pc), 2 * len(pc)
            if v - e + faces != 2:
                raise PlanarityError(
                    f"Euler check failed on a piece: V - E + F = {v - e + faces} (expected 2)"
                )

    # -- derived diagrams --------------------------------------------------

    def connected_pieces(self) -> list["PlanarDiagram"]:
        pieces = []
        for pc in self.piece_crossings:
            pieces.append(PlanarDiagram(tuple(self.crossings[k] for k in pc)))
        pieces.extend(unknot() for _ in range(self.free_loops))
        return pieces


# ---------------------------------------------------------------------------
# constructors


def from_pd(tuples: Iterable[Sequence[int]], free_loops: int = 0) -> PlanarDiagram:
    """Build a diagram from PD tuples (first entry = incoming under-edge)."""
    tuples = [tuple(int(x) for x in t) for t in tuples]
    for t in tuples:
        if len(t) != 4:
            raise DiagramError(f"crossing needs 4 incidences, got {t}")
        if any(x < 1 for x in t):
            raise DiagramError(f"edge labels must be positive integers, got {t}")
    if not tuples and free_loops < 1:
        raise EmptyInputError("empty input")
    slots = _edge_slots(tuples)
    cycles = _heads_consistent(tuples, slots)
    return _build(tuples, cycles, free_loops, relabel=False)


def assemble(
    tuples: Sequence[Sequence[Hashable]],
    free_loops: int = 0,
    *,
    successor_hint: dict | None = None,
    relabel: bool = True,
) -> PlanarDiagram:
    """Build a diagram from crossings whose under-strand is slots 0-2 in either direction.

    Labels may be any hashables when ``relabel`` is true; the result is then
    labelled ``1..2c`` consecutively along components.  Each component is
    oriented by ``successor_hint`` (edge -> following edge) where possible,
    otherwise by the lowest-label rule.
    """
    tuples = [tuple(t) for t in tuples]
    if relabel:
        ids: dict = {}
        for t in tuples:
            for e in t:
                ids.setdefault(e, len(ids) + 1)
        hint = None
        if successor_hint:
            hint = {ids[a]: ids[b] for a, b in successor_hint.items() if a in ids and b in ids}
        tuples = [tuple(ids[e] for e in t) for t in tuples]
    else:
        hint = successor_hint
    if not tuples:
        return PlanarDiagram((), free_loops)
    slots = _edge_slots(tuples)
    cycles = []
    for cycle in _trace_cycles(tuples, slots):
        oriented = _orient_by_hint(cycle, hint) if hint else None
        cycles.append(oriented if oriented is not None else _orient_by_labels(cycle))
    return _build(tuples, cycles, free_loops, relabel=relabel)


def unknot() -> PlanarDiagram:
    return PlanarDiagram((), 1)


def unlink(n: int) -> PlanarDiagram:
    return PlanarDiagram((), n)


# ---------------------------------------------------------------------------
# braids


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.strands < 2:
            raise BraidWordError("a braid needs at least 2 strands")
        object.__setattr__(self, "letters", tuple(int(x) for x in self.letters))
        for x in self.letters:
            if x == 0 or abs(x) >= self.strands:
                raise BraidWordError(
                    f"generator {x} is outside 1..{self.strands - 1} (up to sign)"
                )

    def __len__(self) -> int:
        return len(self.letters)

    def __add__(self, other: "BraidWord") -> "BraidWord":
        if other.strands != self.strands:
            raise BraidWordError("cannot concatenate braids on different strand counts")
        return BraidWord(self.strands, self.letters + other.letters)

    def __mul__(self, n: int) -> "BraidWord":
        return BraidWord(self.strands, self.letters * n)

    def permutation(self) -> tuple[int, ...]:
        """``perm[j]`` = final position (0-based) of the strand starting at position ``j``."""
        where = list(range(self.strands))  # where[pos] = strand currently at pos
        for x in self.letters:
            i = abs(x) - 1
            where[i], where[i + 1] = where[i + 1], where[i]
        perm = [0] * self.strands
        for pos, strand in enumerate(where):
            perm[strand] = pos
        return tuple(perm)

    def to_text(self) -> str:
        return f"BR({self.strands}): " + " ".join(str(x) for x in self.letters)

    def __str__(self) -> str:
        return self.to_text()


def braid_closure(word: BraidWord) -> PlanarDiagram:
    """Closure of a braid drawn bottom-to-top with closing arcs on the right.

    A positive letter ``i`` sends the strand at position ``i`` over the strand
    at position ``i+1`` (a positive crossing when both strands point up).
    """
    p = word.strands
    touched = {abs(x) - 1 for x in word.letters} | {abs(x) for x in word.letters}
    current = list(range(1, p + 1))
    initial = list(current)
    fresh = p + 1
    tuples = []
    for x in word.letters:
        i = abs(x) - 1
        e_l, e_r = current[i], current[i + 1]
        f_l, f_r = fresh, fresh + 1
        fresh += 2
        if x > 0:
            tuples.append([e_r, f_r, f_l, e_l])
        else:
            tuples.append([e_l, e_r, f_r, f_l])
        current[i], current[i + 1] = f_l, f_r
    rename = {current[j]: initial[j] for j in range(p) if j in touched}
    tuples = [[rename.get(e, e) for e in t] for t in tuples]
    free = p - len(touched)
    if not tuples:
        return PlanarDiagram((), free)
    # labels are oriented already (strands run upward); relabel along components
    slots = _edge_slots(tuples)
    cycles = _heads_consistent(tuples, slots)
    return _build(tuples, cycles, free, relabel=True)


# ---------------------------------------------------------------------------
# text parsing

_PD_TERM = re.compile(r"X\(\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\)$")
_BRAID = re.compile(r"BR\(\s*(\d+)\s*\)\s*:\s*(.*)$", re.S)
_NAME = re.compile(r"^\s*(\S+?)\s*:\s*(.*)$", re.S)


def split_name(line: str) -> tuple[str | None, str]:
    """Strip an optional ``name :`` prefix."""
    stripped = line.strip()
    if stripped.startswith("BR(") or stripped.startswith("X("):
        return None, stripped
    m = _NAME.match(stripped)
    if m:
        return m.group(1), m.group(2).strip()
    return None, stripped


def parse_pd(text: str, line: int | None = None) -> PlanarDiagram:
    """Parse whitespace-separated ``X(a,b,c,d)`` terms.

    ``O`` terms denote crossingless components.
    """
    _, body = split_name(text)
    if not body.strip():
        raise EmptyInputError("empty input")
    # allow whitespace inside parentheses
    body = re.sub(r"\(\s*", "(", body)
    body = re.sub(r"\s*,\s*", ",", body)
    body = re.sub(r"\s*\)", ")", body)
    tuples = []
    free = 0
    for token in body.split():
        if token == "O":
            free += 1
            continue
        m = _PD_TERM.match(token)
        if not m:
            raise MalformedTokenError(token, line)
        tuples.append(tuple(int(g) for g in m.groups()))
    return from_pd(tuples, free)


def parse_braid(text: str, line: int | None = None) -> BraidWord:
    _, body = split_name(text)
    m = _BRAID.match(body.strip())
    if not m:
        raise MalformedTokenError(body.strip(), line)
    letters_text = m.group(2).replace("[", " ").replace("]", " ").replace(",", " ")
    letters = []
    for token in letters_text.split():
        try:
            letters.append(int(token))
        except ValueError:
            raise MalformedTokenError(token, line) from None
    return BraidWord(int(m.group(1)), tuple(letters))


def parse_diagram(text: str, line: int | None = None) -> PlanarDiagram:
    """Parse one line in either PD or braid grammar."""
    _, body = split_name(text)
    if body.startswith("BR"):
        return braid_closure(parse_braid(body, line))
    return parse_pd(body, line)


# ---------------------------------------------------------------------------
# operations


def writhe(d: PlanarDiagram) -> int:
    return sum(c.sign for c in d.crossings)


def crossing_change(d: PlanarDiagram, k: int) -> PlanarDiagram:
    if not 0 <= k < len(d.crossings):
        raise CrossingIndexError(f"crossing index {k} out of range 0..{len(d.crossings) - 1}")
    crossings = list(d.crossings)
    crossings[k] = crossings[k].changed()
    return PlanarDiagram(tuple(crossings), d.free_loops)


def change_crossings(d: PlanarDiagram, ks: Iterable[int]) -> PlanarDiagram:
    crossings = list(d.crossings)
    for k in set(ks):
        if not 0 <= k < len(crossings):
            raise CrossingIndexError(f"crossing index {k} out of range")
        crossings[k] = crossings[k].changed()
    return PlanarDiagram(tuple(crossings), d.free_loops)


def mirror(d: PlanarDiagram) -> PlanarDiagram:
    return change_crossings(d, range(len(d.crossings)))


def reverse_components(d: PlanarDiagram, which: Iterable[int]) -> PlanarDiagram:
    """Reverse the orientation of the listed components.

    Indices past ``d.components`` name crossingless loops, whose reversal changes nothing.
    """
    flip = set()
    for n in which:
        if not 0 <= n < d.component_count:
            raise DiagramError(f"component index {n} out of range")
        if n < len(d.components):
            flip.update(d.components[n])
    tuples = d.pd_code()
    heads = {e: (d.tail[e] if e in flip else d.head[e]) for e in d.edges}
    cycles = []
    slots = d.edge_slots
    for e in d.edges:
        cycles.append([(e, _other(slots, e, heads[e]), heads[e])])
    return _build(tuples, cycles, d.free_loops, relabel=False)


def is_alternating(d: PlanarDiagram) -> bool:
    """Over and under passes alternate along every component."""
    for comp in d.components:
        passes = [d.passes_over(e) for e in comp]
        if any(passes[n] == passes[n - 1] for n in range(len(passes))):
            return False
    return True


def piece_assignments(d: PlanarDiagram) -> list[tuple[frozenset[int], frozenset[int]]]:
    """For each connected piece, the two crossing sets whose change makes it alternating."""
    flips: dict[int, int] = {}
    adj: dict[int, list[tuple[int, int]]] = {k: [] for k in range(len(d.crossings))}
    for e, ((k0, i0), (k1, i1)) in d.edge_slots.items():
        parity = 1 ^ (i0 % 2 == 0) ^ (i1 % 2 == 0)
        adj[k0].append((k1, parity))
        adj[k1].append((k0, parity))
    out = []
    for piece in d.piece_crossings:
        root = piece[0]
        flips[root] = 0
        stack = [root]
        while stack:
            k = stack.pop()
            for k2, parity in adj[k]:
                want = flips[k] ^ parity
                if k2 not in flips:
                    flips[k2] = want
                    stack.append(k2)
                elif flips[k2] != want:
                    raise PlanarityError("projection admits no alternating assignment")
        ones = frozenset(k for k in piece if flips[k])
        zeros = frozenset(k for k in piece if not flips[k])
        out.append((ones, zeros))
    return out


def alternating_assignments(d: PlanarDiagram) -> set[frozenset[int]]:
    """All crossing-change sets that make ``d`` alternating piece by piece.

    There are exactly ``2**(pieces with crossings)`` of them.
    """
    sets = {frozenset()}
    for a, b in piece_assignments(d):
        sets = {s | a for s in sets} | {s | b for s in sets}
    return sets


def dealternating_number_diagram(d: PlanarDiagram) -> int:
    return sum(min(len(a), len(b)) for a, b in piece_assignments(d))


def minimal_dealternating_set(d: PlanarDiagram) -> frozenset[int]:
    out: frozenset[int] = frozenset()
    for a, b in piece_assignments(d):
        out |= a if len(a) <= len(b) else b
    return out


def trace_faces(d: PlanarDiagram) -> list[tuple[int, ...]]:
    """Faces of a connected diagram as cycles of edge labels."""
    if not d.is_connected:
        raise DisconnectedDiagramError("face tracing needs a connected diagram")
    if not d.crossings:
        return [(), ()]
    faces = []
    for orbit in d._face_orbits():
        faces.append(tuple(d.crossings[k].incidences[i] for k, i in orbit))
    return faces


def connected_sum(d1: PlanarDiagram, d2: PlanarDiagram, e1: int | None = None,
                  e2: int | None = None) -> PlanarDiagram:
    """Band two diagrams together along edge ``e1`` of ``d1`` and ``e2`` of ``d2``."""
    if not d1.crossings:
        return PlanarDiagram(d2.crossings, d2.free_loops + d1.free_loops - 1)
    if not d2.crossings:
        return PlanarDiagram(d1.crossings, d1.free_loops + d2.free_loops - 1)
    e1 = d1.edges[0] if e1 is None else e1
    e2 = d2.edges[0] if e2 is None else e2
    shift = max(d1.edges)
    h1, h2 = d1.head[e1], d2.head[e2]
    # tail(e1) -> head(e2) keeps label e1; tail(e2) -> head(e1) keeps e2 + shift
    tuples = []
    for k, c in enumerate(d1.crossings):
        tuples.append([e2 + shift if (k, i) == h1 else x for i, x in enumerate(c.incidences)])
    for k, c in enumerate(d2.crossings):
        tuples.append([e1 if (k, i) == h2 else x + shift for i, x in enumerate(c.incidences)])
    return from_pd(tuples, d1.free_loops + d2.free_loops)
