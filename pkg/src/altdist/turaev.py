"""State loops, the Turaev genus of a diagram, and alternating tangle extension."""

from __future__ import annotations

from itertools import product
from typing import Sequence

from .diagram import PlanarDiagram, assemble
from .errors import (
    CrossingIndexError,
    DiagramError,
    DisconnectedDiagramError,
    TangleDoesNotExtendError,
    TangleNotAlternatingError,
)
from .tangles import Tangle, parse_fragment

A, B = 0, 1
_PAIRS = {A: ((0, 1), (2, 3)), B: ((0, 3), (1, 2))}


def _normalise_state(state: Sequence, n: int) -> tuple[int, ...]:
    out = []
    for x in state:
        if x in ("A", "a", 0, False):
            out.append(A)
        elif x in ("B", "b", 1, True):
            out.append(B)
        else:
            raise DiagramError(f"state entries must be A or B, got {x!r}")
    if len(out) != n:
        raise DiagramError(f"state has {len(out)} entries for {n} crossings")
    return tuple(out)


def state_loop_count(d: PlanarDiagram, state: Sequence) -> int:
    """Number of circles after smoothing crossing ``k`` according to ``state[k]``."""
    state = _normalise_state(state, len(d.crossings))
    parent = {e: e for e in d.edges}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    loops = len(parent)
    for c, choice in zip(d.crossings, state):
        for i, j in _PAIRS[choice]:
            ra, rb = find(c.incidences[i]), find(c.incidences[j])
            if ra != rb:
                parent[ra] = rb
                loops -= 1
    return loops + d.free_loops


def all_a_loops(d: PlanarDiagram) -> int:
    return state_loop_count(d, [A] * len(d.crossings))


def all_b_loops(d: PlanarDiagram) -> int:
    return state_loop_count(d, [B] * len(d.crossings))


def turaev_excess(d: PlanarDiagram) -> int:
    """``|s_A| + |s_B| - c``; unchanged by alternating tangle extension."""
    return all_a_loops(d) + all_b_loops(d) - len(d.crossings)


def turaev_genus_diagram(d: PlanarDiagram) -> int:
    """Genus of the Turaev surface of a connected diagram."""
    if not d.is_connected:
        raise DisconnectedDiagramError(
            "Turaev genus is defined for connected diagrams; use turaev_genus_pieces"
        )
    twice = 2 + len(d.crossings) - all_a_loops(d) - all_b_loops(d)
    if twice % 2 or twice < 0:
        raise DiagramError(f"2 + c - |sA| - |sB| = {twice} is not a non-negative even number")
    return twice // 2


def turaev_genus_pieces(d: PlanarDiagram) -> list[int]:
    return [turaev_genus_diagram(p) for p in d.connected_pieces()]


# ---------------------------------------------------------------------------
# tangle extension


def _as_tangle(tau) -> Tangle:
    return parse_fragment(tau) if isinstance(tau, str) else tau


def tangle_is_alternating(tau: Tangle) -> bool:
    """Every interior edge joins an over position to an under position."""
    where: dict = {}
    for k, c in enumerate(tau.crossings):
        for i, x in enumerate(c):
            where.setdefault(x, []).append(i)
    return all(len(pos) != 2 or pos[0] % 2 != pos[1] % 2 for pos in where.values())


def extension_witness(tau: Tangle) -> tuple[int, tuple[int, ...]] | None:
    """A crossing ``j`` and smoothings of the others that reduce ``tau`` to one crossing.

    The reduced tangle must have no closed loops, its arms must meet ``j`` in
    counterclockwise order, and the ends ``B1``/``B3`` must form the
    under-strand.  Returns ``(j, state)`` with ``state`` indexed over the other
    crossings, or ``None``.
    """
    m = len(tau.crossings)
    occurrences: dict = {}
    for k, c in enumerate(tau.crossings):
        for i, x in enumerate(c):
            occurrences.setdefault(x, []).append(("x", k, i))
    for n, x in enumerate(tau.ends):
        occurrences.setdefault(x, []).append(("b", n))
    for j in range(m):
        others = [k for k in range(m) if k != j]
        for choice in product((A, B), repeat=len(others)):
            parent: dict = {}

            def find(x):
                parent.setdefault(x, x)
                while parent[x] != x:
                    parent[x] = parent[parent[x]]
                    x = parent[x]
                return x

            def join(p, q):
                parent[find(p)] = find(q)

            for occ in occurrences.values():
                if len(occ) == 2:
                    join(occ[0], occ[1])
            for k, ch in zip(others, choice):
                for i, i2 in _PAIRS[ch]:
                    join(("x", k, i), ("x", k, i2))
            classes: dict = {}
            nodes = [("b", n) for n in range(4)] + [("x", j, i) for i in range(4)]
            nodes += [("x", k, i) for k in others for i in range(4)]
            for node in nodes:
                classes.setdefault(find(node), []).append(node)
            ok = True
            arm = {}
            for members in classes.values():
                ends = [nd[1] for nd in members if nd[0] == "b"]
                slots = [nd[2] for nd in members if nd[0] == "x" and nd[1] == j]
                if len(ends) != 1 or len(slots) != 1:
                    ok = False
                    break
                arm[ends[0]] = slots[0]
            if not ok or arm[0] % 2:
                continue
            if all(arm[n] == (arm[0] + n) % 4 for n in range(4)):
                return j, choice
    return None


def tangle_extend(d: PlanarDiagram, k: int, tau) -> PlanarDiagram:
    """Replace crossing ``k`` of ``d`` by an alternating tangle that extends it.

    The ends ``B1..B4`` of ``tau`` are glued to the edges at positions 0..3 of
    crossing ``k``.  Labels of ``d`` are kept; interior edges of ``tau`` get
    fresh labels.  The first crossing of ``tau`` takes index ``k`` and the rest
    are appended.
    """
    tau = _as_tangle(tau)
    if not 0 <= k < len(d.crossings):
        raise CrossingIndexError(f"crossing index {k} out of range 0..{len(d.crossings) - 1}")
    if not tau.crossings:
        raise TangleDoesNotExtendError("a crossingless tangle cannot extend a crossing")
    if not tangle_is_alternating(tau):
        raise TangleNotAlternatingError("the tangle is not alternating")
    if extension_witness(tau) is None:
        raise TangleDoesNotExtendError("no resolution of the tangle reduces it to the crossing")
    boundary = dict(zip(tau.ends, d.crossings[k].incidences))
    fresh = max(d.edges) + 1
    rename = {}
    for c in tau.crossings:
        for x in c:
            if x not in boundary and x not in rename:
                rename[x] = fresh
                fresh += 1
    new = [tuple(boundary.get(x, rename.get(x)) for x in c) for c in tau.crossings]
    tuples = [c.incidences for c in d.crossings]
    tuples = tuples[:k] + [new[0]] + tuples[k + 1:] + new[1:]
    hint = {e: d.successor(e) for e in d.edges}
    return assemble(tuples, d.free_loops + tau.loops, successor_hint=hint, relabel=False)
