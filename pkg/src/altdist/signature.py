"""Signatures: Goeritz forms of diagrams and torus-link formulas.

Sign convention: the positive trefoil has signature -2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Sequence

from .diagram import PlanarDiagram
from .errors import DisconnectedDiagramError, ParameterRangeError
from .intervals import Interval


def matrix_signature(matrix: Sequence[Sequence]) -> int:
    """Signature of a symmetric matrix by exact congruence diagonalisation.

    Pivots on a nonzero diagonal entry when there is one; otherwise splits off
    a 2x2 hyperbolic block (which contributes one positive and one negative
    square).
    """
    a = [[Fraction(x) for x in row] for row in matrix]
    n = len(a)
    for row in a:
        if len(row) != n:
            raise ValueError("matrix must be square")
    for i in range(n):
        for j in range(i):
            if a[i][j] != a[j][i]:
                raise ValueError("matrix must be symmetric")
    sig = 0
    while a:
        n = len(a)
        piv = next((i for i in range(n) if a[i][i] != 0), None)
        if piv is not None:
            p = a[piv][piv]
            sig += 1 if p > 0 else -1
            rest = [i for i in range(n) if i != piv]
            a = [
                [a[r][s] - a[r][piv] * a[piv][s] / p for s in rest]
                for r in rest
            ]
            continue
        pair = next(((i, j) for i in range(n) for j in range(i + 1, n) if a[i][j] != 0), None)
        if pair is None:
            break
        i, j = pair
        b = a[i][j]
        rest = [r for r in range(n) if r not in pair]
        # Schur complement of [[0, b], [b, 0]]
        a = [
            [a[r][s] - (a[r][i] * a[j][s] + a[r][j] * a[i][s]) / b for s in rest]
            for r in rest
        ]
    return sig


# ---------------------------------------------------------------------------
# Goeritz form


@dataclass(frozen=True)
class GoeritzForm:
    """Reduced Goeritz matrix on the white regions plus the type II correction."""

    matrix: tuple[tuple[int, ...], ...]
    correction: int
    white_faces: tuple[int, ...]
    dropped_face: int

    @property
    def signature(self) -> int:
        return matrix_signature(self.matrix) - self.correction


def face_colouring(d: PlanarDiagram) -> dict[int, int]:
    """Two-colouring of the faces of a connected diagram (face -> 0/1)."""
    corners = d.corner_faces
    adj: dict[int, set[int]] = {}
    for (k, i), f in corners.items():
        g = corners[(k, (i + 1) % 4)]
        adj.setdefault(f, set()).add(g)
        adj.setdefault(g, set()).add(f)
    colour = {}
    for start in sorted(adj):
        if start in colour:
            continue
        colour[start] = 0
        stack = [start]
        while stack:
            f = stack.pop()
            for g in adj[f]:
                if g not in colour:
                    colour[g] = 1 - colour[f]
                    stack.append(g)
                elif colour[g] == colour[f]:
                    raise DisconnectedDiagramError("faces admit no checkerboard colouring")
    return colour


def _outer_face(d: PlanarDiagram) -> int:
    sizes: dict[int, int] = {}
    for f in d.corner_faces.values():
        sizes[f] = sizes.get(f, 0) + 1
    return max(sorted(sizes), key=lambda f: sizes[f])


def goeritz_form(d: PlanarDiagram, white_face: int | None = None) -> GoeritzForm:
    """Goeritz form for the shading in which ``white_face`` (default: a largest face) is white."""
    if not d.is_connected:
        raise DisconnectedDiagramError("the Goeritz form needs a connected diagram")
    colour = face_colouring(d)
    outer = _outer_face(d) if white_face is None else white_face
    white_colour = colour[outer]
    whites = sorted(f for f, c in colour.items() if c == white_colour)
    index = {f: n for n, f in enumerate(whites)}
    n = len(whites)
    full = [[0] * n for _ in range(n)]
    correction = 0
    for k, c in enumerate(d.crossings):
        # corner i lies between positions i and i+1; corners 1 and 3 merge under the A-smoothing
        a_white = colour[d.corner_faces[(k, 1)]] == white_colour
        zeta = -1 if a_white else 1
        w1, w2 = (1, 3) if a_white else (0, 2)
        f1, f2 = index[d.corner_faces[(k, w1)]], index[d.corner_faces[(k, w2)]]
        if f1 != f2:
            full[f1][f2] -= zeta
            full[f2][f1] -= zeta
            full[f1][f1] += zeta
            full[f2][f2] += zeta
        # the oriented smoothing is A at positive crossings; type II when it merges black corners
        oriented_merges_a = c.sign > 0
        if oriented_merges_a != a_white:
            correction += zeta
    drop = index[outer]
    keep = [i for i in range(n) if i != drop]
    reduced = tuple(tuple(full[i][j] for j in keep) for i in keep)
    return GoeritzForm(reduced, correction, tuple(whites), outer)


def goeritz_signature(d: PlanarDiagram) -> int:
    """Signature of the oriented link presented by a connected diagram."""
    if not d.crossings:
        if d.free_loops == 1:
            return 0
        raise DisconnectedDiagramError("the signature routine needs a connected diagram")
    return goeritz_form(d).signature


# ---------------------------------------------------------------------------
# torus links


@lru_cache(maxsize=None)
def torus_signature_recursive(p: int, q: int) -> int:
    """Signature of T(p, q) from the classical recurrence for torus links."""
    if p < 1 or q < 1:
        raise ParameterRangeError("torus parameters must be positive")
    if p > q:
        return torus_signature_recursive(q, p)
    if p == 1:
        return 0
    if p == 2:
        return 1 - q
    if q == 2 * p:
        return 1 - p * p
    if q > 2 * p:
        drop = p * p - 1 if p % 2 else p * p
        return torus_signature_recursive(p, q - 2 * p) - drop
    base = 1 - p * p if p % 2 else 2 - p * p
    if q == p:
        # sigma = base - sigma
        return base // 2
    return base - torus_signature_recursive(p, 2 * p - q)


def torus_signature_closed(p: int, n: int, r: int) -> int:
    """Signature of T(p, np + r) for ``0 < r < p`` from the four-case formula."""
    if p < 2:
        raise ParameterRangeError("p must be at least 2")
    if n < 0:
        raise ParameterRangeError("n must be non-negative")
    if not 0 < r < p:
        raise ParameterRangeError(f"r must satisfy 0 < r < p, got r={r}, p={p}")
    sig = torus_signature_recursive
    if n % 2 == 0:
        if p % 2:
            return sig(p, r) - n * (p * p - 1) // 2
        return sig(p, r) - n * p * p // 2
    if p % 2:
        return -sig(p, p - r) - (n + 1) * (p * p - 1) // 2
    return -sig(p, p - r) - (n + 1) * p * p // 2 + 2


def torus_s_invariant(p: int, q: int) -> int:
    """Rasmussen invariant of the positive torus knot T(p, q)."""
    if p < 1 or q < 1:
        raise ParameterRangeError("torus parameters must be positive")
    if gcd(p, q) != 1:
        raise ParameterRangeError(f"T({p},{q}) is not a knot")
    return p * q - p - q + 1


@dataclass(frozen=True)
class ModifiedTorusBounds:
    sigma_torus: Interval
    sigma_modified: Interval
    s_modified: Interval


def modified_torus_bounds(p: int, q: int) -> ModifiedTorusBounds:
    """Intervals for sigma(T(p,q)), sigma and s of the modified torus knot."""
    if p < 3 or q < 3:
        raise ParameterRangeError("need p >= 3 and q >= 3")
    if gcd(p, q) != 1:
        raise ParameterRangeError(f"p={p} and q={q} are not coprime")
    lower = -Fraction((p - 1) * (p - 2)) - Fraction(p * q, 2)
    return ModifiedTorusBounds(
        sigma_torus=Interval(lower, (p - 1) * (p - 2) - Fraction((p - 1) * q, 2)),
        sigma_modified=Interval(lower, (p - 1) ** 2 - Fraction((p - 1) * q, 2)),
        s_modified=Interval(p * q - 2 * p - q + 2, p * q - p - q + 1),
    )
