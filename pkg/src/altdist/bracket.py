"""Kauffman bracket state sum, Jones polynomial and span."""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from itertools import product

from .diagram import PlanarDiagram, writhe
from .errors import ResourceLimitError
from .polynomial import LaurentPolynomial

DEFAULT_CAP = 20

# A-smoothing joins positions 0-1 and 2-3, B-smoothing joins 0-3 and 1-2
A_PAIRS = ((0, 1), (2, 3))
B_PAIRS = ((0, 3), (1, 2))


def _smoothing_pairs(d: PlanarDiagram):
    index = {e: n for n, e in enumerate(d.edges)}
    out = []
    for c in d.crossings:
        inc = [index[e] for e in c.incidences]
        out.append(
            (
                ((inc[0], inc[1]), (inc[2], inc[3])),
                ((inc[0], inc[3]), (inc[1], inc[2])),
            )
        )
    return len(index), out


def state_counts(d: PlanarDiagram, prefix: tuple[int, ...] = ()) -> Counter:
    """Count states by ``(#A - #B, loops)``.

    Crossings are visited in index order; ``prefix`` fixes the choices
    (0 = A, 1 = B) for the first crossings so the sum can be split in chunks.
    """
    n_edges, pairs = _smoothing_pairs(d)
    parent = list(range(n_edges))
    size = [1] * n_edges
    counts: Counter = Counter()
    c = len(pairs)

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    def union(x, y, undo):
        rx, ry = find(x), find(y)
        if rx == ry:
            return 0
        if size[rx] < size[ry]:
            rx, ry = ry, rx
        parent[ry] = rx
        size[rx] += size[ry]
        undo.append(ry)
        return 1

    def rollback(undo):
        while undo:
            ry = undo.pop()
            rx = parent[ry]
            size[rx] -= size[ry]
            parent[ry] = ry

    def walk(k, diff, merged):
        if k == c:
            counts[(diff, n_edges - merged)] += 1
            return
        choices = (prefix[k],) if k < len(prefix) else (0, 1)
        for choice in choices:
            (p, q), (r, s) = pairs[k][choice]
            undo: list[int] = []
            m = union(p, q, undo) + union(r, s, undo)
            walk(k + 1, diff + (1 if choice == 0 else -1), merged + m)
            rollback(undo)

    walk(0, 0, 0)
    if d.free_loops:
        counts = Counter({(a, loops + d.free_loops): v for (a, loops), v in counts.items()})
    return counts


def _chunk_worker(args):
    d, prefix = args
    return state_counts(d, prefix)


def _counts(d: PlanarDiagram, jobs: int) -> Counter:
    if jobs <= 1 or len(d.crossings) < 12:
        return state_counts(d)
    depth = min(len(d.crossings), max(1, (4 * jobs - 1).bit_length()))
    prefixes = list(product((0, 1), repeat=depth))
    total: Counter = Counter()
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for part in pool.map(_chunk_worker, [(d, p) for p in prefixes]):
            total.update(part)
    return total


def _check_cap(d: PlanarDiagram, cap: int | None):
    cap = DEFAULT_CAP if cap is None else cap
    if len(d.crossings) > cap:
        raise ResourceLimitError("Kauffman bracket", len(d.crossings), cap)


def bracket_from_counts(counts: Counter) -> LaurentPolynomial:
    delta = LaurentPolynomial({8: -1, -8: -1}, "A")
    powers = {}
    total = LaurentPolynomial({}, "A")
    for (diff, loops), mult in counts.items():
        if loops not in powers:
            powers[loops] = delta ** (loops - 1)
        total = total + LaurentPolynomial({4 * diff: mult}, "A") * powers[loops]
    return total


def kauffman_bracket(d: PlanarDiagram, cap: int | None = None, jobs: int = 1) -> LaurentPolynomial:
    """Unnormalised bracket in ``A`` with the unknot normalised to 1."""
    _check_cap(d, cap)
    return bracket_from_counts(_counts(d, jobs))


def jones_from_bracket(bracket: LaurentPolynomial, w: int) -> LaurentPolynomial:
    normalised = LaurentPolynomial({-12 * w: (-1) ** (w % 2)}, "A") * bracket
    # t = A^-4: A^e becomes t^(-e/4), i.e. scaled exponent 4e -> -e
    return LaurentPolynomial({-(e // 4): c for e, c in normalised.terms.items()}, "t")


def jones_polynomial(d: PlanarDiagram, cap: int | None = None, jobs: int = 1) -> LaurentPolynomial:
    return jones_from_bracket(kauffman_bracket(d, cap, jobs), writhe(d))


def jones_span(d: PlanarDiagram, cap: int | None = None, jobs: int = 1) -> Fraction:
    return jones_polynomial(d, cap, jobs).span()
