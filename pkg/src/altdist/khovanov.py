"""Khovanov homology over GF(2), knot Floer dimensions of twisted doubles, and widths."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .diagram import PlanarDiagram
from .errors import EmptyDimensionsError, ParameterRangeError, ResourceLimitError
from .polynomial import LaurentPolynomial

DEFAULT_CAP = 14


@dataclass(frozen=True)
class BigradedDimensions:
    """Nonzero dimensions keyed by ``(i, j)`` (Khovanov) or ``(m, s)`` (knot Floer)."""

    dims: dict = field(default_factory=dict)
    scheme: str = "kh"
    components: int = 1

    def __post_init__(self):
        clean = {tuple(k): int(v) for k, v in self.dims.items() if v}
        if any(v < 0 for v in clean.values()):
            raise ValueError("dimensions must be non-negative")
        object.__setattr__(self, "dims", dict(sorted(clean.items())))

    def deltas(self) -> set[int]:
        if self.scheme == "kh":
            return {j - 2 * i for i, j in self.dims}
        return {s - m for m, s in self.dims}

    def total(self) -> int:
        return sum(self.dims.values())

    def to_json(self) -> dict:
        return {"gradings": [[a, b, d] for (a, b), d in self.dims.items()]}


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _gf2_rank(rows) -> int:
    pivots: dict[int, int] = {}
    rank = 0
    for r in rows:
        while r:
            top = r.bit_length() - 1
            if top in pivots:
                r ^= pivots[top]
            else:
                pivots[top] = r
                rank += 1
                break
    return rank


def _state_circles(pairs, n_edges, v):
    """Circle index of every edge in state ``v`` (bit k set = B-smoothing at k)."""
    parent = list(range(n_edges))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for k, (a_pairs, b_pairs) in enumerate(pairs):
        for p, q in (b_pairs if v >> k & 1 else a_pairs):
            rp, rq = find(p), find(q)
            if rp != rq:
                parent[rp] = rq
    label: dict[int, int] = {}
    out = []
    for e in range(n_edges):
        r = find(e)
        if r not in label:
            label[r] = len(label)
        out.append(label[r])
    return out, len(label)


def khovanov_f2(d: PlanarDiagram, cap: int | None = None) -> BigradedDimensions:
    """Dimensions of unreduced Khovanov homology with GF(2) coefficients.

    The 0-smoothing is the A-smoothing; gradings are shifted so that
    ``i = r - n_-`` and ``j = (#1 - #x) + r + n_+ - 2 n_-``.
    """
    cap = DEFAULT_CAP if cap is None else cap
    c = len(d.crossings)
    if c > cap:
        raise ResourceLimitError("Khovanov homology", c, cap)
    n_plus = sum(1 for x in d.crossings if x.sign > 0)
    n_minus = c - n_plus
    index = {e: n for n, e in enumerate(d.edges)}
    n_edges = len(index)
    pairs = []
    slot_edges = []
    for x in d.crossings:
        inc = [index[e] for e in x.incidences]
        slot_edges.append(inc)
        pairs.append((((inc[0], inc[1]), (inc[2], inc[3])), ((inc[0], inc[3]), (inc[1], inc[2]))))
    free = d.free_loops
    shift = n_plus - 2 * n_minus

    circ = []
    ncirc = []
    reps = []
    for v in range(1 << c):
        labels, n = _state_circles(pairs, n_edges, v)
        rep = [0] * n
        seen = set()
        for e, t in enumerate(labels):
            if t not in seen:
                seen.add(t)
                rep[t] = e
        circ.append(labels)
        ncirc.append(n + free)
        reps.append(rep)

    # position of each generator inside its (r, j) block
    block_size: dict = defaultdict(int)
    pos = []
    for v in range(1 << c):
        r = _popcount(v)
        n = ncirc[v]
        arr = [0] * (1 << n)
        for m in range(1 << n):
            key = (r, n - 2 * _popcount(m) + r + shift)
            arr[m] = block_size[key]
            block_size[key] += 1
        pos.append(arr)

    rows: dict = {key: [0] * size for key, size in block_size.items()}
    for v in range(1 << c):
        r = _popcount(v)
        n_v = ncirc[v]
        n_lab = n_v - free
        for k in range(c):
            if v >> k & 1:
                continue
            w = v | (1 << k)
            inc = slot_edges[k]
            cv, cw = circ[v], circ[w]
            a, b = cv[inc[0]], cv[inc[2]]
            # where the untouched circles of v go in w (free loops keep their offset)
            target = [0] * n_v
            for t in range(n_lab):
                target[t] = cw[reps[v][t]]
            n_w_lab = ncirc[w] - free
            for t in range(free):
                target[n_lab + t] = n_w_lab + t
            pos_w = pos[w]
            if a != b:
                merged = cw[inc[0]]
                for m in range(1 << n_v):
                    ma, mb = m >> a & 1, m >> b & 1
                    if ma and mb:
                        continue
                    out = 0
                    for t in range(n_v):
                        if t != a and t != b and m >> t & 1:
                            out |= 1 << target[t]
                    if ma or mb:
                        out |= 1 << merged
                    key = (r, n_v - 2 * _popcount(m) + r + shift)
                    rows[key][pos[v][m]] ^= 1 << pos_w[out]
            else:
                c1, c2 = cw[inc[0]], cw[inc[1]]
                for m in range(1 << n_v):
                    base = 0
                    for t in range(n_v):
                        if t != a and m >> t & 1:
                            base |= 1 << target[t]
                    key = (r, n_v - 2 * _popcount(m) + r + shift)
                    if m >> a & 1:
                        images = [base | 1 << c1 | 1 << c2]
                    else:
                        images = [base | 1 << c1, base | 1 << c2]
                    for out in images:
                        rows[key][pos[v][m]] ^= 1 << pos_w[out]

    ranks = {key: _gf2_rank(rs) for key, rs in rows.items()}
    dims = {}
    for (r, j), size in block_size.items():
        h = size - ranks.get((r, j), 0) - ranks.get((r - 1, j), 0)
        if h:
            dims[(r - n_minus, j)] = h
    return BigradedDimensions(dims, "kh", d.component_count)


def kh_euler_characteristic(dims: BigradedDimensions) -> LaurentPolynomial:
    """``sum (-1)^i dim q^j`` as a polynomial in ``q``."""
    terms: dict[int, int] = defaultdict(int)
    for (i, j), n in dims.dims.items():
        terms[4 * j] += (-1) ** (i % 2) * n
    return LaurentPolynomial(terms, "q")


def jones_in_q(jones: LaurentPolynomial) -> LaurentPolynomial:
    """Substitute ``t^(1/2) = -q`` and multiply by ``q + 1/q``."""
    terms = {}
    for e4, coeff in jones.terms.items():
        half = e4 // 2  # exponent of t^(1/2)
        terms[4 * half] = coeff * (-1) ** (half % 2)
    return LaurentPolynomial(terms, "q") * LaurentPolynomial({4: 1, -4: 1}, "q")


def kh_delta_width(dims: BigradedDimensions) -> Fraction:
    """``(max delta - min delta) / 2 + 1`` with ``delta = j - 2i``."""
    deltas = dims.deltas()
    if not deltas:
        raise EmptyDimensionsError("no nonzero dimensions")
    return Fraction(max(deltas) - min(deltas), 2) + 1


def hfk_whitehead_dims(n: int) -> BigradedDimensions:
    """Knot Floer dimensions of the iterated untwisted doubles ``W_n``, keyed by ``(m, s)``."""
    if n < 0:
        raise ParameterRangeError("n must be non-negative")
    dims: dict = defaultdict(int)
    for k in range(n + 1):
        dims[(1 - k, 1)] += 2**n * comb(n, k)
        dims[(-k, 0)] += 2 ** (n + 1) * comb(n, k)
        dims[(-1 - k, -1)] += 2**n * comb(n, k)
    dims[(0, 0)] += 1
    return BigradedDimensions(dict(dims), "hfk", 1)


def hfk_width(dims: BigradedDimensions) -> int:
    """``max delta - min delta + 1`` with ``delta = s - m``."""
    deltas = dims.deltas()
    if not deltas:
        raise EmptyDimensionsError("no nonzero dimensions")
    return max(deltas) - min(deltas) + 1
