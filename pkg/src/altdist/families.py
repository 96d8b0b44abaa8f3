"""Torus, modified torus and twisted-double families, with cited invariant values."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .diagram import BraidWord, PlanarDiagram, assemble, writhe
from .errors import DiagramError, ParameterRangeError
from .intervals import Interval
from .khovanov import hfk_whitehead_dims, hfk_width
from .signature import modified_torus_bounds, torus_s_invariant, torus_signature_recursive
from .tangles import horizontal_twist, vertical_stack, vertical_twist


def full_twist_word(p: int) -> tuple[int, ...]:
    return tuple(range(1, p))


def torus_braid(p: int, q: int) -> BraidWord:
    """``(s_1 s_2 ... s_{p-1})^q``."""
    if p < 2 or q < 1:
        raise ParameterRangeError("torus braids need p >= 2 and q >= 1")
    return BraidWord(p, full_twist_word(p) * q)


def modified_block(p: int) -> tuple[int, ...]:
    """``s_1 s_2^-1 s_3 s_4^-1 ...``."""
    return tuple(i if i % 2 else -i for i in range(1, p))


def modified_torus_braid(p: int, q: int) -> BraidWord:
    """Torus braid with its last block replaced by the sign-alternating block."""
    if p < 3 or q < 3:
        raise ParameterRangeError("modified torus braids need p >= 3 and q >= 3")
    return BraidWord(p, full_twist_word(p) * (q - 1) + modified_block(p))


@dataclass(frozen=True)
class ToroidalCheck:
    hypotheses: bool
    parity_preserved: bool
    block_alternates: bool

    def __bool__(self) -> bool:
        return self.hypotheses and self.parity_preserved and self.block_alternates


def toroidal_alternating_check(p: int, q: int) -> ToroidalCheck:
    """Mechanised parity argument for an alternating projection to a torus.

    Hypotheses: ``p`` even and at least 4, ``q`` odd and at least 3,
    ``q != 1 mod p``.  The projection carries crossings only in the final
    sign-alternating block, so it is alternating on the torus when passes
    alternate inside that block and, for every strand, the last pass before
    leaving the block differs from the first pass after it re-enters through
    the permutation of the remaining ``q - 1`` blocks.
    """
    hyp = p % 2 == 0 and p >= 4 and q % 2 == 1 and q >= 3 and q % p != 1
    if p < 2 or q < 2:
        return ToroidalCheck(False, False, False)
    body = BraidWord(p, full_twist_word(p) * (q - 1))
    perm = body.permutation()
    parity = all(perm[j] % 2 == j % 2 for j in range(p))

    # passes of each strand (named by entry position) through the block
    at = list(range(p))  # at[pos] = strand
    passes: dict[int, list[bool]] = {j: [] for j in range(p)}
    for x in modified_block(p):
        i = abs(x) - 1
        left, right = at[i], at[i + 1]
        passes[left].append(x > 0)  # positive letter: left strand over
        passes[right].append(x < 0)
        at[i], at[i + 1] = right, left
    inner = all(
        all(a != b for a, b in zip(seq, seq[1:])) for seq in passes.values()
    )
    exit_strand = {pos: strand for pos, strand in enumerate(at)}
    wrap = True
    for pos, strand in exit_strand.items():
        nxt = perm[pos]
        if not passes[strand] or not passes[nxt]:
            continue
        if passes[strand][-1] == passes[nxt][0]:
            wrap = False
    return ToroidalCheck(hyp, parity, inner and wrap)


# ---------------------------------------------------------------------------
# twisted doubles


def _double_pieces(d: PlanarDiagram, ribbon_edge: int):
    """Grid crossings of the blackboard double; ribbon-edge copies are split at their ends."""

    def lab(e, side, end):
        return (e, side, end) if e == ribbon_edge else (e, side)

    tuples = []
    for k, c in enumerate(d.crossings):
        a, east, cc, west = c.incidences
        # under-strand runs south (a) to north (cc); over-strand runs west to east when positive
        w_end, e_end = ("h", "t") if c.sign > 0 else ("t", "h")
        for y in (-1, 1):
            for x in (-1, 1):
                sx = "L" if x < 0 else "R"
                sy = "L" if (y > 0) == (c.sign > 0) else "R"
                south = lab(a, sx, "h") if y < 0 else ("v", k, x)
                north = ("v", k, x) if y < 0 else lab(cc, sx, "t")
                w_lab = lab(west, sy, w_end) if x < 0 else ("h", k, y)
                e_lab = ("h", k, y) if x < 0 else lab(east, sy, e_end)
                tuples.append((south, e_lab, north, w_lab))
    return tuples


def whitehead_double(d: PlanarDiagram, t: int) -> PlanarDiagram:
    """Positive-clasp ``t``-twisted double of a knot diagram.

    Each crossing becomes four crossings of the parallel copies; a band of
    ``|t - writhe|`` full twists and a two-crossing clasp is inserted on the
    lowest-labelled edge.  The crossing count is ``4c + 2 + 2|t - w|``.
    """
    if d.component_count != 1:
        raise DiagramError("twisted doubles need a knot diagram")
    m = t - writhe(d)
    ribbon = d.edges[0] if d.crossings else None
    grid = _double_pieces(d, ribbon) if d.crossings else []
    best = None
    for clasp_over in ("\\", "/"):
        for twist_sign in (1, -1):
            band = horizontal_twist(2 if clasp_over == "\\" else -2)
            if m:
                band = vertical_stack(vertical_twist(twist_sign * 2 * abs(m)), band)
            band = band.tagged("band")
            sw, se, ne, nw = band.ends
            if d.crossings:
                ends = {
                    sw: (ribbon, "L", "t"),
                    se: (ribbon, "R", "t"),
                    nw: (ribbon, "L", "h"),
                    ne: (ribbon, "R", "h"),
                }
            else:
                ends = {nw: sw, ne: se}
            band_crossings = [tuple(ends.get(x, x) for x in c) for c in band.crossings]
            out = assemble(grid + band_crossings)
            n_twist = 2 * abs(m)
            twist_signs = {out.crossings[len(grid) + i].sign for i in range(n_twist)}
            clasp_signs = {out.crossings[len(grid) + n_twist + i].sign for i in range(2)}
            want_twist = {-1 if m > 0 else 1} if m else set()
            if clasp_signs == {1} and twist_signs == want_twist:
                best = out
                break
        if best is not None:
            break
    if best is None:
        raise DiagramError("could not orient the clasp positively")
    return best


# ---------------------------------------------------------------------------
# cited values


@dataclass(frozen=True)
class Fact:
    interval: Interval
    citation: str
    choices: tuple | None = None


@dataclass(frozen=True)
class FamilyFacts:
    family: str
    params: tuple
    facts: dict = field(default_factory=dict)

    def get(self, name: str) -> Fact | None:
        return self.facts.get(name)

    def to_json(self) -> dict:
        out = {}
        for name, f in sorted(self.facts.items()):
            entry = {"interval": f.interval.to_json(), "citation": f.citation}
            if f.choices is not None:
                entry["choices"] = list(f.choices)
            out[name] = entry
        return {"family": self.family, "params": list(self.params), "facts": out}


def _t3q_facts(q: int) -> dict:
    facts = {}
    if q in (4, 5):
        facts["alt"] = Fact(Interval.point(1), "kanenobu:alt-T3q")
    elif q > 5 and q % 6 in (1, 2):
        n = (q - q % 6) // 6
        facts["alt"] = Fact(Interval.point(2 * n), "kanenobu:alt-T3q")
    elif q > 5 and q % 6 in (4, 5):
        n = (q - q % 6) // 6
        facts["alt"] = Fact(Interval(2 * n, 2 * n + 1), "kanenobu:alt-T3q", (2 * n, 2 * n + 1))
    if q % 3:
        n = q // 3
        facts["dalt"] = Fact(Interval.point(n), "abe-kishimoto:turaev-dalt-T3q")
        facts["turaev_genus"] = Fact(Interval.point(n), "abe-kishimoto:turaev-dalt-T3q")
        facts["span"] = Fact(Interval.point(q + 1), "jones:torus-jones")
        if q > 3:
            facts["c"] = Fact(Interval.point(2 * q), "murasugi:crossing-number-T3q")
            facts["c_minus_span"] = Fact(Interval.point(q - 1), "jones-murasugi:c-span-T3q")
    if q > 2:
        facts["warp"] = Fact(Interval.point(Fraction(1, 2)), "shimizu:warp-T3q")
    return facts


def known_values(family: str, params) -> FamilyFacts:
    """Published values for a family member; raises when no cited range covers ``params``."""
    params = tuple(int(x) for x in params)
    facts: dict = {}
    if family == "torus":
        if len(params) != 2:
            raise ParameterRangeError("torus facts need (p, q)")
        p, q = params
        if p < 2 or q < 2:
            raise ParameterRangeError("torus facts need p, q >= 2")
        facts["sigma"] = Fact(Interval.point(torus_signature_recursive(p, q)), "glm:torus-signature")
        if gcd(p, q) == 1:
            facts["s"] = Fact(Interval.point(torus_s_invariant(p, q)), "rasmussen:s-torus")
        if 3 in (p, q):
            facts.update(_t3q_facts(q if p == 3 else p))
    elif family == "modified":
        if len(params) != 2:
            raise ParameterRangeError("modified torus facts need (p, q)")
        p, q = params
        bounds = modified_torus_bounds(p, q)
        facts["sigma"] = Fact(bounds.sigma_modified, "modified-torus:sigma-interval")
        facts["s"] = Fact(bounds.s_modified, "modified-torus:s-interval")
        if toroidal_alternating_check(p, q):
            facts["alt_genus"] = Fact(Interval(0, 1), "modified-torus:toroidal-alternating")
    elif family == "whitehead":
        if len(params) != 1:
            raise ParameterRangeError("twisted-double facts need (n,)")
        (n,) = params
        if n < 0:
            raise ParameterRangeError("n must be non-negative")
        width = hfk_width(hfk_whitehead_dims(n))
        facts["hfk_width"] = Fact(Interval.point(width), "hedden:hfk-Wn")
        if n >= 1:
            facts["alt"] = Fact(Interval.point(1), "whitehead-doubles:alt")
            facts["turaev_genus"] = Fact(Interval.at_least(n), "whitehead-doubles:turaev-lower")
            facts["alt_genus"] = Fact(Interval.at_least(2), "whitehead-doubles:altgenus")
            facts["non_alternating"] = Fact(Interval.point(1), "hedden:hfk-Wn")
    else:
        raise ParameterRangeError(f"unknown family {family!r}")
    if not facts:
        raise ParameterRangeError(f"no cited values cover {family}{params}")
    return FamilyFacts(family, params, facts)
