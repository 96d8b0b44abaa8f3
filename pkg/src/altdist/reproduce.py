"""Desk-scale reproduction suites; each claim carries a citation key."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Callable

from .bracket import jones_polynomial
from .diagram import (
    braid_closure,
    crossing_change,
    dealternating_number_diagram,
    from_pd,
    minimal_dealternating_set,
    unknot,
)
from .families import (
    known_values,
    modified_torus_braid,
    toroidal_alternating_check,
    torus_braid,
    whitehead_double,
)
from .khovanov import hfk_whitehead_dims, hfk_width, kh_delta_width, khovanov_f2
from .polynomial import LaurentPolynomial
from .report import compute_report
from .signature import goeritz_signature, modified_torus_bounds
from .tangles import pretzel, random_tangle
from .turaev import (
    extension_witness,
    tangle_extend,
    tangle_is_alternating,
    turaev_excess,
    turaev_genus_diagram,
)
from .warping import warping_span_diagram

T3Q = (4, 5, 7, 8)
SEED = 20240601


@dataclass(frozen=True)
class Claim:
    description: str
    citation: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        tail = f" ({self.detail})" if self.detail else ""
        return f"{status} [{self.citation}] {self.description}{tail}"


def t3q_jones(q: int) -> LaurentPolynomial:
    t = LaurentPolynomial.monomial
    return t(q - 1) + t(q + 1) - t(2 * q)


def suite_t3q(jobs: int = 1) -> list[Claim]:
    out = []
    for q in T3Q:
        d = braid_closure(torus_braid(3, q))
        facts = known_values("torus", (3, q))
        v = jones_polynomial(d, jobs=jobs)
        want = t3q_jones(q)
        out.append(Claim(f"T(3,{q}): V = {want.to_text()}", "jones:torus-jones", v == want, v.to_text()))
        span = v.span()
        out.append(Claim(f"T(3,{q}): span V = {q + 1}", "jones:torus-jones", span == q + 1, f"span={span}"))
        c = facts.get("c").interval.lo
        out.append(Claim(
            f"T(3,{q}): c - span = {q - 1} with c = {2 * q}",
            "jones-murasugi:c-span-T3q", c - span == q - 1, f"c={c}",
        ))
        w = warping_span_diagram(d)
        out.append(Claim(f"T(3,{q}): warp(D) = 1/2", "shimizu:warp-T3q", w == Fraction(1, 2), f"warp={w}"))
        r = compute_report([d], facts, f"T(3,{q})", jobs=jobs)
        lo = r.distances["turaev_genus"].lower
        out.append(Claim(
            f"T(3,{q}): turaev genus lower bound = {q // 3}",
            "abe-kishimoto:turaev-dalt-T3q", lo == q // 3, f"lower={lo}",
        ))
        if len(d.crossings) <= 10:
            width = kh_delta_width(khovanov_f2(d))
            out.append(Claim(
                f"T(3,{q}): Kh width 3 gives turaev genus >= 1",
                "kh-width-2<=turaev", width == 3 and width - 2 <= facts.get("turaev_genus").interval.lo,
                f"width={width}",
            ))
    return out


def suite_pretzel(jobs: int = 1) -> list[Claim]:
    d = pretzel(5, -3, 2)
    k = dealternating_number_diagram(d)
    c = len(d.crossings)
    span = jones_polynomial(d, jobs=jobs).span()
    cite = "pretzel(5,-3,2):dalt>c-span"
    return [
        Claim("P(5,-3,2): dalt(D) = 3", cite, k == 3, f"dalt={k}"),
        Claim("P(5,-3,2): c(D) = 10", cite, c == 10, f"c={c}"),
        Claim("P(5,-3,2): span V = 8", cite, span == 8, f"span={span}"),
        Claim("P(5,-3,2): dalt(D) > c(D) - span", cite, k > c - span, f"{k} > {c - span}"),
    ]


def coprime_pairs(lo: int = 3, hi: int = 7):
    return [(p, q) for p in range(lo, hi + 1) for q in range(lo, hi + 1) if gcd(p, q) == 1]


def suite_modified_torus(jobs: int = 1) -> list[Claim]:
    out = []
    for p, q in coprime_pairs():
        b = modified_torus_bounds(p, q)
        s_mod = goeritz_signature(braid_closure(modified_torus_braid(p, q)))
        s_tor = goeritz_signature(braid_closure(torus_braid(p, q)))
        out.append(Claim(
            f"T~({p},{q}): sigma in {b.sigma_modified}", "modified-torus:sigma-interval",
            s_mod in b.sigma_modified, f"sigma={s_mod}",
        ))
        out.append(Claim(
            f"T({p},{q}): sigma in {b.sigma_torus}", "modified-torus:torus-sigma-interval",
            s_tor in b.sigma_torus, f"sigma={s_tor}",
        ))
    for p, q in [(4, 3), (4, 7), (6, 5), (6, 11), (4, 11)]:
        chk = toroidal_alternating_check(p, q)
        out.append(Claim(
            f"T~({p},{q}): parity argument for an alternating torus projection",
            "modified-torus:toroidal-alternating", bool(chk), str(chk),
        ))
    return out


def suite_whitehead(jobs: int = 1) -> list[Claim]:
    out = []
    for n in range(7):
        w = hfk_width(hfk_whitehead_dims(n))
        out.append(Claim(f"W_{n}: HFK width = {n + 1}", "hedden:hfk-Wn", w == n + 1, f"width={w}"))
    for n in range(1, 7):
        r = compute_report([], known_values("whitehead", (n,)), f"W_{n}")
        alt, g = r.distances["alt"], r.distances["turaev_genus"]
        ok = alt.lower == alt.upper == 1 and g.lower >= n and g.lower - alt.upper >= n - 1
        out.append(Claim(
            f"W_{n}: alt = [1,1], turaev genus >= {n}, gap >= {n - 1}",
            "whitehead-doubles:turaev-lower", ok, f"alt={alt}, g_T={g}",
        ))
    v = jones_polynomial(whitehead_double(unknot(), 0))
    out.append(Claim(
        "untwisted double of the unknot has Jones polynomial 1", "whitehead-doubles:construction",
        v == LaurentPolynomial.constant(1), v.to_text(),
    ))
    fig8 = from_pd([(4, 2, 5, 1), (8, 6, 1, 5), (6, 3, 7, 4), (2, 7, 3, 8)])
    w1 = whitehead_double(fig8, 0)
    out.append(Claim(
        "W_1 diagram: 18 crossings, one component", "whitehead-doubles:construction",
        len(w1.crossings) == 18 and w1.component_count == 1, f"c={len(w1.crossings)}",
    ))
    return out


def extension_triples(n: int, seed: int = SEED, max_crossings: int = 7):
    """``n`` random (diagram, crossing, alternating tangle) triples drawn from the corpus."""
    from .corpus import load_corpus

    rng = random.Random(seed)
    entries = [e for e in load_corpus() if e.diagram.crossings and e.diagram.is_connected]
    out = []
    while len(out) < n:
        tau = random_tangle(rng, max_crossings)
        if not tangle_is_alternating(tau) or extension_witness(tau) is None:
            continue
        e = rng.choice(entries)
        out.append((e, rng.randrange(len(e.diagram.crossings)), tau))
    return out


def dalt_witness_family():
    """Diagrams with a known minimal dealternating set to extend."""
    return {
        "P(5,-3,2)": pretzel(5, -3, 2),
        "P(3,3,-3)": pretzel(3, 3, -3),
        "P(-2,3,5)": pretzel(-2, 3, 5),
        "T(3,4)": braid_closure(torus_braid(3, 4)),
        "T(3,5)": braid_closure(torus_braid(3, 5)),
        "T(4,3)": braid_closure(torus_braid(4, 3)),
        "T~(3,4)": braid_closure(modified_torus_braid(3, 4)),
        "T(3,4) with one crossing changed": crossing_change(braid_closure(torus_braid(3, 4)), 0),
    }


def suite_tangle_ext(jobs: int = 1, triples: int = 120) -> list[Claim]:
    out = []
    bad = []
    for e, k, tau in extension_triples(triples):
        d = e.diagram
        dd = tangle_extend(d, k, tau)
        if turaev_excess(dd) != turaev_excess(d) or turaev_genus_diagram(dd) != turaev_genus_diagram(d):
            bad.append(f"{e.name}@{k}")
    out.append(Claim(
        f"|s_A|+|s_B|-c and turaev genus unchanged over {triples} random extensions",
        "tangle-extension:turaev-invariance", not bad, ", ".join(bad[:5]),
    ))
    rng = random.Random(SEED)
    for name, d in dalt_witness_family().items():
        k = dealternating_number_diagram(d)
        c = len(d.crossings)
        checked, wrong = 0, []
        for x in sorted(minimal_dealternating_set(d)):
            while True:
                tau = random_tangle(rng)
                if tangle_is_alternating(tau) and extension_witness(tau) is not None:
                    break
            got = dealternating_number_diagram(tangle_extend(d, x, tau))
            want = min(c - k, tau.crossing_count + k - 1)
            checked += 1
            if got != want:
                wrong.append(f"x={x}, c(tau)={tau.crossing_count}: {got} != {want}")
        out.append(Claim(
            f"{name}: dalt(D(x,tau)) = min(c(D)-k, c(tau)+k-1) on {checked} extensions",
            "tangle-extension:dalt-min", not wrong, "; ".join(wrong[:3]),
        ))
    return out


SUITES: dict[str, Callable[..., list[Claim]]] = {
    "t3q": suite_t3q,
    "pretzel10_125": suite_pretzel,
    "modified-torus": suite_modified_torus,
    "whitehead": suite_whitehead,
    "tangle-ext": suite_tangle_ext,
}


def run_suite(name: str, jobs: int = 1) -> list[Claim]:
    return SUITES[name](jobs=jobs)
