"""Interval bounds on how far a link is from being alternating.

Every bound comes from a diagram computation, a cited fact, or one of the
inequalities between distances; each endpoint records where it came from.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil
from typing import Sequence

from .bracket import DEFAULT_CAP as BRACKET_CAP
from .bracket import jones_polynomial
from .diagram import PlanarDiagram, dealternating_number_diagram, is_alternating, writhe
from .errors import JonesMismatchError
from .families import FamilyFacts
from .intervals import Interval, _num_json
from .khovanov import DEFAULT_CAP as KH_CAP
from .khovanov import kh_delta_width, khovanov_f2
from .signature import goeritz_signature
from .turaev import turaev_genus_diagram
from .warping import warping_span_diagram

DISTANCES = ("alt", "dalt", "turaev_genus", "alt_genus", "warp", "c_minus_span")

# (smaller, larger, name): smaller <= larger holds for every link
LATTICE = (
    ("alt", "dalt", "alt<=dalt"),
    ("turaev_genus", "c_minus_span", "turaev<=c-span"),
    ("turaev_genus", "dalt", "turaev<=dalt"),
    ("alt_genus", "turaev_genus", "altgenus<=turaev"),
    ("warp", "dalt", "warp<=dalt"),
)


@dataclass
class BoundInterval:
    lower: Fraction = Fraction(0)
    upper: Fraction | None = None
    lower_source: str = "nonnegative"
    upper_source: str = "unbounded"

    @property
    def provenance(self) -> list[str]:
        return [f"lower:{self.lower_source}", f"upper:{self.upper_source}"]

    @property
    def interval(self) -> Interval:
        return Interval(self.lower, self.upper)

    def raise_lower(self, value, source: str) -> bool:
        if value is None:
            return False
        value = Fraction(value)
        if value > self.lower:
            self.lower, self.lower_source = value, source
            return True
        return False

    def lower_upper(self, value, source: str) -> bool:
        if value is None:
            return False
        value = Fraction(value)
        if self.upper is None or value < self.upper:
            self.upper, self.upper_source = value, source
            return True
        return False

    def to_json(self) -> dict:
        return {
            "lower": _num_json(self.lower),
            "upper": _num_json(self.upper),
            "provenance": self.provenance,
        }

    def __str__(self) -> str:
        return str(self.interval)


@dataclass
class DistanceReport:
    link: str
    distances: dict[str, BoundInterval]
    aux: dict = field(default_factory=dict)
    diagrams: list[dict] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "link": self.link,
            "distances": {k: self.distances[k].to_json() for k in DISTANCES},
            "aux": self.aux,
        }


def diagram_invariants(
    d: PlanarDiagram, bracket_cap: int = BRACKET_CAP, kh_cap: int = KH_CAP, jobs: int = 1
) -> dict:
    """Per-diagram quantities; entries that exceed a cap or need a connected diagram are None."""
    out: dict = {
        "crossings": len(d.crossings),
        "components": d.component_count,
        "writhe": writhe(d),
        "alternating": is_alternating(d),
        "dalt": dealternating_number_diagram(d),
        "turaev_genus": turaev_genus_diagram(d) if d.is_connected else None,
        "warp": warping_span_diagram(d),
        "jones": None,
        "span": None,
        "sigma": goeritz_signature(d) if d.is_connected else None,
        "kh_width": None,
    }
    if len(d.crossings) <= bracket_cap:
        v = jones_polynomial(d, cap=bracket_cap, jobs=jobs)
        out["jones"] = v
        out["span"] = v.span()
    if len(d.crossings) <= kh_cap:
        out["kh_width"] = kh_delta_width(khovanov_f2(d, cap=kh_cap))
    return out


def _jsonable(x):
    if isinstance(x, Fraction):
        return _num_json(x)
    if isinstance(x, Interval):
        return x.to_json()
    if hasattr(x, "to_text"):
        return x.to_text()
    return x


def compute_report(
    diagrams: Sequence[PlanarDiagram] = (),
    facts: FamilyFacts | None = None,
    link: str = "link",
    bracket_cap: int = BRACKET_CAP,
    kh_cap: int = KH_CAP,
    jobs: int = 1,
) -> DistanceReport:
    per = [diagram_invariants(d, bracket_cap, kh_cap, jobs) for d in diagrams]
    jones = [p["jones"] for p in per if p["jones"] is not None]
    if any(v != jones[0] for v in jones[1:]):
        raise JonesMismatchError("the supplied diagrams have different Jones polynomials")

    b = {name: BoundInterval() for name in DISTANCES}

    def fact(name):
        return facts.get(name) if facts is not None else None

    # exact auxiliary data
    span = next((p["span"] for p in per if p["span"] is not None), None)
    span_src = "jones-span(D)"
    if span is None and fact("span") is not None and fact("span").interval.is_point:
        span, span_src = fact("span").interval.lo, fact("span").citation
    sigma = next((Interval.point(p["sigma"]) for p in per if p["sigma"] is not None), None)
    sigma_src = "goeritz-signature(D)"
    if sigma is None and fact("sigma") is not None:
        sigma, sigma_src = fact("sigma").interval, fact("sigma").citation
    s_int = fact("s").interval if fact("s") is not None else None
    kh_width = next((p["kh_width"] for p in per if p["kh_width"] is not None), None)
    hfk = fact("hfk_width").interval.lo if fact("hfk_width") is not None else None
    crossing_fact = fact("c")

    alternating = any(p["alternating"] for p in per)
    non_alt_reasons = []
    if fact("non_alternating") is not None:
        non_alt_reasons.append(fact("non_alternating").citation)
    if fact("alt") is not None and fact("alt").interval.lo >= 1:
        non_alt_reasons.append(fact("alt").citation)
    if kh_width is not None and kh_width > 2:
        non_alt_reasons.append("kh-width>2")
    if hfk is not None and hfk > 1:
        non_alt_reasons.append("hfk-width>1")
    s_plus_sigma = None
    if s_int is not None and sigma is not None:
        s_plus_sigma = (s_int + sigma).abs_lower_bound()
        if s_plus_sigma > 0:
            non_alt_reasons.append("|s+sigma|>0")
    if crossing_fact is not None and span is not None and crossing_fact.interval.lo > span:
        non_alt_reasons.append(f"{crossing_fact.citation}>span")
    non_alternating = bool(non_alt_reasons)
    cert = non_alt_reasons[0] if non_alternating else None

    # diagram upper bounds
    for p, d in zip(per, diagrams):
        b["dalt"].lower_upper(p["dalt"], "dalt(D)")
        if p["turaev_genus"] is not None:
            b["turaev_genus"].lower_upper(p["turaev_genus"], "turaev-genus(D)")
        b["warp"].lower_upper(p["warp"], "warp(D)")
        if p["span"] is not None:
            b["c_minus_span"].lower_upper(p["crossings"] - p["span"], "c(D)-span")

    # cited values
    for name in DISTANCES:
        f = fact(name)
        if f is None:
            continue
        b[name].raise_lower(f.interval.lo, f.citation)
        b[name].lower_upper(f.interval.hi, f.citation)
    if crossing_fact is not None and span is not None and crossing_fact.interval.is_point:
        exact = crossing_fact.interval.lo - span
        b["c_minus_span"].raise_lower(exact, f"{crossing_fact.citation};{span_src}")
        b["c_minus_span"].lower_upper(exact, f"{crossing_fact.citation};{span_src}")

    # lower bounds from homology widths and s + sigma
    if kh_width is not None:
        b["turaev_genus"].raise_lower(kh_width - 2, "kh-width-2<=turaev")
    if hfk is not None:
        b["turaev_genus"].raise_lower(hfk - 1, "hfk-width-1<=turaev")
    if s_plus_sigma is not None:
        half = ceil(s_plus_sigma / 2)
        b["alt"].raise_lower(half, "|s+sigma|<=2alt")
        b["turaev_genus"].raise_lower(half, "|s+sigma|<=2turaev")
    if non_alternating:
        for name in ("alt", "turaev_genus", "alt_genus", "dalt"):
            b[name].raise_lower(1, f"non-alternating:{cert}")
        b["warp"].raise_lower(Fraction(1, 2), f"non-alternating:{cert}")

    # propagate through the inequality lattice until stable
    changed = True
    while changed:
        changed = False
        for small, large, name in LATTICE:
            changed |= b[small].lower_upper(b[large].upper, name)
            changed |= b[large].raise_lower(b[small].lower, name)

    aux = {
        "span": _jsonable(span),
        "span_source": span_src if span is not None else None,
        "sigma": _jsonable(sigma),
        "sigma_source": sigma_src if sigma is not None else None,
        "s": _jsonable(s_int),
        "kh_width": _jsonable(kh_width),
        "hfk_width": _jsonable(hfk),
        "alternating": True if alternating else (False if non_alternating else None),
        "non_alternating_certificates": non_alt_reasons,
        "diagrams": [d.to_text() for d in diagrams],
    }
    if facts is not None:
        aux["facts"] = facts.to_json()
    report = DistanceReport(link, b, aux, [{k: _jsonable(v) for k, v in p.items()} for p in per])
    report.aux["per_diagram"] = report.diagrams
    return report


def check_consistency(r: DistanceReport) -> list[str]:
    """Inequalities that the intervals of ``r`` cannot satisfy simultaneously."""
    out = []
    b = r.distances
    for name, iv in b.items():
        if iv.upper is not None and iv.lower > iv.upper:
            out.append(f"{name}: empty interval [{iv.lower}, {iv.upper}]")
    for small, large, name in LATTICE:
        hi = b[large].upper
        if hi is not None and b[small].lower > hi:
            out.append(f"{name}: {small}.lower={b[small].lower} > {large}.upper={hi}")
    g_hi = b["turaev_genus"].upper
    kh = r.aux.get("kh_width")
    if kh is not None and g_hi is not None and Fraction(kh) - 2 > g_hi:
        out.append(f"kh-width-2<=turaev: w(Kh)-2={Fraction(kh) - 2} > turaev_genus.upper={g_hi}")
    hfk = r.aux.get("hfk_width")
    if hfk is not None and g_hi is not None and Fraction(hfk) - 1 > g_hi:
        out.append(f"hfk-width-1<=turaev: w(HFK)-1={Fraction(hfk) - 1} > turaev_genus.upper={g_hi}")
    s, sigma = r.aux.get("s"), r.aux.get("sigma")
    if s is not None and sigma is not None:
        lb = (Interval(*s) + Interval(*sigma)).abs_lower_bound()
        for name, key in (("|s+sigma|<=2alt", "alt"), ("|s+sigma|<=2turaev", "turaev_genus")):
            hi = b[key].upper
            if hi is not None and lb > 2 * hi:
                out.append(f"{name}: |s+sigma|>={lb} > 2*{key}.upper={2 * hi}")
    return out
