import json
from fractions import Fraction

import pytest

from altdist.diagram import BraidWord, braid_closure, unknot
from altdist.errors import JonesMismatchError
from altdist.families import known_values, modified_torus_braid, torus_braid
from altdist.report import DISTANCES, BoundInterval, DistanceReport, check_consistency, compute_report


def closure(n, *letters):
    return braid_closure(BraidWord(n, tuple(letters)))


def pinned(r, name):
    b = r.distances[name]
    return (b.lower, b.upper)


def test_t34_with_facts():
    r = compute_report([braid_closure(torus_braid(3, 4))], known_values("torus", (3, 4)), "T(3,4)")
    assert pinned(r, "alt") == (1, 1)
    assert pinned(r, "dalt") == (1, 1)
    assert pinned(r, "turaev_genus") == (1, 1)
    assert pinned(r, "c_minus_span") == (3, 3)
    assert pinned(r, "warp") == (Fraction(1, 2), Fraction(1, 2))
    assert pinned(r, "alt_genus") == (1, 1)
    assert check_consistency(r) == []


def test_unknot_all_zero():
    r = compute_report([unknot()], None, "unknot")
    for name in DISTANCES:
        assert pinned(r, name) == (0, 0)


def test_w2_from_facts_only():
    r = compute_report([], known_values("whitehead", (2,)), "W_2")
    assert pinned(r, "alt") == (1, 1)
    assert pinned(r, "turaev_genus") == (2, None)
    assert pinned(r, "alt_genus") == (2, None)
    assert check_consistency(r) == []


def test_whitehead_gap():
    for n in (1, 2, 3):
        r = compute_report([], known_values("whitehead", (n,)), f"W_{n}")
        assert r.distances["turaev_genus"].lower - r.distances["alt"].upper >= n - 1


@pytest.mark.parametrize("q", [4, 5, 7, 8])
def test_t3q_domination_witness(q):
    r = compute_report([braid_closure(torus_braid(3, q))], known_values("torus", (3, q)), f"T(3,{q})")
    cms, dalt = r.distances["c_minus_span"], r.distances["dalt"]
    assert cms.lower == cms.upper and dalt.lower == dalt.upper
    assert cms.lower - dalt.lower == q - 1 - q // 3


def test_jones_mismatch():
    with pytest.raises(JonesMismatchError):
        compute_report([closure(2, 1, 1, 1), closure(2, -1, -1, -1)])


def test_several_diagrams_take_best_bounds():
    a = closure(2, 1, 1, 1)
    b = closure(2, -1, 1, -1, 1, 1, 1, 1)
    r = compute_report([b, a], None, "3_1")
    assert pinned(r, "dalt") == (0, 0)
    assert r.distances["dalt"].upper_source == "dalt(D)"


def test_json_schema_and_determinism():
    ds = [braid_closure(modified_torus_braid(3, 4))]
    facts = known_values("modified", (3, 4))
    a = json.dumps(compute_report(ds, facts, "m").to_json())
    b = json.dumps(compute_report(ds, facts, "m").to_json())
    assert a == b
    obj = json.loads(a)
    assert set(obj) == {"link", "distances", "aux"}
    assert set(obj["distances"]) == set(DISTANCES)
    for v in obj["distances"].values():
        assert set(v) == {"lower", "upper", "provenance"}
        assert all(isinstance(p, str) and ":" in p for p in v["provenance"])
    assert obj["distances"]["warp"]["upper"] is None or isinstance(obj["distances"]["warp"]["upper"], (int, float))


def _hand_built(**bounds):
    d = {name: BoundInterval() for name in DISTANCES}
    for name, (lo, hi) in bounds.items():
        d[name] = BoundInterval(Fraction(lo), None if hi is None else Fraction(hi), "hand", "hand")
    return DistanceReport("hand", d, {})


def test_violation_kh_width():
    r = _hand_built(turaev_genus=(0, 0))
    r.aux["kh_width"] = 3
    out = check_consistency(r)
    assert any("kh-width-2<=turaev" in v for v in out)


def test_violation_warp_dalt():
    out = check_consistency(_hand_built(warp=(1, 1), dalt=(0, 0)))
    assert any("warp<=dalt" in v and "1" in v and "0" in v for v in out)


def test_corpus_reports_consistent(corpus):
    from altdist.corpus import corpus_groups

    for link, entries in corpus_groups(corpus).items():
        r = compute_report([e.diagram for e in entries], None, link)
        assert check_consistency(r) == [], link
