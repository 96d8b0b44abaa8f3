import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from conftest import braid_words, connected_closures
from altdist.diagram import (
    BraidWord,
    PlanarDiagram,
    alternating_assignments,
    braid_closure,
    change_crossings,
    connected_sum,
    crossing_change,
    dealternating_number_diagram,
    from_pd,
    is_alternating,
    minimal_dealternating_set,
    mirror,
    parse_braid,
    parse_diagram,
    parse_pd,
    reverse_components,
    trace_faces,
    unknot,
    unlink,
    writhe,
)
from altdist.errors import (
    BraidWordError,
    DiagramError,
    EdgeMultiplicityError,
    EmptyInputError,
    MalformedTokenError,
    PlanarityError,
)
from altdist.tangles import pretzel
from altdist.turaev import turaev_genus_diagram

TREFOIL_PD = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"
FIG8_PD = "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)"


def closure(n, *letters):
    return braid_closure(BraidWord(n, tuple(letters)))


def test_parse_trefoil_counts():
    d = parse_pd(TREFOIL_PD)
    assert len(d.crossings) == 3
    assert len(d.edges) == 6
    assert d.component_count == 1


def test_parse_tolerates_spacing_and_names():
    d = parse_diagram("3_1 : X( 1, 4,2 ,5 ) X(3,6,4,1)   X(5,2,6,3)")
    assert d == parse_pd(TREFOIL_PD)


def test_empty_input():
    with pytest.raises(EmptyInputError):
        parse_pd("")


def test_edge_multiplicity():
    with pytest.raises(EdgeMultiplicityError) as exc:
        parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,4)")
    assert exc.value.label == 4 and exc.value.count == 3


def test_malformed_token_reports_line():
    with pytest.raises(MalformedTokenError) as exc:
        parse_pd("X(1,2,3) X(1,2,3,4)", line=7)
    assert exc.value.line == 7


def test_braid_closures():
    assert len(closure(2, 1, 1, 1).crossings) == 3
    assert closure(2, 1, 1, 1).component_count == 1
    t34 = parse_diagram("BR(3): [1,2,1,2,1,2,1,2]")
    assert len(t34.crossings) == 8 and t34.component_count == 1
    empty = parse_diagram("BR(3): []")
    assert len(empty.crossings) == 0 and empty.component_count == 3


def test_braid_word_errors():
    with pytest.raises(BraidWordError):
        BraidWord(2, (2,))
    with pytest.raises(BraidWordError):
        BraidWord(3, (0,))
    with pytest.raises(DiagramError):
        parse_braid("BR(2): 1 x 1")


def test_signs_and_writhe():
    assert [c.sign for c in parse_pd(TREFOIL_PD).crossings] == [-1, -1, -1]
    assert writhe(closure(2, 1, 1, 1)) == 3
    assert writhe(closure(3, 1, 2, 1, 2, 1, 2, 1, 2)) == 8
    assert writhe(parse_pd(FIG8_PD)) == 0


def test_faces():
    assert len(trace_faces(unknot())) == 2
    assert len(trace_faces(closure(2, 1, 1, 1))) == 5
    assert len(trace_faces(closure(3, 1, 2, 1, 2, 1, 2, 1, 2))) == 10


def test_alternating_examples():
    assert is_alternating(closure(2, 1, 1, 1))
    assert not is_alternating(pretzel(5, -3, 2))
    assert is_alternating(unknot())


def test_alternating_assignments_examples():
    tre = closure(2, 1, 1, 1)
    assert alternating_assignments(tre) == {frozenset(), frozenset(range(3))}
    sizes = sorted(len(s) for s in alternating_assignments(pretzel(5, -3, 2)))
    assert sizes == [3, 7]
    assert alternating_assignments(unknot()) == {frozenset()}


def test_dealternating_examples():
    p = pretzel(5, -3, 2)
    assert dealternating_number_diagram(p) == 3
    assert is_alternating(change_crossings(p, minimal_dealternating_set(p)))
    t34 = closure(3, 1, 2, 1, 2, 1, 2, 1, 2)
    assert dealternating_number_diagram(t34) == oracles.dalt_brute_force(t34, change_crossings)
    assert dealternating_number_diagram(t34) >= 1


def test_crossing_change_is_letter_flip():
    assert crossing_change(closure(2, 1, 1, 1), 0) == closure(2, -1, 1, 1)


def test_unlink_and_unknot():
    assert unlink(3).component_count == 3
    assert unknot().crossing_count == 0
    assert dealternating_number_diagram(unlink(2)) == 0


@given(connected_closures(), st.data())
def test_crossing_change_involution(d, data):
    k = data.draw(st.integers(0, len(d.crossings) - 1))
    once = crossing_change(d, k)
    assert once.crossings[k].sign == -d.crossings[k].sign
    assert crossing_change(once, k) == d


@given(braid_words())
def test_signs_match_walk_oracle(word):
    d = braid_closure(word)
    assert [c.sign for c in d.crossings] == oracles.oriented_signs(d)


@given(braid_words(max_len=9))
def test_alternating_and_dalt_match_brute_force(word):
    d = braid_closure(word)
    assert is_alternating(d) == oracles.alternating_by_walk(d)
    assert dealternating_number_diagram(d) == oracles.dalt_brute_force(d, change_crossings)


@given(braid_words())
def test_text_round_trip(word):
    d = braid_closure(word)
    assert parse_pd(d.to_text()) == d
    assert braid_closure(parse_braid(word.to_text())) == d


@given(connected_closures())
def test_mirror_negates_writhe_keeps_dalt(d):
    m = mirror(d)
    assert writhe(m) == -writhe(d)
    assert dealternating_number_diagram(m) == dealternating_number_diagram(d)


@given(connected_closures())
def test_reversal_keeps_diagram_invariants(d):
    r = reverse_components(d, range(d.component_count))
    assert writhe(r) == writhe(d)
    assert is_alternating(r) == is_alternating(d)


@given(connected_closures(max_strands=3, max_len=6), connected_closures(max_strands=3, max_len=6))
def test_connected_sum_additivity(d1, d2):
    s = connected_sum(d1, d2)
    assert s.component_count == d1.component_count + d2.component_count - 1
    assert len(s.crossings) == len(d1.crossings) + len(d2.crossings)
    assert turaev_genus_diagram(s) == turaev_genus_diagram(d1) + turaev_genus_diagram(d2)


def test_connected_sum_dalt_adds():
    # join along edges whose pass types keep the alternating pattern compatible
    for d1, d2 in [
        (closure(2, 1, 1, 1), closure(3, 1, -2, 1, -2)),
        (pretzel(5, -3, 2), closure(2, 1, 1, 1)),
        (closure(3, 1, 2, 1, 2, 1, 2, 1, 2), pretzel(5, -3, 2)),
    ]:
        best = min(
            dealternating_number_diagram(connected_sum(d1, d2, e1, e2))
            for e1 in d1.edges
            for e2 in d2.edges
        )
        assert best == dealternating_number_diagram(d1) + dealternating_number_diagram(d2)


def test_invalid_planarity_rejected():
    # a 2-crossing code that is not planar (genus-one rotation system)
    with pytest.raises(PlanarityError):
        from_pd([(1, 2, 3, 4), (2, 3, 1, 4)])


def test_diagram_is_immutable_value():
    d = parse_pd(TREFOIL_PD)
    assert hash(d) == hash(parse_pd(TREFOIL_PD))
    assert isinstance(d, PlanarDiagram)
