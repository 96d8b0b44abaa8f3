import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from conftest import connected_closures
from altdist.bracket import jones_span
from altdist.diagram import (
    BraidWord,
    braid_closure,
    connected_sum,
    dealternating_number_diagram,
    is_alternating,
    unknot,
    unlink,
)
from altdist.errors import (
    CrossingIndexError,
    DiagramError,
    DisconnectedDiagramError,
    TangleDoesNotExtendError,
    TangleNotAlternatingError,
)
from altdist.tangles import (
    crossing,
    horizontal_twist,
    parse_fragment,
    pretzel,
    random_tangle,
    vertical_twist,
    zero_tangle,
)
from altdist.turaev import (
    all_a_loops,
    all_b_loops,
    extension_witness,
    state_loop_count,
    tangle_extend,
    tangle_is_alternating,
    turaev_excess,
    turaev_genus_diagram,
    turaev_genus_pieces,
)

TREFOIL = braid_closure(BraidWord(2, (1, 1, 1)))
T34 = braid_closure(BraidWord(3, (1, 2) * 4))


def test_trefoil_loops():
    assert all_a_loops(TREFOIL) == 2
    assert all_b_loops(TREFOIL) == 3
    assert turaev_genus_diagram(TREFOIL) == 0
    assert state_loop_count(unknot(), ()) == 1


def test_state_length_checked():
    with pytest.raises(DiagramError):
        state_loop_count(TREFOIL, (0, 1))


def test_t34_genus_from_oracle():
    a, b = oracles.loop_counts_all_a_b(T34)
    g = (2 + 8 - a - b) // 2
    assert turaev_genus_diagram(T34) == g
    assert g >= 1


def test_disconnected_refused():
    with pytest.raises(DisconnectedDiagramError):
        turaev_genus_diagram(unlink(2))
    split = braid_closure(BraidWord(4, (1, 1, 1, 3, 3, 3)))
    assert turaev_genus_pieces(split) == [0, 0]


@given(connected_closures(max_len=10), st.data())
def test_random_states_match_walk_oracle(d, data):
    state = tuple(data.draw(st.lists(st.integers(0, 1), min_size=len(d.crossings), max_size=len(d.crossings))))
    assert state_loop_count(d, state) == oracles.walk_loops(oracles.pd_tuples(d), state, d.free_loops)


@given(connected_closures(max_len=10))
def test_genus_inequalities(d):
    c = len(d.crossings)
    assert (2 + c - all_a_loops(d) - all_b_loops(d)) % 2 == 0
    assert all_a_loops(d) <= c + 1 and all_b_loops(d) <= c + 1
    g = turaev_genus_diagram(d)
    assert g >= 0
    assert g <= dealternating_number_diagram(d)
    assert g <= c - jones_span(d)
    if is_alternating(d):
        assert g == 0


@given(connected_closures(max_strands=3, max_len=6), connected_closures(max_strands=3, max_len=6))
def test_connected_sum_loop_counts(d1, d2):
    s = connected_sum(d1, d2)
    assert all_a_loops(s) == all_a_loops(d1) + all_a_loops(d2) - 1
    assert all_b_loops(s) == all_b_loops(d1) + all_b_loops(d2) - 1


def test_extend_trefoil_by_twist():
    ext = tangle_extend(TREFOIL, 0, horizontal_twist(3))
    assert len(ext.crossings) == 5
    assert turaev_genus_diagram(ext) == 0


def test_identity_extension():
    for k in range(3):
        assert tangle_extend(TREFOIL, k, crossing("\\")) == TREFOIL


def test_pretzel_extension_keeps_excess():
    p = pretzel(5, -3, 2)
    tau = vertical_twist(-5)
    for k in range(len(p.crossings)):
        ext = tangle_extend(p, k, tau)
        assert len(ext.crossings) == 14
        assert turaev_excess(ext) == turaev_excess(p)


def test_fragment_input():
    tau = parse_fragment(horizontal_twist(3).to_fragment())
    assert tangle_is_alternating(tau)
    ext = tangle_extend(TREFOIL, 1, horizontal_twist(3).to_fragment())
    assert ext == tangle_extend(TREFOIL, 1, tau)


def test_extension_errors():
    with pytest.raises(TangleNotAlternatingError):
        tangle_extend(TREFOIL, 0, horizontal_twist(1) + horizontal_twist(-1))
    with pytest.raises(TangleDoesNotExtendError):
        tangle_extend(TREFOIL, 0, zero_tangle())
    with pytest.raises(CrossingIndexError):
        tangle_extend(TREFOIL, 3, crossing("\\"))


def test_random_extensions_preserve_excess_and_genus(corpus):
    rng = random.Random(11)
    entries = [e for e in corpus if e.diagram.crossings and e.diagram.is_connected]
    done = 0
    while done < 40:
        tau = random_tangle(rng)
        if not tangle_is_alternating(tau) or extension_witness(tau) is None:
            continue
        e = rng.choice(entries)
        k = rng.randrange(len(e.diagram.crossings))
        ext = tangle_extend(e.diagram, k, tau)
        assert len(ext.crossings) == len(e.diagram.crossings) - 1 + tau.crossing_count
        assert turaev_excess(ext) == turaev_excess(e.diagram)
        assert turaev_genus_diagram(ext) == turaev_genus_diagram(e.diagram)
        done += 1
