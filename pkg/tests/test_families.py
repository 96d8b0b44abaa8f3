from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from altdist.bracket import jones_polynomial
from altdist.diagram import BraidWord, braid_closure, from_pd, unknot, writhe
from altdist.errors import DiagramError, ParameterRangeError
from altdist.families import (
    known_values,
    modified_block,
    modified_torus_braid,
    toroidal_alternating_check,
    torus_braid,
    whitehead_double,
)
from altdist.intervals import Interval
from altdist.polynomial import LaurentPolynomial

FIG8 = from_pd([(4, 2, 5, 1), (8, 6, 1, 5), (6, 3, 7, 4), (2, 7, 3, 8)])


def closure(n, *letters):
    return braid_closure(BraidWord(n, tuple(letters)))


def test_torus_words():
    assert torus_braid(3, 4).letters == (1, 2) * 4
    assert torus_braid(2, 3).letters == (1, 1, 1)
    assert braid_closure(torus_braid(4, 2)).component_count == 2


def test_modified_words():
    assert modified_block(4) == (1, -2, 3)
    assert modified_torus_braid(4, 3).letters == (1, 2, 3, 1, 2, 3, 1, -2, 3)


@pytest.mark.parametrize("p", range(3, 9))
def test_modified_differs_by_flips(p):
    a, b = torus_braid(p, 5).letters, modified_torus_braid(p, 5).letters
    assert sum(x != y for x, y in zip(a, b)) == (p - 1) // 2
    assert all(x == -y for x, y in zip(a, b) if x != y)


def test_toroidal_check():
    for p, q in [(4, 3), (4, 7), (6, 5), (6, 11), (4, 11)]:
        assert toroidal_alternating_check(p, q)
    for p, q in [(4, 5), (6, 7), (4, 9)]:
        chk = toroidal_alternating_check(p, q)
        assert not chk and not chk.hypotheses


def test_whitehead_examples():
    assert len(whitehead_double(unknot(), 1).crossings) == 4
    d0 = whitehead_double(unknot(), 0)
    assert len(d0.crossings) == 2
    assert jones_polynomial(d0) == LaurentPolynomial.constant(1)
    tre = closure(2, 1, 1, 1)
    assert len(whitehead_double(tre, 0).crossings) == 20
    with pytest.raises(DiagramError):
        whitehead_double(closure(2, 1, 1), 0)


def test_whitehead_doubles_of_unknot_are_twist_knots():
    t = LaurentPolynomial.monomial
    # t = -1 gives the positive-clasp trefoil, t = 1 the figure-eight
    assert jones_polynomial(whitehead_double(unknot(), -1)) == t(1) + t(3) - t(4)
    assert jones_polynomial(whitehead_double(unknot(), 1)) == jones_polynomial(FIG8)


@given(st.sampled_from([unknot(), closure(2, 1, 1, 1), FIG8, closure(2, -1, -1, -1)]), st.integers(-3, 3))
def test_whitehead_count_formula(d, t):
    w = whitehead_double(d, t)
    assert len(w.crossings) == 4 * len(d.crossings) + 2 + 2 * abs(t - writhe(d))
    assert w.component_count == 1


def test_known_values_t37():
    f = known_values("torus", (3, 7))
    assert f.get("alt").interval == Interval.point(2)
    assert f.get("dalt").interval == Interval.point(2)
    assert f.get("turaev_genus").interval == Interval.point(2)
    assert f.get("c").interval == Interval.point(14)
    assert f.get("span").interval == Interval.point(8)
    assert f.get("warp").interval == Interval.point(Fraction(1, 2))


def test_known_values_t34():
    f = known_values("torus", (3, 4))
    assert f.get("alt").interval == Interval.point(1)
    assert f.get("dalt").interval == f.get("turaev_genus").interval == Interval.point(1)
    assert f.get("c_minus_span").interval == Interval.point(3)


def test_two_point_alternation_number():
    f = known_values("torus", (3, 10))
    assert f.get("alt").choices == (2, 3)
    assert f.get("alt").interval == Interval(2, 3)


def test_known_values_w3():
    f = known_values("whitehead", (3,))
    assert f.get("alt").interval == Interval.point(1)
    assert f.get("turaev_genus").interval == Interval.at_least(3)
    assert f.get("alt_genus").interval.lo == 2
    assert f.get("hfk_width").interval == Interval.point(4)


def test_out_of_range():
    with pytest.raises(ParameterRangeError):
        known_values("torus", (3,))
    with pytest.raises(ParameterRangeError):
        known_values("whitehead", (-1,))
    with pytest.raises(ParameterRangeError):
        known_values("modified", (4, 6))
    with pytest.raises(ParameterRangeError):
        known_values("cable", (2, 3))
    with pytest.raises(ParameterRangeError):
        torus_braid(1, 3)


@pytest.mark.parametrize("q", [4, 5, 7, 8, 10])
def test_t3q_span_matches_facts(q):
    f = known_values("torus", (3, q))
    span = jones_polynomial(braid_closure(torus_braid(3, q))).span()
    assert span == q + 1 == f.get("span").interval.lo
    assert f.get("c").interval.lo - (q - 1) == span
