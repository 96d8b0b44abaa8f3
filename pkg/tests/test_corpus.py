import pytest

from altdist.bracket import jones_polynomial
from altdist.corpus import corpus_groups, read_diagrams, read_file
from altdist.errors import EmptyInputError, MalformedTokenError


def test_corpus_loads(corpus):
    assert len(corpus) >= 50
    assert all(len(e.diagram.crossings) <= 12 for e in corpus)
    assert all(e.diagram.is_connected for e in corpus)


def test_groups_share_jones(corpus):
    for link, entries in corpus_groups(corpus).items():
        vs = {jones_polynomial(e.diagram) for e in entries}
        assert len(vs) == 1, link


def test_reader_comments_and_names():
    out = read_diagrams(["# header", "", "a: BR(2): 1 1 1  # trailing", "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"])
    assert [e.name for e in out] == ["a", "line4"]
    assert out[0].link == "a"


def test_reader_line_numbers():
    with pytest.raises(MalformedTokenError) as exc:
        read_diagrams(["BR(2): 1 1 1", "bad: X(1,2)"])
    assert "2" in str(exc.value)


def test_empty_file(tmp_path):
    p = tmp_path / "empty.txt"
    p.write_text("# nothing here\n")
    with pytest.raises(EmptyInputError, match="no diagrams"):
        read_file(str(p))
