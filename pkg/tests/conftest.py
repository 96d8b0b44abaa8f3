import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from altdist.corpus import load_corpus  # noqa: E402
from altdist.diagram import BraidWord, braid_closure  # noqa: E402

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


@st.composite
def braid_words(draw, max_strands=4, max_len=8, min_len=1):
    n = draw(st.integers(2, max_strands))
    letters = draw(
        st.lists(
            st.integers(1, n - 1).flatmap(lambda i: st.sampled_from((i, -i))),
            min_size=min_len,
            max_size=max_len,
        )
    )
    return BraidWord(n, tuple(letters))


@st.composite
def connected_closures(draw, max_strands=4, max_len=8):
    """Closures of braid words that use every generator (so the diagram is connected)."""
    n = draw(st.integers(2, max_strands))
    base = [draw(st.sampled_from((i, -i))) for i in range(1, n)]
    extra = draw(
        st.lists(
            st.integers(1, n - 1).flatmap(lambda i: st.sampled_from((i, -i))),
            max_size=max(0, max_len - len(base)),
        )
    )
    letters = draw(st.permutations(base + extra))
    return braid_closure(BraidWord(n, tuple(letters)))


@st.composite
def knot_closures(draw, max_strands=4, max_len=8):
    d = draw(connected_closures(max_strands, max_len))
    from hypothesis import assume

    assume(d.component_count == 1)
    return d


@pytest.fixture(scope="session")
def corpus():
    return load_corpus()


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[n])
