import functools
import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from imbalance import PathLengthSequence, enumerate_sequences  # noqa: E402


@functools.lru_cache(maxsize=None)
def universe(t):
    return tuple(enumerate_sequences(t))


@pytest.fixture
def P():
    return lambda text: PathLengthSequence([int(x) for x in text.split(",")])


@st.composite
def full_trees(draw, max_leaves=12):
    """Random maximal prefix code, grown by splitting random leaves."""
    target = draw(st.integers(min_value=1, max_value=max_leaves))
    words = [""]
    while len(words) < target:
        idx = draw(st.integers(min_value=0, max_value=len(words) - 1))
        w = words.pop(idx)
        words += [w + "0", w + "1"]
    return words


@st.composite
def sequences(draw, max_leaves=12):
    words = draw(full_trees(max_leaves))
    return PathLengthSequence(sorted(len(w) for w in words))


@st.composite
def same_size_pairs(draw, min_size=1, max_size=11):
    t = draw(st.integers(min_value=min_size, max_value=max_size))
    u = universe(t)
    return draw(st.sampled_from(u)), draw(st.sampled_from(u))


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
