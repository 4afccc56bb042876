import numpy as np
import pytest
from hypothesis import strategies as st

from walkiso import Permutation, validate


@st.composite
def graphs(draw, min_order=1, max_order=12):
    """Small graphs bit-by-bit (good shrinking); larger ones from a seeded draw."""
    n = draw(st.integers(min_order, max_order))
    pairs = n * (n - 1) // 2
    a = np.zeros((n, n), dtype=bool)
    iu = np.triu_indices(n, k=1)
    if pairs <= 66:
        a[iu] = draw(st.lists(st.booleans(), min_size=pairs, max_size=pairs))
    else:
        p = draw(st.sampled_from([0.05, 0.1, 0.5, 0.9]))
        seed = draw(st.integers(0, 2**32 - 1))
        a[iu] = np.random.default_rng(seed).random(pairs) < p
    return validate(a | a.T)


@st.composite
def graph_and_permutation(draw, min_order=1, max_order=12):
    g = draw(graphs(min_order, max_order))
    perm = draw(st.permutations(range(g.order)))
    return g, Permutation(tuple(perm))


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


_ACCEPTANCE: list[tuple[int, str, bool, str]] = []


@pytest.fixture
def acceptance():
    """Record one acceptance line: ``acceptance(number, title, passed, detail)``."""
    def record(number: int, title: str, passed: bool, detail: str = "") -> bool:
        _ACCEPTANCE.append((number, title, bool(passed), detail))
        return passed
    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, passed, detail in sorted(_ACCEPTANCE):
        status = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"[{status}] {number}. {title}" + (f" -- {detail}" if detail else ""))
