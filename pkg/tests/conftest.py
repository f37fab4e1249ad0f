import itertools
import sys

import pytest

from multichains import corpus
from multichains.poset import Poset


@pytest.fixture(scope="session")
def posets():
    return corpus.corpus()


@pytest.fixture(scope="session")
def posets_extra():
    return corpus.corpus(extra=True)


@pytest.fixture
def c3():
    return Poset.chain(3)


def naive_leq(P, iota, p, q):
    """The defining inequalities, written out with no shortcuts."""
    r = len(p)
    return all(
        (P.le(q[s], p[t]) if s + 1 <= iota.values[t] - (t + 1) else P.le(p[t], q[s]))
        for t in range(r) for s in range(r)
    )


def naive_multichains(P, r):
    return [m for m in itertools.product(range(len(P)), repeat=r)
            if all(P.le(a, b) for a, b in zip(m, m[1:]))]


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.RESULTS:
        terminalreporter.write_line(line)
