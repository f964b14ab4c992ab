import itertools
import sys

import pytest
from hypothesis import strategies as st

from cayleyfn.constructions import worked_example
from cayleyfn.transformation import Transformation


@pytest.fixture
def worked():
    """(alpha, epsilon) from the 13-point worked example."""
    return worked_example()


def vertices(t, *labels):
    return frozenset(t.index(lab) for lab in labels)


def all_maps(n):
    for m in itertools.product(range(n), repeat=n):
        yield Transformation(m)


def all_idempotents(n):
    for t in all_maps(n):
        if all(t.map[t.map[x]] == t.map[x] for x in range(n)):
            yield t


@st.composite
def transformations(draw, min_size=1, max_size=8):
    n = draw(st.integers(min_size, max_size))
    return Transformation(tuple(draw(st.lists(st.integers(0, n - 1), min_size=n, max_size=n))))


@st.composite
def same_size_maps(draw, count, min_size=1, max_size=7):
    n = draw(st.integers(min_size, max_size))
    return [Transformation(tuple(draw(st.lists(st.integers(0, n - 1), min_size=n, max_size=n))))
            for _ in range(count)]


def double_ray_census(cc):
    """Branches of the truncated alpha, read off the finite map alone:
    (position on the fixed line, length) for every non-boundary initial
    vertex, walking forward until a fixed-line or satellite-line vertex."""
    alpha = cc.alpha
    lines = {v: p for p, v in cc.fixed_line.items()}
    lines.update({v: p for p, v in cc.satellite_line.items()})
    has_pre = set(alpha.map)
    out = []
    for v in range(alpha.size):
        if v in has_pre or v in cc.boundary:
            continue
        u, steps = v, 0
        while u not in lines:
            u, steps = alpha(u), steps + 1
        out.append((lines[u], steps))
    return sorted(out)


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(module.RESULTS, key=lambda s: int(s.split()[2])):
        terminalreporter.write_line(line)
