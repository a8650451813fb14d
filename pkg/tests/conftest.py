import itertools

import pytest
from hypothesis import strategies as st

from gallailab.graph import Graph


@st.composite
def graphs(draw, min_n=0, max_n=9, connected=False):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    g = Graph(n, [e for e, keep in zip(pairs, chosen) if keep])
    if connected:
        # chain in a spanning path so every draw is usable
        g = Graph(n, set(g.edges) | {(i, i + 1) for i in range(n - 1)})
    return g


def path_graph(n):
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n):
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n):
    return Graph(n, itertools.combinations(range(n), 2))


def star(leaves):
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def brute_longest_paths(g):
    """All longest paths by trying every vertex permutation of every subset.

    Canonical orientation, sorted. Independent of the search engines; only
    usable for n <= 7.
    """
    best, found = 0, set()
    for r in range(1, g.n + 1):
        for sub in itertools.combinations(range(g.n), r):
            for perm in itertools.permutations(sub):
                if perm[0] > perm[-1]:
                    continue
                if all(g.has_edge(a, b) for a, b in zip(perm, perm[1:])):
                    if r > best:
                        best, found = r, set()
                    found.add(perm)
    return best, sorted(found)


@pytest.fixture
def p4():
    return path_graph(4)


@pytest.fixture
def c5():
    return cycle_graph(5)


@pytest.fixture
def k13():
    return star(3)


# -- acceptance reporting ------------------------------------------------

_acceptance_lines: list[str] = []


@pytest.fixture
def report():
    """Record one PASS/FAIL line per acceptance criterion.

    Lines are printed as they happen (visible with ``-s``) and repeated in
    the terminal summary so they survive output capturing.
    """

    def _report(number, ok, detail):
        line = f"criterion {number}: {'PASS' if ok else 'FAIL'}  {detail}"
        _acceptance_lines.append(line)
        print(line)
        return ok

    return _report


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.write_sep("=", "acceptance criteria")
        for line in sorted(_acceptance_lines):
            terminalreporter.write_line(line)
