from __future__ import annotations

import random
from itertools import combinations, permutations

from hypothesis import strategies as st

from homlab.graph import Graph


def brute_isomorphic(g: Graph, h: Graph) -> bool:
    """Oracle: try every bijection."""
    if g.n != h.n or g.m != h.m:
        return False
    he = set(h.edges)
    for p in permutations(range(g.n)):
        if all((min(p[u], p[v]), max(p[u], p[v])) in he for u, v in g.edges):
            return True
    return False


def brute_hom(f: Graph, g: Graph) -> int:
    """Oracle: count all |V(g)|^|V(f)| maps with no pruning."""
    from itertools import product

    return sum(1 for phi in product(range(g.n), repeat=f.n)
               if all(g.has_edge(phi[u], phi[v]) for u, v in f.edges))


def random_graph(rng: random.Random, n: int, p: float | None = None) -> Graph:
    if p is None:
        p = rng.random()
    return Graph(n, [e for e in combinations(range(n), 2) if rng.random() < p])


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 7):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [e for e, keep in zip(pairs, mask) if keep])


@st.composite
def graph_and_perm(draw, min_n: int = 1, max_n: int = 7):
    g = draw(graphs(min_n, max_n))
    perm = draw(st.permutations(list(range(g.n))))
    return g, list(perm)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
