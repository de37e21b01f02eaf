"""Immutable simple graphs on dense vertex sets 0..n-1.

Every other module passes :class:`Graph` values around.  Edges are stored
as sorted pairs ``(u, v)`` with ``u < v`` and indexed lexicographically, so
edge ids are reproducible and can be used as bit positions.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from itertools import combinations

from .errors import LoopDetected

Edge = tuple[int, int]
# A vertex map is a tuple whose i-th entry is the image of vertex i.
VertexMap = tuple[int, ...]


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Graph:
    """Simple undirected graph with vertices ``0..n-1``."""

    __slots__ = ("n", "edges", "_adj", "_eidx", "_hash")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        es = set()
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {(u, v)} out of range for n={n}")
            es.add(_norm(u, v))
        self.n = n
        self.edges: tuple[Edge, ...] = tuple(sorted(es))
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        self._adj = tuple(frozenset(a) for a in adj)
        self._eidx = {e: i for i, e in enumerate(self.edges)}
        self._hash = hash((n, self.edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(self.n)

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self._adj]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def edge_index(self, u: int, v: int) -> int:
        """Canonical index of edge ``uv``; raises ``KeyError`` if absent."""
        return self._eidx[_norm(u, v)]

    def incident_edges(self, v: int) -> list[int]:
        """Indices of the edges at ``v`` in ascending order."""
        return sorted(self._eidx[_norm(v, w)] for w in self._adj[v])

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        return Graph(self.n, ((perm[u], perm[v]) for u, v in self.edges))

    def induced_subgraph(self, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
        """Induced subgraph and the back-map new vertex -> old vertex."""
        back = sorted(set(vertices))
        pos = {v: i for i, v in enumerate(back)}
        es = [(pos[u], pos[v]) for u, v in self.edges if u in pos and v in pos]
        return Graph(len(back), es), back

    def subgraph(self, vertices: Iterable[int], edges: Iterable[Edge]) -> tuple[Graph, list[int]]:
        """Subgraph on ``vertices`` keeping only ``edges`` (given in old labels)."""
        back = sorted(set(vertices))
        pos = {v: i for i, v in enumerate(back)}
        es = []
        for u, v in edges:
            if not self.has_edge(u, v):
                raise ValueError(f"{(u, v)} is not an edge")
            es.append((pos[u], pos[v]))
        return Graph(len(back), es), back

    def complement(self) -> Graph:
        return Graph(self.n, (e for e in combinations(range(self.n), 2) if not self.has_edge(*e)))

    def is_connected(self) -> bool:
        return len(component_sets(self)) <= 1

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges)})"


# ---------------------------------------------------------------- generators


def empty_graph(n: int) -> Graph:
    return Graph(n)


def complete_graph(n: int) -> Graph:
    return Graph(n, combinations(range(n), 2))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycles need at least 3 vertices")
    return Graph(n, ((i, (i + 1) % n) for i in range(n)))


def path_graph(n: int) -> Graph:
    """Path on ``n`` vertices (so ``path_graph(3)`` is P3 with two edges)."""
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def star_graph(leaves: int) -> Graph:
    return Graph(leaves + 1, ((0, i) for i in range(1, leaves + 1)))


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, ((i, a + j) for i in range(a) for j in range(b)))


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


# ------------------------------------------------------- structural plumbing


def component_sets(g: Graph) -> list[list[int]]:
    """Vertex sets of the connected components, each sorted, ordered by minimum."""
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp, stack = [s], [s]
        while stack:
            v = stack.pop()
            for w in g.neighbors(v):
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    stack.append(w)
        out.append(sorted(comp))
    return out


def components(g: Graph) -> list[tuple[Graph, list[int]]]:
    """Connected components as graphs, each with its back-map to ``g``."""
    return [g.induced_subgraph(c) for c in component_sets(g)]


def disjoint_union(gs: Sequence[Graph]) -> tuple[Graph, list[int]]:
    """Disjoint union; summand ``i`` occupies ids ``offsets[i] ..``."""
    offsets, edges, n = [], [], 0
    for g in gs:
        offsets.append(n)
        edges.extend((u + n, v + n) for u, v in g.edges)
        n += g.n
    return Graph(n, edges), offsets


def check_partition(n: int, blocks: Sequence[Iterable[int]]) -> list[tuple[int, ...]]:
    """Validate ``blocks`` as a partition of ``0..n-1``; returns sorted blocks."""
    out = [tuple(sorted(b)) for b in blocks]
    seen: set[int] = set()
    for b in out:
        if not b:
            raise ValueError("partition blocks must be nonempty")
        if seen.intersection(b):
            raise ValueError("partition blocks overlap")
        seen.update(b)
    if seen != set(range(n)):
        raise ValueError("partition does not cover the vertex set")
    return out


def quotient(g: Graph, blocks: Sequence[Iterable[int]]) -> Graph:
    """Quotient ``g / blocks``: block ``i`` becomes vertex ``i``.

    Raises :class:`LoopDetected` when a block contains an edge of ``g``.
    """
    blocks = check_partition(g.n, blocks)
    where = [0] * g.n
    for i, b in enumerate(blocks):
        for v in b:
            where[v] = i
    es = set()
    for u, v in g.edges:
        bu, bv = where[u], where[v]
        if bu == bv:
            raise LoopDetected(blocks[bu])
        es.add(_norm(bu, bv))
    return Graph(len(blocks), es)


def is_homomorphism(f: Graph, g: Graph, phi: Sequence[int]) -> bool:
    if len(phi) != f.n or any(not 0 <= x < g.n for x in phi):
        return False
    return all(g.has_edge(phi[u], phi[v]) for u, v in f.edges)


def is_isomorphism(f: Graph, g: Graph, phi: Sequence[int]) -> bool:
    return (
        f.n == g.n
        and f.m == g.m
        and len(set(phi)) == f.n
        and is_homomorphism(f, g, phi)
    )


def named_graph(name: str) -> Graph:
    """Parse names such as ``K4``, ``C6``, ``P3``, ``K1,3``, ``2K3``, ``Petersen``."""
    s = name.strip().replace("·", "").replace("*", "")
    low = s.lower()
    if low == "petersen":
        return petersen_graph()
    mult = 1
    i = 0
    while i < len(s) and s[i].isdigit():
        i += 1
    if 0 < i < len(s):
        mult, s = int(s[:i]), s[i:]
    kind, rest = s[:1].upper(), s[1:]
    try:
        if kind == "K" and "," in rest:
            a, b = rest.split(",")
            base = complete_bipartite(int(a), int(b))
        elif kind == "K":
            base = complete_graph(int(rest))
        elif kind == "C":
            base = cycle_graph(int(rest))
        elif kind == "P":
            base = path_graph(int(rest))
        elif kind == "E":
            base = empty_graph(int(rest))
        else:
            raise ValueError
    except ValueError:
        raise ValueError(f"unknown graph name {name!r}") from None
    if mult == 1:
        return base
    return disjoint_union([base] * mult)[0]
