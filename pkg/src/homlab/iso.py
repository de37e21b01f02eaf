"""Isomorphism by individualization-refinement, plus minor testing.

Two exact routes share colour refinement (1-WL) as the pruning step:

* :func:`isomorphisms` refines both graphs jointly so colour ids are
  comparable, then individualizes a vertex of the smallest non-trivial cell
  of the first graph against every same-coloured vertex of the second.
  It enumerates all isomorphisms (used for automorphism counts).
* :func:`canonical_form` searches one graph's tree with automorphism
  pruning; :func:`is_isomorphic` compares canonical forms, which stays
  fast on non-isomorphic CFI pairs where the joint search must exhaust.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterator, Sequence
from itertools import combinations

from .errors import ConsistencyError, SizeGuardError
from .graph import Graph, VertexMap, component_sets, is_isomorphism

MINOR_MAX_N = 10


def _refine_joint(g: Graph, cg: list[int], h: Graph, ch: list[int]):
    """Refine two colorings to the coarsest stable joint partition.

    Returns ``None`` as soon as the color histograms disagree.
    """
    ncls = len(set(cg) | set(ch))
    while True:
        sg = [(cg[v], tuple(sorted(cg[w] for w in g.neighbors(v)))) for v in range(g.n)]
        sh = [(ch[v], tuple(sorted(ch[w] for w in h.neighbors(v)))) for v in range(h.n)]
        ids = {s: i for i, s in enumerate(sorted(set(sg) | set(sh)))}
        cg = [ids[s] for s in sg]
        ch = [ids[s] for s in sh]
        if Counter(cg) != Counter(ch):
            return None
        if len(ids) == ncls:
            return cg, ch
        ncls = len(ids)


def _search(g: Graph, cg: list[int], h: Graph, ch: list[int]) -> Iterator[VertexMap]:
    res = _refine_joint(g, cg, h, ch)
    if res is None:
        return
    cg, ch = res
    cells: dict[int, list[int]] = {}
    for v, c in enumerate(cg):
        cells.setdefault(c, []).append(v)
    target = None
    for c, vs in sorted(cells.items()):
        if len(vs) > 1 and (target is None or len(vs) < len(cells[target])):
            target = c
    if target is None:
        inv = {c: v for v, c in enumerate(ch)}
        phi = tuple(inv[c] for c in cg)
        if is_isomorphism(g, h, phi):
            yield phi
        return
    v = cells[target][0]
    fresh = max(cg) + 1
    for w in range(h.n):
        if ch[w] != target:
            continue
        cg2 = list(cg)
        ch2 = list(ch)
        cg2[v] = fresh
        ch2[w] = fresh
        yield from _search(g, cg2, h, ch2)


def isomorphisms(g: Graph, h: Graph) -> Iterator[VertexMap]:
    """Every isomorphism ``g -> h`` as a tuple ``phi`` with ``phi[v]`` the image of ``v``."""
    if g.n != h.n or g.m != h.m or sorted(g.degrees()) != sorted(h.degrees()):
        return iter(())
    return _search(g, [0] * g.n, h, [0] * h.n)


# -------------------------------------------------------- canonical labelling


def _refine(g: Graph, colors: list[int]) -> list[int]:
    """Equitable refinement of one graph; ids are ranks of sorted signatures."""
    ncls = len(set(colors))
    while True:
        sig = [(colors[v], tuple(sorted(colors[w] for w in g.neighbors(v)))) for v in range(g.n)]
        ids = {s: i for i, s in enumerate(sorted(set(sig)))}
        colors = [ids[s] for s in sig]
        if len(ids) == ncls:
            return colors
        ncls = len(ids)


def _orbits(cell: list[int], gens: list[tuple[int, ...]]) -> dict[int, int]:
    parent = {v: v for v in cell}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for gamma in gens:
        for v in cell:
            w = gamma[v]
            if w in parent:
                a, b = find(v), find(w)
                if a != b:
                    parent[max(a, b)] = min(a, b)
    return {v: find(v) for v in cell}


def canonical_form(g: Graph) -> tuple[tuple, VertexMap]:
    """Canonical edge list and the labelling ``v -> label`` producing it.

    Individualization-refinement over the whole search tree, keeping the
    lexicographically smallest relabelled edge list.  Automorphisms found as
    coinciding leaves prune sibling branches in the same orbit of the
    stabilizer of the current individualized prefix.
    """
    best: list = [None, None]
    autos: list[tuple[int, ...]] = []

    def leaf(colors: list[int]):
        perm = tuple(colors)
        key = tuple(sorted((min(perm[u], perm[v]), max(perm[u], perm[v])) for u, v in g.edges))
        if best[0] is None or key < best[0]:
            best[0], best[1] = key, perm
        elif key == best[0]:
            inv = [0] * g.n
            for v, lab in enumerate(best[1]):
                inv[lab] = v
            autos.append(tuple(inv[perm[v]] for v in range(g.n)))

    def node(colors: list[int], prefix: tuple[int, ...]):
        colors = _refine(g, colors)
        cells: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            cells.setdefault(c, []).append(v)
        target = None
        for c in sorted(cells):
            if len(cells[c]) > 1 and (target is None or len(cells[c]) < len(cells[target])):
                target = c
        if target is None:
            leaf(colors)
            return
        cell = cells[target]
        fresh = len(cells)
        done: list[int] = []
        for w in cell:
            gens = [a for a in autos if all(a[p] == p for p in prefix)]
            orb = _orbits(cell, gens)
            if any(orb[w] == orb[x] for x in done):
                continue
            c2 = list(colors)
            c2[w] = fresh
            node(c2, prefix + (w,))
            done.append(w)

    if g.n == 0:
        return (), ()
    node([0] * g.n, ())
    return best[0], best[1]


def is_isomorphic(g: Graph, h: Graph) -> VertexMap | None:
    """A witnessing isomorphism, or ``None`` when the graphs are not isomorphic."""
    if g.n != h.n or g.m != h.m or sorted(g.degrees()) != sorted(h.degrees()):
        return None
    kg, pg = canonical_form(g)
    kh, ph = canonical_form(h)
    if kg != kh:
        return None
    inv = [0] * h.n
    for v, lab in enumerate(ph):
        inv[lab] = v
    phi = tuple(inv[pg[v]] for v in range(g.n))
    if not is_isomorphism(g, h, phi):
        raise ConsistencyError("canonical forms agree but the induced map is not an isomorphism")
    return phi


def automorphism_count(g: Graph) -> int:
    return sum(1 for _ in isomorphisms(g, g))


def invariant_key(g: Graph) -> tuple:
    """Cheap isomorphism invariant used to bucket graphs before exact tests."""
    degs = g.degrees()
    return (g.n, g.m, tuple(sorted(degs)), tuple(sorted(len(c) for c in component_sets(g))))


class IsoClasses:
    """Accumulates graphs up to isomorphism; ``add`` returns ``(class index, is_new)``."""

    def __init__(self) -> None:
        self.reps: list[Graph] = []
        self._index: dict[tuple, int] = {}

    def add(self, g: Graph) -> tuple[int, bool]:
        key = (g.n, canonical_form(g)[0])
        i = self._index.get(key)
        if i is not None:
            return i, False
        self.reps.append(g)
        self._index[key] = len(self.reps) - 1
        return len(self.reps) - 1, True

    def __len__(self) -> int:
        return len(self.reps)


# ------------------------------------------------------------------ minors


def set_partitions(items: Sequence[int]) -> Iterator[list[list[int]]]:
    """All set partitions of ``items`` (restricted-growth order)."""
    items = list(items)
    if not items:
        yield []
        return
    blocks: list[list[int]] = []

    def rec(i: int):
        if i == len(items):
            yield [list(b) for b in blocks]
            return
        x = items[i]
        for b in blocks:
            b.append(x)
            yield from rec(i + 1)
            b.pop()
        blocks.append([x])
        yield from rec(i + 1)
        blocks.pop()

    yield from rec(0)


def _block_connected(g: Graph, block: Sequence[int]) -> bool:
    inside = set(block)
    start = block[0]
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for w in g.neighbors(v):
            if w in inside and w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(inside)


def connected_partitions(g: Graph) -> Iterator[list[list[int]]]:
    """Partitions of ``V(g)`` whose blocks induce connected subgraphs."""
    for p in set_partitions(range(g.n)):
        if all(_block_connected(g, b) for b in p):
            yield p


def contract(g: Graph, blocks: Sequence[Sequence[int]]) -> Graph:
    """Quotient by connected blocks with internal edges dropped."""
    where = {}
    for i, b in enumerate(blocks):
        for v in b:
            where[v] = i
    es = {(min(where[u], where[v]), max(where[u], where[v]))
          for u, v in g.edges if where[u] != where[v]}
    return Graph(len(blocks), es)


def find_subgraph_embedding(h: Graph, g: Graph) -> VertexMap | None:
    """An injective homomorphism ``h -> g`` (not necessarily induced), if any."""
    if h.n > g.n or h.m > g.m:
        return None
    order = _bfs_order(h)
    pos = {v: i for i, v in enumerate(order)}
    back = [[w for w in h.neighbors(v) if pos[w] < pos[v]] for v in order]
    img = [-1] * h.n
    used = [False] * g.n

    def rec(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        prev = back[i]
        cands = g.neighbors(img[prev[0]]) if prev else range(g.n)
        for x in cands:
            if used[x] or any(not g.has_edge(img[p], x) for p in prev):
                continue
            img[v] = x
            used[x] = True
            if rec(i + 1):
                return True
            used[x] = False
        img[v] = -1
        return False

    return tuple(img) if rec(0) else None


def _bfs_order(g: Graph) -> list[int]:
    order = []
    for comp in component_sets(g):
        start = max(comp, key=g.degree)
        seen = {start}
        queue = [start]
        for v in queue:
            order.append(v)
            for w in sorted(g.neighbors(v), key=lambda x: -g.degree(x)):
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
    return order


def is_minor(h: Graph, g: Graph, max_n: int = MINOR_MAX_N) -> bool:
    """True iff ``h`` is isomorphic to a subgraph of ``g`` contracted along connected blocks."""
    if g.n > max_n:
        raise SizeGuardError(f"is_minor is exhaustive; |V(g)|={g.n} exceeds {max_n}")
    if h.n > g.n or h.m > g.m:
        return False
    if find_subgraph_embedding(h, g) is not None:
        return True
    for p in connected_partitions(g):
        if len(p) < h.n or len(p) == g.n:
            continue
        q = contract(g, p)
        if q.m >= h.m and find_subgraph_embedding(h, q) is not None:
            return True
    return False



def minors(g: Graph, max_n: int = MINOR_MAX_N) -> list[Graph]:
    """Every nonempty minor of ``g`` up to isomorphism (exhaustive, tiny graphs only)."""
    if g.n > max_n:
        raise SizeGuardError(f"minors() is exhaustive; |V(g)|={g.n} exceeds {max_n}")
    classes = IsoClasses()
    for p in connected_partitions(g):
        q = contract(g, p)
        for r in range(1, q.n + 1):
            for vs in combinations(range(q.n), r):
                inside = [e for e in q.edges if e[0] in vs and e[1] in vs]
                for mask in range(1 << len(inside)):
                    es = [e for i, e in enumerate(inside) if mask >> i & 1]
                    classes.add(q.subgraph(vs, es)[0])
    return classes.reps
