"""Exact treewidth, tree-decomposition checking and the cops-and-robber game.

Treewidth uses the subset recurrence over elimination orderings

    TW(S) = min_{v in S} max(TW(S - v), |Q(S - v, v)|)

where ``Q(S, v)`` is the set of vertices outside ``S + v`` reachable from
``v`` through ``S``.  The optimal ordering is turned into a decomposition
whose bags are the eliminated vertex plus its higher filled neighbours.

The game solver works on positions (cop set, robber component): where the
robber stands inside a component of ``G - cops`` does not matter.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .errors import ConsistencyError, SizeGuardError
from .graph import Graph

TREEWIDTH_MAX_N = 16
COPS_MAX_N = 14


@dataclass(frozen=True)
class TreeDecomposition:
    bags: tuple[frozenset[int], ...]
    tree: tuple[tuple[int, int], ...]
    width: int = field(default=-1)

    @classmethod
    def make(cls, bags, tree) -> TreeDecomposition:
        bags = tuple(frozenset(b) for b in bags)
        width = max((len(b) for b in bags), default=0) - 1
        return cls(bags, tuple((int(i), int(j)) for i, j in tree), width)

    def to_json(self) -> dict:
        return {
            "bags": [sorted(b) for b in self.bags],
            "tree": [list(e) for e in self.tree],
            "width": self.width,
        }

    @classmethod
    def from_json(cls, obj: dict) -> TreeDecomposition:
        bags = tuple(frozenset(b) for b in obj["bags"])
        return cls(bags, tuple(tuple(e) for e in obj["tree"]), int(obj["width"]))


def _masks(g: Graph) -> list[int]:
    return [sum(1 << w for w in g.neighbors(v)) for v in range(g.n)]


def _bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def _q_size(nbr: list[int], s: int, v: int) -> int:
    comp = 1 << v
    frontier = comp
    while frontier:
        reach = 0
        for w in _bits(frontier):
            reach |= nbr[w]
        frontier = reach & s & ~comp
        comp |= frontier
    out = 0
    for w in _bits(comp):
        out |= nbr[w]
    return (out & ~comp & ~s).bit_count()


def elimination_order(g: Graph, max_n: int = TREEWIDTH_MAX_N) -> tuple[int, list[int]]:
    """Optimal width and a vertex elimination ordering achieving it."""
    n = g.n
    if n > max_n:
        raise SizeGuardError(f"exact treewidth limited to {max_n} vertices, got {n}")
    if n == 0:
        return -1, []
    nbr = _masks(g)
    full = (1 << n) - 1
    best = [0] * (1 << n)
    choice = [0] * (1 << n)
    best[0] = -1
    for s in range(1, full + 1):
        b = n + 1
        for v in _bits(s):
            rest = s & ~(1 << v)
            val = max(best[rest], _q_size(nbr, rest, v))
            if val < b:
                b, choice[s] = val, v
        best[s] = b
    order = []
    s = full
    while s:
        v = choice[s]
        order.append(v)
        s &= ~(1 << v)
    order.reverse()
    return best[full], order


def decomposition_from_order(g: Graph, order: list[int]) -> TreeDecomposition:
    if g.n == 0:
        return TreeDecomposition.make([()], [])
    pos = {v: i for i, v in enumerate(order)}
    adj = [set(g.neighbors(v)) for v in range(g.n)]
    bags = []
    parent_vertex = []
    for v in order:
        higher = {w for w in adj[v] if pos[w] > pos[v]}
        bags.append(frozenset(higher | {v}))
        for a, b in combinations(higher, 2):
            adj[a].add(b)
            adj[b].add(a)
        parent_vertex.append(min(higher, key=pos.__getitem__) if higher else None)
    tree = []
    roots = []
    for i, p in enumerate(parent_vertex):
        if p is None:
            roots.append(i)
        else:
            tree.append((i, pos[p]))
    tree.extend((roots[i], roots[i + 1]) for i in range(len(roots) - 1))
    return TreeDecomposition.make(bags, tree)


def treewidth_exact(g: Graph, max_n: int = TREEWIDTH_MAX_N) -> tuple[int, TreeDecomposition]:
    width, order = elimination_order(g, max_n)
    td = decomposition_from_order(g, order)
    if td.width != width:
        raise ConsistencyError(f"decomposition width {td.width} != optimum {width}")
    return width, td


def greedy_decomposition(g: Graph) -> TreeDecomposition:
    """Decomposition from a min-degree elimination order (valid, not always optimal)."""
    adj = [set(g.neighbors(v)) for v in range(g.n)]
    left = set(range(g.n))
    order = []
    while left:
        v = min(left, key=lambda x: (len(adj[x] & left), x))
        nb = adj[v] & left
        for a in nb:
            adj[a] |= nb - {a}
        order.append(v)
        left.remove(v)
    return decomposition_from_order(g, order)


def treewidth(g: Graph) -> int:
    return elimination_order(g)[0]


def validate_decomposition(g: Graph, td: TreeDecomposition) -> bool:
    """Check the three tree-decomposition axioms and the declared width."""
    nb = len(td.bags)
    if nb == 0:
        return False
    if any(not 0 <= v < g.n for b in td.bags for v in b):
        return False
    if td.width != max(len(b) for b in td.bags) - 1:
        return False
    # tree: nb - 1 edges, no self-loops, connected
    if len(td.tree) != nb - 1:
        return False
    adj: list[list[int]] = [[] for _ in range(nb)]
    for i, j in td.tree:
        if not (0 <= i < nb and 0 <= j < nb) or i == j:
            return False
        adj[i].append(j)
        adj[j].append(i)
    if len(_reach(adj, {0}, range(nb))) != nb:
        return False
    covered = set().union(*td.bags)
    if covered != set(range(g.n)):
        return False
    for u, v in g.edges:
        if not any(u in b and v in b for b in td.bags):
            return False
    for v in range(g.n):
        holding = [i for i, b in enumerate(td.bags) if v in b]
        if len(_reach(adj, {holding[0]}, holding)) != len(holding):
            return False
    return True


def _reach(adj, start: set[int], allowed) -> set[int]:
    allowed = set(allowed)
    seen = set(start)
    stack = list(start)
    while stack:
        i = stack.pop()
        for j in adj[i]:
            if j in allowed and j not in seen:
                seen.add(j)
                stack.append(j)
    return seen


# ------------------------------------------------------------ cops & robber


def _component_masks(nbr: list[int], n: int, blocked: int) -> list[int]:
    free = ((1 << n) - 1) & ~blocked
    comps = []
    while free:
        start = free & -free
        comp = start
        frontier = start
        while frontier:
            reach = 0
            for w in _bits(frontier):
                reach |= nbr[w]
            frontier = reach & free & ~comp
            comp |= frontier
        comps.append(comp)
        free &= ~comp
    return comps


def cops_win(g: Graph, k: int, max_n: int = COPS_MAX_N) -> bool:
    """Whether ``k`` cops catch a visible robber on ``g``.

    Cops may lift any one cop and land it anywhere; while it is in the air
    the robber runs along paths avoiding the remaining cops.
    """
    n = g.n
    if n > max_n:
        raise SizeGuardError(f"cops game limited to {max_n} vertices, got {n}")
    if k < 1:
        raise ValueError("need at least one cop")
    if k >= n:
        return True
    nbr = _masks(g)
    comp_cache: dict[int, list[int]] = {}

    def comps(blocked: int) -> list[int]:
        c = comp_cache.get(blocked)
        if c is None:
            c = comp_cache[blocked] = _component_masks(nbr, n, blocked)
        return c

    cop_sets = [sum(1 << v for v in c) for size in range(1, k + 1) for c in combinations(range(n), size)]
    positions = [(c, r) for c in cop_sets for r in comps(c)]
    won: set[tuple[int, int]] = set()

    def move_wins(cops: int, region: int) -> bool:
        lifts = list(_bits(cops))
        if cops.bit_count() < k:
            lifts.append(None)
        for x in lifts:
            stay = cops if x is None else cops & ~(1 << x)
            zone = next(z for z in comps(stay) if z & region)
            for land in range(n):
                new = stay | (1 << land)
                if all((new, r) in won for r in comps(new) if r & zone == r):
                    return True
        return False

    changed = True
    while changed:
        changed = False
        for pos in positions:
            if pos not in won and move_wins(*pos):
                won.add(pos)
                changed = True
    return any(all((c, r) in won for r in comps(c)) for c in cop_sets)


def cop_number(g: Graph) -> int:
    """Least ``k`` with ``cops_win(g, k)``."""
    k = 1
    while not cops_win(g, k):
        k += 1
    return k
