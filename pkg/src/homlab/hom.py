"""Exact homomorphism, injective-homomorphism and subgraph counts.

All counts are Python ints.  ``hom_count_bruteforce`` is the reference
enumerator; ``hom_count_td`` runs dynamic programming over a nice tree
decomposition derived from any valid decomposition of the pattern.
"""

from __future__ import annotations

from collections import defaultdict
from itertools import combinations
from math import comb

from .errors import BudgetExceeded, ConsistencyError, InvalidDecomposition
from .graph import Graph, components
from .iso import automorphism_count, is_isomorphic
from .treewidth import TreeDecomposition, greedy_decomposition, treewidth_exact, validate_decomposition

BRUTE_GUARD = 10**9


def _search_order(f: Graph) -> list[int]:
    """Order vertices so each one (after the first in its component) has an earlier neighbour."""
    order: list[int] = []
    placed: set[int] = set()
    for start in sorted(range(f.n), key=lambda v: -f.degree(v)):
        if start in placed:
            continue
        placed.add(start)
        order.append(start)
        while True:
            # greedily take the vertex with most already-placed neighbours
            cand = {w for v in order for w in f.neighbors(v) if w not in placed}
            if not cand:
                break
            w = max(sorted(cand), key=lambda x: len(f.neighbors(x) & placed))
            placed.add(w)
            order.append(w)
    return order


def _backtrack(f: Graph, g: Graph, injective: bool, budget: int | None, count_last: bool) -> int:
    order = _search_order(f)
    pos = {v: i for i, v in enumerate(order)}
    back = [sorted((w for w in f.neighbors(v) if pos[w] < pos[v]), key=pos.__getitem__) for v in order]
    img = [0] * f.n
    used = [0] * g.n
    gn = g.n
    nodes = 0
    last = len(order) - 1

    def candidates(i):
        prev = back[i]
        if not prev:
            return range(gn)
        base = g.neighbors(img[prev[0]])
        if len(prev) == 1:
            return base
        others = [g.neighbors(img[p]) for p in prev[1:]]
        return [x for x in base if all(x in o for o in others)]

    def rec(i: int) -> int:
        nonlocal nodes
        nodes += 1
        if budget is not None and nodes > budget:
            raise BudgetExceeded(f"homomorphism enumeration exceeded {budget} nodes")
        cands = candidates(i)
        if count_last and i == last:
            if injective:
                return sum(1 for x in cands if not used[x])
            return len(cands)
        v = order[i]
        total = 0
        for x in cands:
            if injective and used[x]:
                continue
            img[v] = x
            if i == last:
                total += 1
                continue
            used[x] += 1
            total += rec(i + 1)
            used[x] -= 1
        return total

    if f.n == 0:
        return 1
    return rec(0)


def hom_count_bruteforce(f: Graph, g: Graph, budget: int | None = None) -> int:
    """Count maps ``V(f) -> V(g)`` preserving edges by pruned enumeration."""
    if f.n and g.n ** f.n > BRUTE_GUARD and budget is None:
        raise BudgetExceeded(f"|V(g)|^|V(f)| = {g.n}^{f.n} exceeds {BRUTE_GUARD}; pass an explicit budget")
    return _backtrack(f, g, injective=False, budget=budget, count_last=False)


def inj_count(f: Graph, g: Graph, budget: int | None = None) -> int:
    """Number of injective homomorphisms ``f -> g``."""
    if f.n > g.n:
        return 0
    return _backtrack(f, g, injective=True, budget=budget, count_last=True)


def aut_count(g: Graph) -> int:
    return automorphism_count(g)


def sub_count(f: Graph, g: Graph, budget: int | None = None) -> int:
    """Subgraphs of ``g`` isomorphic to ``f``, as ``inj(f, g) / aut(f)``."""
    inj = inj_count(f, g, budget)
    aut = aut_count(f)
    if inj % aut:
        raise ConsistencyError(f"inj={inj} not divisible by aut={aut}")
    return inj // aut


def sub_count_bruteforce(f: Graph, g: Graph, budget: int = 10**7) -> int:
    """Count subgraphs by enumerating vertex sets and edge sets of ``g`` directly."""
    if f.n > g.n:
        return 0
    work = 0
    total = 0
    for vs in combinations(range(g.n), f.n):
        vset = set(vs)
        inside = [e for e in g.edges if e[0] in vset and e[1] in vset]
        if len(inside) < f.m:
            continue
        work += comb(len(inside), f.m)
        if work > budget:
            raise BudgetExceeded(f"subgraph enumeration exceeded {budget} candidates")
        for es in combinations(inside, f.m):
            h, _ = g.subgraph(vs, es)
            if is_isomorphic(f, h) is not None:
                total += 1
    return total


# ------------------------------------------------------- tree decomposition DP


def _nice_plan(td: TreeDecomposition):
    """Post-order list of nice-decomposition operations rooted at bag 0.

    Operations: leaf, intro v, forget v, join, plus ``lift`` (move a child's
    table to its parent's bag by forgets then introduces) and ``root``
    (forget everything).  Each operation pushes or combines stack tables.
    """
    nb = len(td.bags)
    adj: list[list[int]] = [[] for _ in range(nb)]
    for i, j in td.tree:
        adj[i].append(j)
        adj[j].append(i)
    ops: list[tuple] = []

    def emit_chain(src: frozenset, dst: frozenset):
        for v in sorted(src - dst):
            ops.append(("forget", v))
        for v in sorted(dst - src):
            ops.append(("intro", v))

    # iterative post-order to avoid deep recursion on path-like decompositions
    parent = {0: None}
    order = []
    stack = [0]
    while stack:
        i = stack.pop()
        order.append(i)
        for j in adj[i]:
            if j not in parent:
                parent[j] = i
                stack.append(j)
    children = defaultdict(list)
    for i in order[1:]:
        children[parent[i]].append(i)

    stack2 = [(0, False)]
    while stack2:
        i, expanded = stack2.pop()
        if not expanded:
            stack2.append((i, True))
            for c in reversed(children[i]):
                stack2.append((c, False))
            continue
        bag = td.bags[i]
        kids = children[i]
        if not kids:
            ops.append(("leaf",))
            emit_chain(frozenset(), bag)
        else:
            # tables of the children are on the stack in order; bring each to ``bag``
            for idx, c in enumerate(kids):
                ops.append(("lift", len(kids) - 1 - idx, td.bags[c], bag))
            for _ in range(len(kids) - 1):
                ops.append(("join",))
    ops.append(("root", td.bags[0]))
    return ops


def hom_count_td(f: Graph, td: TreeDecomposition, g: Graph) -> int:
    """``hom(f, g)`` by DP over ``td``, a decomposition of ``f``."""
    if not validate_decomposition(f, td):
        raise InvalidDecomposition("decomposition does not validate against the pattern")
    if f.n == 0:
        return 1
    nbrs = [g.neighbors(x) for x in range(g.n)]
    allv = range(g.n)

    def intro(table, bag, v):
        new_bag = tuple(sorted(bag + (v,)))
        at = new_bag.index(v)
        adj_pos = [i for i, u in enumerate(bag) if f.has_edge(u, v)]
        out = {}
        for key, c in table.items():
            if adj_pos:
                cands = nbrs[key[adj_pos[0]]]
                for p in adj_pos[1:]:
                    cands = cands & nbrs[key[p]]
            else:
                cands = allv
            for x in cands:
                out[key[:at] + (x,) + key[at:]] = c
        return out, new_bag

    def forget(table, bag, v):
        at = bag.index(v)
        out: dict = defaultdict(int)
        for key, c in table.items():
            out[key[:at] + key[at + 1:]] += c
        return dict(out), bag[:at] + bag[at + 1:]

    def move(table, bag, dst):
        for v in sorted(set(bag) - dst):
            table, bag = forget(table, bag, v)
        for v in sorted(dst - set(bag)):
            table, bag = intro(table, bag, v)
        return table, bag

    stack: list[tuple[dict, tuple]] = []
    for op in _nice_plan(td):
        kind = op[0]
        if kind == "leaf":
            stack.append(({(): 1}, ()))
        elif kind == "intro":
            stack.append(intro(*stack.pop(), op[1]))
        elif kind == "forget":
            stack.append(forget(*stack.pop(), op[1]))
        elif kind == "lift":
            depth = op[1]
            idx = len(stack) - 1 - depth
            stack[idx] = move(stack[idx][0], stack[idx][1], op[3])
        elif kind == "join":
            (t2, b2), (t1, b1) = stack.pop(), stack.pop()
            if len(t1) > len(t2):
                t1, t2 = t2, t1
            stack.append(({k: c * t2[k] for k, c in t1.items() if k in t2}, b1))
        elif kind == "root":
            table, bag = move(*stack.pop(), frozenset())
            stack.append((table, bag))
    (table, _), = stack
    return table.get((), 0)


def hom_count(f: Graph, g: Graph, budget: int | None = None) -> int:
    """``hom(f, g)``, multiplied over the components of ``f``.

    Each component goes to the tree-decomposition DP when its estimated
    table size is smaller than the backtracking estimate.  Components with
    more than 12 vertices use a greedy decomposition instead of an exact one.
    """
    total = 1
    for comp, _ in components(f):
        if comp.n == 1:
            total *= g.n
            continue
        dmax = max(g.degrees(), default=0)
        brute_est = g.n * max(dmax, 1) ** (comp.n - 1)
        td = treewidth_exact(comp)[1] if comp.n <= 12 else greedy_decomposition(comp)
        if len(td.bags) * g.n ** (td.width + 1) < brute_est:
            total *= hom_count_td(comp, td, g)
            continue
        total *= _backtrack(comp, g, injective=False, budget=budget, count_last=True)
        if total == 0:
            return 0
    return total


def homomorphisms(f: Graph, g: Graph):
    """Yield every homomorphism ``f -> g`` as a tuple of images."""
    order = _search_order(f)
    pos = {v: i for i, v in enumerate(order)}
    back = [[w for w in f.neighbors(v) if pos[w] < pos[v]] for v in order]
    img = [0] * f.n

    def rec(i: int):
        if i == len(order):
            yield tuple(img)
            return
        prev = back[i]
        cands = g.neighbors(img[prev[0]]) if prev else range(g.n)
        for x in sorted(cands):
            if all(g.has_edge(img[p], x) for p in prev[1:]):
                img[order[i]] = x
                yield from rec(i + 1)

    yield from rec(0)
