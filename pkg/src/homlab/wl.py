"""k-dimensional Weisfeiler-Leman refinement.

For k >= 2 a k-tuple ``v`` is recoloured by its old colour together with the
multiset, over all vertices ``w``, of the k-tuple of colours of
``v[w/1], ..., v[w/k]`` (entry ``i`` replaced by ``w``).  For k = 1 the
multiset ranges over neighbours of the vertex only.

Graphs compared with :func:`wl_distinguishes` are refined jointly: each
round's signatures from both graphs are interned together by exact row
comparison (``numpy.unique``), so equal ids mean equal refinement
histories.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

import numpy as np

from .errors import BudgetExceeded
from .graph import Graph

MAX_TUPLES = 10**7


@dataclass(frozen=True)
class Coloring:
    k: int
    n: int
    colors: np.ndarray  # colour of the tuple with base-n rank i
    rounds: int

    def color(self, tup) -> int:
        rank = 0
        for v in tup:
            rank = rank * self.n + v
        return int(self.colors[rank])

    def histogram(self) -> Counter:
        return Counter(self.colors.tolist())

    def num_classes(self) -> int:
        return len(np.unique(self.colors))


@dataclass(frozen=True)
class WLResult:
    distinguished: bool
    rounds: int
    histogram_sizes: tuple[int, int]

    def to_json(self) -> dict:
        return {
            "distinguished": self.distinguished,
            "rounds": self.rounds,
            "histogram_sizes": list(self.histogram_sizes),
        }


def _atomic_types(g: Graph, k: int) -> np.ndarray:
    """Colour each k-tuple by its equality and adjacency pattern."""
    n = g.n
    digits = np.indices((n,) * k).reshape(k, -1)
    adj = np.zeros((n, n), dtype=bool)
    for u, v in g.edges:
        adj[u, v] = adj[v, u] = True
    code = np.zeros(digits.shape[1], dtype=np.int64)
    for i in range(k):
        for j in range(i + 1, k):
            eq = digits[i] == digits[j]
            ed = adj[digits[i], digits[j]]
            code = code * 3 + np.where(eq, 1, np.where(ed, 2, 0))
    return code


def _replacement_index(n: int, k: int) -> np.ndarray:
    """``R[i, t, w]`` = rank of tuple ``t`` with entry ``i`` replaced by ``w``."""
    N = n**k
    ranks = np.arange(N, dtype=np.int64)
    w = np.arange(n, dtype=np.int64)
    out = np.empty((k, N, n), dtype=np.int64)
    for i in range(k):
        place = n ** (k - 1 - i)
        digit = (ranks // place) % n
        out[i] = (ranks - digit * place)[:, None] + w[None, :] * place
    return out


def _check_budget(n: int, k: int, max_tuples: int) -> None:
    if k < 1:
        raise ValueError("WL dimension must be >= 1")
    if n**k > max_tuples:
        raise BudgetExceeded(f"{n}^{k} tuples exceed the budget of {max_tuples}")


def _refine_higher(gs: list[Graph], k: int):
    """Jointly refine graphs of equal order; yields per-round colour lists."""
    n = gs[0].n
    N = n**k
    R = _replacement_index(n, k)
    init = np.concatenate([_atomic_types(g, k) for g in gs])
    _, colors = np.unique(init, return_inverse=True)
    colors = colors.reshape(-1)
    yield colors
    ncls = colors.max() + 1 if colors.size else 0
    while True:
        sigs = []
        for gi in range(len(gs)):
            c = colors[gi * N:(gi + 1) * N]
            sigs.append(np.stack([c[R[i]] for i in range(k)], axis=-1))  # (N, n, k)
        stacked = np.concatenate(sigs).reshape(-1, k)
        _, inner = np.unique(stacked, axis=0, return_inverse=True)
        inner = np.sort(inner.reshape(len(gs) * N, n), axis=1)
        rows = np.concatenate([colors[:, None], inner], axis=1)
        _, new = np.unique(rows, axis=0, return_inverse=True)
        new = new.reshape(-1)
        new_cls = new.max() + 1
        if new_cls == ncls:
            return
        colors, ncls = new, new_cls
        yield colors


def _refine_one(gs: list[Graph]):
    """Colour refinement (k = 1) on several graphs with shared colour ids."""
    offsets = []
    total = 0
    for g in gs:
        offsets.append(total)
        total += g.n
    nbrs = [[w + off for w in g.neighbors(v)] for g, off in zip(gs, offsets) for v in range(g.n)]
    colors = np.zeros(total, dtype=np.int64)
    yield colors
    ncls = 1 if total else 0
    while True:
        sigs = [(int(colors[v]), tuple(sorted(int(colors[w]) for w in nbrs[v]))) for v in range(total)]
        ids = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = np.array([ids[s] for s in sigs], dtype=np.int64)
        if len(ids) == ncls:
            return
        colors, ncls = new, len(ids)
        yield colors


def _rounds(gs: list[Graph], k: int):
    return _refine_one(gs) if k == 1 else _refine_higher(gs, k)


def wl_stable_coloring(g: Graph, k: int, max_tuples: int = MAX_TUPLES) -> Coloring:
    _check_budget(g.n, k, max_tuples)
    colors, rounds = None, -1
    for colors in _rounds([g], k):
        rounds += 1
    return Coloring(k, g.n, colors, rounds)


def wl_compare(g: Graph, h: Graph, k: int, max_tuples: int = MAX_TUPLES) -> WLResult:
    """Joint refinement of ``g`` and ``h``; stops early once histograms differ."""
    _check_budget(max(g.n, h.n), k, max_tuples)
    if g.n != h.n:
        return WLResult(True, 0, (g.n**k, h.n**k))
    size = g.n**k
    rounds = -1
    ca = cb = np.zeros(0, dtype=np.int64)
    for colors in _rounds([g, h], k):
        rounds += 1
        ca, cb = colors[:size], colors[size:]
        if Counter(ca.tolist()) != Counter(cb.tolist()):
            return WLResult(True, rounds, (len(set(ca.tolist())), len(set(cb.tolist()))))
    return WLResult(False, rounds, (len(set(ca.tolist())), len(set(cb.tolist()))))


def wl_distinguishes(g: Graph, h: Graph, k: int, max_tuples: int = MAX_TUPLES) -> bool:
    return wl_compare(g, h, k, max_tuples).distinguished
