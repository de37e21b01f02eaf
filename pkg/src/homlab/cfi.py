"""CFI graphs over a base graph, twisted at a vertex set.

A CFI vertex is ``(v, S)`` with ``S`` a set of edges at ``v`` whose size has
the parity of ``[v in U]``.  ``S`` is stored as a bitmask whose bit ``j``
stands for the ``j``-th edge at ``v`` in ascending edge-index order.
``(v, S)`` and ``(u, T)`` are adjacent iff ``uv`` is a base edge lying in
both or neither of ``S`` and ``T``.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from functools import cached_property

from .errors import ConsistencyError, InvalidPath, SizeGuardError
from .graph import Graph, VertexMap, is_isomorphism
from .iso import is_isomorphic

MAX_DEGREE = 20
PARITY_MAX_VERTICES = 96


@dataclass(frozen=True)
class CfiVertex:
    base: int
    mask: int


@dataclass(frozen=True)
class CfiGraph:
    graph: Graph
    base: Graph
    twist: frozenset[int]
    vertices: tuple[CfiVertex, ...]  # dense id -> CfiVertex

    def index(self, base: int, mask: int) -> int:
        return self._ids[(base, mask)]

    @cached_property
    def _ids(self) -> dict[tuple[int, int], int]:
        return {(cv.base, cv.mask): i for i, cv in enumerate(self.vertices)}

    def gadget(self, v: int) -> list[int]:
        """Dense ids of the vertices above base vertex ``v``."""
        return [i for i, cv in enumerate(self.vertices) if cv.base == v]

    def edge_set(self, vertex_id: int) -> frozenset[int]:
        """The set ``S`` of a CFI vertex as base edge indices."""
        cv = self.vertices[vertex_id]
        inc = self.base.incident_edges(cv.base)
        return frozenset(e for j, e in enumerate(inc) if cv.mask >> j & 1)

    def gadget_map(self) -> dict[int, list[dict]]:
        out: dict[int, list[dict]] = {}
        for i, cv in enumerate(self.vertices):
            out.setdefault(cv.base, []).append(
                {"id": i, "mask": cv.mask, "edges": sorted(self.edge_set(i))}
            )
        return out


def _bit(base: Graph, v: int, edge: int) -> int:
    return base.incident_edges(v).index(edge)


def cfi_build(base: Graph, twist: Iterable[int] = ()) -> CfiGraph:
    twist = frozenset(twist)
    if any(not 0 <= u < base.n for u in twist):
        raise ValueError("twist vertex outside the base graph")
    degs = base.degrees()
    for v, d in enumerate(degs):
        if d == 0:
            raise ValueError(f"base vertex {v} is isolated; CFI needs minimum degree >= 1")
        if d > MAX_DEGREE:
            raise SizeGuardError(f"base vertex {v} has degree {d} > {MAX_DEGREE}")
    verts = []
    for v in range(base.n):
        parity = 1 if v in twist else 0
        verts.extend(CfiVertex(v, s) for s in range(1 << degs[v]) if s.bit_count() % 2 == parity)
    ids = {(cv.base, cv.mask): i for i, cv in enumerate(verts)}
    by_base: dict[int, list[int]] = {}
    for cv in verts:
        by_base.setdefault(cv.base, []).append(cv.mask)
    edges = []
    for e, (u, v) in enumerate(base.edges):
        bu, bv = _bit(base, u, e), _bit(base, v, e)
        for s in by_base[u]:
            su = s >> bu & 1
            for t in by_base[v]:
                if su == t >> bv & 1:
                    edges.append((ids[(u, s)], ids[(v, t)]))
    return CfiGraph(Graph(len(verts), edges), base, twist, tuple(verts))


def cfi_pair(base: Graph) -> tuple[CfiGraph, CfiGraph]:
    """Untwisted and twisted CFI graphs; the twist sits on vertex 0."""
    if base.n == 0 or not base.is_connected():
        raise ValueError("cfi_pair needs a connected nonempty base graph")
    return cfi_build(base), cfi_build(base, {0})


def _check_path(base: Graph, u: int, v: int, path: Sequence[int]) -> None:
    if not path or path[0] != u or path[-1] != v:
        raise InvalidPath(f"path must run from {u} to {v}")
    if len(set(path)) != len(path):
        raise InvalidPath("path repeats a vertex")
    for a, b in zip(path, path[1:]):
        if not base.has_edge(a, b):
            raise InvalidPath(f"{(a, b)} is not a base edge")


def twist_isomorphism(base: Graph, u: int, v: int, path: Sequence[int]) -> VertexMap:
    """Isomorphism ``CFI(base, {u}) -> CFI(base, {v})`` toggling path edges.

    ``(w, S)`` goes to ``(w, S xor (E(P) & E(w)))``; vertices above base
    vertices off the path are fixed.  The map is checked before returning.
    """
    _check_path(base, u, v, path)
    src = cfi_build(base, {u})
    dst = cfi_build(base, {v})
    toggle = [0] * base.n
    for a, b in zip(path, path[1:]):
        e = base.edge_index(a, b)
        toggle[a] |= 1 << _bit(base, a, e)
        toggle[b] |= 1 << _bit(base, b, e)
    phi = tuple(dst.index(cv.base, cv.mask ^ toggle[cv.base]) for cv in src.vertices)
    if not is_isomorphism(src.graph, dst.graph, phi):
        raise ConsistencyError("path twist did not produce an isomorphism")
    return phi


def cfi_parity_check(base: Graph, twist_a: Iterable[int], twist_b: Iterable[int]) -> bool:
    """Whether ``CFI(base, twist_a)`` and ``CFI(base, twist_b)`` are isomorphic."""
    if not base.is_connected():
        raise ValueError("parity check needs a connected base")
    a = cfi_build(base, twist_a)
    if a.graph.n > PARITY_MAX_VERTICES:
        raise SizeGuardError(f"CFI graph has {a.graph.n} vertices > {PARITY_MAX_VERTICES}")
    b = cfi_build(base, twist_b)
    return is_isomorphic(a.graph, b.graph) is not None
