"""Oddomorphisms, weak oddomorphisms, and empirical checks built on them.

A vertex ``a`` of ``f`` is odd (even) under a homomorphism ``phi`` if, for
every neighbour ``v`` of ``phi(a)``, ``a`` has an odd (even) number of
neighbours in the fiber over ``v``.  ``phi`` is an oddomorphism when every
vertex is odd or even and every fiber holds an odd number of odd vertices.

For fixed ``phi`` and vertex set ``W`` the question "is there an edge set
making ``phi|W`` an oddomorphism" is linear over GF(2): unknowns are one
bit per usable edge plus one parity bit per vertex.  The searches below
enumerate ``(phi, W)`` and solve that system exactly.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from itertools import combinations, product

from .cfi import cfi_pair
from .errors import ConsistencyError, NotAHomomorphism
from .graph import Graph, VertexMap, is_homomorphism
from .hom import hom_count, homomorphisms
from .iso import IsoClasses, connected_partitions, contract, is_minor

ODD, EVEN, NEITHER = "odd", "even", "neither"
DEFAULT_BUDGET = 2_000_000


@dataclass(frozen=True)
class OddnessProfile:
    classes: tuple[str, ...]  # per vertex of f
    fiber_odd: tuple[int, ...]  # per vertex of g: number of odd vertices above it

    @property
    def is_oddomorphism(self) -> bool:
        return NEITHER not in self.classes and all(c % 2 == 1 for c in self.fiber_odd)

    def to_json(self) -> dict:
        return {
            "classes": list(self.classes),
            "fiber_odd_counts": list(self.fiber_odd),
            "is_oddomorphism": self.is_oddomorphism,
        }


def oddness_profile(f: Graph, g: Graph, phi: Sequence[int]) -> OddnessProfile:
    if not is_homomorphism(f, g, phi):
        raise NotAHomomorphism("phi is not a homomorphism from f to g")
    classes = []
    fiber_odd = [0] * g.n
    for a in range(f.n):
        counts = {v: 0 for v in g.neighbors(phi[a])}
        for b in f.neighbors(a):
            counts[phi[b]] += 1
        parities = {c % 2 for c in counts.values()}
        # an image without neighbours makes ``a`` vacuously odd (and even)
        if parities <= {1}:
            classes.append(ODD)
            fiber_odd[phi[a]] += 1
        elif parities == {0}:
            classes.append(EVEN)
        else:
            classes.append(NEITHER)
    return OddnessProfile(tuple(classes), tuple(fiber_odd))


def is_oddomorphism(f: Graph, g: Graph, phi: Sequence[int]) -> bool:
    return oddness_profile(f, g, phi).is_oddomorphism


# --------------------------------------------------------------- GF(2) core


def _solve_gf2(rows: list[int], nvars: int) -> int | None:
    """Solve rows (bit ``nvars`` is the right-hand side); free variables set to 0."""
    pivots: list[tuple[int, int]] = []
    for r in rows:
        for col, pr in pivots:
            if r >> col & 1:
                r ^= pr
        low = r & ((1 << nvars) - 1)
        if not low:
            if r >> nvars & 1:
                return None
            continue
        col = low.bit_length() - 1
        pivots = [(c, p ^ r if p >> col & 1 else p) for c, p in pivots]
        pivots.append((col, r))
    sol = 0
    for col, r in pivots:
        if r >> nvars & 1:
            sol |= 1 << col
    return sol


def _edge_solution(g: Graph, phi: dict[int, int], usable: list[tuple[int, int]]) -> list[tuple[int, int]] | None:
    """Edges among ``usable`` making ``phi`` an oddomorphism of the resulting subgraph.

    ``phi`` maps the chosen vertex set into ``g``; every usable edge must map
    to an edge of ``g``.  Returns ``None`` when no edge subset works.
    """
    verts = sorted(phi)
    if {phi[a] for a in verts} != set(range(g.n)):
        return None
    ne = len(usable)
    pvar = {a: ne + i for i, a in enumerate(verts)}
    nvars = ne + len(verts)
    rhs = 1 << nvars
    inc: dict[int, list[int]] = {a: [] for a in verts}
    for i, (a, b) in enumerate(usable):
        inc[a].append(i)
        inc[b].append(i)
    rows = []
    for a in verts:
        nbrs = g.neighbors(phi[a])
        if not nbrs:
            rows.append((1 << pvar[a]) | rhs)
            continue
        for v in nbrs:
            r = 1 << pvar[a]
            for i in inc[a]:
                x, y = usable[i]
                other = y if x == a else x
                if phi[other] == v:
                    r |= 1 << i
            rows.append(r)
    for v in range(g.n):
        r = rhs
        for a in verts:
            if phi[a] == v:
                r |= 1 << pvar[a]
        rows.append(r)
    sol = _solve_gf2(rows, nvars)
    if sol is None:
        return None
    return [usable[i] for i in range(ne) if sol >> i & 1]


# ------------------------------------------------------ weak oddomorphisms


@dataclass
class WeakOddResult:
    status: str  # "found" | "none" | "unknown"
    vertices: tuple[int, ...] = ()
    edges: tuple[tuple[int, int], ...] = ()
    phi: VertexMap | None = None
    explored: int = 0

    @property
    def found(self) -> bool:
        return self.status == "found"

    def to_json(self) -> dict:
        return {
            "status": self.status,
            "vertices": list(self.vertices),
            "edges": [list(e) for e in self.edges],
            "phi": list(self.phi) if self.phi is not None else None,
            "explored": self.explored,
        }


def restrict(f: Graph, vertices: Iterable[int], edges: Iterable[tuple[int, int]], phi: Sequence[int]):
    """The subgraph ``F'`` (relabelled densely) and ``phi`` restricted to it."""
    sub, back = f.subgraph(vertices, edges)
    return sub, tuple(phi[v] for v in back)


def find_weak_oddomorphism(f: Graph, g: Graph, budget: int = DEFAULT_BUDGET) -> WeakOddResult:
    """Search homomorphisms ``phi`` and vertex sets ``W``; solve for the edges.

    Budget counts explored ``(phi, W)`` pairs.
    """
    explored = 0
    for phi in homomorphisms(f, g):
        # vertex sets must hit every fiber; smallest first gives small witnesses
        for size in range(g.n, f.n + 1):
            for w in combinations(range(f.n), size):
                explored += 1
                if explored > budget:
                    return WeakOddResult("unknown", explored=explored - 1)
                wset = set(w)
                usable = [e for e in f.edges if e[0] in wset and e[1] in wset]
                edges = _edge_solution(g, {a: phi[a] for a in w}, usable)
                if edges is not None:
                    sub, psub = restrict(f, w, edges, phi)
                    if not is_oddomorphism(sub, g, psub):
                        raise ConsistencyError("GF(2) solution is not an oddomorphism")
                    return WeakOddResult("found", tuple(w), tuple(edges), phi, explored)
    return WeakOddResult("none", explored=explored)


# ---------------------------------------------------------------- reports


@dataclass
class CfiHomReport:
    f: Graph
    g: Graph
    hom_untwisted: int
    hom_twisted: int
    search: WeakOddResult
    inequality: bool = field(init=False)
    strict: bool = field(init=False)
    holds: bool | None = field(init=False)  # None: search was truncated

    def __post_init__(self):
        self.inequality = self.hom_untwisted >= self.hom_twisted
        self.strict = self.hom_untwisted > self.hom_twisted
        if not self.inequality:
            self.holds = False
        elif self.search.status == "unknown":
            self.holds = None
        else:
            self.holds = self.strict == self.search.found

    def to_json(self) -> dict:
        from .graph6 import emit_graph6

        return {
            "f": emit_graph6(self.f),
            "g": emit_graph6(self.g),
            "hom_cfi": str(self.hom_untwisted),
            "hom_cfi_twisted": str(self.hom_twisted),
            "inequality_holds": self.inequality,
            "strict": self.strict,
            "weak_oddomorphism": self.search.to_json(),
            "biconditional": {True: "holds", False: "violated", None: "inconclusive"}[self.holds],
        }


def verify_thm313(f: Graph, g: Graph, budget: int = DEFAULT_BUDGET) -> CfiHomReport:
    """Compare hom counts into the CFI pair over ``g`` with weak-oddomorphism search."""
    a, b = cfi_pair(g)
    return CfiHomReport(f, g, hom_count(f, a.graph), hom_count(f, b.graph),
                        find_weak_oddomorphism(f, g, budget))


@dataclass
class MinorOddReport:
    status: str  # "found" | "violated" | "unknown"
    minor: Graph | None = None
    phi: VertexMap | None = None
    explored: int = 0

    def to_json(self) -> dict:
        from .graph6 import emit_graph6

        return {
            "status": self.status,
            "minor": emit_graph6(self.minor) if self.minor is not None else None,
            "minor_edges": [list(e) for e in self.minor.edges] if self.minor is not None else None,
            "phi": list(self.phi) if self.phi is not None else None,
            "explored": self.explored,
        }


def _contractions(f: Graph) -> list[Graph]:
    classes = IsoClasses()
    for p in sorted(connected_partitions(f), key=len, reverse=True):
        classes.add(contract(f, p))
    return classes.reps


def check_lemma56_instance(f: Graph, g: Graph, g_minor: Graph, budget: int = DEFAULT_BUDGET) -> MinorOddReport:
    """Look for a minor of ``f`` with an oddomorphism onto ``g_minor``.

    Minors are subgraphs of contractions of ``f``.  For each contraction,
    vertex set and map onto ``g_minor``, edges not mapped to edges are
    dropped and the remaining edge choice is solved over GF(2).
    """
    pre = find_weak_oddomorphism(f, g, budget)
    if pre.status != "found":
        raise ValueError(f"no weak oddomorphism from f to g ({pre.status})")
    if not is_minor(g_minor, g):
        raise ValueError("g_minor is not a minor of g")
    explored = 0
    k = g_minor.n
    for q in _contractions(f):
        for size in range(k, q.n + 1):
            for w in combinations(range(q.n), size):
                for images in product(range(k), repeat=size):
                    if len(set(images)) != k:
                        continue
                    explored += 1
                    if explored > budget:
                        return MinorOddReport("unknown", explored=explored - 1)
                    phi = dict(zip(w, images))
                    usable = [(a, b) for a, b in q.edges
                              if a in phi and b in phi and g_minor.has_edge(phi[a], phi[b])]
                    edges = _edge_solution(g_minor, phi, usable)
                    if edges is not None:
                        sub, psub = restrict(q, w, edges, [phi.get(v, 0) for v in range(q.n)])
                        if not is_oddomorphism(sub, g_minor, psub):
                            raise ConsistencyError("GF(2) solution is not an oddomorphism")
                        return MinorOddReport("found", sub, psub, explored)
    return MinorOddReport("violated", explored=explored)
