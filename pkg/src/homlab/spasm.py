"""Homomorphic images, hereditary treewidth and the subgraph-to-hom basis.

``spasm(f)`` enumerates partitions of ``V(f)`` into independent sets; each
quotient is a homomorphic image, and every image arises this way.  The
coefficient of an image ``L`` in

    sub(f, G) = sum_L alpha(L) * hom(L, G)

is ``(1/aut f) * sum over partitions P with f/P ~ L of mu(P)`` where
``mu(P) = prod_B (-1)^(|B|-1) (|B|-1)!`` is the Moebius function of the
partition lattice from the bottom element.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from .errors import BudgetExceeded, ConsistencyError, SizeGuardError
from .graph import Graph, quotient
from .hom import aut_count, hom_count, sub_count, sub_count_bruteforce
from .iso import IsoClasses
from .treewidth import treewidth

SPASM_MAX_N = 9


@dataclass
class Spasm:
    pattern: Graph
    members: list[Graph] = field(default_factory=list)
    partitions: list[list[tuple[tuple[int, ...], ...]]] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.members)

    def treewidths(self) -> list[int]:
        return [treewidth(m) for m in self.members]


@dataclass(frozen=True)
class HomBasis:
    pattern: Graph
    terms: tuple[tuple[Graph, Fraction], ...]

    def evaluate(self, g: Graph) -> Fraction:
        return sum((a * hom_count(m, g) for m, a in self.terms), Fraction(0))


def independent_partitions(f: Graph):
    """Partitions of ``V(f)`` whose blocks contain no edge of ``f``."""
    blocks: list[list[int]] = []

    def rec(v: int):
        if v == f.n:
            yield tuple(tuple(b) for b in blocks)
            return
        nb = f.neighbors(v)
        for b in blocks:
            if not nb.intersection(b):
                b.append(v)
                yield from rec(v + 1)
                b.pop()
        blocks.append([v])
        yield from rec(v + 1)
        blocks.pop()

    yield from rec(0)


def moebius(blocks) -> int:
    out = 1
    for b in blocks:
        s = len(b)
        out *= (-1) ** (s - 1) * factorial(s - 1)
    return out


def quotient_map(n: int, blocks) -> tuple[int, ...]:
    """The surjection sending each vertex to the index of its block."""
    phi = [0] * n
    for i, b in enumerate(blocks):
        for v in b:
            phi[v] = i
    return tuple(phi)


def spasm(f: Graph, max_n: int = SPASM_MAX_N) -> Spasm:
    if f.n > max_n:
        raise SizeGuardError(f"spasm enumeration limited to {max_n} vertices, got {f.n}")
    classes = IsoClasses()
    out = Spasm(f)
    # the discrete partition comes last in this enumeration order; add it first
    # so the pattern itself is member 0
    parts = list(independent_partitions(f))
    parts.sort(key=len, reverse=True)
    for p in parts:
        q = quotient(f, p)
        idx, new = classes.add(q)
        if new:
            out.members.append(q)
            out.partitions.append([])
        out.partitions[idx].append(p)
    return out


def htw(f: Graph) -> int:
    """Maximum treewidth over the homomorphic images of ``f``."""
    return max(spasm(f).treewidths())


def _random_graph(rng: random.Random, n: int) -> Graph:
    p = rng.choice((0.3, 0.5, 0.7))
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p])


def sub_basis(f: Graph, validate: int = 8, seed: int = 0) -> HomBasis:
    """Exact coefficients expressing ``sub(f, .)`` over ``hom(L, .)``.

    ``validate`` random targets are checked against brute-force subgraph
    counts (injective counts when enumeration is too large); any mismatch
    raises :class:`ConsistencyError`.
    """
    sp = spasm(f)
    aut = aut_count(f)
    terms = []
    for member, parts in zip(sp.members, sp.partitions):
        alpha = Fraction(sum(moebius(p) for p in parts), aut)
        if alpha == 0:
            raise ConsistencyError(f"zero coefficient for spasm member {member!r}")
        terms.append((member, alpha))
    if terms[0][1] != Fraction(1, aut):
        raise ConsistencyError("coefficient of the pattern itself is not 1/aut")
    basis = HomBasis(f, tuple(terms))
    rng = random.Random(seed)
    for _ in range(validate):
        g = _random_graph(rng, rng.randint(max(f.n, 1), max(f.n, 6)))
        lhs = basis.evaluate(g)
        try:
            rhs = sub_count_bruteforce(f, g, budget=20_000)
        except BudgetExceeded:
            rhs = sub_count(f, g)
        if lhs != rhs:
            raise ConsistencyError(f"basis gives {lhs} but sub(f, g) = {rhs} for {g!r}")
    return basis
