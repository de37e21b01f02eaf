from __future__ import annotations

import random
from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings

from homlab.errors import SizeGuardError
from homlab.graph import Graph, complete_graph, cycle_graph, is_homomorphism, named_graph, path_graph
from homlab.hom import aut_count, hom_count, sub_count_bruteforce
from homlab.iso import is_isomorphic, set_partitions
from homlab.spasm import htw, moebius, quotient_map, spasm, sub_basis
from homlab.treewidth import treewidth

from conftest import brute_isomorphic, graphs, random_graph


def oracle_images(f: Graph) -> list[Graph]:
    """Every loop-free image f/P over all set partitions, deduplicated by brute force."""
    reps: list[Graph] = []
    for p in set_partitions(range(f.n)):
        phi = quotient_map(f.n, p)
        if any(phi[u] == phi[v] for u, v in f.edges):
            continue
        img = Graph(len(p), {(min(phi[u], phi[v]), max(phi[u], phi[v])) for u, v in f.edges})
        if not any(brute_isomorphic(img, r) for r in reps):
            reps.append(img)
    return reps




def same_classes(a: list[Graph], b: list[Graph]) -> bool:
    return len(a) == len(b) and all(any(is_isomorphic(x, y) is not None for y in b) for x in a)


def test_spec_spasms():
    assert same_classes(spasm(complete_graph(4)).members, [complete_graph(4)])
    assert same_classes(spasm(path_graph(3)).members, [path_graph(3), complete_graph(2)])
    assert same_classes(spasm(cycle_graph(4)).members,
                        [cycle_graph(4), path_graph(3), complete_graph(2)])


@given(graphs(max_n=6))
@settings(max_examples=40, deadline=None)
def test_spasm_matches_partition_oracle(f):
    sp = spasm(f)
    assert sp.members[0] == f
    assert same_classes(sp.members, oracle_images(f))
    for i, a in enumerate(sp.members):
        for b in sp.members[i + 1:]:
            assert is_isomorphic(a, b) is None


@given(graphs(max_n=6))
@settings(max_examples=30, deadline=None)
def test_members_are_surjective_images(f):
    sp = spasm(f)
    for m, parts in zip(sp.members, sp.partitions):
        for p in parts:
            phi = quotient_map(f.n, p)
            img_edges = {(min(phi[u], phi[v]), max(phi[u], phi[v])) for u, v in f.edges}
            img = Graph(len(p), img_edges)
            assert is_homomorphism(f, img, phi) and set(phi) == set(range(len(p)))
            assert is_isomorphic(img, m) is not None


def test_htw_examples():
    assert htw(complete_graph(4)) == 3
    assert [htw(cycle_graph(n)) for n in range(3, 7)] == [2, 2, 2, 2]
    assert htw(cycle_graph(8)) == 3


def _edge_surjective_maps(f: Graph, g: Graph) -> int:
    target = set(g.edges)
    count = 0
    for phi in product(range(g.n), repeat=f.n):
        img = set()
        for u, v in f.edges:
            a, b = phi[u], phi[v]
            if not g.has_edge(a, b):
                break
            img.add((min(a, b), max(a, b)))
        else:
            count += img == target
    return count


def test_htw_c7_is_two_by_exhaustive_maps():
    # K4 is not an image of C7: no closed 7-walk covers all six K4 edges
    assert _edge_surjective_maps(cycle_graph(7), complete_graph(4)) == 0
    assert _edge_surjective_maps(cycle_graph(8), complete_graph(4)) > 0
    assert htw(cycle_graph(7)) == 2
    assert not any(is_isomorphic(m, complete_graph(4)) is not None for m in spasm(cycle_graph(7)).members)


@given(graphs(max_n=6))
@settings(max_examples=30, deadline=None)
def test_htw_at_least_tw(f):
    assert htw(f) >= treewidth(f)


def test_basis_examples():
    b = sub_basis(complete_graph(3))
    assert [(is_isomorphic(m, complete_graph(3)) is not None, a) for m, a in b.terms] == [(True, Fraction(1, 6))]
    b = sub_basis(path_graph(3))
    got = {m.n: a for m, a in b.terms}
    assert got == {3: Fraction(1, 2), 2: Fraction(-1, 2)}
    assert (12 - 6) / 2 == b.evaluate(complete_graph(3)) == 3
    b = sub_basis(complete_graph(4))
    assert len(b.terms) == 1 and b.terms[0][1] == Fraction(1, 24)


def test_moebius_values():
    assert moebius([(0,), (1,)]) == 1
    assert moebius([(0, 1)]) == -1
    assert moebius([(0, 1, 2)]) == 2
    assert moebius([(0, 1, 2, 3), (4, 5)]) == -6 * -1


@given(graphs(max_n=5))
@settings(max_examples=40, deadline=None)
def test_basis_coefficients_nonzero_and_leading(f):
    b = sub_basis(f, validate=0)
    assert all(a != 0 for _, a in b.terms)
    assert b.terms[0][0] == f and b.terms[0][1] == Fraction(1, aut_count(f))


def test_basis_identity_random_targets():
    rng = random.Random(4)
    for _ in range(40):
        f = random_graph(rng, rng.randint(1, 5))
        g = random_graph(rng, rng.randint(1, 7))
        assert sub_basis(f, validate=0).evaluate(g) == sub_count_bruteforce(f, g)


def test_size_guard():
    with pytest.raises(SizeGuardError):
        spasm(cycle_graph(10))
