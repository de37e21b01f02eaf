from __future__ import annotations

import random

import pytest
from hypothesis import given, settings

from homlab.cfi import cfi_build
from homlab.errors import BudgetExceeded, InvalidDecomposition
from homlab.graph import Graph, complete_graph, cycle_graph, disjoint_union, named_graph, path_graph
from homlab.hom import (
    aut_count,
    hom_count,
    hom_count_bruteforce,
    hom_count_td,
    homomorphisms,
    inj_count,
    sub_count,
    sub_count_bruteforce,
)
from homlab.treewidth import TreeDecomposition, treewidth_exact

from conftest import brute_hom, graph_and_perm, graphs, random_graph


def test_spec_examples():
    k3 = complete_graph(3)
    assert hom_count_bruteforce(k3, k3) == 6
    assert hom_count_bruteforce(cycle_graph(4), k3) == 18  # trace of A^4 = 16 + 1 + 1
    assert hom_count_td(path_graph(3), treewidth_exact(path_graph(3))[1], k3) == 12
    assert sub_count(k3, complete_graph(4)) == 4
    assert aut_count(k3) == 6
    assert inj_count(k3, complete_graph(4)) == 24
    assert sub_count(path_graph(3), k3) == 3
    assert sub_count(k3, cycle_graph(6)) == 0
    assert sub_count(k3, named_graph("2K3")) == 2


@given(graphs(max_n=7))
@settings(max_examples=40)
def test_hom_k2_is_twice_edges(g):
    assert hom_count(complete_graph(2), g) == 2 * g.m


def test_hom_into_cfi_output():
    c6 = cycle_graph(6)
    assert hom_count(c6, cfi_build(complete_graph(3)).graph) == hom_count(c6, named_graph("2K3"))


def test_three_routes_agree_with_naive_oracle():
    rng = random.Random(11)
    for _ in range(100):
        f = random_graph(rng, rng.randint(1, 5))
        g = random_graph(rng, rng.randint(1, 7))
        expect = brute_hom(f, g)
        assert hom_count_bruteforce(f, g) == expect
        assert hom_count_td(f, treewidth_exact(f)[1], g) == expect
        assert hom_count(f, g) == expect


def test_td_dp_accepts_any_valid_decomposition():
    f = cycle_graph(5)
    single = TreeDecomposition.make([range(5)], [])
    assert hom_count_td(f, single, complete_graph(3)) == hom_count_bruteforce(f, complete_graph(3))


def test_td_dp_rejects_invalid_decomposition():
    bad = TreeDecomposition.make([{0, 1}], [])
    with pytest.raises(InvalidDecomposition):
        hom_count_td(path_graph(3), bad, complete_graph(3))


def test_bruteforce_guard():
    with pytest.raises(BudgetExceeded):
        hom_count_bruteforce(Graph(10), Graph(10))
    with pytest.raises(BudgetExceeded):
        hom_count_bruteforce(cycle_graph(6), complete_graph(6), budget=5)


def test_identity_inj_equals_aut_times_sub():
    rng = random.Random(5)
    for _ in range(150):
        f = random_graph(rng, rng.randint(1, 4))
        g = random_graph(rng, rng.randint(1, 6))
        assert inj_count(f, g) == aut_count(f) * sub_count_bruteforce(f, g)


@given(graphs(max_n=4), graphs(max_n=4), graphs(min_n=1, max_n=5))
@settings(max_examples=40, deadline=None)
def test_multiplicative_in_pattern(f1, f2, g):
    u, _ = disjoint_union([f1, f2])
    assert hom_count(u, g) == hom_count(f1, g) * hom_count(f2, g)


@given(graphs(min_n=1, max_n=5), graphs(max_n=5))
@settings(max_examples=40, deadline=None)
def test_additive_in_target_for_connected_pattern(g, h):
    f = cycle_graph(3)
    u, _ = disjoint_union([g, h])
    assert hom_count(f, u) == hom_count(f, g) + hom_count(f, h)
    p = path_graph(3)
    assert hom_count(p, u) == hom_count(p, g) + hom_count(p, h)


@given(graph_and_perm(max_n=5), graph_and_perm(max_n=6))
@settings(max_examples=40, deadline=None)
def test_counts_invariant_under_relabelling(fp, gp):
    (f, pf), (g, pg) = fp, gp
    f2, g2 = f.relabel(pf), g.relabel(pg)
    assert hom_count(f, g) == hom_count(f2, g2)
    assert inj_count(f, g) == inj_count(f2, g2)
    assert sub_count(f, g) == sub_count(f2, g2)
    assert aut_count(f) == aut_count(f2)


def test_homomorphism_generator_matches_count():
    f, g = cycle_graph(4), complete_graph(3)
    maps = list(homomorphisms(f, g))
    assert len(maps) == 18 == len(set(maps))


def test_large_counts_are_exact_integers():
    # CFI(K5): 40 vertices, 16-regular (4 partners per incident edge), so 40 * 16**21 walks
    big = cfi_build(complete_graph(5)).graph
    n = hom_count(path_graph(22), big)
    assert isinstance(n, int)
    assert n == 40 * 16**21 > 2**64
