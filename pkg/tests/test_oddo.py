from __future__ import annotations

import random
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from homlab.corpus import graphs_upto
from homlab.errors import NotAHomomorphism
from homlab.graph import Graph, complete_graph, cycle_graph, path_graph
from homlab.hom import homomorphisms
from homlab.oddo import (
    EVEN,
    ODD,
    _solve_gf2,
    check_lemma56_instance,
    find_weak_oddomorphism,
    is_oddomorphism,
    oddness_profile,
    restrict,
    verify_thm313,
)

from conftest import graphs


def naive_weak_oddomorphism_exists(f: Graph, g: Graph) -> bool:
    """Oracle: every homomorphism, vertex subset and edge subset, checked directly."""
    for phi in homomorphisms(f, g):
        for r in range(f.n + 1):
            for w in combinations(range(f.n), r):
                inside = [e for e in f.edges if e[0] in w and e[1] in w]
                for mask in range(1 << len(inside)):
                    es = [e for i, e in enumerate(inside) if mask >> i & 1]
                    sub, psub = restrict(f, w, es, phi)
                    if is_oddomorphism(sub, g, psub):
                        return True
    return False


def test_profile_examples():
    k3 = complete_graph(3)
    p = oddness_profile(k3, k3, [0, 1, 2])
    assert p.classes == (ODD, ODD, ODD) and p.fiber_odd == (1, 1, 1) and p.is_oddomorphism
    p = oddness_profile(cycle_graph(4), complete_graph(2), [0, 1, 0, 1])
    assert p.classes == (EVEN,) * 4 and p.fiber_odd == (0, 0) and not p.is_oddomorphism
    p = oddness_profile(cycle_graph(6), k3, [0, 1, 2, 0, 1, 2])
    assert p.classes == (ODD,) * 6 and p.fiber_odd == (2, 2, 2) and not p.is_oddomorphism
    with pytest.raises(NotAHomomorphism):
        oddness_profile(k3, complete_graph(2), [0, 1, 0])


def test_profile_neither():
    # P3 -> K2 folding both ends: middle sees 2 in one fiber, ends see 1
    p = oddness_profile(path_graph(3), complete_graph(2), [0, 1, 0])
    assert p.classes == (ODD, EVEN, ODD) and p.fiber_odd == (2, 0)
    star = Graph(4, [(0, 1), (0, 2), (0, 3)])
    q = oddness_profile(star, path_graph(3), [1, 0, 0, 2])
    assert q.classes[0] == "neither"


def test_weak_examples():
    k4 = complete_graph(4)
    r = find_weak_oddomorphism(k4, k4)
    assert r.found
    r = find_weak_oddomorphism(cycle_graph(4), complete_graph(2))
    assert r.found and len(r.edges) == 1 and len(r.vertices) == 2
    assert find_weak_oddomorphism(complete_graph(3), complete_graph(2)).status == "none"


def test_budget_gives_unknown():
    r = find_weak_oddomorphism(Graph(5), complete_graph(3), budget=3)
    assert r.status == "unknown" and r.explored == 3


@pytest.mark.parametrize("g", graphs_upto(3, connected=True, min_degree=1) + [cycle_graph(4)])
def test_gf2_search_matches_naive_enumeration(g):
    for f in graphs_upto(4):
        found = find_weak_oddomorphism(f, g)
        assert found.status != "unknown"
        assert found.found == naive_weak_oddomorphism_exists(f, g)


def test_found_witnesses_are_surjective_oddomorphisms():
    for f in graphs_upto(5)[::3]:
        for g in graphs_upto(4, connected=True, min_degree=1):
            r = find_weak_oddomorphism(f, g)
            if r.found:
                sub, psub = restrict(f, r.vertices, r.edges, r.phi)
                assert is_oddomorphism(sub, g, psub)
                assert set(psub) == set(range(g.n))


@given(graphs(min_n=1, max_n=5), st.randoms(use_true_random=False))
@settings(max_examples=40, deadline=None)
def test_profile_stable_under_relabelling(f, rnd):
    g = complete_graph(3)
    phi = next(homomorphisms(f, g), None)
    if phi is None:
        return
    pf = list(range(f.n))
    rnd.shuffle(pf)
    pg = [2, 0, 1]
    f2 = f.relabel(pf)
    phi2 = [0] * f.n
    for v in range(f.n):
        phi2[pf[v]] = pg[phi[v]]
    a = oddness_profile(f, g, phi)
    b = oddness_profile(f2, g.relabel(pg), phi2)
    assert [a.classes[v] for v in range(f.n)] == [b.classes[pf[v]] for v in range(f.n)]
    assert [a.fiber_odd[x] for x in range(3)] == [b.fiber_odd[pg[x]] for x in range(3)]


def test_gf2_solver_against_brute_force():
    rng = random.Random(9)
    for _ in range(300):
        nvars = rng.randint(1, 6)
        rows = [rng.getrandbits(nvars + 1) for _ in range(rng.randint(1, 7))]

        def satisfied(x):
            return all(bin(r & x & ((1 << nvars) - 1)).count("1") % 2 == (r >> nvars & 1) for r in rows)

        sol = _solve_gf2(rows, nvars)
        any_sol = any(satisfied(x) for x in range(1 << nvars))
        assert (sol is not None) == any_sol
        if sol is not None:
            assert satisfied(sol)


def test_cfi_count_examples():
    r = verify_thm313(complete_graph(4), complete_graph(4))
    assert (r.hom_untwisted, r.hom_twisted) == (192, 0) and r.holds
    r = verify_thm313(cycle_graph(4), complete_graph(2))
    assert (r.hom_untwisted, r.hom_twisted) == (2, 0) and r.search.found and r.holds
    r = verify_thm313(complete_graph(3), complete_graph(2))
    assert (r.hom_untwisted, r.hom_twisted) == (0, 0) and not r.search.found and r.holds
    assert r.to_json()["biconditional"] == "holds"


def test_cfi_count_truncated_is_inconclusive():
    r = verify_thm313(Graph(4), complete_graph(3), budget=1)
    assert r.holds is None and r.to_json()["biconditional"] == "inconclusive"


def test_minor_oddomorphism_examples():
    k4 = complete_graph(4)
    r = check_lemma56_instance(k4, k4, complete_graph(3))
    assert r.status == "found" and is_oddomorphism(r.minor, complete_graph(3), r.phi)
    r = check_lemma56_instance(k4, k4, k4)
    assert r.status == "found" and r.minor.n == 4
    r = check_lemma56_instance(cycle_graph(4), complete_graph(2), complete_graph(2))
    assert r.status == "found" and r.minor.m == 1


def test_minor_oddomorphism_preconditions():
    with pytest.raises(ValueError):
        check_lemma56_instance(complete_graph(3), complete_graph(2), complete_graph(2))
    with pytest.raises(ValueError):
        check_lemma56_instance(cycle_graph(4), cycle_graph(4), complete_graph(4))  # not a minor of C4
