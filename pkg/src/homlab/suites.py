"""Acceptance suites: exact desk-scale checks of the library's claims.

Each suite returns a :class:`CheckResult` with a tri-state status.  A check
is "inconclusive" only when a budget truncated some search and nothing
failed; truncated instances are listed separately from failures.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from itertools import combinations

from .audit import INCONCLUSIVE as AUDIT_INCONCLUSIVE
from .audit import NOT_INVARIANT, audit
from .cfi import cfi_build, cfi_pair, twist_isomorphism
from .corpus import connected_corpus, corpus_graphs, graphs_upto
from .graph import Graph, complete_graph, cycle_graph, disjoint_union, named_graph
from .graph6 import emit_graph6
from .hom import sub_count_bruteforce
from .iso import canonical_form, is_isomorphic, minors
from .oddo import DEFAULT_BUDGET, check_lemma56_instance, find_weak_oddomorphism, verify_thm313
from .spasm import spasm, sub_basis
from .treewidth import cop_number, treewidth
from .wl import wl_distinguishes

PASS, FAIL, INCONCLUSIVE = "pass", "fail", "inconclusive"


@dataclass
class CheckResult:
    id: int
    name: str
    module: str
    status: str
    details: dict = field(default_factory=dict)
    seconds: float = 0.0
    inconclusive_entries: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "name": self.name,
            "module": self.module,
            "status": self.status,
            "seconds": round(self.seconds, 3),
            "details": self.details,
            "inconclusive_entries": self.inconclusive_entries,
        }


@dataclass
class RunConfig:
    modules: tuple[str, ...] | None = None  # None selects every module
    checks: tuple[int, ...] | None = None
    budget: int | None = None  # explored-state cap for searches; None = defaults
    seed: int = 0


def _status(ok: bool, truncated: list) -> str:
    if not ok:
        return FAIL
    return INCONCLUSIVE if truncated else PASS


def _g6(g: Graph) -> str:
    return emit_graph6(g)


# ----------------------------------------------------------------- suites


def triangle_witness(cfg: RunConfig) -> CheckResult:
    start = time.perf_counter()
    rep = audit(complete_graph(3), 1, **({"budget": cfg.budget} if cfg.budget is not None else {}))
    secs = time.perf_counter() - start
    d: dict = {"verdict": rep.verdict, "seconds_limit": 1.0}
    if rep.verdict == AUDIT_INCONCLUSIVE:
        return CheckResult(1, "triangle-witness", "cli", INCONCLUSIVE, d, secs,
                           [{"pattern": "K3", "k": 1, "telemetry": rep.telemetry}])
    ok = rep.verdict == NOT_INVARIANT and rep.witness is not None
    if ok:
        w = rep.witness
        two_k3 = disjoint_union([complete_graph(3)] * 2)[0]
        d.update(w.to_json())
        d["G_is_2K3"] = is_isomorphic(w.g, two_k3) is not None
        d["H_is_C6"] = is_isomorphic(w.h, cycle_graph(6)) is not None
        ok = (d["G_is_2K3"] and d["H_is_C6"] and (w.sub_g, w.sub_h) == (2, 0)
              and w.wl_verdicts == {1: False} and w.distinguished_above is True)
    return CheckResult(1, "triangle-witness", "cli", _status(ok and secs < 1.0, []), d, secs)


def k4_witness(cfg: RunConfig) -> CheckResult:
    start = time.perf_counter()
    rep = audit(complete_graph(4), 2, **({"budget": cfg.budget} if cfg.budget is not None else {}))
    secs = time.perf_counter() - start
    d: dict = {"verdict": rep.verdict, "seconds_limit": 30.0}
    if rep.verdict == AUDIT_INCONCLUSIVE:
        return CheckResult(2, "k4-witness", "cli", INCONCLUSIVE, d, secs,
                           [{"pattern": "K4", "k": 2, "telemetry": rep.telemetry}])
    ok = rep.verdict == NOT_INVARIANT and rep.witness is not None
    if ok:
        w = rep.witness
        d.update(w.to_json())
        d["base_is_K4"] = w.base is not None and is_isomorphic(w.base, complete_graph(4)) is not None
        ok = (d["base_is_K4"] and w.g.n == w.h.n == 16
              and not any(w.wl_verdicts.values()) and w.distinguished_above is True
              and w.hom_g is not None and w.hom_h is not None and w.hom_g > w.hom_h)
    return CheckResult(2, "k4-witness", "cli", _status(ok and secs < 30.0, []), d, secs)


def cycle_invariance(cfg: RunConfig) -> CheckResult:
    """htw(C_l) <= 2 for l = 3..6 and htw(C_7) = 3, with spasm listings."""
    start = time.perf_counter()
    listings = {}
    htws = {}
    for length in range(3, 8):
        sp = spasm(cycle_graph(length))
        tws = sp.treewidths()
        htws[length] = max(tws)
        listings[f"C{length}"] = [{"graph6": _g6(m), "n": m.n, "m": m.m, "tw": t}
                                  for m, t in zip(sp.members, tws)]
    secs = time.perf_counter() - start
    ok_small = all(htws[length] <= 2 for length in range(3, 7))
    ok_c7 = htws[7] == 3
    d = {
        "htw": {f"C{length}": w for length, w in htws.items()},
        "small_cycles_ok": ok_small,
        "c7_expected": 3,
        "c7_ok": ok_c7,
        "spasm": listings,
        "seconds_limit": 60.0,
    }
    return CheckResult(3, "cycle-invariance", "spasm-basis",
                       _status(ok_small and ok_c7 and secs < 60.0, []), d, secs)


def _random_target(rng: random.Random, max_n: int) -> Graph:
    n = rng.randint(1, max_n)
    p = rng.random()
    return Graph(n, [e for e in combinations(range(n), 2) if rng.random() < p])


def basis_identity(cfg: RunConfig) -> CheckResult:
    start = time.perf_counter()
    rng = random.Random(cfg.seed)
    targets = [_random_target(rng, 7) for _ in range(50)]
    patterns = graphs_upto(5)
    mismatches = []
    for f in patterns:
        basis = sub_basis(f, validate=0)
        for g in targets:
            lhs = basis.evaluate(g)
            rhs = sub_count_bruteforce(f, g)
            if lhs != rhs:
                mismatches.append({"f": _g6(f), "g": _g6(g), "basis": str(lhs), "sub": rhs})
    d = {"patterns": len(patterns), "targets": len(targets),
         "evaluations": len(patterns) * len(targets), "mismatches": mismatches}
    return CheckResult(4, "basis-identity", "spasm-basis", _status(not mismatches, []), d,
                       time.perf_counter() - start)


def game_width(cfg: RunConfig) -> CheckResult:
    start = time.perf_counter()
    graphs = connected_corpus(8)
    mismatches = []
    for g in graphs:
        tw, cops = treewidth(g), cop_number(g)
        if cops != tw + 1:
            mismatches.append({"g": _g6(g), "treewidth": tw, "cops": cops})
    secs = time.perf_counter() - start
    d = {"graphs": len(graphs), "mismatches": mismatches, "seconds_limit": 300.0}
    ok = len(graphs) >= 100 and not mismatches and secs < 300.0
    return CheckResult(5, "game-width", "treewidth-games", _status(ok, []), d, secs)


def cfi_parity(cfg: RunConfig) -> CheckResult:
    """Every twist-set pair over every small base: isomorphic iff parities agree.

    Isomorphism of CFI(G, U) and CFI(G, U') is decided by comparing canonical
    forms, which is exactly what ``is_isomorphic`` does, but computes one
    form per twist set instead of two per pair.
    """
    start = time.perf_counter()
    bases = graphs_upto(5, connected=True, min_degree=1)
    pairs = 0
    mismatches = []
    for base in bases:
        keys = []
        for mask in range(1 << base.n):
            cg = cfi_build(base, [v for v in range(base.n) if mask >> v & 1])
            keys.append(canonical_form(cg.graph)[0])
        for a in range(len(keys)):
            for b in range(a, len(keys)):
                pairs += 1
                same_parity = (bin(a).count("1") - bin(b).count("1")) % 2 == 0
                if (keys[a] == keys[b]) != same_parity:
                    mismatches.append({"base": _g6(base), "U": a, "U2": b})
    d = {"bases": len(bases), "pairs": pairs, "mismatches": mismatches}
    return CheckResult(6, "cfi-parity", "cfi", _status(not mismatches, []), d,
                       time.perf_counter() - start)


def oddomorphism_biconditional(cfg: RunConfig) -> CheckResult:
    start = time.perf_counter()
    budget = DEFAULT_BUDGET if cfg.budget is None else cfg.budget
    fs = graphs_upto(5)
    gs = graphs_upto(4, connected=True, min_degree=1)
    failures, truncated = [], []
    strict = 0
    for f in fs:
        for g in gs:
            r = verify_thm313(f, g, budget)
            if r.holds is False:
                failures.append(r.to_json())
            elif r.holds is None:
                truncated.append({"f": _g6(f), "g": _g6(g), "explored": r.search.explored})
            strict += r.strict
    d = {"patterns": len(fs), "bases": len(gs), "instances": len(fs) * len(gs),
         "strict": strict, "failures": failures, "budget": budget}
    return CheckResult(7, "oddomorphism-biconditional", "oddo", _status(not failures, truncated), d,
                       time.perf_counter() - start, truncated)


def _simple_paths(g: Graph, u: int, v: int):
    stack = [(u, [u])]
    while stack:
        x, path = stack.pop()
        if x == v:
            yield path
            continue
        for y in sorted(g.neighbors(x)):
            if y not in path:
                stack.append((y, path + [y]))


def twist_suite(cfg: RunConfig) -> CheckResult:
    start = time.perf_counter()
    bases = graphs_upto(5, connected=True, min_degree=1)
    triples = 0
    failures = []
    for base in bases:
        for u in range(base.n):
            for v in range(base.n):
                src = cfi_build(base, {u})
                for path in _simple_paths(base, u, v):
                    triples += 1
                    phi = twist_isomorphism(base, u, v, path)  # validated inside
                    dst = cfi_build(base, {v})
                    on_path = set(path)
                    gadgets_ok = all(dst.vertices[phi[i]].base == cv.base
                                     for i, cv in enumerate(src.vertices))
                    fixed_ok = all(dst.vertices[phi[i]] == cv
                                   for i, cv in enumerate(src.vertices) if cv.base not in on_path)
                    back = twist_isomorphism(base, v, u, path[::-1])
                    round_ok = all(back[phi[i]] == i for i in range(len(phi)))
                    if not (gadgets_ok and fixed_ok and round_ok):
                        failures.append({"base": _g6(base), "path": path, "gadgets": gadgets_ok,
                                         "fixed": fixed_ok, "reverse_identity": round_ok})
    d = {"bases": len(bases), "triples": triples, "failures": failures}
    return CheckResult(8, "twist-isomorphism", "cfi", _status(not failures, []), d,
                       time.perf_counter() - start)


def minor_oddomorphisms(cfg: RunConfig) -> CheckResult:
    start = time.perf_counter()
    budget = DEFAULT_BUDGET if cfg.budget is None else cfg.budget
    fs = graphs_upto(5)
    gs = graphs_upto(4, connected=True, min_degree=1)
    instances = 0
    failures, truncated = [], []
    for f in fs:
        for g in gs:
            if find_weak_oddomorphism(f, g, budget).status != "found":
                continue
            for gm in minors(g):
                r = check_lemma56_instance(f, g, gm, budget)
                entry = {"f": _g6(f), "g": _g6(g), "g_minor": _g6(gm)}
                if r.status == "found":
                    instances += 1
                elif r.status == "unknown":
                    truncated.append(entry)
                else:
                    failures.append(entry)
    d = {"instances_found": instances, "failures": failures, "budget": budget, "minimum": 20}
    ok = not failures and instances >= 20
    return CheckResult(9, "minor-oddomorphisms", "oddo", _status(ok, truncated), d,
                       time.perf_counter() - start, truncated)


def wl_sanity(cfg: RunConfig) -> CheckResult:
    start = time.perf_counter()
    rng = random.Random(cfg.seed)
    graphs = corpus_graphs()
    relabel_fail = []
    for g in graphs:
        perm = list(range(g.n))
        rng.shuffle(perm)
        h = g.relabel(perm)
        for k in (1, 2, 3):
            if wl_distinguishes(g, h, k):
                relabel_fail.append({"g": _g6(g), "k": k})
    # monotonicity over sampled same-size pairs (same n keeps the pair non-trivial)
    by_n: dict[int, list[Graph]] = {}
    for g in graphs:
        by_n.setdefault(g.n, []).append(g)
    monotone_fail = []
    sampled = 0
    for n, gs in sorted(by_n.items()):
        for _ in range(40):
            a, b = rng.sample(gs, 2) if len(gs) > 1 else (gs[0], gs[0])
            sampled += 1
            verdicts = [wl_distinguishes(a, b, k) for k in (1, 2, 3)]
            if any(verdicts[i] and not verdicts[i + 1] for i in range(2)):
                monotone_fail.append({"a": _g6(a), "b": _g6(b), "verdicts": verdicts})
    # CFI pairs are the interesting case: equal at low k, split higher up
    for name in ("K3", "C4", "K4", "K2,3"):
        a, b = cfi_pair(named_graph(name))
        sampled += 1
        verdicts = [wl_distinguishes(a.graph, b.graph, k) for k in (1, 2, 3)]
        if any(verdicts[i] and not verdicts[i + 1] for i in range(2)):
            monotone_fail.append({"base": name, "verdicts": verdicts})
    c6, two_k3 = named_graph("C6"), named_graph("2K3")
    flip = [wl_distinguishes(c6, two_k3, k) for k in (1, 2)]
    d = {"graphs": len(graphs), "relabel_failures": relabel_fail, "monotone_pairs": sampled,
         "monotone_failures": monotone_fail, "c6_vs_2k3": {"k1": flip[0], "k2": flip[1]}}
    ok = not relabel_fail and not monotone_fail and flip == [False, True]
    return CheckResult(10, "wl-sanity", "wl-refine", _status(ok, []), d, time.perf_counter() - start)


SUITES = {
    1: triangle_witness,
    2: k4_witness,
    3: cycle_invariance,
    4: basis_identity,
    5: game_width,
    6: cfi_parity,
    7: oddomorphism_biconditional,
    8: twist_suite,
    9: minor_oddomorphisms,
    10: wl_sanity,
}

SUITE_MODULES = {1: "cli", 2: "cli", 3: "spasm-basis", 4: "spasm-basis", 5: "treewidth-games",
                 6: "cfi", 7: "oddo", 8: "cfi", 9: "oddo", 10: "wl-refine"}


def run_check(i: int, cfg: RunConfig | None = None) -> CheckResult:
    return SUITES[i](cfg or RunConfig())


def corpus_run(cfg: RunConfig | None = None) -> dict:
    """Run the selected suites; failures and inconclusive entries are reported apart."""
    cfg = cfg or RunConfig()
    results = []
    for i in sorted(SUITES):
        if cfg.checks is not None and i not in cfg.checks:
            continue
        if cfg.modules is not None and SUITE_MODULES[i] not in cfg.modules:
            continue
        results.append(run_check(i, cfg))
    return {
        "checks": [r.to_json() for r in results],
        "passed": [r.id for r in results if r.status == PASS],
        "failed": [r.id for r in results if r.status == FAIL],
        "inconclusive": [r.id for r in results if r.status == INCONCLUSIVE],
        "inconclusive_entries": [dict(e, check=r.id) for r in results for e in r.inconclusive_entries],
        "ok": all(r.status == PASS for r in results),
    }
