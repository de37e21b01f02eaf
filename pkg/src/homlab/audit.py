"""Deciding k-WL invariance of subgraph counts and certifying non-invariance.

``sub(F, .)`` is k-WL invariant exactly when every homomorphic image of F
has treewidth at most k.  When that fails, the auditor looks for a pair of
graphs that k-WL cannot tell apart but that have different numbers of F
subgraphs: CFI pairs over high-treewidth images of F (and their connected
subgraphs) are tried smallest first.  Every reported witness is re-verified
from scratch before it is emitted.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import combinations

from .cfi import cfi_pair
from .errors import BudgetExceeded
from .graph import Graph
from .graph6 import emit_graph6
from .hom import hom_count, sub_count
from .iso import IsoClasses
from .spasm import spasm
from .treewidth import treewidth
from .wl import MAX_TUPLES, wl_distinguishes

INVARIANT = "invariant"
NOT_INVARIANT = "not-invariant"
INCONCLUSIVE = "inconclusive"

DEFAULT_BUDGET = 200


@dataclass
class WitnessPair:
    g: Graph
    h: Graph
    base: Graph | None
    twist: tuple[int, ...]
    sub_g: int
    sub_h: int
    wl_verdicts: dict[int, bool]  # dimension -> distinguished?
    hom_g: int | None = None
    hom_h: int | None = None
    distinguished_above: bool | None = None  # verdict at dimension k + 1, if computed

    def to_json(self) -> dict:
        return {
            "G": emit_graph6(self.g),
            "H": emit_graph6(self.h),
            "n": self.g.n,
            "base": emit_graph6(self.base) if self.base is not None else None,
            "twist": list(self.twist),
            "sub_G": str(self.sub_g),
            "sub_H": str(self.sub_h),
            "hom_G": None if self.hom_g is None else str(self.hom_g),
            "hom_H": None if self.hom_h is None else str(self.hom_h),
            "wl_distinguished": {str(d): v for d, v in sorted(self.wl_verdicts.items())},
            "distinguished_at_k_plus_1": self.distinguished_above,
        }


@dataclass
class AuditReport:
    pattern: Graph
    k: int
    members: list[Graph]
    treewidths: list[int]
    htw: int
    verdict: str
    witness: WitnessPair | None = None
    telemetry: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "pattern": emit_graph6(self.pattern),
            "k": self.k,
            "spasm": [{"graph6": emit_graph6(m), "n": m.n, "m": m.m, "tw": t}
                      for m, t in zip(self.members, self.treewidths)],
            "htw": self.htw,
            "verdict": self.verdict,
            "witness": self.witness.to_json() if self.witness else None,
            "telemetry": self.telemetry,
        }


def verify_witness(f: Graph, k: int, g: Graph, h: Graph) -> bool:
    """True iff k-WL does not distinguish ``g`` and ``h`` but their ``f``-subgraph counts differ."""
    if wl_distinguishes(g, h, k):
        return False
    return sub_count(f, g) != sub_count(f, h)


def _connected_subgraphs(g: Graph):
    """Connected spanning-or-smaller subgraphs of ``g`` given by edge subsets."""
    for r in range(g.m - 1, 0, -1):
        for es in combinations(g.edges, r):
            verts = sorted({v for e in es for v in e})
            sub, _ = g.subgraph(verts, es)
            if sub.is_connected():
                yield sub


def witness_candidates(f: Graph, k: int):
    """Candidate CFI bases in search order: images of ``f``, then their subgraphs."""
    sp = spasm(f)
    members = sorted(
        (m for m in sp.members if m.is_connected() and treewidth(m) > k),
        key=lambda m: (m.n, m.m),
    )
    yield from members
    seen = IsoClasses()
    for m in members:
        seen.add(m)
    subs = []
    for m in members:
        for s in _connected_subgraphs(m):
            if treewidth(s) > k and seen.add(s)[1]:
                subs.append(s)
    yield from sorted(subs, key=lambda s: (s.n, s.m))


def witness_search(f: Graph, k: int, budget: int = DEFAULT_BUDGET, max_tuples: int = MAX_TUPLES,
                   telemetry: dict | None = None) -> WitnessPair | None:
    """First CFI pair (in candidate order) whose ``f``-subgraph counts differ.

    ``budget`` caps the number of candidate bases examined; exceeding it
    raises :class:`BudgetExceeded`.
    """
    tel = telemetry if telemetry is not None else {}
    tel.setdefault("candidates_tried", 0)
    tel.setdefault("skipped_too_large", 0)
    tel.setdefault("wl_distinguished_candidates", 0)
    tel.setdefault("tied_counts", 0)
    for base in witness_candidates(f, k):
        if tel["candidates_tried"] >= budget:
            raise BudgetExceeded(f"witness search exceeded {budget} candidate bases")
        tel["candidates_tried"] += 1
        size = sum(1 << (d - 1) for d in base.degrees())
        if size**k > max_tuples:
            tel["skipped_too_large"] += 1
            continue
        a, b = cfi_pair(base)
        verdicts = {d: wl_distinguishes(a.graph, b.graph, d, max_tuples) for d in range(1, k + 1)}
        if any(verdicts.values()):
            # cannot happen for treewidth > k; kept as an honest record
            tel["wl_distinguished_candidates"] += 1
            continue
        sg, sh = sub_count(f, a.graph), sub_count(f, b.graph)
        if sg == sh:
            tel["tied_counts"] += 1
            continue
        above = None
        if size ** (k + 1) <= max_tuples:
            above = wl_distinguishes(a.graph, b.graph, k + 1, max_tuples)
        return WitnessPair(a.graph, b.graph, base, tuple(sorted(b.twist)), sg, sh, verdicts,
                           hom_count(f, a.graph), hom_count(f, b.graph), above)
    return None


def audit(f: Graph, k: int, budget: int = DEFAULT_BUDGET, max_tuples: int = MAX_TUPLES) -> AuditReport:
    if k < 1:
        raise ValueError("k must be >= 1")
    start = time.perf_counter()
    sp = spasm(f)
    tws = sp.treewidths()
    width = max(tws)
    tel: dict = {"budget": budget}
    report = AuditReport(f, k, sp.members, tws, width, INVARIANT, None, tel)
    if width <= k:
        tel["reason"] = "every homomorphic image has treewidth <= k"
    else:
        try:
            wp = witness_search(f, k, budget, max_tuples, tel)
        except BudgetExceeded as exc:
            wp = None
            tel["budget_exhausted"] = str(exc)
        if wp is not None and verify_witness(f, k, wp.g, wp.h):
            report.verdict = NOT_INVARIANT
            report.witness = wp
            tel["reverified"] = True
        else:
            report.verdict = INCONCLUSIVE
            tel["reason"] = ("htw > k, so a witness pair exists, but no CFI candidate "
                             "within budget separated the subgraph counts")
    tel["seconds"] = round(time.perf_counter() - start, 4)
    return report
