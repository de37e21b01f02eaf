"""homlab: WL invariance of subgraph counts, CFI graphs, and the tools behind them."""

from __future__ import annotations

from .audit import AuditReport, WitnessPair, audit, verify_witness, witness_search
from .cfi import CfiGraph, CfiVertex, cfi_build, cfi_pair, cfi_parity_check, twist_isomorphism
from .errors import (
    BudgetExceeded,
    ConsistencyError,
    Graph6Error,
    HomlabError,
    InvalidDecomposition,
    InvalidPath,
    LoopDetected,
    NotAHomomorphism,
    SizeGuardError,
)
from .graph import (
    Graph,
    complete_graph,
    components,
    cycle_graph,
    disjoint_union,
    is_homomorphism,
    is_isomorphism,
    named_graph,
    path_graph,
    quotient,
)
from .graph6 import emit_graph6, graph_from_json, graph_to_json, load_graph, parse_graph6
from .hom import hom_count, hom_count_bruteforce, hom_count_td, homomorphisms, inj_count, sub_count
from .iso import automorphism_count, canonical_form, is_isomorphic, is_minor, isomorphisms, minors
from .oddo import (
    check_lemma56_instance,
    find_weak_oddomorphism,
    is_oddomorphism,
    oddness_profile,
    verify_thm313,
)
from .spasm import HomBasis, Spasm, htw, spasm, sub_basis
from .treewidth import (
    TreeDecomposition,
    cop_number,
    cops_win,
    treewidth,
    treewidth_exact,
    validate_decomposition,
)
from .wl import Coloring, WLResult, wl_compare, wl_distinguishes, wl_stable_coloring

__version__ = "0.1.0"
