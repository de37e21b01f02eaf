"""Command-line entry point: one JSON report per line on stdout.

Exit codes: 0 success, 1 check failure, 2 usage or input error,
3 budget-inconclusive.
"""

from __future__ import annotations

import argparse
import json
import sys

from .audit import DEFAULT_BUDGET as AUDIT_BUDGET
from .audit import INCONCLUSIVE, audit, verify_witness, witness_search
from .cfi import cfi_build
from .corpus import ENV_VAR
from .errors import BudgetExceeded, ConsistencyError, HomlabError
from .graph import Graph
from .graph6 import emit_graph6, graph_to_json, load_graph
from .hom import hom_count, hom_count_bruteforce, hom_count_td, sub_count
from .oddo import DEFAULT_BUDGET, find_weak_oddomorphism, oddness_profile, verify_thm313
from .spasm import spasm, sub_basis
from .suites import SUITE_MODULES, RunConfig, corpus_run
from .treewidth import cop_number, treewidth_exact
from .wl import wl_compare

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INCONCLUSIVE = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _graph_out(g: Graph, fmt: str):
    return emit_graph6(g) if fmt == "graph6" else graph_to_json(g)


def _need(args, name: str) -> Graph:
    val = getattr(args, name, None)
    if val is None:
        raise UsageError(f"--{name} is required")
    try:
        return load_graph(val)
    except (ValueError, OSError) as exc:
        raise UsageError(f"--{name}: {exc}") from None


def _pattern(args) -> Graph:
    if args.pattern is None and args.pattern_pos is not None:
        args.pattern = args.pattern_pos
    return _need(args, "pattern")


def _int_list(text: str | None) -> list[int]:
    if not text:
        return []
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def _budget(args, default: int) -> int:
    return default if args.budget is None else args.budget


def _k(args) -> int:
    if args.k is None or args.k < 1:
        raise UsageError("--k must be a positive integer")
    return args.k


# ------------------------------------------------------------- commands


def cmd_audit(args):
    f = _pattern(args)
    rep = audit(f, _k(args), _budget(args, AUDIT_BUDGET))
    code = EXIT_INCONCLUSIVE if rep.verdict == INCONCLUSIVE else EXIT_OK
    return [rep.to_json()], code


def cmd_witness(args):
    f = _pattern(args)
    k = _k(args)
    sp = spasm(f)
    width = max(sp.treewidths())
    if width <= k:
        return [{"pattern": emit_graph6(f), "k": k, "htw": width, "witness": None,
                 "reason": "htw <= k: no witness pair exists"}], EXIT_OK
    tel: dict = {}
    try:
        wp = witness_search(f, k, _budget(args, AUDIT_BUDGET), telemetry=tel)
    except BudgetExceeded as exc:
        return [{"pattern": emit_graph6(f), "k": k, "htw": width, "witness": None,
                 "reason": str(exc), "telemetry": tel}], EXIT_INCONCLUSIVE
    if wp is None:
        return [{"pattern": emit_graph6(f), "k": k, "htw": width, "witness": None,
                 "reason": "no CFI candidate separated the counts", "telemetry": tel}], EXIT_INCONCLUSIVE
    out = wp.to_json()
    out["verified"] = verify_witness(f, k, wp.g, wp.h)
    return [{"pattern": emit_graph6(f), "k": k, "htw": width, "witness": out, "telemetry": tel}], \
        EXIT_OK if out["verified"] else EXIT_FAIL


def cmd_verify(args):
    f = _pattern(args)
    k = _k(args)
    g, h = _need(args, "g"), _need(args, "h")
    ok = verify_witness(f, k, g, h)
    return [{"verified": ok, "k": k, "sub_G": str(sub_count(f, g)), "sub_H": str(sub_count(f, h))}], \
        EXIT_OK if ok else EXIT_FAIL


def cmd_wl(args):
    return [wl_compare(_need(args, "g"), _need(args, "h"), _k(args)).to_json()], EXIT_OK


def cmd_hom(args):
    f = _pattern(args)
    g = _need(args, "target")
    if args.mode == "brute":
        count = hom_count_bruteforce(f, g, args.budget)
    elif args.mode == "td":
        count = hom_count_td(f, treewidth_exact(f)[1], g)
    else:
        count = hom_count(f, g)
    return [{"count": str(count), "mode": args.mode}], EXIT_OK


def cmd_sub(args):
    return [{"count": str(sub_count(_pattern(args), _need(args, "target")))}], EXIT_OK


def cmd_cfi(args):
    base = _need(args, "base")
    cg = cfi_build(base, _int_list(args.twist))
    return [{
        "graph": _graph_out(cg.graph, args.format),
        "n": cg.graph.n,
        "m": cg.graph.m,
        "twist": sorted(cg.twist),
        "gadgets": {str(v): items for v, items in cg.gadget_map().items()},
    }], EXIT_OK


def cmd_spasm(args):
    f = _pattern(args)
    sp = spasm(f)
    tws = sp.treewidths()
    return [{"pattern": emit_graph6(f), "htw": max(tws),
             "members": [{"graph": _graph_out(m, args.format), "n": m.n, "m": m.m, "tw": t}
                         for m, t in zip(sp.members, tws)]}], EXIT_OK


def cmd_basis(args):
    b = sub_basis(_pattern(args))
    return [{"terms": [[_graph_out(m, args.format), f"{a.numerator}/{a.denominator}"]
                       for m, a in b.terms]}], EXIT_OK


def cmd_tw(args):
    g = _need(args, "g")
    width, td = treewidth_exact(g)
    out = {"treewidth": width, "decomposition": td.to_json()}
    if args.cops:
        out["cop_number"] = cop_number(g)
    return [out], EXIT_OK


def cmd_oddo(args):
    f, g = _need(args, "f"), _need(args, "g")
    budget = _budget(args, DEFAULT_BUDGET)
    if args.phi:
        phi = _int_list(args.phi)
        if len(phi) != f.n:
            raise UsageError(f"--phi needs {f.n} images")
        return [{"profile": oddness_profile(f, g, phi).to_json()}], EXIT_OK
    if args.cfi_counts:
        rep = verify_thm313(f, g, budget)
        code = {True: EXIT_OK, False: EXIT_FAIL, None: EXIT_INCONCLUSIVE}[rep.holds]
        return [rep.to_json()], code
    res = find_weak_oddomorphism(f, g, budget)
    return [{"weak_oddomorphism": res.to_json()}], EXIT_INCONCLUSIVE if res.status == "unknown" else EXIT_OK


def cmd_corpus(args):
    modules = tuple(args.module) if args.module else None
    if modules:
        unknown = set(modules) - set(SUITE_MODULES.values())
        if unknown:
            raise UsageError(f"unknown module(s): {sorted(unknown)}")
    checks = tuple(_int_list(args.check)) or None
    summary = corpus_run(RunConfig(modules=modules, checks=checks, budget=args.budget, seed=args.seed))
    lines = summary["checks"] + [{k: v for k, v in summary.items() if k != "checks"}]
    if summary["failed"]:
        return lines, EXIT_FAIL
    return lines, EXIT_INCONCLUSIVE if summary["inconclusive"] else EXIT_OK


# --------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("graph6", "json"), default="graph6",
                        help="encoding for emitted graphs")
    common.add_argument("--budget", type=int, default=None, help="explored-state budget")
    common.add_argument("--out", default=None, help="write reports to this file instead of stdout")
    common.add_argument("--human", action="store_true", help="indented human-readable output")

    p = argparse.ArgumentParser(
        prog="homlab",
        description="Subgraph-count WL-invariance auditor and graph toolkit. "
                    f"Graph arguments are files (graph6 or JSON), names like K4 or C6, "
                    f"or graph6 strings. {ENV_VAR} overrides the bundled corpus.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_, *opts):
        sp = sub.add_parser(name, parents=[common], help=help_)
        for o in opts:
            if o == "pattern":
                sp.add_argument("pattern_pos", nargs="?", metavar="PATTERN")
                sp.add_argument("--pattern")
            elif o == "k":
                sp.add_argument("--k", type=int)
            else:
                sp.add_argument(f"--{o}")
        sp.set_defaults(func=fn)
        return sp

    add("audit", cmd_audit, "decide k-WL invariance of sub(F, .)", "pattern", "k")
    add("witness", cmd_witness, "search a CFI witness pair", "pattern", "k")
    add("verify", cmd_verify, "check a witness pair", "pattern", "k", "g", "h")
    add("wl", cmd_wl, "compare two graphs under k-WL", "k", "g", "h")
    hp = add("hom", cmd_hom, "count homomorphisms", "pattern", "target")
    hp.add_argument("--mode", choices=("auto", "brute", "td"), default="auto")
    add("sub", cmd_sub, "count subgraph copies", "pattern", "target")
    add("cfi", cmd_cfi, "build a CFI graph", "base", "twist")
    add("spasm", cmd_spasm, "list homomorphic images with treewidths", "pattern")
    add("basis", cmd_basis, "sub(F, .) in the homomorphism basis", "pattern")
    tp = add("tw", cmd_tw, "exact treewidth and decomposition", "g")
    tp.add_argument("--cops", action="store_true", help="also solve the cops-and-robber game")
    op = add("oddo", cmd_oddo, "oddomorphism profile or weak-oddomorphism search", "f", "g", "phi")
    op.add_argument("--cfi-counts", action="store_true",
                    help="compare hom counts into the CFI pair over g with the search outcome")
    cp = add("corpus", cmd_corpus, "run the acceptance suites")
    cp.add_argument("--module", action="append", help="restrict to suites of this module (repeatable)")
    cp.add_argument("--check", help="comma-separated suite ids")
    cp.add_argument("--seed", type=int, default=0)
    return p


def _render(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        lines, code = args.func(args)
    except UsageError as exc:
        print(json.dumps({"error": str(exc)}), file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(json.dumps({"error": str(exc), "inconclusive": True}), file=sys.stderr)
        return EXIT_INCONCLUSIVE
    except ConsistencyError as exc:
        print(json.dumps({"error": f"internal consistency check failed: {exc}"}), file=sys.stderr)
        return EXIT_FAIL
    except (HomlabError, ValueError) as exc:
        print(json.dumps({"error": f"{type(exc).__name__}: {exc}"}), file=sys.stderr)
        return EXIT_USAGE
    text = "\n".join(_render(x) if args.human else json.dumps(x) for x in lines) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
