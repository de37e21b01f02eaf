"""Acceptance criteria 1-10, one test each.

Every criterion is exact: counts are integers, basis coefficients are
fractions, and the numeric tolerance is pinned to zero.  Wall-clock limits
are the only inexact bounds and are listed per criterion.

Run directly (``python3 tests/test_acceptance.py``) for a plain report.
"""

from __future__ import annotations

import sys

import pytest

from homlab.suites import PASS, SUITES, run_check

TOLERANCE = 0  # exact arithmetic everywhere; mismatches must be zero
TIME_LIMITS = {1: 1.0, 2: 30.0, 3: 60.0, 5: 300.0}  # seconds

SUMMARY_KEYS = {
    1: ("G", "H", "sub_G", "sub_H", "wl_distinguished", "distinguished_at_k_plus_1"),
    2: ("n", "sub_G", "sub_H", "hom_G", "hom_H", "wl_distinguished", "distinguished_at_k_plus_1"),
    3: ("htw", "small_cycles_ok", "c7_ok"),
    4: ("patterns", "targets", "evaluations"),
    5: ("graphs",),
    6: ("bases", "pairs"),
    7: ("instances", "strict", "budget"),
    8: ("bases", "triples"),
    9: ("instances_found",),
    10: ("graphs", "monotone_pairs", "c6_vs_2k3"),
}

RESULTS: list[str] = []


def _line(res) -> str:
    d = res.details
    parts = [f"{k}={d[k]}" for k in SUMMARY_KEYS[res.id] if k in d]
    for key in ("mismatches", "failures", "relabel_failures", "monotone_failures"):
        if key in d:
            parts.append(f"{key}={len(d[key])}")
    limit = TIME_LIMITS.get(res.id)
    timing = f"{res.seconds:.2f}s" + (f" (limit {limit:.0f}s)" if limit else "")
    status = "PASS" if res.status == PASS else res.status.upper()
    return f"[{status}] criterion {res.id:>2} {res.name}: {', '.join(parts)}; tol={TOLERANCE}; {timing}"


def _run(i: int):
    res = run_check(i)
    line = _line(res)
    RESULTS.append(line)
    print(line)
    return res


@pytest.mark.parametrize("criterion", sorted(SUITES))
def test_acceptance_criterion(criterion):
    res = _run(criterion)
    assert res.status == PASS, res.details


if __name__ == "__main__":
    ok = all(_run(i).status == PASS for i in sorted(SUITES))
    sys.exit(0 if ok else 1)
