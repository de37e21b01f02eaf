"""Access to the bundled graph corpus and small exhaustive graph families.

``HOMLAB_CORPUS`` may point at a directory of ``*.g6`` files replacing the
bundled ones.
"""

from __future__ import annotations

import os
from functools import lru_cache
from importlib import resources
from itertools import combinations
from pathlib import Path

from .graph import Graph
from .graph6 import parse_graph6
from .iso import IsoClasses

ENV_VAR = "HOMLAB_CORPUS"


def corpus_dir() -> Path:
    override = os.environ.get(ENV_VAR)
    if override:
        return Path(override)
    return Path(str(resources.files("homlab") / "data"))


@lru_cache(maxsize=None)
def _load(directory: str) -> tuple[Graph, ...]:
    out = []
    for path in sorted(Path(directory).glob("*.g6")):
        for line in path.read_text().splitlines():
            if line.strip() and not line.startswith("#"):
                out.append(parse_graph6(line))
    return tuple(out)


def corpus_graphs() -> list[Graph]:
    """Every graph in the corpus directory, in file then line order."""
    return list(_load(str(corpus_dir())))


def connected_corpus(max_n: int) -> list[Graph]:
    return [g for g in corpus_graphs() if g.n <= max_n and g.is_connected()]


@lru_cache(maxsize=None)
def all_graphs(n: int) -> tuple[Graph, ...]:
    """One graph per isomorphism class on exactly ``n`` vertices."""
    pairs = list(combinations(range(n), 2))
    classes = IsoClasses()
    for mask in range(1 << len(pairs)):
        classes.add(Graph(n, [e for i, e in enumerate(pairs) if mask >> i & 1]))
    return tuple(classes.reps)


def graphs_upto(max_n: int, connected: bool = False, min_degree: int = 0) -> list[Graph]:
    out = []
    for n in range(1, max_n + 1):
        for g in all_graphs(n):
            if connected and not g.is_connected():
                continue
            if min(g.degrees()) < min_degree:
                continue
            out.append(g)
    return out
