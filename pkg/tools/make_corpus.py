"""Regenerate the bundled graph corpus (dev-only; needs networkx).

    python tools/make_corpus.py

Writes graph6 files into src/homlab/data/:
  connected_upto6.g6  all connected graphs on 1..6 vertices
  connected_7.g6      all connected graphs on 7 vertices
  sample_8.g6         60 pairwise non-isomorphic random connected graphs on 8 vertices
"""

import random
from pathlib import Path

import networkx as nx

from homlab.graph import Graph
from homlab.graph6 import emit_graph6
from homlab.iso import IsoClasses

OUT = Path(__file__).resolve().parents[1] / "src" / "homlab" / "data"


def convert(g: nx.Graph) -> Graph:
    nodes = sorted(g.nodes)
    pos = {v: i for i, v in enumerate(nodes)}
    return Graph(len(nodes), [(pos[u], pos[v]) for u, v in g.edges])


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    atlas = [g for g in nx.graph_atlas_g() if g.number_of_nodes() > 0 and nx.is_connected(g)]
    small = [convert(g) for g in atlas if g.number_of_nodes() <= 6]
    seven = [convert(g) for g in atlas if g.number_of_nodes() == 7]
    rng = random.Random(20240101)
    classes = IsoClasses()
    while len(classes) < 60:
        p = rng.choice((0.3, 0.4, 0.5, 0.6))
        g = Graph(8, [(i, j) for i in range(8) for j in range(i + 1, 8) if rng.random() < p])
        if g.is_connected():
            classes.add(g)
    for name, gs in (("connected_upto6", small), ("connected_7", seven), ("sample_8", classes.reps)):
        (OUT / f"{name}.g6").write_text("".join(emit_graph6(g) + "\n" for g in gs))
        print(name, len(gs))


if __name__ == "__main__":
    main()
