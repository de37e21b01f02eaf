from __future__ import annotations

from homlab.corpus import ENV_VAR, all_graphs, connected_corpus, corpus_graphs, graphs_upto
from homlab.graph import complete_graph
from homlab.iso import IsoClasses


def test_bundled_corpus():
    gs = corpus_graphs()
    assert len(gs) >= 1000
    conn = connected_corpus(8)
    assert len(conn) >= 100 and all(g.is_connected() and g.n <= 8 for g in conn)


def test_corpus_up_to_seven_is_complete_and_distinct():
    # connected graphs on n = 1..7 vertices: 1, 1, 2, 6, 21, 112, 853
    small = [g for g in corpus_graphs() if g.n <= 7]
    counts = [sum(1 for g in small if g.n == n) for n in range(1, 8)]
    assert counts == [1, 1, 2, 6, 21, 112, 853]
    cls = IsoClasses()
    assert all(cls.add(g)[1] for g in small if g.n <= 6)


def test_env_override(tmp_path, monkeypatch):
    (tmp_path / "mine.g6").write_text("C~\n")
    monkeypatch.setenv(ENV_VAR, str(tmp_path))
    assert corpus_graphs() == [complete_graph(4)]


def test_graphs_upto_filters():
    assert len(graphs_upto(5)) == 1 + 2 + 4 + 11 + 34
    assert len(graphs_upto(5, connected=True, min_degree=1)) == 1 + 2 + 6 + 21
    assert len(all_graphs(0)) == 1
