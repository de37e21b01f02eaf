"""graph6 and JSON encodings of :class:`~homlab.graph.Graph`.

graph6 packs the upper triangle column by column (``x(0,1), x(0,2), x(1,2),
x(0,3), ...``) into 6-bit groups, each offset by 63.  Only the single-byte
size form (n <= 62) is emitted; parsing also accepts the 4-byte form.
"""

from __future__ import annotations

import json
from pathlib import Path

from .errors import Graph6Error
from .graph import Graph, named_graph

HEADER = ">>graph6<<"
MAX_EMIT_N = 62


def _check(code: bytes, offset: int) -> int:
    b = code[offset]
    if not 63 <= b <= 126:
        raise Graph6Error(f"byte {b!r} outside the printable range 63..126", offset)
    return b - 63


def parse_graph6(text: str | bytes) -> Graph:
    if isinstance(text, str):
        try:
            code = text.strip().encode("ascii")
        except UnicodeEncodeError:
            raise Graph6Error("graph6 must be ASCII") from None
    else:
        code = text.strip()
    base = 0
    if code.startswith(HEADER.encode()):
        base = len(HEADER)
        code = code[base:]
    if not code:
        raise Graph6Error("empty graph6 string", base)
    if code[0] == 126:
        if len(code) >= 2 and code[1] == 126:
            raise Graph6Error("8-byte size form not supported", base)
        if len(code) < 4:
            raise Graph6Error("truncated size header", base + len(code))
        n = 0
        for i in range(1, 4):
            n = (n << 6) | _check(code, i)
        pos = 4
    else:
        n = _check(code, 0)
        pos = 1
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = code[pos:]
    if len(body) < nbytes:
        raise Graph6Error(f"truncated body: need {nbytes} bytes, got {len(body)}", base + len(code))
    if len(body) > nbytes:
        raise Graph6Error("trailing bytes after graph6 body", base + pos + nbytes)
    bits = []
    for i in range(nbytes):
        val = _check(code, pos + i)
        bits.extend((val >> s) & 1 for s in range(5, -1, -1))
    if any(bits[nbits:]):
        raise Graph6Error("nonzero padding bits", base + pos + nbytes - 1)
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return Graph(n, edges)


def emit_graph6(g: Graph) -> str:
    if g.n > MAX_EMIT_N:
        raise Graph6Error(f"n={g.n} exceeds the single-byte size form (max {MAX_EMIT_N})")
    bits = [1 if g.has_edge(i, j) else 0 for j in range(1, g.n) for i in range(j)]
    bits.extend([0] * (-len(bits) % 6))
    out = [chr(g.n + 63)]
    for i in range(0, len(bits), 6):
        val = 0
        for b in bits[i:i + 6]:
            val = (val << 1) | b
        out.append(chr(val + 63))
    return "".join(out)


def graph_to_json(g: Graph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in g.edges]}


def graph_from_json(obj: dict) -> Graph:
    try:
        return Graph(int(obj["n"]), obj.get("edges", []))
    except (KeyError, TypeError) as exc:
        raise ValueError(f"bad JSON graph: {exc}") from None


def read_graphs(path: str | Path) -> list[Graph]:
    """Read a file of graph6 lines, or a JSON graph / list of JSON graphs."""
    text = Path(path).read_text()
    stripped = text.lstrip()
    if stripped.startswith("{") or stripped.startswith("["):
        obj = json.loads(text)
        if isinstance(obj, dict):
            return [graph_from_json(obj)]
        return [graph_from_json(o) for o in obj]
    return [parse_graph6(line) for line in text.splitlines() if line.strip() and not line.startswith("#")]


def load_graph(spec: str) -> Graph:
    """Resolve a CLI graph argument: a file path, a graph name, or a graph6 literal."""
    p = Path(spec)
    if p.is_file():
        gs = read_graphs(p)
        if len(gs) != 1:
            raise ValueError(f"{spec}: expected exactly one graph, found {len(gs)}")
        return gs[0]
    try:
        return named_graph(spec)
    except ValueError:
        pass
    try:
        return parse_graph6(spec)
    except Graph6Error:
        raise ValueError(f"{spec!r} is neither a file, a graph name, nor graph6") from None
