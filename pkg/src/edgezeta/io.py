"""Edge-list and graph6 readers and writers.

Edge lists are UTF-8 text, ``#`` starts a comment, and each line is a
``u v`` pair (``v v`` for a loop; repeat a line for parallel edges).  A line
with a single token declares a vertex, which is the only way to give an
isolated vertex.  graph6 follows the standard ASCII encoding and covers
simple graphs only.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Iterable

from .graph import Graph, GraphError


class ParseError(ValueError):
    pass


@dataclass(frozen=True)
class NamedGraph:
    name: str
    graph: Graph
    format: str


def _strip(line: str) -> str:
    return line.split("#", 1)[0].strip()


def parse_edge_list(text: str | Iterable[str], name: str = "<edge list>") -> Graph:
    lines = text.splitlines() if isinstance(text, str) else list(text)
    order: list[str] = []
    seen: set[str] = set()
    pairs: list[tuple[str, str]] = []
    for lineno, raw in enumerate(lines, 1):
        line = _strip(raw)
        if not line:
            continue
        toks = line.split()
        if len(toks) > 2:
            raise ParseError(f"{name}:{lineno}: expected 'u v', got {raw.strip()!r}")
        for tok in toks:
            if tok not in seen:
                seen.add(tok)
                order.append(tok)
        if len(toks) == 2:
            pairs.append((toks[0], toks[1]))
    if all(tok.isdigit() for tok in order):
        order.sort(key=int)
    index = {tok: i for i, tok in enumerate(order)}
    return Graph(
        tuple(range(len(order))),
        tuple((index[a], index[b]) for a, b in pairs),
        {i: tok for tok, i in index.items()},
    )


def format_edge_list(g: Graph) -> str:
    """Edges in id order, then one declaration line per isolated vertex."""
    lines = [f"{g.label(u)} {g.label(v)}" for u, v in g.edges]
    touched = {x for e in g.edges for x in e}
    lines += [g.label(v) for v in g.vertices if v not in touched]
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# graph6
# ---------------------------------------------------------------------------

def _decode_n(data: bytes) -> tuple[int, int]:
    if data[0] != 126:
        return data[0] - 63, 1
    if data[1] != 126:
        n = 0
        for b in data[1:4]:
            n = (n << 6) | (b - 63)
        return n, 4
    n = 0
    for b in data[2:8]:
        n = (n << 6) | (b - 63)
    return n, 8


def parse_graph6(line: str) -> Graph:
    s = line.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise ParseError("empty graph6 string")
    data = s.encode("ascii")
    if any(b < 63 or b > 126 for b in data):
        raise ParseError(f"invalid graph6 character in {line.strip()!r}")
    n, off = _decode_n(data)
    bits_needed = n * (n - 1) // 2
    body = data[off:]
    if len(body) != -(-bits_needed // 6):
        raise ParseError(f"graph6 length mismatch for n = {n}")
    bits = []
    for b in body:
        v = b - 63
        bits.extend((v >> (5 - i)) & 1 for i in range(6))
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return Graph(tuple(range(n)), tuple(edges))


def to_graph6(g: Graph) -> str:
    if not g.is_simple():
        raise GraphError("graph6 encodes simple graphs only")
    n = g.n
    idx = {v: i for i, v in enumerate(g.vertices)}
    adj = {frozenset((idx[u], idx[v])) for u, v in g.edges}
    if n <= 62:
        head = [n + 63]
    elif n <= 258047:
        head = [126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)]
    else:
        head = [126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)]
    bits = [1 if frozenset((i, j)) in adj else 0 for j in range(1, n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    body = [sum(b << (5 - t) for t, b in enumerate(bits[i:i + 6])) + 63 for i in range(0, len(bits), 6)]
    return bytes(head + body).decode("ascii")


def looks_like_graph6(line: str) -> bool:
    s = line.strip()
    if s.startswith(">>graph6<<"):
        return True
    if not s or any(c.isspace() for c in s):
        return False
    try:
        parse_graph6(s)
    except (ParseError, IndexError):
        return False
    # single-token edge-list lines ("7") are vertex declarations, not graph6
    return not s.isdigit()


# ---------------------------------------------------------------------------
# files and corpora
# ---------------------------------------------------------------------------

def read_graph(path: str | Path) -> NamedGraph:
    """One graph per file: a lone graph6 line, or an edge list."""
    p = Path(path)
    try:
        text = p.read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {p}: {exc}") from exc
    content = [ln for ln in (_strip(x) for x in text.splitlines()) if ln]
    if len(content) == 1 and looks_like_graph6(content[0]):
        return NamedGraph(p.name, parse_graph6(content[0]), "graph6")
    return NamedGraph(p.name, parse_edge_list(text, p.name), "edgelist")


def read_corpus(path: str | Path) -> list[NamedGraph]:
    """Several graphs from one file.

    Either one graph6 string per line, or edge-list blocks each introduced by
    a header line ``> name``.  A file with neither is a single edge list.
    """
    p = Path(path)
    try:
        text = p.read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {p}: {exc}") from exc
    lines = text.splitlines()
    if any(ln.lstrip().startswith(">") and not ln.lstrip().startswith(">>graph6<<") for ln in lines):
        out: list[NamedGraph] = []
        name: str | None = None
        block: list[str] = []
        for ln in lines:
            st = ln.strip()
            if st.startswith(">") and not st.startswith(">>graph6<<"):
                if name is not None:
                    out.append(NamedGraph(name, parse_edge_list(block, name), "edgelist"))
                name = st[1:].strip() or f"{p.name}#{len(out) + 1}"
                block = []
            elif name is None:
                if _strip(st):
                    raise ParseError(f"{p}: content before the first '>' header")
            else:
                block.append(ln)
        if name is not None:
            out.append(NamedGraph(name, parse_edge_list(block, name), "edgelist"))
        return out
    content = [ln for ln in (_strip(x) for x in lines) if ln]
    if content and all(looks_like_graph6(ln) for ln in content):
        return [NamedGraph(f"{p.name}:{i + 1}", parse_graph6(ln), "graph6") for i, ln in enumerate(content)]
    return [NamedGraph(p.name, parse_edge_list(text, p.name), "edgelist")]
