"""Plain-text readers and writers.

Edge lists and rotation systems describe inputs; certificates describe outputs.
"""

from __future__ import annotations

from typing import Mapping

from .embedded import EmbeddedGraph
from .errors import FormatError
from .graph import Graph, KtModel, _norm


def _content_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append((no, line))
    return out


def _ints(tokens: list[str], no: int) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError as exc:
        raise FormatError(f"line {no}: expected integers, got {' '.join(tokens)!r}") from exc


# -- edge lists ---------------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    lines = _content_lines(text)
    if not lines:
        raise FormatError("empty edge list")
    no, header = lines[0]
    head = _ints(header.split(), no)
    if len(head) != 2 or min(head) < 0:
        raise FormatError(f"line {no}: header must be 'n m'")
    n, m = head
    if len(lines) - 1 != m:
        raise FormatError(f"header promises {m} edges, found {len(lines) - 1}")
    seen = set()
    for no, line in lines[1:]:
        pair = _ints(line.split(), no)
        if len(pair) != 2:
            raise FormatError(f"line {no}: expected 'u v'")
        u, v = pair
        if not (0 <= u < n and 0 <= v < n):
            raise FormatError(f"line {no}: vertex id out of range 0..{n - 1}")
        if u == v:
            raise FormatError(f"line {no}: self-loop at {u}")
        e = _norm(u, v)
        if e in seen:
            raise FormatError(f"line {no}: parallel edge {u}-{v}")
        seen.add(e)
    return Graph.from_edges(sorted(seen), n)


def format_edge_list(g: Graph) -> str:
    if g.vertices != tuple(range(g.n)):
        g, _ = g.relabeled()
    rows = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(rows) + "\n"


# -- embeddings ---------------------------------------------------------


def parse_embedding(text: str) -> EmbeddedGraph:
    lines = _content_lines(text)
    if not lines:
        raise FormatError("empty embedding file")
    no, header = lines[0]
    head = _ints(header.split(), no)
    if len(head) not in (2, 3):
        raise FormatError(f"line {no}: header must be 'n m' or 'n m g'")
    n, m = head[0], head[1]
    claimed = head[2] if len(head) == 3 else None
    rotation: dict[int, list[int]] = {}
    signs: dict[tuple[int, int], int] = {}
    for no, line in lines[1:]:
        if ":" not in line:
            raise FormatError(f"line {no}: expected 'v: u1 u2 ...'")
        left, right = line.split(":", 1)
        (v,) = _ints([left.strip()], no)
        if not 0 <= v < n:
            raise FormatError(f"line {no}: vertex id {v} out of range")
        if v in rotation:
            raise FormatError(f"line {no}: duplicate rotation for vertex {v}")
        order = []
        for tok in right.split():
            s = 1
            if tok[-1] in "+-":
                s = 1 if tok[-1] == "+" else -1
                tok = tok[:-1]
            (u,) = _ints([tok], no)
            e = _norm(u, v)
            if e in signs and signs[e] != s and u in rotation:
                raise FormatError(f"line {no}: sign of edge {u}-{v} disagrees between its ends")
            signs[e] = s
            order.append(u)
        rotation[v] = order
    for v in range(n):
        rotation.setdefault(v, [])
    adj: dict[int, set[int]] = {v: set(order) for v, order in rotation.items()}
    for v, order in rotation.items():
        if len(set(order)) != len(order):
            raise FormatError(f"vertex {v}: repeated neighbour in rotation")
        for u in order:
            if u == v or u not in adj or v not in adj[u]:
                raise FormatError(f"rotation not symmetric at edge {v}-{u}")
    g = Graph(adj)
    if g.m != m:
        raise FormatError(f"header promises {m} edges, rotation has {g.m}")
    try:
        emb = EmbeddedGraph(g, rotation, signs)
    except ValueError as exc:
        raise FormatError(str(exc)) from exc
    if claimed is not None and claimed != emb.genus:
        raise FormatError(f"header claims Euler genus {claimed}, tracing gives {emb.genus}")
    return emb


def format_embedding(e: EmbeddedGraph) -> str:
    rows = [f"{e.n} {e.m} {e.genus}"]
    for v in e.graph.vertices:
        toks = [f"{u}-" if e.sign(u, v) == -1 else str(u) for u in e.rotation[v]]
        rows.append(f"{v}: " + " ".join(toks))
    return "\n".join(rows) + "\n"


# -- certificates -------------------------------------------------------


def format_certificate(model: KtModel, meta: Mapping[str, object] | None = None) -> str:
    rows = [f"# {k} {v}" for k, v in (meta or {}).items()]
    rows.append(f"t {model.t} size {model.size}")
    rows += [" ".join(str(v) for v in sorted(b)) for b in model.branch_sets]
    return "\n".join(rows) + "\n"


def parse_certificate(text: str) -> tuple[KtModel, dict[str, str]]:
    """The model plus any ``# key value`` metadata lines."""
    meta = {}
    for raw in text.splitlines():
        raw = raw.strip()
        if raw.startswith("#"):
            parts = raw[1:].split(None, 1)
            if len(parts) == 2:
                meta[parts[0]] = parts[1].strip()
    lines = _content_lines(text)
    if not lines:
        raise FormatError("empty certificate")
    no, header = lines[0]
    toks = header.split()
    if len(toks) != 4 or toks[0] != "t" or toks[2] != "size":
        raise FormatError(f"line {no}: header must be 't <t> size <size>'")
    t, size = _ints([toks[1], toks[3]], no)
    sets = [_ints(line.split(), no) for no, line in lines[1:]]
    if len(sets) != t:
        raise FormatError(f"header promises {t} branch sets, found {len(sets)}")
    model = KtModel(sets)
    if sum(len(s) for s in sets) != size:
        raise FormatError(f"header promises size {size}, branch sets hold {sum(len(s) for s in sets)}")
    return model, meta
