"""Extremal graphs and embeddings: squares of cycles, the snub dodecahedron,
the planar (4+eps) gadget, one-face surface graphs, toroidal grids and
high-girth regular graphs.

Plane embeddings of abstract planar graphs come from networkx's planarity
test; every other rotation system is written down or found by a small
corner search and then checked by face tracing.
"""

from __future__ import annotations

import itertools
import math
import random
from fractions import Fraction
from typing import Sequence

import networkx as nx

from .embedded import EmbeddedGraph
from .errors import InvariantError, PreconditionError
from .graph import Graph


def _graph(h: nx.Graph) -> Graph:
    return Graph.from_edges(list(h.edges()), list(h.nodes()))


def plane_embedding(h: nx.Graph) -> EmbeddedGraph:
    """Embed a planar networkx graph using its planarity certificate."""
    ok, cert = nx.check_planarity(h)
    if not ok:
        raise PreconditionError("graph is not planar")
    rotation = {v: list(cert.neighbors_cw_order(v)) for v in cert.nodes()}
    e = EmbeddedGraph(_graph(h), rotation)
    if e.genus != 0:
        raise InvariantError("planarity certificate did not give a plane embedding")
    return e


def _with_edge(rotation: dict[int, list[int]], u: int, v: int, i: int, j: int) -> dict[int, list[int]]:
    rot = {x: list(o) for x, o in rotation.items()}
    rot[u].insert(i, v)
    rot[v].insert(j, u)
    return rot


def _embed(edges, rotation) -> EmbeddedGraph:
    return EmbeddedGraph(Graph.from_edges(edges, list(rotation)), rotation)


# ---------------------------------------------------------------------------
# squares of cycles
# ---------------------------------------------------------------------------


def _cycle_square_nx(n2: int) -> nx.Graph:
    h = nx.Graph()
    for i in range(n2):
        h.add_edge(i, (i + 1) % n2)
        h.add_edge(i, (i + 2) % n2)
    return h


def cycle_square(n2: int) -> EmbeddedGraph:
    """C^2_{2n}: the 4-regular plane square of an even cycle (2n >= 8)."""
    if n2 % 2 or n2 < 8:
        raise PreconditionError("cycle_square needs an even length 2n >= 8")
    return plane_embedding(_cycle_square_nx(n2))


def cycle_square_plus_matching(n2: int) -> EmbeddedGraph:
    """C^2_{2n} plus the antipodal matching, one handle per matching edge.

    Each matching edge is inserted into the pair of corners that merges
    two faces and leaves the shortest facial walk at a vertex longest.
    """
    if n2 % 2 or n2 < 8:
        raise PreconditionError("cycle_square_plus_matching needs an even length 2n >= 8")
    n = n2 // 2
    base = cycle_square(n2)
    edges = list(base.graph.edges())
    rot = {v: list(o) for v, o in base.rotation.items()}
    for u in range(n):
        v = u + n
        best = None
        for i in range(len(rot[u])):
            for j in range(len(rot[v])):
                trial = _with_edge(rot, u, v, i, j)
                e = _embed(edges + [(u, v)], trial)
                reach = min(max(len(f) for f in e.faces_at(x)) for x in e.graph.vertices)
                key = (e.genus, reach, len(max(e.faces, key=len)))
                if best is None or key > best[0]:
                    best = (key, trial)
        rot = best[1]
        edges.append((u, v))
    e = _embed(edges, rot)
    if e.genus != n2 or any(max(len(f) for f in e.faces_at(x)) < n for x in e.graph.vertices):
        raise InvariantError("matching insertion missed the long-facial-walk property")
    return e


def surface_one_face_degree4(g: int, k: int) -> EmbeddedGraph:
    """2g vertices of degree 5, 2gk of degree 4, Euler genus g, every vertex on one face.

    Starts from the plane C^2_N, N = 2g(k+1), and adds g/2 handle gadgets:
    chords (s, s+3) and (s+1, s-2) for s = 0, 4(k+1), 8(k+1), ...; each
    gadget's four corners are chosen by exhaustive search so that one face
    keeps every vertex.
    """
    if k < 0:
        raise PreconditionError("k must be non-negative")
    if g < 2 or g % 2:
        raise PreconditionError("g must be a positive even integer")
    N = 2 * g * (k + 1)
    if N < 8:
        raise PreconditionError("need 2g(k+1) >= 8")
    base = cycle_square(N)
    edges = list(base.graph.edges())
    rot = {v: list(o) for v, o in base.rotation.items()}
    for j in range(g // 2):
        s = j * 4 * (k + 1)
        c1 = (s, (s + 3) % N)
        c2 = ((s + 1) % N, (s - 2) % N)
        rot = _handle_gadget(edges, rot, c1, c2, 2 * (j + 1), N)
        edges += [c1, c2]
    e = _embed(edges, rot)
    if e.genus != g or not any(len(f.vertex_set) == N for f in e.faces):
        raise InvariantError("one-face construction failed")
    return e


def _handle_gadget(edges, rot, c1, c2, genus: int, N: int):
    for i in range(len(rot[c1[0]])):
        for j in range(len(rot[c1[1]])):
            r1 = _with_edge(rot, *c1, i, j)
            for i2 in range(len(r1[c2[0]])):
                for j2 in range(len(r1[c2[1]])):
                    r2 = _with_edge(r1, *c2, i2, j2)
                    e = _embed(edges + [c1, c2], r2)
                    if e.genus == genus and any(len(f.vertex_set) == N for f in e.faces):
                        return r2
    raise InvariantError("no corner choice realises the handle gadget")


# ---------------------------------------------------------------------------
# snub dodecahedron
# ---------------------------------------------------------------------------


def _compose(p: Sequence[int], q: Sequence[int]) -> tuple[int, ...]:
    """p then q."""
    return tuple(q[p[i]] for i in range(len(p)))


def _order(p: tuple[int, ...]) -> int:
    ident = tuple(range(len(p)))
    x, k = p, 1
    while x != ident:
        x, k = _compose(x, p), k + 1
    return k


def _is_even(p: tuple[int, ...]) -> bool:
    inv = sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j])
    return inv % 2 == 0


def snub_dodecahedron() -> EmbeddedGraph:
    """Cayley graph of A5 for generators a (order 5), b (order 3) with ab of order 2."""
    group = [p for p in itertools.permutations(range(5)) if _is_even(p)]
    a = (1, 2, 3, 4, 0)
    for b in group:
        if _order(b) != 3 or _order(_compose(a, b)) != 2:
            continue
        ab = _compose(a, b)
        h = nx.Graph()
        for x in group:
            for s in (a, b, ab):
                h.add_edge(x, _compose(x, s))
        if h.number_of_edges() != 150 or not nx.check_planarity(h)[0]:
            continue
        index = {p: i for i, p in enumerate(sorted(group))}
        e = plane_embedding(nx.relabel_nodes(h, index))
        lengths = sorted(len(f) for f in e.faces)
        if lengths == [3] * 80 + [5] * 12:
            return e
    raise InvariantError("no generator pair produced the snub dodecahedron")


# ---------------------------------------------------------------------------
# planar (4 + eps) gadget
# ---------------------------------------------------------------------------


def dodecahedron() -> EmbeddedGraph:
    return plane_embedding(nx.dodecahedral_graph())


def planar_4plus_eps_gadget(k: int, base: EmbeddedGraph | None = None) -> EmbeddedGraph:
    """Replace each vertex of a cubic plane graph by a triangle and each edge by
    2k vertices (a strip that is the square of a path); average degree 4 + 1/(k+1)."""
    if k < 0:
        raise PreconditionError("k must be non-negative")
    base = base or dodecahedron()
    H = base.graph
    if any(H.degree(v) != 3 for v in H.vertices):
        raise PreconditionError("base graph must be cubic")
    if base.genus != 0 or base.min_face_length() < 5:
        raise PreconditionError("base must be a plane graph with all faces of length >= 5")
    corner: dict[tuple[int, int], int] = {}  # (x, j) -> id of the corner after rotation slot j
    nxt = 0
    for x in H.vertices:
        for j in range(3):
            corner[(x, j)] = nxt
            nxt += 1
    h = nx.Graph()
    for x in H.vertices:
        h.add_edges_from([(corner[(x, 0)], corner[(x, 1)]), (corner[(x, 1)], corner[(x, 2)]), (corner[(x, 2)], corner[(x, 0)])])
    for x, y in H.edges():
        i = base.rotation[x].index(y)
        j = base.rotation[y].index(x)
        path = [corner[(x, (i - 1) % 3)], corner[(x, i)]]
        for _ in range(2 * k):
            path.append(nxt)
            nxt += 1
        path += [corner[(y, j)], corner[(y, (j - 1) % 3)]]
        for a in range(len(path) - 1):
            h.add_edge(path[a], path[a + 1])
            if a + 2 < len(path):
                h.add_edge(path[a], path[a + 2])
    if not nx.check_planarity(h)[0]:
        raise InvariantError("gadget is not planar")
    return plane_embedding(h)


# ---------------------------------------------------------------------------
# surfaces
# ---------------------------------------------------------------------------


def genus_bouquet(g: int, k: int) -> EmbeddedGraph:
    """g cycles of length k+1 sharing one vertex, with a single face (Euler genus g)."""
    if g < 2 or g % 2:
        raise PreconditionError("g must be a positive even integer")
    if k < 2:
        raise PreconditionError("k >= 2 needed for a simple graph")
    edges = []
    first, last = [], []
    nxt = 1
    rot: dict[int, list[int]] = {}
    for _ in range(g):
        cyc = list(range(nxt, nxt + k))
        nxt += k
        first.append(cyc[0])
        last.append(cyc[-1])
        edges.append((0, cyc[0]))
        edges.append((cyc[-1], 0))
        for a, b in zip(cyc, cyc[1:]):
            edges.append((a, b))
        for i, v in enumerate(cyc):
            rot[v] = [cyc[i - 1] if i else 0, cyc[i + 1] if i + 1 < k else 0]
    center = []
    for p in range(0, g, 2):
        center += [first[p], first[p + 1], last[p], last[p + 1]]
    rot[0] = center
    e = _embed(edges, rot)
    if len(e.faces) != 1 or e.genus != g:
        raise InvariantError("bouquet rotation does not give a single face")
    return e


def toroidal_grid(n: int) -> EmbeddedGraph:
    """6-regular n x 3 triangulated grid on the torus."""
    if n < 3:
        raise PreconditionError("toroidal_grid needs n >= 3 columns")

    def vid(i: int, j: int) -> int:
        return 3 * (i % n) + (j % 3)

    rot = {}
    edges = set()
    for i in range(n):
        for j in range(3):
            v = vid(i, j)
            # E, NE, N, W, SW, S counter-clockwise
            rot[v] = [vid(i + 1, j), vid(i + 1, j + 1), vid(i, j + 1), vid(i - 1, j), vid(i - 1, j - 1), vid(i, j - 1)]
            for u in rot[v]:
                edges.add((min(u, v), max(u, v)))
    e = _embed(sorted(edges), rot)
    if e.genus != 2 or any(len(f) != 3 for f in e.faces):
        raise InvariantError("toroidal grid embedding is not a torus triangulation")
    return e


# ---------------------------------------------------------------------------
# high girth
# ---------------------------------------------------------------------------


def _short_cycle_edge(h: nx.Graph, target: int, order: list) -> tuple | None:
    """An edge on some cycle shorter than ``target``, or None."""
    for root in order:
        depth = {root: 0}
        parent = {root: None}
        frontier = [root]
        while frontier:
            nxt = []
            for x in frontier:
                if 2 * depth[x] + 1 >= target:
                    nxt = []
                    break
                for y in h.neighbors(x):
                    if y not in depth:
                        depth[y] = depth[x] + 1
                        parent[y] = x
                        nxt.append(y)
                    elif parent[x] != y and depth[x] + depth[y] + 1 < target:
                        return (x, y)
            frontier = nxt
    return None


def _distance_at_least(h: nx.Graph, a, b, limit: int) -> bool:
    try:
        return nx.shortest_path_length(h, a, b) >= limit
    except nx.NetworkXNoPath:
        return True


def high_girth_regular(
    n: int, d: int, girth_target: int, seed: int = 0, budget: int = 2000, restarts: int = 100
) -> Graph:
    """d-regular graph on n vertices with girth >= girth_target.

    Random regular start, then swaps: an edge ab on a short cycle and a
    random edge cd become ac and bd when that creates no new short cycle.
    After ``budget`` swap rounds without success the search restarts from
    a fresh random graph.
    """
    if d < 3:
        raise PreconditionError("d >= 3 required")
    if n * d % 2 or n <= d:
        raise PreconditionError("n d must be even and n > d")
    for attempt in range(restarts):
        found = _swap_search(n, d, girth_target, seed + attempt * 7919, min(budget, 20 * n))
        if found is not None:
            return found
    raise PreconditionError(f"girth target {girth_target} not reached within the swap budget")


def _swap_search(n: int, d: int, girth_target: int, seed: int, budget: int) -> Graph | None:
    rng = random.Random(seed)
    h = nx.random_regular_graph(d, n, seed=seed)
    order = sorted(h.nodes())
    for _ in range(budget):
        bad = _short_cycle_edge(h, girth_target, order)
        if bad is None:
            return _graph(h)
        a, b = bad
        edges = list(h.edges())
        for _ in range(200):
            c, dd = rng.choice(edges)
            if rng.random() < 0.5:
                c, dd = dd, c
            if len({a, b, c, dd}) < 4 or h.has_edge(a, c) or h.has_edge(b, dd):
                continue
            h.remove_edge(a, b)
            h.remove_edge(c, dd)
            if _distance_at_least(h, a, c, girth_target - 1) and _distance_at_least(h, b, dd, girth_target - 1):
                h.add_edge(a, c)
                h.add_edge(b, dd)
                break
            h.add_edge(a, b)
            h.add_edge(c, dd)
    return None


def random_graph(n: int, avg_degree, seed: int = 0) -> Graph:
    """G(n, m) with m = ceil(avg_degree * n / 2), so the average degree is at least ``avg_degree``."""
    m = math.ceil(Fraction(avg_degree) * n / 2)
    if m > n * (n - 1) // 2:
        raise PreconditionError("average degree too large for n vertices")
    return _graph(nx.gnm_random_graph(n, m, seed=seed))
