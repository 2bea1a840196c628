"""Core graph type, traversal, connectivity and K_t-model validation."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import PreconditionError

Edge = tuple[int, int]


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Graph:
    """Immutable simple undirected graph.

    Vertices are arbitrary non-negative integer ids that survive taking
    subgraphs, so a model found in a subgraph is a model in the parent.
    """

    __slots__ = ("_adj", "_sets", "_m", "_vertices")

    def __init__(self, adjacency: Mapping[int, Iterable[int]]):
        sets: dict[int, set[int]] = {v: set(nbrs) for v, nbrs in adjacency.items()}
        total = 0
        for v, nbrs in sets.items():
            if v in nbrs:
                raise ValueError(f"self-loop at vertex {v}")
            for u in nbrs:
                if u not in sets:
                    raise ValueError(f"edge {v}-{u} leaves the vertex set")
                if v not in sets[u]:
                    raise ValueError(f"adjacency not symmetric at {v}-{u}")
            total += len(nbrs)
        self._adj = {v: tuple(sorted(sets[v])) for v in sorted(sets)}
        self._sets = {v: frozenset(s) for v, s in sets.items()}
        self._m = total // 2
        self._vertices = tuple(self._adj)

    @classmethod
    def _trusted(cls, adj: Mapping[int, Iterable[int]]) -> "Graph":
        g = cls.__new__(cls)
        g._adj = {v: tuple(sorted(adj[v])) for v in sorted(adj)}
        g._sets = {v: frozenset(n) for v, n in g._adj.items()}
        g._m = sum(len(n) for n in g._adj.values()) // 2
        g._vertices = tuple(g._adj)
        return g

    @classmethod
    def from_edges(cls, edges: Iterable[Sequence[int]], vertices: Iterable[int] | int | None = None) -> "Graph":
        """Build from an edge iterable; ``vertices`` may be a count (ids 0..n-1) or an id set."""
        adj: dict[int, set[int]] = {}
        if isinstance(vertices, int):
            vertices = range(vertices)
        for v in vertices or ():
            adj.setdefault(v, set())
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj.setdefault(u, set()).add(v)
            adj.setdefault(v, set()).add(u)
        return cls._trusted(adj)

    # -- basic queries -------------------------------------------------

    @property
    def n(self) -> int:
        return len(self._vertices)

    @property
    def m(self) -> int:
        return self._m

    @property
    def vertices(self) -> tuple[int, ...]:
        return self._vertices

    def __len__(self) -> int:
        return len(self._vertices)

    def __contains__(self, v: object) -> bool:
        return v in self._adj

    def __iter__(self) -> Iterator[int]:
        return iter(self._vertices)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self._adj == other._adj

    def __hash__(self) -> int:
        return hash(tuple(self._adj.items()))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def neighbor_set(self, v: int) -> frozenset[int]:
        return self._sets[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return u in self._sets and v in self._sets[u]

    def edges(self) -> list[Edge]:
        return [(u, v) for u in self._vertices for v in self._adj[u] if u < v]

    def min_degree(self) -> int:
        return min((len(n) for n in self._adj.values()), default=0)

    def max_degree(self) -> int:
        return max((len(n) for n in self._adj.values()), default=0)

    def adjacency_sets(self) -> dict[int, set[int]]:
        """Fresh mutable copy of the adjacency."""
        return {v: set(n) for v, n in self._adj.items()}

    def edges_within(self, vertices: Iterable[int]) -> int:
        s = vertices if isinstance(vertices, (set, frozenset)) else set(vertices)
        return sum(1 for v in s for u in self._adj[v] if u in s) // 2

    # -- derived graphs ------------------------------------------------

    def subgraph(self, vertices: Iterable[int]) -> "Graph":
        keep = set(vertices)
        missing = keep - self._sets.keys()
        if missing:
            raise ValueError(f"vertices {sorted(missing)[:5]} not in graph")
        return Graph._trusted({v: [u for u in self._adj[v] if u in keep] for v in keep})

    def remove_vertices(self, vertices: Iterable[int]) -> "Graph":
        drop = set(vertices)
        return self.subgraph(v for v in self._vertices if v not in drop)

    def remove_edges(self, edges: Iterable[Sequence[int]]) -> "Graph":
        drop = {_norm(u, v) for u, v in edges}
        return Graph._trusted(
            {v: [u for u in self._adj[v] if _norm(u, v) not in drop] for v in self._vertices}
        )

    def add_edges(self, edges: Iterable[Sequence[int]]) -> "Graph":
        adj = self.adjacency_sets()
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u].add(v)
            adj[v].add(u)
        return Graph._trusted(adj)

    def relabeled(self) -> tuple["Graph", dict[int, int]]:
        """Copy with ids 0..n-1 in sorted order, plus the old->new map."""
        index = {v: i for i, v in enumerate(self._vertices)}
        return Graph._trusted({index[v]: [index[u] for u in self._adj[v]] for v in self._vertices}), index

    # -- connectivity --------------------------------------------------

    def components(self, removed: Iterable[int] = ()) -> list[list[int]]:
        """Connected components (sorted lists, ordered by smallest id), ignoring ``removed``."""
        seen = set(removed)
        comps = []
        for s in self._vertices:
            if s in seen:
                continue
            seen.add(s)
            comp = [s]
            queue = deque([s])
            while queue:
                x = queue.popleft()
                for y in self._adj[x]:
                    if y not in seen:
                        seen.add(y)
                        comp.append(y)
                        queue.append(y)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) <= 1


# ---------------------------------------------------------------------------
# Domain types
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class KtModel:
    """``t`` branch sets; valid iff disjoint, each connected, pairwise adjacent."""

    branch_sets: tuple[frozenset[int], ...]

    def __init__(self, branch_sets: Iterable[Iterable[int]]):
        sets = tuple(frozenset(b) for b in branch_sets)
        if len(sets) < 2:
            raise ValueError("a K_t-model needs t >= 2 branch sets")
        object.__setattr__(self, "branch_sets", sets)

    @property
    def t(self) -> int:
        return len(self.branch_sets)

    @property
    def size(self) -> int:
        return sum(len(b) for b in self.branch_sets)

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset().union(*self.branch_sets)

    def canonical(self) -> "KtModel":
        return KtModel(sorted(self.branch_sets, key=min))

    def __repr__(self) -> str:
        inner = ", ".join("{" + ",".join(map(str, sorted(b))) + "}" for b in self.branch_sets)
        return f"K{self.t}Model({inner})"


@dataclass
class BfsTree:
    roots: tuple[int, ...]
    parent: dict[int, int | None]
    depth: dict[int, int]
    order: list[int] = field(default_factory=list)

    @property
    def max_depth(self) -> int:
        return max(self.depth.values(), default=0)

    def depth_of_edge(self, u: int, v: int) -> int:
        return min(self.depth[u], self.depth[v])

    def is_tree_edge(self, u: int, v: int) -> bool:
        if self.parent.get(u) == v or self.parent.get(v) == u:
            return True
        return len(self.roots) == 2 and {u, v} == set(self.roots)

    def path_to_root(self, v: int) -> list[int]:
        path = [v]
        while self.parent[path[-1]] is not None:
            path.append(self.parent[path[-1]])
        return path

    def is_ancestor(self, a: int, b: int) -> bool:
        """True if ``a`` lies on the tree path from ``b`` to its root (a != b)."""
        if a == b or self.depth[a] >= self.depth[b]:
            return False
        x = b
        while self.depth[x] > self.depth[a]:
            x = self.parent[x]
        return x == a

    def tree_edges(self) -> list[Edge]:
        edges = [_norm(v, p) for v, p in self.parent.items() if p is not None]
        if len(self.roots) == 2:
            edges.append(_norm(*self.roots))
        return edges


@dataclass(frozen=True)
class Separation:
    side1: frozenset[int]
    side2: frozenset[int]

    @property
    def cut(self) -> frozenset[int]:
        return self.side1 & self.side2

    @property
    def order(self) -> int:
        return len(self.cut)


# ---------------------------------------------------------------------------
# Operations
# ---------------------------------------------------------------------------


def average_degree(g: Graph) -> Fraction:
    if g.n == 0:
        raise PreconditionError("empty graph has no average degree")
    return Fraction(2 * g.m, g.n)


def bfs_tree(g: Graph, roots: int | Sequence[int]) -> BfsTree:
    """Shortest-path tree from one vertex or from two adjacent vertices."""
    if isinstance(roots, int):
        roots = (roots,)
    roots = tuple(roots)
    if not 1 <= len(roots) <= 2 or any(r not in g for r in roots):
        raise ValueError(f"bad BFS roots {roots}")
    if len(roots) == 2 and not g.has_edge(*roots):
        raise ValueError("two BFS roots must be adjacent")
    parent: dict[int, int | None] = {r: None for r in roots}
    depth = {r: 0 for r in roots}
    order = list(roots)
    queue = deque(roots)
    while queue:
        x = queue.popleft()
        for y in g.neighbors(x):
            if y not in depth:
                depth[y] = depth[x] + 1
                parent[y] = x
                order.append(y)
                queue.append(y)
    return BfsTree(roots, parent, depth, order)


def distances(g: Graph, sources: Iterable[int], limit: int | None = None) -> dict[int, int]:
    dist = {s: 0 for s in sources}
    queue = deque(dist)
    while queue:
        x = queue.popleft()
        if limit is not None and dist[x] >= limit:
            continue
        for y in g.neighbors(x):
            if y not in dist:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def ball(g: Graph, v: int, k: int) -> frozenset[int]:
    if v not in g:
        raise ValueError(f"vertex {v} not in graph")
    return frozenset(distances(g, [v], limit=k))


def eccentricity_diameter(g: Graph) -> int:
    """Exact diameter by BFS from every vertex; raises on disconnected input."""
    best = 0
    for v in g:
        dist = distances(g, [v])
        if len(dist) != g.n:
            raise PreconditionError("disconnected graph has infinite diameter")
        best = max(best, max(dist.values()))
    return best


def fundamental_cycle(tree: BfsTree, e: Sequence[int]) -> list[int]:
    """The cycle of tree + e, as a vertex sequence starting at e[0]."""
    a, b = e
    if tree.is_tree_edge(a, b):
        raise ValueError(f"{a}-{b} is a tree edge")
    up_a, up_b = [a], [b]
    x, y = a, b
    while tree.depth[x] > tree.depth[y]:
        x = tree.parent[x]
        up_a.append(x)
    while tree.depth[y] > tree.depth[x]:
        y = tree.parent[y]
        up_b.append(y)
    while x != y and tree.parent[x] is not None:
        x, y = tree.parent[x], tree.parent[y]
        up_a.append(x)
        up_b.append(y)
    if x == y:
        up_b.pop()
    # distinct roots of a two-root tree are joined by the root edge
    return up_a + up_b[::-1]


def validate_model(g: Graph, model: KtModel) -> str | None:
    """None if ``model`` is a K_t-model of ``g``, else the failed clause."""
    for i, bs in enumerate(model.branch_sets):
        for v in bs:
            if v not in g:
                raise ValueError(f"vertex {v} of set {i} is not in the graph")
    sets = model.branch_sets
    for i, bs in enumerate(sets):
        if not bs:
            return f"set {i} is empty"
    owner: dict[int, int] = {}
    for i, bs in enumerate(sets):
        for v in bs:
            if v in owner:
                return f"sets {owner[v]},{i} overlap at vertex {v}"
            owner[v] = i
    for i, bs in enumerate(sets):
        start = next(iter(bs))
        seen = {start}
        stack = [start]
        while stack:
            x = stack.pop()
            for y in g.neighbors(x):
                if y in bs and y not in seen:
                    seen.add(y)
                    stack.append(y)
        if len(seen) != len(bs):
            return f"set {i} does not induce a connected subgraph"
    touching: set[tuple[int, int]] = set()
    for v, i in owner.items():
        for u in g.neighbors(v):
            j = owner.get(u)
            if j is not None and j != i:
                touching.add((min(i, j), max(i, j)))
    for i, j in combinations(range(len(sets)), 2):
        if (i, j) not in touching:
            return f"sets {i},{j} not adjacent"
    return None


def cycle_to_k3_model(cycle: Sequence[int]) -> KtModel:
    """Split a cycle (length >= 3) into three consecutive arcs."""
    L = len(cycle)
    if L < 3:
        raise ValueError("a cycle has at least 3 vertices")
    a, b = L // 3, 2 * L // 3
    return KtModel([cycle[:a] or cycle[:1], cycle[a:b], cycle[b:]])


def _require_connected(g: Graph) -> None:
    if not g.is_connected():
        raise PreconditionError("disconnected graph")


def _articulation_points(g: Graph, removed: int | None = None) -> set[int]:
    """Articulation points of g - removed (iterative Hopcroft-Tarjan lowpoint)."""
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    cuts: set[int] = set()
    if removed is not None:
        disc[removed] = -1
    counter = 0
    for root in g:
        if root in disc:
            continue
        disc[root] = low[root] = counter
        counter += 1
        children = 0
        stack = [(root, None, iter(g.neighbors(root)))]
        while stack:
            v, par, it = stack[-1]
            advanced = False
            for w in it:
                if w == removed or w == par:
                    continue
                if w in disc:
                    low[v] = min(low[v], disc[w])
                else:
                    disc[w] = low[w] = counter
                    counter += 1
                    stack.append((w, v, iter(g.neighbors(w))))
                    advanced = True
                    break
            if advanced:
                continue
            stack.pop()
            if par is not None:
                low[par] = min(low[par], low[v])
                if par == root:
                    children += 1
                elif low[v] >= disc[par]:
                    cuts.add(par)
        if children >= 2:
            cuts.add(root)
    return cuts


def cut_vertices(g: Graph) -> set[int]:
    _require_connected(g)
    return _articulation_points(g)


def cut_pairs(g: Graph) -> list[Edge]:
    """All pairs {v, w} whose deletion disconnects g, as sorted tuples.

    Pairs containing a cut vertex count as well (deleting both still
    disconnects unless the rest is a single vertex).
    """
    _require_connected(g)
    pairs = set()
    for v in g:
        for w in _articulation_points(g, removed=v):
            pairs.add(_norm(v, w))
    # a cut vertex v together with any w leaves g - {v,w} disconnected
    # whenever some other component survives the removal of w
    for v in _articulation_points(g):
        for w in g:
            if w != v and _norm(v, w) not in pairs and len(g.components([v, w])) > 1:
                pairs.add(_norm(v, w))
    return sorted(pairs)


def separations(g: Graph, cut: Iterable[int]) -> list[Separation]:
    """One separation per component C of g - cut: (C + cut, V - C)."""
    cut = frozenset(cut)
    everything = frozenset(g.vertices)
    out = []
    for comp in g.components(cut):
        c = frozenset(comp)
        if everything - c - cut:
            out.append(Separation(c | cut, everything - c))
    return out


def series_parallel_reduce(adj: dict[int, set[int]]) -> dict[int, set[int]]:
    """Delete degree<=1 vertices and suppress degree-2 ones until stuck (in place)."""
    stack = [v for v in adj if len(adj[v]) <= 2]
    while stack:
        v = stack.pop()
        if v not in adj or len(adj[v]) > 2:
            continue
        nbrs = adj.pop(v)
        for u in nbrs:
            adj[u].discard(v)
        if len(nbrs) == 2:
            a, b = nbrs
            adj[a].add(b)
            adj[b].add(a)
        for u in nbrs:
            if len(adj[u]) <= 2:
                stack.append(u)
    return adj


def has_k4_minor(g: Graph | Mapping[int, Iterable[int]]) -> bool:
    if isinstance(g, Graph):
        if g.n >= 4 and g.m > 2 * g.n - 3:
            return True
        adj = g.adjacency_sets()
    else:
        adj = {v: set(n) for v, n in g.items()}
    return bool(series_parallel_reduce(adj))
