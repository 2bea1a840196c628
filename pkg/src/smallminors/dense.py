"""Small K3/K4/Kt-models in dense graphs.

All finders share one skeleton: extract a dense subgraph of logarithmic
diameter by ball growing, then build the model from BFS trees inside it.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable

from . import bounds
from .errors import InvariantError, PreconditionError
from .graph import (
    Graph,
    KtModel,
    average_degree,
    bfs_tree,
    eccentricity_diameter,
    fundamental_cycle,
    series_parallel_reduce,
    validate_model,
)

# ---------------------------------------------------------------------------
# helpers
# ---------------------------------------------------------------------------


def _fraction(eps) -> Fraction:
    eps = Fraction(eps)
    if eps <= 0:
        raise PreconditionError(f"eps must be positive, got {eps}")
    return eps


def _require_density(g: Graph, threshold: Fraction, label: str) -> Fraction:
    if g.n == 0:
        raise PreconditionError("insufficient density: empty graph")
    avg = average_degree(g)
    if avg < threshold:
        raise PreconditionError(f"insufficient density: average degree {avg} < {label} = {threshold}")
    return avg


def _check(g: Graph, model: KtModel) -> KtModel:
    problem = validate_model(g, model)
    if problem is not None:
        raise InvariantError(f"emitted an invalid model: {problem}")
    return model.canonical()


def _check_size(model: KtModel, limit: float, what: str) -> KtModel:
    if model.size > limit + bounds.SLACK:
        raise InvariantError(f"theorem breach: {what} model has {model.size} vertices > {limit:.3f}")
    return model


def densest_component(g: Graph) -> Graph:
    """Component maximising m/n; ties go to the component with the lowest vertex."""
    best, best_ratio = None, None
    for comp in g.components():
        ratio = Fraction(g.edges_within(comp), len(comp))
        if best_ratio is None or ratio > best_ratio:
            best, best_ratio = comp, ratio
    return g.subgraph(best)


# ---------------------------------------------------------------------------
# certificate -> model
# ---------------------------------------------------------------------------


def _has_cycle(adj: dict[int, set[int]]) -> bool:
    adj = {v: set(n) for v, n in adj.items()}
    stack = [v for v in adj if len(adj[v]) <= 1]
    while stack:
        v = stack.pop()
        if v not in adj:
            continue
        for u in adj.pop(v):
            adj[u].discard(v)
            if len(adj[u]) <= 1:
                stack.append(u)
    return bool(adj)


def _minor_test(t: int):
    if t == 2:
        return lambda adj: any(adj.values())
    if t == 3:
        return _has_cycle
    if t == 4:
        return lambda adj: bool(series_parallel_reduce({v: set(n) for v, n in adj.items()}))
    raise ValueError("no polynomial minor test for t >= 5")


def _deleted(adj: dict[int, set[int]], v: int) -> dict[int, set[int]]:
    out = {u: n - {v} for u, n in adj.items() if u != v}
    return out


def _contracted(adj: dict[int, set[int]], keep: int, gone: int) -> dict[int, set[int]]:
    out = {u: set(n) for u, n in adj.items() if u != gone}
    for x in adj[gone]:
        if x != keep:
            out[x].discard(gone)
            out[x].add(keep)
            out[keep].add(x)
    out[keep].discard(gone)
    return out


def _reduce_to_model(adj: dict[int, set[int]], t: int) -> KtModel:
    """Delete/contract while a K_t-minor survives; stops at K_t itself."""
    test = _minor_test(t)
    if not test(adj):
        raise InvariantError("certificate invalid: no K%d-minor in the certificate" % t)
    bags = {v: {v} for v in adj}
    while len(adj) > t:
        for v in sorted(adj):
            trial = _deleted(adj, v)
            if test(trial):
                adj = trial
                del bags[v]
                break
        else:
            for u in sorted(adj):
                done = False
                for w in sorted(adj[u]):
                    if u < w:
                        trial = _contracted(adj, u, w)
                        if test(trial):
                            adj = trial
                            bags[u] |= bags.pop(w)
                            done = True
                            break
                if done:
                    break
            else:
                raise InvariantError("minor reduction stalled")
    return KtModel(sorted(bags.values(), key=min))


def extract_model_from_certificate(g: Graph, cert: Iterable[int], t: int) -> KtModel:
    """A K_t-model of ``g`` with every branch vertex inside ``cert``."""
    cert = set(cert)
    sub = g.subgraph(cert)
    if t <= 4:
        model = _reduce_to_model(sub.adjacency_sets(), t)
    else:
        from .oracle import min_kt_model

        if len(cert) > 16:
            raise ValueError("exhaustive extraction for t >= 5 is limited to 16 certificate vertices")
        found = min_kt_model(sub, t, size_cap=len(cert))
        if found is None:
            raise InvariantError(f"certificate invalid: no K{t}-minor in the certificate")
        model = found[1]
    return _check(g, model)


# ---------------------------------------------------------------------------
# dense low-diameter subgraph
# ---------------------------------------------------------------------------


@dataclass
class DenseSubgraphResult:
    vertices: frozenset[int]
    graph: Graph
    average_degree: Fraction
    center: int
    radius: int
    balls_grown: int = 0
    recursions: int = 0
    trace: list[tuple[int, int, int]] = field(default_factory=list)

    @cached_property
    def diameter(self) -> int:
        return eccentricity_diameter(self.graph)


def dense_low_diameter_subgraph(g: Graph, d, d_prime) -> DenseSubgraphResult:
    """Connected subgraph of average degree >= d' and diameter <= p(d, d') log2 |g|.

    Grows balls around the lowest remaining vertex until the growth ratio
    drops below d/d'. If that ball is too sparse, the inner ball is
    discarded; what remains still has average degree >= d.
    """
    d, d_prime = Fraction(d), Fraction(d_prime)
    if not d > d_prime >= 2:
        raise PreconditionError(f"insufficient density: need d > d' >= 2 (d={d}, d'={d_prime})")
    _require_density(g, d, "d")
    alive = set(g.vertices)
    order = list(g.vertices)
    cursor = 0
    n_cur, m_cur = g.n, g.m
    balls = recursions = 0
    trace = []
    while True:
        while order[cursor] not in alive:
            cursor += 1
        v = order[cursor]
        inner = {v}
        frontier = [v]
        k = 0
        while True:
            k += 1
            balls += 1
            layer = set()
            for x in frontier:
                for y in g.neighbors(x):
                    if y in alive and y not in inner:
                        layer.add(y)
            # |B_k| < beta |B_{k-1}|  <=>  |B_k| d' < d |B_{k-1}|
            if (len(inner) + len(layer)) * d_prime < d * len(inner):
                break
            inner |= layer
            frontier = list(layer)
        outer = inner | layer
        e_outer = g.edges_within(outer)
        trace.append((v, k, len(outer)))
        if 2 * e_outer >= d_prime * len(outer):
            sub = g.subgraph(outer)
            return DenseSubgraphResult(
                frozenset(outer), sub, Fraction(2 * e_outer, len(outer)), v, k, balls, recursions, trace
            )
        # the ball is sparse, so G - B_{k-1} keeps average degree >= d
        removed_edges = sum(1 for x in inner for y in g.neighbors(x) if y in alive and (y not in inner or y > x))
        alive -= inner
        n_cur -= len(inner)
        m_cur -= removed_edges
        recursions += 1
        if n_cur <= 0 or 2 * m_cur < d * n_cur:
            raise InvariantError("invariant breach: density dropped below d after discarding a sparse ball")


# ---------------------------------------------------------------------------
# short cycles and K4
# ---------------------------------------------------------------------------


def short_cycle(g: Graph, eps) -> list[int]:
    """Cycle of length <= 2 p(2+eps, 2) log2|g| + 1."""
    eps = _fraction(eps)
    _require_density(g, 2 + eps, "2+eps")
    res = dense_low_diameter_subgraph(g, 2 + eps, 2)
    sub = res.graph
    tree = bfs_tree(sub, min(sub.vertices))
    for u, v in sub.edges():
        if not tree.is_tree_edge(u, v):
            return fundamental_cycle(tree, (u, v))
    raise InvariantError("invariant breach: dense subgraph is a tree")


def small_k4_model(g: Graph, eps) -> KtModel:
    """K4-model with at most h_k4(eps) log2|g| vertices when avg degree >= 4 + eps."""
    eps = _fraction(eps)
    _require_density(g, 4 + eps, "4+eps")
    res = dense_low_diameter_subgraph(g, 4 + eps, 4 + eps / 2)
    sub = res.graph
    root = min(sub.vertices)
    tree = bfs_tree(sub, root)
    rest = sub.remove_edges(tree.tree_edges())
    cycle = short_cycle(rest, eps / 2)
    on_cycle = set(cycle)
    maximal = [x for x in cycle if not any(tree.is_ancestor(y, x) for y in on_cycle if y != x)]
    if len(maximal) < 2:
        raise InvariantError("invariant breach: cycle has a unique maximal vertex")
    cert = set(cycle)
    if len(maximal) >= 3:
        for w in maximal[:3]:
            cert.update(tree.path_to_root(w))
    model = extract_model_from_certificate(g, cert, 4)
    return _check_size(model, bounds.h_k4(eps) * math.log2(g.n), "K4")


# ---------------------------------------------------------------------------
# K3-models with big branch sets
# ---------------------------------------------------------------------------


def _vertex_minimal(g: Graph, d: Fraction) -> Graph:
    """Connected subgraph with avg degree >= d from which no vertex can be deleted."""
    cur = densest_component(g)
    while True:
        adj = cur.adjacency_sets()
        n, m = cur.n, cur.m
        changed = False
        for v in sorted(adj):
            if n > 1 and 2 * (m - len(adj[v])) >= d * (n - 1):
                for u in adj[v]:
                    adj[u].discard(v)
                m -= len(adj.pop(v))
                n -= 1
                changed = True
        cur = Graph._trusted(adj)
        if not cur.is_connected():
            cur = densest_component(cur)
            changed = True
        if not changed:
            return cur


def _find_k4_subgraph(g: Graph) -> list[int] | None:
    for u, w in g.edges():
        common = sorted(g.neighbor_set(u) & g.neighbor_set(w))
        for i, a in enumerate(common):
            for b in common[i + 1:]:
                if g.has_edge(a, b):
                    return sorted([u, w, a, b])
    return None


def _component_containing(g: Graph, within: set[int], start: int) -> set[int]:
    seen = {start}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for y in g.neighbors(x):
            if y in within and y not in seen:
                seen.add(y)
                queue.append(y)
    return seen


def nice_k3_model(g: Graph, eps) -> KtModel:
    """K3-model, every branch set of size >= 2, when avg degree >= 4 + eps."""
    eps = _fraction(eps)
    _require_density(g, 4 + eps, "4+eps")
    model = _nice_k3(g, eps)
    return _check_size(_check(g, model), bounds.h_k3_nice(eps) * math.log2(g.n), "nice K3")


def _nice_k3(g: Graph, eps: Fraction) -> KtModel:
    core = _vertex_minimal(g, 4 + eps)
    X = _find_k4_subgraph(core)
    if X is not None:
        return _nice_k3_around_k4(core, X, eps)
    return _nice_k3_from_k4_model(core, small_k4_model(core, eps))


def _nice_k3_around_k4(g: Graph, X: list[int], eps: Fraction) -> KtModel:
    Xs = set(X)
    leaving = [(x, y) for x in X for y in g.neighbors(x) if y not in Xs]
    ends = {x for x, _ in leaving}
    if len(ends) <= 1:
        # all edges leave through one vertex v: G - (X - v) stays dense
        v = min(ends) if ends else X[0]
        return _nice_k3(g.remove_vertices(Xs - {v}), eps)
    for i, (u, u2) in enumerate(leaving):
        for v, v2 in leaving[i + 1:]:
            if u != v and u2 != v2:
                return KtModel([{u, u2}, {v, v2}, Xs - {u, v}])
    # every leaving edge ends at the same outside vertex w
    w = leaving[0][1]
    u, v = sorted(ends)[:2]
    others = [y for y in g.neighbors(w) if y not in Xs]
    if not others:
        raise InvariantError("invariant breach: K4 case 3 without an outside neighbour")
    x, y = sorted(Xs - {u, v})
    return KtModel([{w, others[0]}, {u, x}, {v, y}])


def _nice_k3_from_k4_model(g: Graph, k4: KtModel) -> KtModel:
    sets = sorted(k4.branch_sets, key=lambda b: (-len(b), min(b)))
    B1 = set(sets[0])
    if len(sets[1]) >= 2:
        return KtModel([sets[0], sets[1], sets[2] | sets[3]])
    xs = [next(iter(b)) for b in sets[1:]]
    used = set(k4.vertices)
    for i, x in enumerate(xs):
        outside = [w for w in g.neighbors(x) if w not in used]
        if outside:
            rest = [y for j, y in enumerate(xs) if j != i]
            return KtModel([{x, outside[0]}, B1, set(rest)])
    # two independent edges u-x2, v-x3 between B1 and the singletons
    pair = None
    for a in range(3):
        for b in range(3):
            if a == b:
                continue
            for u in sorted(B1 & g.neighbor_set(xs[a])):
                for v in sorted(B1 & g.neighbor_set(xs[b])):
                    if u != v:
                        pair = (u, v, a, b)
                        break
                if pair:
                    break
            if pair:
                break
        if pair:
            break
    if pair is None:
        raise InvariantError("invariant breach: K4-free graph without independent edges into B1")
    u, v, a, b = pair
    x2, x3 = xs[a], xs[b]
    x4 = xs[3 - a - b]
    if len(B1) >= 3:
        cands = sorted(w for w in B1 - {u, v} if g.has_edge(w, u) or g.has_edge(w, v))
        w = cands[0]
        if not g.has_edge(w, u):
            u, v, x2, x3 = v, u, x3, x2
        C = _component_containing(g, B1 - {u, w}, v)
        return KtModel([{u, w}, C | {x3}, {x2, x4}])
    blocked = B1 | set(xs)
    for first, second, xa, xb in ((u, v, x2, x3), (v, u, x3, x2)):
        outside = [w for w in g.neighbors(first) if w not in blocked]
        if outside:
            return KtModel([{first, outside[0]}, {second, xb}, {xa, x4}])
    raise InvariantError("invariant breach: two-vertex B1 has no outside neighbour")


# ---------------------------------------------------------------------------
# K_t
# ---------------------------------------------------------------------------


def path4_model(g: Graph) -> KtModel:
    """K2-model {x,a},{v,b} from a path x-a-v-b in a component that is neither tree nor cycle."""
    for comp in g.components():
        cs = set(comp)
        if g.edges_within(cs) < len(comp):
            continue
        for v in comp:
            if g.degree(v) < 3:
                continue
            for a in g.neighbors(v):
                extra = [x for x in g.neighbors(a) if x != v]
                if extra:
                    x = extra[0]
                    b = next(y for y in g.neighbors(v) if y not in (a, x))
                    return KtModel([{x, a}, {v, b}])
    raise PreconditionError("every component is a tree or a cycle")


def small_kt_model(g: Graph, t: int, eps, variant: str = "strong") -> KtModel:
    """K_t-model with branch sets of size >= 2 and at most h_kt(t, eps) log2|g| vertices."""
    eps = _fraction(eps)
    if t < 2:
        raise PreconditionError("t >= 2 required")
    if variant not in ("strong", "weak"):
        raise ValueError(f"unknown variant {variant!r}")
    threshold = bounds.kt_density_threshold(t, eps, variant)
    _require_density(g, threshold, "2^(t-1)+eps" if variant == "strong" else "2^t+eps")
    if t == 2:
        model = _check(g, path4_model(g))
    elif t == 3 and variant == "strong":
        model = nice_k3_model(g, eps)
    else:
        model = _check(g, _kt_step(g, t, eps, variant))
    return _check_size(model, bounds.h_kt(t, eps, variant) * math.log2(g.n), f"K{t}")


def _kt_step(g: Graph, t: int, eps: Fraction, variant: str) -> KtModel:
    top = Fraction(2) ** (t - 1 if variant == "strong" else t)
    res = dense_low_diameter_subgraph(g, top + eps, top + eps / 2)
    sub = res.graph
    u, v = sub.edges()[0]
    tree = bfs_tree(sub, (u, v))
    depth = tree.depth
    classes: tuple[list, list] = ([], [])
    for a, b in sub.edges():
        classes[min(depth[a], depth[b]) % 2].append((a, b))
    best, best_ratio = None, None
    for edges in classes:
        part = Graph.from_edges(edges, sub.vertices)
        for comp in part.components():
            ratio = Fraction(part.edges_within(comp), len(comp))
            key = (ratio, -comp[0])
            if best_ratio is None or key > best_ratio:
                best, best_ratio = part.subgraph(comp), key
    H = best
    levels = {min(depth[a], depth[b]) for a, b in H.edges()}
    if len(levels) != 1:
        raise InvariantError(f"invariant breach: parity component spans edge depths {sorted(levels)}")
    (k,) = levels
    if k < 1:
        raise InvariantError("invariant breach: parity component has depth 0")
    inner = small_kt_model(H, t - 1, eps / 4, variant)
    last = {u, v}
    for bs in inner.branch_sets:
        if len(bs) < 2:
            raise InvariantError("invariant breach: branch set with a single vertex")
        at_k = sorted(x for x in bs if depth[x] == k)
        if not at_k:
            raise InvariantError(f"invariant breach: no depth-{k} vertex in a branch set")
        last.update(tree.path_to_root(at_k[0])[1:])
    if last & inner.vertices:
        raise InvariantError("invariant breach: new branch set meets the recursive model")
    return KtModel(list(inner.branch_sets) + [last])


# ---------------------------------------------------------------------------
# high girth
# ---------------------------------------------------------------------------


@dataclass
class HighGirthMinor:
    """Minor of a high-girth graph: cells around centers, contracted."""

    graph: Graph  # vertex ids are the centers
    owner: dict[int, int]
    parent: dict[int, int | None]
    links: dict[tuple[int, int], tuple[int, int]]

    @property
    def centers(self) -> list[int]:
        return list(self.graph.vertices)

    def cell(self, center: int) -> frozenset[int]:
        return frozenset(v for v, c in self.owner.items() if c == center)

    def path(self, v: int) -> list[int]:
        """Path from the center of v's cell to v, inside the cell."""
        out = [v]
        while self.parent[out[-1]] is not None:
            out.append(self.parent[out[-1]])
        return out[::-1]

    def link(self, a: int, b: int) -> tuple[int, int]:
        """An edge (x, y) of the host graph with x in cell a and y in cell b."""
        if (a, b) in self.links:
            return self.links[(a, b)]
        y, x = self.links[(b, a)]
        return x, y


def high_girth_dense_minor(g: Graph, k: int) -> HighGirthMinor:
    from .oracle import girth_at_least

    if k < 0:
        raise PreconditionError("k must be non-negative")
    r = g.min_degree()
    if r < 3:
        raise PreconditionError(f"minimum degree {r} < 3")
    if not girth_at_least(g, 8 * k + 3):
        raise PreconditionError(f"girth below 8k+3 = {8 * k + 3}")
    blocked: set[int] = set()
    centers = []
    for v in g.vertices:
        if v not in blocked:
            centers.append(v)
            blocked |= _ball(g, v, 2 * k)
    owner = {c: c for c in centers}
    parent: dict[int, int | None] = {c: None for c in centers}
    frontier = list(centers)
    level = 0
    while frontier:
        level += 1
        nxt: dict[int, tuple[int, int]] = {}
        for x in frontier:
            for y in g.neighbors(x):
                if y in owner:
                    continue
                cand = (owner[x], x)
                if y not in nxt or cand < nxt[y]:
                    nxt[y] = cand
        for y, (c, x) in nxt.items():
            owner[y] = c
            parent[y] = x
        frontier = list(nxt)
    if level - 1 > 2 * k:
        raise InvariantError("construction failed: a cell has radius above 2k")
    links: dict[tuple[int, int], tuple[int, int]] = {}
    for a, b in g.edges():
        ca, cb = owner[a], owner[b]
        if ca != cb:
            key = (ca, cb) if ca < cb else (cb, ca)
            if key not in links:
                links[key] = (a, b) if ca < cb else (b, a)
    H = Graph.from_edges(links.keys(), centers)
    if H.min_degree() < r * (r - 1) ** k:
        raise InvariantError(
            f"construction failed: minor has minimum degree {H.min_degree()} < r(r-1)^k = {r * (r - 1) ** k}"
        )
    return HighGirthMinor(H, owner, parent, links)


def _ball(g: Graph, v: int, radius: int) -> set[int]:
    seen = {v}
    frontier = [v]
    for _ in range(radius):
        nxt = []
        for x in frontier:
            for y in g.neighbors(x):
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def high_girth_kt_model(g: Graph, k: int) -> KtModel:
    minor = high_girth_dense_minor(g, k)
    r = g.min_degree()
    t = bounds.high_girth_t(r, k)
    H = minor.graph
    small = small_kt_model(H, t, 1, "strong")
    cells = [sorted(C) for C in small.branch_sets]
    lifted: list[set[int]] = []
    for C in cells:
        X = {C[0]}
        tree = bfs_tree(H.subgraph(C), C[0])
        for a, b in tree.tree_edges():
            x, y = minor.link(a, b)
            X.update(minor.path(x))
            X.update(minor.path(y))
        lifted.append(X)
    for i in range(len(cells)):
        for j in range(i + 1, len(cells)):
            pair = next((a, b) for a in cells[i] for b in cells[j] if H.has_edge(a, b))
            x, y = minor.link(*pair)
            lifted[i].update(minor.path(x))
            lifted[j].update(minor.path(y))
    model = _check(g, KtModel(lifted))
    return _check_size(model, bounds.high_girth_bound(t, k, H.n), "high-girth K_t")
