"""Planar and surface finders backed by discharging.

Discharging only certifies existence here: every finder scans directly
for a low-visibility vertex, and the charge report is returned so tests
can check the charge totals against Euler's formula.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import bounds
from .dense import _vertex_minimal, densest_component, extract_model_from_certificate, short_cycle, small_k4_model
from .embedded import EmbeddedGraph, Face, _face_around, visibility_wheel_k4
from .errors import InvariantError, PreconditionError
from .graph import (
    Graph,
    KtModel,
    _articulation_points,
    average_degree,
    bfs_tree,
    cut_pairs,
    cut_vertices,
    fundamental_cycle,
    has_k4_minor,
    separations,
)


@dataclass
class ChargeReport:
    scheme: str
    charges: dict[int, Fraction]
    total: Fraction
    expected_total: Fraction
    alpha: Fraction | None = None

    @property
    def balanced(self) -> bool:
        return self.total == self.expected_total

    def positive(self) -> list[int]:
        return [v for v, c in self.charges.items() if c > 0]


def _inverse_face_sum(e: EmbeddedGraph, v: int) -> Fraction:
    return sum((Fraction(1, len(f)) for f in e.faces_at(v)), Fraction(0))


def charge_report(e: EmbeddedGraph, scheme: str, eps=None) -> ChargeReport:
    """Charges of every vertex under one of the four discharging schemes.

    ``deg5``: 2 - deg + sum 2/|f|, total 2(2 - g).
    ``avg4eps``: (8+2e) - (8+3e) deg + (24+6e) sum 1/|f|.
    ``genus``: the avg4eps charge plus (24+6e) g/n.
    ``blind``: 240 - 120 deg + 240 g/n + 240 sum 1/|f|, total 480.

    The closed-form totals come from Euler's formula for one component,
    so disconnected embeddings are rejected.
    """
    g, n, m, genus = e.graph, e.n, e.m, e.genus
    if not g.is_connected():
        raise PreconditionError("disconnected embedding: charge totals assume one component")
    charges: dict[int, Fraction] = {}
    alpha = None
    if scheme == "deg5":
        for v in g.vertices:
            charges[v] = 2 - g.degree(v) + 2 * _inverse_face_sum(e, v)
        expected = Fraction(2 * (2 - genus))
    elif scheme in ("avg4eps", "genus"):
        eps = Fraction(eps)
        a, b, c = 8 + 2 * eps, 8 + 3 * eps, 24 + 6 * eps
        extra = c * Fraction(genus, n) if scheme == "genus" else 0
        for v in g.vertices:
            charges[v] = a - b * g.degree(v) + extra + c * _inverse_face_sum(e, v)
        core = 4 * (2 * m - (4 + eps) * n)
        expected = core + (2 * c if scheme == "genus" else c * (2 - genus))
        alpha = 6 + 24 / eps
    elif scheme == "blind":
        for v in g.vertices:
            charges[v] = 240 - 120 * g.degree(v) + 240 * Fraction(genus, n) + 240 * _inverse_face_sum(e, v)
        expected = Fraction(480)
    else:
        raise ValueError(f"unknown charge scheme {scheme!r}")
    total = sum(charges.values(), Fraction(0))
    return ChargeReport(scheme, charges, total, Fraction(expected), alpha)


def _eps(eps, low=0, high=None) -> Fraction:
    eps = Fraction(eps)
    if eps <= low or (high is not None and eps >= high):
        raise PreconditionError(f"eps must lie in ({low}, {high if high is not None else 'inf'}), got {eps}")
    return eps


def _require_planar(e: EmbeddedGraph) -> None:
    if e.genus != 0:
        raise PreconditionError(f"not planar: embedding has Euler genus {e.genus}")


def _require_avg(g: Graph, threshold: Fraction, label: str) -> None:
    avg = average_degree(g)
    if avg < threshold:
        raise PreconditionError(f"insufficient density: average degree {avg} < {label} = {threshold}")


def _scan(e: EmbeddedGraph, limit: int) -> int:
    for v in e.graph.vertices:
        if len(e.sees(v)) <= limit:
            return v
    raise InvariantError(f"theorem breach: no vertex sees at most {limit} vertices")


def low_visibility_vertex(e: EmbeddedGraph, scheme: str, eps=None) -> tuple[int, ChargeReport]:
    """A vertex seeing few others; which bound applies depends on ``scheme``."""
    g = e.graph
    if scheme == "deg5":
        _require_planar(e)
        if g.min_degree() < 5:
            raise PreconditionError(f"min degree {g.min_degree()} < 5")
        limit = bounds.sees_bound_deg5()
    elif scheme == "avg4eps":
        eps = _eps(eps, 0, 2)
        _require_planar(e)
        if g.min_degree() < 3:
            raise PreconditionError(f"min degree {g.min_degree()} < 3")
        _require_avg(g, 4 + eps, "4+eps")
        limit = bounds.sees_bound_avg4eps(eps)
    elif scheme == "genus":
        eps = _eps(eps)
        if g.min_degree() < 3:
            raise PreconditionError(f"min degree {g.min_degree()} < 3")
        _require_avg(g, 4 + eps, "4+eps")
        need = bounds.genus_order_threshold(eps, e.genus)
        if g.n < need:
            raise PreconditionError(f"order too small: |G| = {g.n} < (24/eps+6)g = {need}")
        limit = bounds.sees_bound_genus(eps)
    else:
        raise ValueError(f"unknown scheme {scheme!r}")
    return _scan(e, limit), charge_report(e, scheme, eps)


def blind_edge(e: EmbeddedGraph) -> tuple[tuple[int, int], tuple[int, int]]:
    """An edge vw whose ends each see at most 12 vertices (11 in the plane)."""
    g = e.graph
    if g.min_degree() < 5:
        raise PreconditionError(f"min degree {g.min_degree()} < 5")
    if g.n < 240 * e.genus:
        raise PreconditionError(f"order too small: |G| = {g.n} < 240g = {240 * e.genus}")
    limit = 11 if e.genus == 0 else 12
    sight = {v: len(e.sees(v)) for v in g.vertices}
    for v, w in g.edges():
        if sight[v] <= limit and sight[w] <= limit:
            return (v, w), (sight[v], sight[w])
    raise InvariantError(f"theorem breach: no edge with both ends seeing at most {limit}")


# ---------------------------------------------------------------------------
# short cycles
# ---------------------------------------------------------------------------


def _shortest_cycle(g: Graph) -> list[int] | None:
    best = None
    for root in g.vertices:
        tree = bfs_tree(g, root)
        for u, v in g.edges():
            if u in tree.depth and v in tree.depth and not tree.is_tree_edge(u, v):
                if best is not None and tree.depth[u] + tree.depth[v] + 1 >= len(best):
                    continue
                cyc = fundamental_cycle(tree, (u, v))
                if best is None or len(cyc) < len(best):
                    best = cyc
    return best


def _cycle_in_face(face: Face) -> list[int]:
    sub = Graph.from_edges({tuple(sorted(d)) for d in face.darts})
    cyc = _shortest_cycle(sub)
    if cyc is None:
        raise InvariantError("facial walk contains no cycle")
    return cyc


def _densest_embedded(e: EmbeddedGraph) -> EmbeddedGraph:
    comp = densest_component(e.graph)
    return e if comp.n == e.n else e.restrict(comp.vertices)


def planar_short_face_cycle(e: EmbeddedGraph, eps) -> list[int]:
    eps = _eps(eps, 0, 4)
    _require_planar(e)
    _require_avg(e.graph, 2 + eps, "2+eps")
    part = _densest_embedded(e)
    face = min(part.faces, key=len)
    cyc = _cycle_in_face(face)
    if len(cyc) > bounds.planar_girth_bound(eps):
        raise InvariantError(f"theorem breach: cycle of length {len(cyc)} > {bounds.planar_girth_bound(eps)}")
    return cyc


def surface_short_face(e: EmbeddedGraph, eps) -> Face:
    eps = _eps(eps)
    _require_avg(e.graph, 2 + eps, "2+eps")
    part = _densest_embedded(e)
    face = min(part.faces, key=len)
    limit = bounds.surface_face_bound(eps, e.genus)
    if len(face) > limit:
        raise InvariantError(f"theorem breach: shortest face has length {len(face)} > {limit}")
    return face


def surface_girth_cycle(e: EmbeddedGraph, eps) -> list[int]:
    eps = _eps(eps)
    _require_avg(e.graph, 2 + eps, "2+eps")
    core = _vertex_minimal(e.graph, 2 + eps)
    part = e.restrict(core.vertices)
    face = min(part.faces, key=len)
    if len(face) < 6 + 12 / eps:
        cyc = _cycle_in_face(face)
    else:
        cyc = short_cycle(core, eps)
    limit = bounds.surface_girth_coefficient(eps) * math.log2(e.genus + 2)
    if len(cyc) > limit + bounds.SLACK:
        raise InvariantError(f"theorem breach: cycle of length {len(cyc)} > {limit:.3f}")
    return cyc


# ---------------------------------------------------------------------------
# K4-models
# ---------------------------------------------------------------------------


def _require_3_connected(g: Graph) -> None:
    if g.n < 4 or not g.is_connected() or cut_vertices(g) or cut_pairs(g):
        raise PreconditionError("not 3-connected")


def planar_3conn_k4(e: EmbeddedGraph, mode: str = "deg5", eps=None) -> KtModel:
    _require_planar(e)
    _require_3_connected(e.graph)
    if mode == "deg5":
        v, _ = low_visibility_vertex(e, "deg5")
        limit = 8
    elif mode == "avg":
        eps = _eps(eps, 0, 2)
        v, _ = low_visibility_vertex(e, "avg4eps", eps)
        limit = 2 + math.ceil(8 / eps)
    else:
        raise ValueError(f"unknown mode {mode!r}")
    model = visibility_wheel_k4(e, v)
    if model.size > limit:
        raise InvariantError(f"theorem breach: model of size {model.size} > {limit}")
    return model


def _eq1(n: int, m: int, eps: Fraction) -> bool:
    return 2 * m > (4 + eps) * (n - 2)


def planar_general_k4(e: EmbeddedGraph, eps, trace: list | None = None) -> KtModel:
    """K4-model with at most ceil(8/eps) + ceil(2/eps) vertices in a dense plane graph.

    The input needs average degree >= 4+eps. After that the loop follows
    the induction on n: every step either finishes or moves to a strictly
    smaller graph that still satisfies 2m > (4+eps)(n-2).
    ``trace`` (if given) collects the sequence of steps taken.
    """
    eps = _eps(eps, 0, 2)
    _require_planar(e)
    g = e.graph
    _require_avg(g, 4 + eps, "4+eps")
    small = 2 + math.ceil(2 / eps)
    tiny = 1 + math.ceil(2 / eps)
    limit = bounds.planar_general_bound(eps)
    log = trace if trace is not None else []
    if g.n <= small:
        if not has_k4_minor(g):
            raise PreconditionError(f"insufficient density: {g.n}-vertex graph has no K4-minor")
        log.append(("base", g.n))
        return _finish(g, g.vertices, limit)
    if not _eq1(g.n, g.m, eps):
        raise PreconditionError(f"insufficient density: 2m = {2 * g.m} <= (4+eps)(n-2) = {(4 + eps) * (g.n - 2)}")
    cur = g
    while True:
        if not _eq1(cur.n, cur.m, eps) or cur.n < small:
            raise InvariantError("invariant breach: recursion left the induction hypothesis")
        if cur.n <= limit:
            log.append(("whole", cur.n))
            return _finish(g, cur.vertices, limit)
        low = next((v for v in cur.vertices if cur.degree(v) <= 2), None)
        if low is not None:
            log.append(("low-degree", cur.n))
            cur = _shrink(cur, cur.remove_vertices([low]))
            continue
        step = _separation_step(cur, eps, small, tiny)
        if isinstance(step, Graph):
            log.append(("separation", step.n))
            cur = _shrink(cur, step)
            continue
        if step is not None:
            log.append(("small-side", len(step)))
            return _finish(g, step, limit)
        log.append(("visibility", cur.n))
        return _finish(g, _visibility_certificate(e.restrict(cur.vertices), eps, small, tiny), limit)


def _shrink(old: Graph, new: Graph) -> Graph:
    if new.n >= old.n:
        raise InvariantError("invariant breach: recursion did not shrink the graph")
    return new


def _finish(g: Graph, cert, limit: int) -> KtModel:
    model = extract_model_from_certificate(g, cert, 4)
    if model.size > limit:
        raise InvariantError(f"theorem breach: model of size {model.size} > {limit}")
    return model


def _order_le2_separations(g: Graph):
    comps = g.components()
    if len(comps) > 1:
        yield from separations(g, [])
        return
    for v in sorted(_articulation_points(g)):
        yield from separations(g, [v])
    for pair in cut_pairs(g):
        yield from separations(g, pair)


def _separation_step(g: Graph, eps: Fraction, small: int, tiny: int):
    """A smaller graph to recurse on or a certificate vertex set.

    None means no separation of order at most 2 applies.
    """
    for sep in _order_le2_separations(g):
        for side in (sep.side1, sep.side2):
            sub = g.subgraph(side)
            if _eq1(sub.n, sub.m, eps) and sub.n >= small:
                return sub
            if sub.n <= tiny and has_k4_minor(sub):
                return set(side)
    return None


def _visibility_certificate(e: EmbeddedGraph, eps: Fraction, small: int, tiny: int) -> set[int]:
    g = e.graph
    if not g.is_connected() or _articulation_points(g):
        raise InvariantError("invariant breach: graph not 2-connected at the visibility step")
    v = _scan(e, bounds.sees_bound_avg4eps(eps))
    partners = sorted(_articulation_points(g, removed=v))
    if not partners:
        return {v} | set(_face_around(e, v))
    w = partners[0]
    side1 = None
    for sep in separations(g, [v, w]):
        sub = g.subgraph(sep.side1)
        if _eq1(sub.n, sub.m, eps) and sub.n <= tiny:
            side1 = sep.side1
            break
    if side1 is None:
        raise InvariantError("invariant breach: cut pair without a small dense side")
    path = _facial_path(e, v, w, set(side1) - {v, w})
    if len(path) - 2 > math.ceil(8 / eps) - 2:
        raise InvariantError(f"theorem breach: facial path has {len(path) - 2} internal vertices")
    return set(side1) | set(path)


def _facial_path(e: EmbeddedGraph, v: int, w: int, avoid: set[int]) -> list[int]:
    """Shortest v-w path whose vertices lie on one face of ``e`` and avoid ``avoid``."""
    best = None
    for face in e.faces_at(v):
        walk = face.walk
        L = len(walk)
        for i, x in enumerate(walk):
            if x != v:
                continue
            for direction in (1, -1):
                seg = [v]
                j = i
                for _ in range(L):
                    j = (j + direction) % L
                    y = walk[j]
                    if y in avoid or y == v:
                        break
                    seg.append(y)
                    if y == w:
                        path = _path_within(e.graph, seg)
                        if best is None or len(path) < len(best):
                            best = path
                        break
    if best is None:
        raise InvariantError("invariant breach: no facial v-w path through the other side")
    return best


def _path_within(g: Graph, vertices: list[int]) -> list[int]:
    sub = g.subgraph(set(vertices))
    tree = bfs_tree(sub, vertices[-1])
    return tree.path_to_root(vertices[0])


def surface_k4(e: EmbeddedGraph, eps, facewidth_ge3: bool = True) -> KtModel:
    """K4-model of size at most q(eps) log2(g+2); facewidth >= 3 is the caller's promise."""
    eps = _eps(eps)
    if not facewidth_ge3:
        raise PreconditionError("facewidth >= 3 must be asserted by the caller")
    g = e.graph
    _require_avg(g, 4 + eps, "4+eps")
    _require_3_connected(g)
    if g.n <= bounds.genus_order_threshold(eps, e.genus):
        model = small_k4_model(g, eps)
    else:
        v, _ = low_visibility_vertex(e, "genus", eps)
        try:
            cycle = _face_around(e, v)
        except PreconditionError as exc:
            raise PreconditionError(f"facewidth assertion violated: {exc}") from exc
        model = extract_model_from_certificate(g, {v} | set(cycle), 4)
        if model.size > 3 + math.ceil(12 / eps):
            raise InvariantError(f"theorem breach: wheel model of size {model.size}")
    limit = bounds.surface_k4_coefficient(eps) * math.log2(e.genus + 2)
    if model.size > limit + bounds.SLACK:
        raise InvariantError(f"theorem breach: model of size {model.size} > {limit:.3f}")
    return model

