"""Embedded graphs given by rotation systems, with optional edge signs."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from .errors import InvariantError, PreconditionError
from .graph import Edge, Graph, KtModel, _articulation_points, _norm

Dart = tuple[int, int]
State = tuple[int, int, int]


@dataclass(frozen=True)
class Face:
    """A facial walk as a cyclic sequence of darts ``(tail, head)``."""

    darts: tuple[Dart, ...]

    def __len__(self) -> int:
        return len(self.darts)

    @property
    def walk(self) -> tuple[int, ...]:
        return tuple(v for v, _ in self.darts)

    @property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.walk)

    def multiplicity(self, v: int) -> int:
        return sum(1 for x, _ in self.darts if x == v)

    def is_simple_cycle(self) -> bool:
        return len(self.darts) >= 3 and len(self.vertex_set) == len(self.darts)


class EmbeddedGraph:
    """Graph plus rotation system; faces are traced once at construction.

    ``rotation[v]`` lists the neighbours of v in cyclic order. Edge signs
    default to +1 (orientable surface).
    """

    def __init__(
        self,
        graph: Graph,
        rotation: Mapping[int, Sequence[int]],
        signs: Mapping[Edge, int] | None = None,
    ):
        self.graph = graph
        rot = {}
        for v in graph.vertices:
            order = tuple(rotation.get(v, ()))
            if len(order) != graph.degree(v) or set(order) != graph.neighbor_set(v):
                raise ValueError(f"inconsistent rotation at vertex {v}")
            rot[v] = order
        self.rotation = rot
        self._pos = {v: {u: i for i, u in enumerate(order)} for v, order in rot.items()}
        self.signs: dict[Edge, int] = {}
        for (u, v), s in (signs or {}).items():
            if s not in (1, -1):
                raise ValueError(f"edge sign must be +1 or -1, got {s}")
            if not graph.has_edge(u, v):
                raise ValueError(f"signed edge {u}-{v} is not in the graph")
            if s == -1:
                self.signs[_norm(u, v)] = -1
        self.faces = self._trace()
        total = sum(len(f) for f in self.faces)
        if total != 2 * graph.m:
            raise InvariantError(f"face lengths sum to {total}, expected {2 * graph.m}")
        self.genus = self._euler_genus()
        if self.genus < 0:
            raise InvariantError(f"negative Euler genus {self.genus}")

    # -- construction --------------------------------------------------

    def sign(self, u: int, v: int) -> int:
        return self.signs.get(_norm(u, v), 1)

    def _step(self, state: State) -> State:
        v, u, s = state
        s2 = s * self.sign(v, u)
        order = self.rotation[u]
        i = self._pos[u][v]
        w = order[(i + 1) % len(order)] if s2 == 1 else order[(i - 1) % len(order)]
        return (u, w, s2)

    def _trace(self) -> list[Face]:
        used: set[State] = set()
        faces = []
        starts = [(v, u, s) for s in (1, -1) for v in self.graph.vertices for u in self.graph.neighbors(v)]
        for start in starts:
            if start in used:
                continue
            darts = []
            state = start
            while True:
                if state in used:
                    raise InvariantError("inconsistent rotation: face tracing revisits a side")
                a, b, sg = state
                used.add(state)
                used.add((b, a, -sg * self.sign(a, b)))
                darts.append((a, b))
                state = self._step(state)
                if state == start:
                    break
            k = darts.index(min(darts))
            faces.append(Face(tuple(darts[k:] + darts[:k])))
        faces.sort(key=lambda f: f.darts[0])
        return faces

    def _euler_genus(self) -> int:
        comp_of = {}
        comps = self.graph.components()
        for i, c in enumerate(comps):
            for v in c:
                comp_of[v] = i
        face_count = Counter(comp_of[f.darts[0][0]] for f in self.faces)
        g = 0
        for i, c in enumerate(comps):
            m = self.graph.edges_within(c)
            faces = face_count[i] if m else 1
            g += 2 - len(c) + m - faces
        return g

    # -- queries -------------------------------------------------------

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def m(self) -> int:
        return self.graph.m

    @property
    def is_orientable_signature(self) -> bool:
        return not self.signs

    @cached_property
    def _faces_by_vertex(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {v: [] for v in self.graph.vertices}
        for i, f in enumerate(self.faces):
            for v in f.walk:
                out[v].append(i)
        return out

    def faces_at(self, v: int) -> list[Face]:
        """F(G, v): faces containing v, each repeated by its multiplicity at v."""
        if v not in self.graph:
            raise ValueError(f"unknown vertex {v}")
        return [self.faces[i] for i in self._faces_by_vertex[v]]

    def sees(self, v: int) -> frozenset[int]:
        seen = set()
        for f in self.faces_at(v):
            seen.update(f.walk)
        seen.discard(v)
        return frozenset(seen)

    def sees_upper_bound(self, v: int) -> int:
        return sum(len(f) - 2 for f in self.faces_at(v))

    def face_containing(self, dart: Dart) -> Face:
        for f in self.faces:
            if dart in f.darts:
                return f
        raise ValueError(f"dart {dart} lies on no face")

    def min_face_length(self) -> int:
        return min(len(f) for f in self.faces)

    # -- derived embeddings --------------------------------------------

    def restrict(self, vertices: Iterable[int]) -> "EmbeddedGraph":
        """Embedding of the induced subgraph inherited from this rotation system."""
        keep = set(vertices)
        sub = self.graph.subgraph(keep)
        rot = {v: [u for u in self.rotation[v] if u in keep] for v in keep}
        signs = {e: s for e, s in self.signs.items() if e[0] in keep and e[1] in keep}
        return EmbeddedGraph(sub, rot, signs)

    def delete_vertices(self, vertices: Iterable[int]) -> "EmbeddedGraph":
        gone = set(vertices)
        return self.restrict(v for v in self.graph.vertices if v not in gone)

    def __repr__(self) -> str:
        return f"EmbeddedGraph(n={self.n}, m={self.m}, faces={len(self.faces)}, genus={self.genus})"


def visibility_wheel_k4(e: EmbeddedGraph, v: int) -> KtModel:
    """K4-model inside {v} + sees(v) for a plane graph where v is well connected."""
    from .dense import extract_model_from_certificate

    g = e.graph
    if e.genus != 0:
        raise PreconditionError(f"not a plane embedding (Euler genus {e.genus})")
    if g.degree(v) < 3:
        raise PreconditionError(f"degree of {v} is {g.degree(v)} < 3")
    if not g.is_connected():
        raise PreconditionError("disconnected graph")
    if v in _articulation_points(g):
        raise PreconditionError(f"{v} is a cut-vertex")
    partners = _articulation_points(g, removed=v)
    if partners or len(g.components([v])) > 1:
        w = min(partners) if partners else None
        raise PreconditionError(f"{v} lies in a cut-pair" + (f" with {w}" if w is not None else ""))
    boundary = _face_around(e, v)
    cert = {v} | set(boundary)
    model = extract_model_from_certificate(g, cert, 4)
    if model.size > 1 + len(e.sees(v)):
        raise InvariantError("theorem breach: wheel model exceeds 1 + |sees(v)|")
    return model


def _face_around(e: EmbeddedGraph, v: int) -> tuple[int, ...]:
    """Vertices of the face of G - v that used to contain v; must be a simple cycle."""
    anchor = None
    for f in e.faces_at(v):
        for a, b in f.darts:
            if a != v and b != v:
                anchor = (a, b)
                break
        if anchor:
            break
    if anchor is None:
        raise PreconditionError(f"every face at {v} is a digon-like walk through {v}")
    rest = e.delete_vertices([v])
    face = rest.face_containing(anchor)
    if not face.is_simple_cycle():
        raise PreconditionError("face of G - v is not a simple cycle")
    if not set(e.graph.neighbors(v)) <= face.vertex_set:
        raise PreconditionError("neighbours of v are not on a single face of G - v")
    return face.walk
