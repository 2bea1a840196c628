"""Randomized finder invocations for the universal-validity criterion."""

from __future__ import annotations

import math
import random
from fractions import Fraction

import networkx as nx

from conftest import apollonian
from smallminors import bounds, dense, generators, surface
from smallminors.embedded import visibility_wheel_k4
from smallminors.graph import cycle_to_k3_model, validate_model

EPS = [Fraction(1, 4), Fraction(1, 2), Fraction(1), Fraction(3, 2)]


def _dense_graph(rng, n_lo, n_hi, threshold, seed):
    n = rng.randrange(n_lo, n_hi + 1)
    avg = min(threshold + Fraction(rng.randrange(0, 9), 4), n - 1)
    return generators.random_graph(n, avg, seed=seed)


def _log(n):
    return math.log2(n)


def run_op(op: str, seed: int):
    """One finder call; returns (graph, model, size bound)."""
    rng = random.Random(seed)
    eps = rng.choice(EPS)
    if op == "k4":
        g = _dense_graph(rng, 8, 60, 4 + eps, seed)
        return g, dense.small_k4_model(g, eps), bounds.h_k4(eps) * _log(g.n)
    if op == "k3-nice":
        g = _dense_graph(rng, 8, 60, 4 + eps, seed)
        return g, dense.nice_k3_model(g, eps), bounds.h_k3_nice(eps) * _log(g.n)
    if op in ("kt2", "kt3", "kt4"):
        t = int(op[-1])
        g = _dense_graph(rng, 10 if t < 4 else 14, 50, bounds.kt_density_threshold(t, eps), seed)
        return g, dense.small_kt_model(g, t, eps), bounds.h_kt(t, eps) * _log(g.n)
    if op == "cycle":
        g = _dense_graph(rng, 6, 80, 2 + eps, seed)
        return g, cycle_to_k3_model(dense.short_cycle(g, eps)), bounds.girth_coefficient(eps) * _log(g.n)
    if op == "k4-planar":
        eps = min(eps, Fraction(1))
        e = _sparse_plane(rng, seed, 4 + eps)
        return e.graph, surface.planar_general_k4(e, eps), bounds.planar_general_bound(eps)
    if op == "k4-3conn":
        eps = min(eps, Fraction(1))
        n = rng.randrange(math.ceil(12 / (2 - eps)), 60)
        e = apollonian(n, seed)
        return e.graph, surface.planar_3conn_k4(e, "avg", eps), 2 + math.ceil(8 / eps)
    if op == "k4-surface":
        if rng.random() < 0.5:
            e, eps = generators.toroidal_grid(rng.randrange(3, 30)), Fraction(rng.choice([1, 2]))
        else:
            e = apollonian(rng.randrange(max(8, math.ceil(12 / (2 - eps))) if eps < 2 else 8, 60), seed)
        return e.graph, surface.surface_k4(e, eps), bounds.surface_k4_coefficient(eps) * math.log2(e.genus + 2)
    if op == "wheel":
        e = apollonian(rng.randrange(5, 50), seed)
        v = rng.choice(e.graph.vertices)
        return e.graph, visibility_wheel_k4(e, v), 1 + len(e.sees(v))
    if op == "planar-cycle":
        eps = rng.choice([Fraction(1, 2), Fraction(1), Fraction(2)])
        # a stacked triangulation has average degree 6 - 12/n
        e = apollonian(rng.randrange(max(4, math.ceil(12 / (4 - eps))), 60), seed)
        return e.graph, cycle_to_k3_model(surface.planar_short_face_cycle(e, eps)), bounds.planar_girth_bound(eps)
    raise ValueError(op)


def _sparse_plane(rng, seed, threshold):
    """Stacked triangulation thinned by random edge deletions while the average degree stays >= threshold."""
    n = rng.randrange(8, 60)
    e = apollonian(max(n, math.ceil(12 / (6 - threshold)) + 1), seed)
    h = nx.Graph(e.graph.edges())
    edges = list(h.edges())
    rng.shuffle(edges)
    for a, b in edges[: rng.randrange(0, len(edges) // 4 + 1)]:
        if 2 * (h.number_of_edges() - 1) >= threshold * h.number_of_nodes():
            h.remove_edge(a, b)
    return generators.plane_embedding(h)


OPS = ["k4", "k3-nice", "kt2", "kt3", "kt4", "cycle", "k4-planar", "k4-3conn", "k4-surface", "wheel", "planar-cycle"]


def check(op: str, seed: int) -> tuple[int, float, str | None]:
    g, model, limit = run_op(op, seed)
    problem = validate_model(g, model)
    if problem is None and model.size > limit + bounds.SLACK:
        problem = f"size {model.size} > bound {limit:.3f}"
    return model.size, limit, problem
