"""Property tests: every invariant the finders promise, on generated inputs."""

import math
import random
from fractions import Fraction

import networkx as nx
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from conftest import apollonian, assert_valid, from_nx
from smallminors import bounds, dense, generators, oracle, surface
from smallminors.errors import PreconditionError
from smallminors.graph import (
    Graph,
    average_degree,
    bfs_tree,
    cut_pairs,
    eccentricity_diameter,
    fundamental_cycle,
    has_k4_minor,
)
from smallminors.io import format_edge_list, parse_edge_list


@st.composite
def graphs(draw, min_n=4, max_n=30, min_p=0.05, max_p=0.9):
    n = draw(st.integers(min_n, max_n))
    p = draw(st.floats(min_p, max_p))
    seed = draw(st.integers(0, 2**31))
    return from_nx(nx.gnp_random_graph(n, p, seed=seed))


epsilons = st.sampled_from([Fraction(1, 8), Fraction(1, 3), Fraction(1, 2), Fraction(1), Fraction(3, 2)])


def _assert_cycle(g, cyc):
    assert len(cyc) >= 3 and len(set(cyc)) == len(cyc)
    assert all(g.has_edge(a, b) for a, b in zip(cyc, cyc[1:] + cyc[:1]))


# -- graph core ---------------------------------------------------------


@settings(max_examples=1000)
@given(graphs(min_n=3, max_n=25))
def test_fundamental_cycles_are_short(g):
    root = g.vertices[0]
    tree = bfs_tree(g, root)
    for u, v in g.edges():
        if u in tree.depth and v in tree.depth and not tree.is_tree_edge(u, v):
            cyc = fundamental_cycle(tree, (u, v))
            _assert_cycle(g, cyc)
            assert len(cyc) <= 2 * tree.max_depth + 1


@given(graphs(min_n=4, max_n=12, min_p=0.2))
def test_cut_pairs_are_exactly_the_separating_pairs(g):
    assume(g.is_connected())
    listed = {frozenset(p) for p in cut_pairs(g)}
    for v, w in ((a, b) for a in g.vertices for b in g.vertices if a < b):
        assert (frozenset({v, w}) in listed) == (len(g.components([v, w])) > 1)


@given(graphs(min_n=4, max_n=7, min_p=0.2))
def test_has_k4_minor_matches_the_contraction_oracle(g):
    assert has_k4_minor(g) == (oracle.min_kt_model_by_contraction(g, 4) is not None)


@given(graphs(max_n=20))
def test_edge_list_round_trip(g):
    back = parse_edge_list(format_edge_list(g))
    assert (back.n, back.m) == (g.n, g.m)


# -- dense minors -------------------------------------------------------


@settings(max_examples=1000)
@given(graphs(min_n=6, max_n=40, min_p=0.3), st.sampled_from([Fraction(1, 2), Fraction(1), Fraction(2)]))
def test_dense_subgraph_bounds(g, gap):
    d = average_degree(g)
    d_prime = d - gap
    assume(d_prime >= 2)
    res = dense.dense_low_diameter_subgraph(g, d, d_prime)
    assert res.average_degree >= d_prime
    assert Fraction(2 * res.graph.m, res.graph.n) == res.average_degree
    assert eccentricity_diameter(res.graph) <= bounds.p_bound(d, d_prime) * math.log2(g.n) + bounds.SLACK


@given(graphs(min_n=5, max_n=40), epsilons)
def test_short_cycle_contract(g, eps):
    try:
        cyc = dense.short_cycle(g, eps)
    except PreconditionError:
        assert average_degree(g) < 2 + eps
        return
    _assert_cycle(g, cyc)
    assert len(cyc) <= bounds.girth_coefficient(eps) * math.log2(g.n) + bounds.SLACK


@given(graphs(min_n=6, max_n=40, min_p=0.2), epsilons)
def test_small_k4_model_contract(g, eps):
    try:
        model = dense.small_k4_model(g, eps)
    except PreconditionError:
        assert average_degree(g) < 4 + eps
        return
    assert_valid(g, model, 4)
    assert bounds.within_log_bound(model.size, bounds.h_k4(eps), g.n)


@given(graphs(min_n=6, max_n=9, min_p=0.6), st.sampled_from([Fraction(1, 8), Fraction(1, 4), Fraction(1, 2)]))
def test_small_k4_model_dominated_by_oracle(g, eps):
    assume(average_degree(g) >= 4 + eps)
    model = dense.small_k4_model(g, eps)
    size, _ = oracle.min_kt_model(g, 4, g.n)
    assert size <= model.size <= bounds.h_k4(eps) * math.log2(g.n)


@given(graphs(min_n=6, max_n=40, min_p=0.2), epsilons)
def test_nice_k3_contract(g, eps):
    try:
        model = dense.nice_k3_model(g, eps)
    except PreconditionError:
        assert average_degree(g) < 4 + eps
        return
    assert_valid(g, model, 3)
    assert min(map(len, model.branch_sets)) >= 2
    assert bounds.within_log_bound(model.size, bounds.h_k3_nice(eps), g.n)


@given(graphs(min_n=6, max_n=45, min_p=0.1), st.sampled_from([2, 3, 4]), epsilons)
def test_small_kt_contract(g, t, eps):
    try:
        model = dense.small_kt_model(g, t, eps)
    except PreconditionError:
        assert average_degree(g) < bounds.kt_density_threshold(t, eps)
        return
    assert_valid(g, model, t)
    assert min(map(len, model.branch_sets)) >= 2
    assert bounds.within_log_bound(model.size, bounds.h_kt(t, eps), g.n)


# -- embedded graphs ----------------------------------------------------


@st.composite
def plane_graphs(draw):
    """A stacked triangulation with some edges removed, embedded in the plane."""
    n = draw(st.integers(4, 40))
    seed = draw(st.integers(0, 2**31))
    drop = draw(st.floats(0, 0.5))
    tri = apollonian(n, seed)
    rng = random.Random(seed)
    h = nx.Graph(tri.graph.edges())
    for e in list(h.edges()):
        if rng.random() < drop:
            h.remove_edge(*e)
    h.add_nodes_from(range(n))
    return generators.plane_embedding(h)


@given(plane_graphs())
def test_plane_embeddings_obey_euler_and_sight_bounds(e):
    comps = len(e.graph.components())
    isolated = sum(1 for v in e.graph.vertices if e.graph.degree(v) == 0)
    assert e.genus == 0
    # an isolated vertex bounds one face that tracing never visits
    assert e.n - e.m + len(e.faces) + isolated == 2 * comps
    for v in e.graph.vertices:
        if all(len(f) >= 3 for f in e.faces_at(v)):
            assert len(e.sees(v)) <= e.sees_upper_bound(v)


@given(st.integers(4, 40), st.integers(0, 2**31))
def test_triangulations_see_exactly_their_neighbours(n, seed):
    e = apollonian(n, seed)
    assert all(len(f) == 3 for f in e.faces)
    for v in e.graph.vertices:
        assert e.sees(v) == e.graph.neighbor_set(v)


@given(plane_graphs(), st.data())
def test_deleting_a_vertex_never_raises_genus(e, data):
    v = data.draw(st.sampled_from(e.graph.vertices))
    assert e.delete_vertices([v]).genus <= e.genus


@pytest.mark.parametrize(
    "name",
    ["torus_12", "bouquet_4_3", "one_face_4_2", "square_matching_12", "snub", "gadget1"],
)
def test_vertex_deletion_on_corpus(corpus, name):
    e = corpus[name]
    for v in e.graph.vertices[:10]:
        assert e.delete_vertices([v]).genus <= e.genus


@given(plane_graphs())
def test_charge_totals_are_exact(e):
    assume(e.graph.is_connected())
    assert surface.charge_report(e, "deg5").total == 2 * (2 - e.genus)
    assert surface.charge_report(e, "blind").total == 480
    rep = surface.charge_report(e, "avg4eps", Fraction(1, 2))
    assert rep.balanced


@given(plane_graphs(), st.sampled_from([Fraction(1, 4), Fraction(1, 2), Fraction(1)]))
def test_planar_general_k4_contract(e, eps):
    try:
        model = surface.planar_general_k4(e, eps)
    except PreconditionError:
        assert average_degree(e.graph) < 4 + eps
        return
    assert_valid(e.graph, model, 4)
    assert model.size <= bounds.planar_general_bound(eps)


@given(plane_graphs(), st.sampled_from([Fraction(1, 2), Fraction(1), Fraction(2)]))
def test_planar_short_face_cycle_contract(e, eps):
    try:
        cyc = surface.planar_short_face_cycle(e, eps)
    except PreconditionError:
        assert average_degree(e.graph) < 2 + eps
        return
    _assert_cycle(e.graph, cyc)
    assert len(cyc) <= bounds.planar_girth_bound(eps)


def test_deg5_scan_on_min_degree_five_corpus(corpus):
    for name in ("snub", "icosahedron", "gadget0"):
        e = corpus[name]
        v, _ = surface.low_visibility_vertex(e, "deg5")
        assert len(e.sees(v)) <= 7
