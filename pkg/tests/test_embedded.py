import networkx as nx
import pytest

from conftest import assert_valid, from_nx
from smallminors import generators
from smallminors.embedded import EmbeddedGraph, visibility_wheel_k4
from smallminors.errors import PreconditionError


@pytest.fixture
def k4():
    return generators.plane_embedding(nx.complete_graph(4))


def test_k4_faces(k4):
    assert len(k4.faces) == 4
    assert all(len(f) == 3 and f.is_simple_cycle() for f in k4.faces)
    assert k4.genus == 0


def test_cube_faces():
    cube = generators.plane_embedding(nx.cubical_graph())
    assert sorted(len(f) for f in cube.faces) == [4] * 6


def test_bouquet_has_one_face():
    b = generators.genus_bouquet(2, 2)
    assert (b.n, b.m, len(b.faces), b.genus) == (5, 6, 1, 2)
    center = max(b.graph.vertices, key=b.graph.degree)
    at = b.faces_at(center)
    assert len(at) == b.graph.degree(center) == at[0].multiplicity(center)
    assert len(set(at)) == 1


def test_faces_at_k4(k4):
    for v in range(4):
        assert sorted(len(f) for f in k4.faces_at(v)) == [3, 3, 3]
    with pytest.raises(ValueError):
        k4.faces_at(9)


def test_faces_at_cycle_square():
    # two triangles on each side of v and the two long faces of the two cycles
    c = generators.cycle_square(12)
    assert sorted(len(f) for f in c.faces_at(0)) == [3, 3, 3, 6]


def test_sees_examples(k4, snub):
    assert k4.sees(0) == {1, 2, 3}
    assert k4.sees_upper_bound(0) == 3
    for n2 in (8, 12, 24):
        c = generators.cycle_square(n2)
        assert all(len(c.sees(v)) == n2 // 2 + 1 for v in c.graph.vertices)
    assert {len(snub.sees(v)) for v in snub.graph.vertices} == {7}
    assert {snub.sees_upper_bound(v) for v in snub.graph.vertices} == {7}


def test_cube_sees_six():
    cube = generators.plane_embedding(nx.cubical_graph())
    assert len(cube.sees(0)) == cube.sees_upper_bound(0) == 6


def test_inconsistent_rotation_is_rejected(k4):
    rot = dict(k4.rotation)
    rot[0] = rot[0][:2]
    with pytest.raises(ValueError, match="inconsistent rotation"):
        EmbeddedGraph(k4.graph, rot)


def test_one_twisted_edge_gives_the_projective_plane(k4):
    twisted = EmbeddedGraph(k4.graph, k4.rotation, {(0, 1): -1})
    assert twisted.genus == 1
    assert sum(len(f) for f in twisted.faces) == 2 * twisted.m
    assert not twisted.is_orientable_signature


def test_restrict_keeps_rotation_order(snub):
    sub = snub.delete_vertices([0])
    assert sub.n == 59 and sub.genus == 0
    for v in sub.graph.vertices:
        assert list(sub.rotation[v]) == [u for u in snub.rotation[v] if u != 0]


def test_disconnected_embedding_sums_genus():
    h = nx.disjoint_union(nx.complete_graph(4), nx.cycle_graph(5))
    e = generators.plane_embedding(h)
    assert e.genus == 0
    torus = generators.toroidal_grid(3)
    assert torus.genus == 2


def test_wheel_hub(k4):
    w5 = from_nx(nx.wheel_graph(6))
    e = generators.plane_embedding(nx.wheel_graph(6))
    model = visibility_wheel_k4(e, 0)
    assert_valid(w5, model, 4)
    assert model.size <= 6
    assert sorted(map(len, visibility_wheel_k4(k4, 2).branch_sets)) == [1, 1, 1, 1]


def test_wheel_rejects_cut_pairs_and_low_degree():
    h = nx.cycle_graph(6)
    h.add_edges_from([(0, 2), (0, 3), (0, 4)])
    e = generators.plane_embedding(h)
    with pytest.raises(PreconditionError, match="degree"):
        visibility_wheel_k4(e, 1)
    with pytest.raises(PreconditionError, match="cut-pair"):
        visibility_wheel_k4(e, 3)
    torus = generators.toroidal_grid(4)
    with pytest.raises(PreconditionError, match="plane"):
        visibility_wheel_k4(torus, 0)
