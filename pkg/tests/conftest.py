import networkx as nx
import pytest
from hypothesis import HealthCheck, settings

from smallminors import generators
from smallminors.graph import Graph, validate_model

settings.register_profile("default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


def from_nx(h: nx.Graph) -> Graph:
    return Graph.from_edges(list(h.edges()), list(h.nodes()))


def assert_valid(g, model, t=None):
    problem = validate_model(g, model)
    assert problem is None, problem
    if t is not None:
        assert model.t == t


def apollonian(n: int, seed: int):
    """Random stacked plane triangulation on n >= 4 vertices, embedded."""
    import random

    rng = random.Random(seed)
    h = nx.complete_graph(4)
    faces = [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]
    for v in range(4, n):
        a, b, c = faces.pop(rng.randrange(len(faces)))
        h.add_edges_from([(v, a), (v, b), (v, c)])
        faces += [(a, b, v), (a, c, v), (b, c, v)]
    return generators.plane_embedding(h)


@pytest.fixture(scope="session")
def snub():
    return generators.snub_dodecahedron()


@pytest.fixture(scope="session")
def icosahedron():
    return generators.plane_embedding(nx.icosahedral_graph())


@pytest.fixture(scope="session")
def gadget2():
    return generators.planar_4plus_eps_gadget(2)


@pytest.fixture(scope="session")
def corpus(snub, icosahedron, gadget2):
    """Every embedded graph the suite treats as the corpus, keyed by name."""
    return {
        "K4": generators.plane_embedding(nx.complete_graph(4)),
        "cube": generators.plane_embedding(nx.cubical_graph()),
        "icosahedron": icosahedron,
        "snub": snub,
        "C2_8": generators.cycle_square(8),
        "C2_24": generators.cycle_square(24),
        "gadget0": generators.planar_4plus_eps_gadget(0),
        "gadget1": generators.planar_4plus_eps_gadget(1),
        "gadget2": gadget2,
        "bouquet_2_2": generators.genus_bouquet(2, 2),
        "bouquet_4_3": generators.genus_bouquet(4, 3),
        "one_face_2_1": generators.surface_one_face_degree4(2, 1),
        "one_face_4_2": generators.surface_one_face_degree4(4, 2),
        "square_matching_12": generators.cycle_square_plus_matching(12),
        "square_matching_24": generators.cycle_square_plus_matching(24),
        "torus_3": generators.toroidal_grid(3),
        "torus_12": generators.toroidal_grid(12),
        "apollonian_30": apollonian(30, 1),
    }


# -- acceptance reporting -------------------------------------------------

ACCEPTANCE_LINES: list[str] = []


class Criterion:
    """Context manager recording one PASS/FAIL line per acceptance criterion."""

    def __init__(self, number: int, title: str):
        self.number, self.title = number, title
        self.details: list[str] = []

    def note(self, text: str) -> None:
        self.details.append(text)

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc, tb):
        status = "PASS" if exc_type is None else "FAIL"
        detail = "; ".join(self.details) if exc is None else f"{exc_type.__name__}: {exc}".splitlines()[0]
        line = f"criterion {self.number:2d} [{status}] {self.title}: {detail}"
        ACCEPTANCE_LINES.append(line)
        print(line)
        return False


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
