import math

import networkx as nx
import pytest

from conftest import assert_valid, from_nx
from smallminors import generators, oracle
from smallminors.graph import Graph


def test_girth_examples():
    assert oracle.girth_exact(from_nx(nx.cycle_graph(7))) == 7
    assert oracle.girth_exact(from_nx(nx.petersen_graph())) == 5
    assert oracle.girth_exact(from_nx(nx.balanced_tree(3, 3))) == math.inf
    assert oracle.girth_at_least(from_nx(nx.petersen_graph()), 5)
    assert not oracle.girth_at_least(from_nx(nx.petersen_graph()), 6)


@pytest.mark.parametrize("seed", range(20))
def test_girth_agrees_with_networkx(seed):
    h = nx.gnm_random_graph(14, 18, seed=seed)
    expected = nx.girth(h)
    assert oracle.girth_exact(from_nx(h)) == expected


def test_min_model_examples():
    k4 = from_nx(nx.complete_graph(4))
    size, model = oracle.min_kt_model(k4, 4)
    assert size == 4
    assert_valid(k4, model, 4)
    c5 = from_nx(nx.cycle_graph(5))
    assert oracle.min_kt_model(c5, 3)[0] == 5
    assert oracle.min_kt_model(c5, 4) is None


def test_min_model_respects_the_cap():
    g = generators.cycle_square(12).graph
    assert oracle.min_kt_model(g, 4, 7) is None
    assert oracle.min_kt_model(g, 4, 8)[0] == 8


def test_cycle_square_minimum_is_at_least_n():
    size, model = oracle.min_kt_model(generators.cycle_square(8).graph, 4, 8)
    assert size >= 4


def test_contraction_oracle_examples():
    assert oracle.min_kt_model_by_contraction(from_nx(nx.complete_graph(4)), 4) == 4
    assert oracle.min_kt_model_by_contraction(from_nx(nx.cycle_graph(6)), 3) == 6
    assert oracle.min_kt_model_by_contraction(from_nx(nx.cycle_graph(6)), 4) is None
    assert oracle.min_kt_model_by_contraction(from_nx(nx.petersen_graph()), 5) is not None


def test_oracles_agree_on_petersen():
    g = from_nx(nx.petersen_graph())
    for t in (3, 4):
        assert oracle.min_kt_model(g, t, 10)[0] == oracle.min_kt_model_by_contraction(g, t)


def test_lemma_hand_instances():
    # 1 > 5/3 fails, so the implication holds vacuously
    hyp, _ = oracle.lemma_instance("A1", 3, (3, 3, 3))
    assert not hyp
    hyp, concl = oracle.lemma_instance("A2", 30, (3, 3, 3, 7))
    assert hyp and concl


def test_lemma_sweeps_on_a_small_range():
    assert oracle.check_lemma_A1(12, 6, 15).passed
    assert oracle.check_lemma_A2(12, 6, 15).passed


def test_sweep_reports_counterexamples():
    # a bound that is too tight must be caught
    res = oracle._sweep(6, 4, 10, lambda a, d: 0, lambda a: 0)
    assert not res.passed and res.counterexample is not None


def test_disconnected_graph_has_no_model_across_components():
    g = Graph.from_edges([(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)], 6)
    assert oracle.min_kt_model(g, 4, 6) is None
    assert oracle.min_kt_model(g, 3, 6)[0] == 3
