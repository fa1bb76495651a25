# tests/test_oracle_service.py
import itertools

import pytest

from config.settings import settings
from models.graph_model import Graph, is_proper
from models.instance_model import build_instance, classical_instance
from services.generator_service import GenSpec, gen_colouring, gen_graph
from services.list_recolor_service import transform_k, transform_list
from services.oracle_service import (
    CAP_EXCEEDED,
    DISCONNECTED,
    OK,
    StateSpace,
    bfs_distance,
    exact_diameter,
    is_connected,
)
from services.planar_service import transform_planar_bipartite


@pytest.fixture
def edge3(p2):
    return build_instance(p2, lists=[{1, 2, 3}] * 2, a=1)


class TestBfsDistance:
    def test_identity(self, edge3):
        assert bfs_distance(edge3, (1, 2), (1, 2)).value == 0

    def test_edge_swap(self, edge3):
        result = bfs_distance(edge3, (1, 2), (2, 1))
        assert result.status == OK
        assert result.value == 3

    def test_frozen_edge(self, p2):
        inst = build_instance(p2, lists=[{1, 2}] * 2)
        assert bfs_distance(inst, (1, 2), (2, 1)).status == DISCONNECTED

    def test_cap(self, edge3):
        result = bfs_distance(edge3, (1, 2), (2, 1), cap=2)
        assert result.status == CAP_EXCEEDED
        assert result.value is None

    def test_cap_defaults_to_settings(self, edge3, monkeypatch):
        monkeypatch.setenv('RECOLOR_STATE_CAP', '2')
        settings.reload()
        assert bfs_distance(edge3, (1, 2), (2, 1)).status == CAP_EXCEEDED

    def test_metric_on_path(self, path3):
        inst = build_instance(path3, lists=[{1, 2, 3}] * 3, a=1)
        space = StateSpace(inst)
        states = [space.decode(k) for k in space.all_keys(100)]
        dist = {
            (x, y): bfs_distance(inst, x, y).value
            for x, y in itertools.product(states, repeat=2)
        }
        for x, y, z in itertools.product(states[:6], repeat=3):
            assert dist[x, y] == dist[y, x]
            assert dist[x, z] <= dist[x, y] + dist[y, z]


class TestStateSpace:
    def test_counts_proper_colourings(self, edge3):
        assert len(StateSpace(edge3).all_keys(100)) == 6

    def test_encode_decode(self, edge3):
        space = StateSpace(edge3)
        assert space.decode(space.encode((3, 1))) == (3, 1)

    def test_neighbours_are_single_proper_moves(self, c4):
        inst = classical_instance(c4, 3)
        space = StateSpace(inst)
        for key in space.all_keys(1000):
            here = space.decode(key)
            for nxt in space.neighbours(key):
                there = space.decode(nxt)
                assert is_proper(c4, there)
                assert sum(a != b for a, b in zip(here, there)) == 1


class TestExactDiameter:
    def test_single_vertex(self):
        inst = build_instance(Graph.empty(1), lists=[{1, 2}])
        assert exact_diameter(inst).value == 1

    def test_edge(self, edge3):
        assert exact_diameter(edge3).value == 3

    def test_frozen_edge(self, p2):
        inst = build_instance(p2, lists=[{1, 2}] * 2)
        assert exact_diameter(inst).status == DISCONNECTED

    def test_cap(self, edge3):
        assert exact_diameter(edge3, cap=3).status == CAP_EXCEEDED


class TestIsConnected:
    @pytest.mark.parametrize('seed', range(4))
    def test_trees_with_three_colours(self, seed):
        g = gen_graph(GenSpec('tree', n=6, seed=seed)).graph
        assert is_connected(classical_instance(g, 3)).value is True

    def test_four_cycle_four_colours(self, c4):
        assert is_connected(classical_instance(c4, 4)).value is True

    def test_edge_two_colours(self, p2):
        result = is_connected(classical_instance(p2, 2))
        assert result.status == OK
        assert result.value is False

    def test_empty_graph(self):
        result = is_connected(classical_instance(Graph.empty(0), 3))
        assert result.value is True


class TestSandwich:
    """The exact distance never exceeds what the engines produce."""

    @pytest.mark.parametrize('seed', range(3))
    def test_grid_five_colours(self, seed):
        gen = gen_graph(GenSpec('grid', rows=2, cols=3))
        inst = classical_instance(gen.graph, 5)
        alpha, beta = gen_colouring(inst, seed), gen_colouring(inst, seed + 20)
        exact = bfs_distance(inst, alpha, beta)
        assert exact.status == OK
        assert exact.value <= len(transform_planar_bipartite(gen.embedding, alpha, beta))
        assert exact.value <= len(transform_k(gen.graph, 5, alpha, beta))

    def test_edge_lists(self, edge3):
        assert bfs_distance(edge3, (1, 2), (2, 1)).value <= len(transform_list(edge3, (1, 2), (2, 1)))
