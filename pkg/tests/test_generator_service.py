# tests/test_generator_service.py
import networkx as nx
import pytest

from models.embedding_model import euler_audit
from models.graph_model import degeneracy_ordering, is_proper
from models.instance_model import check_feasible
from services.generator_service import FAMILIES, GenSpec, gen_colouring, gen_graph, gen_instance
from utils.errors import InputError


def test_path_edges():
    gen = gen_graph(GenSpec('path', n=3))
    assert gen.graph.sorted_edges() == [(0, 1), (1, 2)]
    assert euler_audit(gen.embedding)


def test_small_grid_is_a_plane_square():
    gen = gen_graph(GenSpec('grid', rows=2, cols=2))
    assert gen.graph.sorted_edges() == [(0, 1), (0, 2), (1, 3), (2, 3)]
    assert sorted(gen.embedding.face_sizes) == [4, 4]


def test_cylinder_rings():
    gen = gen_graph(GenSpec('cylinder', rows=3, cols=6))
    g = gen.graph
    assert g.n == 18
    assert g.edge_count == 30
    assert [g.degree(v) for v in (0, 6, 12)] == [3, 4, 3]
    assert euler_audit(gen.embedding)


def test_cube_is_three_regular(cube):
    assert all(cube.graph.degree(v) == 3 for v in range(8))
    assert cube.graph.is_bipartite()


@pytest.mark.parametrize('seed', range(5))
def test_random_degenerate_respects_d(seed):
    g = gen_graph(GenSpec('random-d-degenerate', n=30, d=2, seed=seed)).graph
    assert g.n == 30
    assert degeneracy_ordering(g).d <= 2


@pytest.mark.parametrize('seed', range(5))
def test_planar_bipartite_family(seed):
    gen = gen_graph(GenSpec('random-planar-bipartite', n=25, seed=seed))
    planar, _ = nx.check_planarity(gen.graph.to_networkx())
    assert planar
    assert gen.graph.is_bipartite()
    assert euler_audit(gen.embedding)


@pytest.mark.parametrize('family,extra', [
    ('path', {'n': 7}),
    ('tree', {'n': 12}),
    ('random-d-degenerate', {'n': 15, 'd': 3}),
    ('random-planar-bipartite', {'n': 16}),
])
def test_same_seed_same_graph(family, extra):
    first = gen_graph(GenSpec(family, seed=11, **extra))
    second = gen_graph(GenSpec(family, seed=11, **extra))
    assert first.graph == second.graph


def test_different_seeds_differ():
    graphs = {gen_graph(GenSpec('tree', n=12, seed=s)).graph.edges for s in range(6)}
    assert len(graphs) > 1


@pytest.mark.parametrize('policy', ['uniform', 'random'])
def test_instances_are_feasible(policy):
    spec = GenSpec('random-d-degenerate', n=20, d=2, seed=3, k=6, a=2, policy=policy)
    inst = gen_instance(spec, gen_graph(spec).graph)
    assert check_feasible(inst)
    assert inst.a == 2


def test_random_lists_fit_outdegree():
    spec = GenSpec('tree', n=10, seed=1, k=5, policy='random')
    inst = gen_instance(spec, gen_graph(spec).graph)
    for v in range(inst.n):
        assert len(inst.lists[v]) == len(inst.out_neighbours(v)) + 2
        assert inst.lists[v] <= set(range(5))


def test_random_lists_need_enough_colours():
    spec = GenSpec('random-d-degenerate', n=10, d=3, seed=0, k=3, policy='random')
    with pytest.raises(InputError):
        gen_instance(spec, gen_graph(spec).graph)


@pytest.mark.parametrize('seed', range(5))
def test_colourings_are_proper(seed):
    spec = GenSpec('random-d-degenerate', n=20, d=2, seed=seed, k=4)
    g = gen_graph(spec).graph
    inst = gen_instance(spec, g)
    colouring = gen_colouring(inst, seed)
    assert is_proper(g, colouring)
    assert inst.respects(colouring)
    assert colouring == gen_colouring(inst, seed)


@pytest.mark.parametrize('kwargs', [
    {'family': 'wheel'},
    {'family': 'grid', 'rows': 2},
    {'family': 'cylinder', 'cols': 6},
    {'family': 'random-d-degenerate', 'n': 5},
    {'family': 'path', 'n': 3, 'policy': 'zipf'},
])
def test_bad_specs(kwargs):
    with pytest.raises(InputError):
        GenSpec(**kwargs)


def test_cycle_needs_three_vertices():
    with pytest.raises(InputError):
        gen_graph(GenSpec('cycle', n=2))


def test_every_family_builds():
    for family in FAMILIES:
        spec = GenSpec(family, n=9, d=2, rows=3, cols=3)
        assert gen_graph(spec).graph.n > 0
