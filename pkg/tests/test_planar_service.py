# tests/test_planar_service.py
import itertools
import sys
from fractions import Fraction

import numpy as np
import pytest

from models.embedding_model import audit_embedding, delete_vertex, euler_audit, faces
from models.graph_model import Graph
from models.instance_model import build_instance
from models.sequence_model import RecoloringSequence, validate_sequence
from services.generator_service import GenSpec, gen_colouring, gen_graph
from services.planar_service import (
    PALETTE,
    CaseI,
    CaseII,
    discharge,
    equalize_vw,
    find_configuration,
    levels,
    merge,
    merge_vertices,
    transform_planar_bipartite,
)
from utils.errors import InputError, PreconditionError


def _palette(g):
    return build_instance(g, k=5, a=0)


def _parity(g):
    """Proper 2-colouring 0/1 of a connected bipartite graph from vertex 0."""
    side = {0: 0}
    frontier = [0]
    while frontier:
        v = frontier.pop()
        for u in g.neighbours(v):
            if u not in side:
                side[u] = 1 - side[v]
                frontier.append(u)
    return [side[v] for v in range(g.n)]


def _random_walk(g, start, steps, seed):
    """Proper 5-colouring reached from start by random single-vertex moves."""
    rng = np.random.default_rng(seed)
    colour = list(start)
    for _ in range(steps):
        v = int(rng.integers(g.n))
        free = [c for c in PALETTE
                if c != colour[v] and all(colour[u] != c for u in g.neighbours(v))]
        if free:
            colour[v] = free[int(rng.integers(len(free)))]
    return tuple(colour)


class TestLevels:
    def test_three_by_three_grid(self):
        g = gen_graph(GenSpec('grid', rows=3, cols=3)).graph
        lm = levels(g)
        assert lm.level[4] == 2
        assert [v for v in range(9) if lm.level[v] == 1] == [0, 1, 2, 3, 5, 6, 7, 8]

    def test_star_centre(self):
        star = Graph.from_edges(6, [(0, v) for v in range(1, 6)])
        lm = levels(star)
        assert lm.level == (2, 1, 1, 1, 1, 1)
        assert lm.depth == 2

    def test_cubic_graph_is_one_stratum(self, cube):
        assert set(levels(cube.graph).level) == {1}

    def test_not_three_degenerate(self):
        k5 = Graph.from_edges(5, itertools.combinations(range(5), 2))
        with pytest.raises(PreconditionError, match="3-degenerate"):
            levels(k5)


class TestFindConfiguration:
    def test_four_cycle_low_degree(self, square):
        assert find_configuration(square.embedding) == CaseI(0)

    def test_single_vertex(self):
        assert find_configuration(faces(Graph.empty(1), [()])) == CaseI(0)

    def test_cube(self, cube):
        config = find_configuration(cube.embedding)
        g = cube.graph
        assert isinstance(config, CaseII)
        assert config.v == 0
        assert g.neighbours(config.v) == {config.u, config.v1, config.v2}
        assert config.w not in g.neighbours(config.v)
        assert {config.v1, config.v2} <= g.neighbours(config.w)
        assert len(cube.embedding.faces[config.face]) == 4


class TestEqualize:
    @pytest.fixture
    def setup(self, cube):
        emb = cube.embedding
        return emb, find_configuration(emb), _parity(emb.graph)

    def test_already_equal(self, setup):
        emb, config, alpha = setup
        result, seq = equalize_vw(emb, config, tuple(alpha))
        assert len(seq) == 0
        assert result == tuple(alpha)

    def test_single_step_when_u_is_free(self, setup):
        emb, config, alpha = setup
        alpha[config.w] = 2
        result, seq = equalize_vw(emb, config, tuple(alpha))
        assert list(seq) == [(config.v, 2)]
        assert result[config.v] == result[config.w]

    def test_cascade_through_u(self, setup):
        emb, config, alpha = setup
        alpha[config.w] = 2
        alpha[config.u] = 2
        alpha = tuple(alpha)
        result, seq = equalize_vw(emb, config, alpha)
        assert result[config.v] == result[config.w] == 2
        assert seq.max_per_vertex() <= 2
        assert seq.per_vertex_count[config.v] == 2
        assert validate_sequence(_palette(emb.graph), alpha, seq, result).ok

    def test_rejects_colour_outside_palette(self, setup):
        emb, config, alpha = setup
        alpha[config.w] = 7
        with pytest.raises(InputError):
            equalize_vw(emb, config, tuple(alpha))

    def test_rejects_adjacent_endpoints(self, setup):
        emb, config, alpha = setup
        bad = CaseII(config.v, config.u, config.u, config.v1, config.v2, config.face)
        with pytest.raises(PreconditionError):
            equalize_vw(emb, bad, tuple(alpha))


class TestMerge:
    def test_four_cycle_becomes_path(self, square):
        # square is the cycle 0-1-3-2
        merged = merge_vertices(square.embedding, 0, 3, 1, 2)
        assert merged.origin == (0, 1, 2)
        assert merged.embedding.graph.sorted_edges() == [(0, 1), (0, 2)]
        assert euler_audit(merged.embedding)

    def test_cube_face(self, cube):
        merged = merge(cube.embedding, find_configuration(cube.embedding))
        g = merged.embedding.graph
        assert g.n == 7
        assert g.is_bipartite()
        assert euler_audit(merged.embedding)

    def test_lift_pairs_steps_on_merged_vertex(self, cube):
        config = find_configuration(cube.embedding)
        merged = merge(cube.embedding, config)
        other = next(i for i in range(7) if i != merged.x)
        lifted = merged.lift(RecoloringSequence.of([(merged.x, 3), (other, 4)]))
        assert list(lifted) == [(config.v, 3), (config.w, 3), (merged.origin[other], 4)]


class TestTransformPlanarBipartite:
    def test_single_vertex(self):
        emb = faces(Graph.empty(1), [()])
        assert list(transform_planar_bipartite(emb, (0,), (3,))) == [(0, 3)]

    def test_identity(self, cube):
        alpha = tuple(_parity(cube.graph))
        assert len(transform_planar_bipartite(cube.embedding, alpha, alpha)) == 0

    @pytest.mark.parametrize('alpha,beta', [
        ((0, 1, 1, 0), (1, 0, 0, 1)),
        ((0, 1, 2, 3), (3, 2, 1, 0)),
        ((4, 0, 0, 4), (0, 4, 4, 0)),
    ])
    def test_four_cycle_pairs(self, square, alpha, beta):
        seq = transform_planar_bipartite(square.embedding, alpha, beta)
        assert validate_sequence(_palette(square.graph), alpha, seq, beta).ok
        assert len(seq) <= 64
        assert seq.max_per_vertex() <= 16

    @pytest.mark.parametrize('seed', range(10))
    def test_four_by_four_grid(self, seed):
        emb = gen_graph(GenSpec('grid', rows=4, cols=4)).embedding
        inst = _palette(emb.graph)
        alpha, beta = gen_colouring(inst, seed), gen_colouring(inst, seed + 100)
        seq = transform_planar_bipartite(emb, alpha, beta)
        assert validate_sequence(inst, alpha, seq, beta).ok
        assert len(seq) <= 4 * 16 ** 2
        assert seq.max_per_vertex() <= 4 * 16

    @pytest.mark.parametrize('seed', range(4))
    def test_cube(self, cube, seed):
        inst = _palette(cube.graph)
        alpha, beta = gen_colouring(inst, seed), gen_colouring(inst, seed + 7)
        seq = transform_planar_bipartite(cube.embedding, alpha, beta)
        assert validate_sequence(inst, alpha, seq, beta).ok
        assert len(seq) <= 4 * 8 ** 2

    @pytest.mark.parametrize('seed', range(5))
    def test_generated_planar_bipartite(self, seed):
        emb = gen_graph(GenSpec('random-planar-bipartite', n=20, seed=seed)).embedding
        inst = _palette(emb.graph)
        alpha, beta = gen_colouring(inst, seed), gen_colouring(inst, seed + 1)
        seq = transform_planar_bipartite(emb, alpha, beta)
        assert validate_sequence(inst, alpha, seq, beta).ok
        n = emb.graph.n
        assert len(seq) <= 4 * n * n

    def test_rejects_odd_cycle(self):
        emb = gen_graph(GenSpec('cycle', n=3)).embedding
        with pytest.raises(PreconditionError, match="bipartite"):
            transform_planar_bipartite(emb, (0, 1, 2), (1, 2, 0))

    def test_rejects_colour_outside_palette(self, square):
        with pytest.raises(InputError):
            transform_planar_bipartite(square.embedding, (0, 1, 1, 5), (0, 1, 1, 0))

    def test_rejects_non_plane_rotation(self):
        # K_{3,3} has no plane rotation
        k33 = Graph.from_edges(6, [(u, v) for u in range(3) for v in range(3, 6)])
        emb = faces(k33, [tuple(sorted(k33.neighbours(v))) for v in range(6)])
        with pytest.raises(PreconditionError, match="Euler"):
            transform_planar_bipartite(emb, (0, 0, 0, 1, 1, 1), (1, 1, 1, 0, 0, 0))

    def test_deep_grid_does_not_recurse(self):
        # one reduction step per vertex; 400 of them would overflow this limit
        emb = gen_graph(GenSpec('grid', rows=20, cols=20)).embedding
        inst = _palette(emb.graph)
        alpha, beta = gen_colouring(inst, 1), gen_colouring(inst, 2)
        limit = sys.getrecursionlimit()
        sys.setrecursionlimit(400)
        try:
            seq = transform_planar_bipartite(emb, alpha, beta)
        finally:
            sys.setrecursionlimit(limit)
        assert validate_sequence(inst, alpha, seq, beta).ok


CYLINDERS = [(3, 6), (4, 8), (5, 4)]


class TestCylinder:
    """Concentric even rings: minimum degree 3 with degree-4 middle rings."""

    @pytest.fixture
    def cylinder(self):
        return gen_graph(GenSpec('cylinder', rows=3, cols=6)).embedding

    @pytest.fixture
    def setup(self, cylinder):
        config = find_configuration(cylinder)
        return cylinder, config, _parity(cylinder.graph)

    def test_degrees(self, cylinder):
        g = cylinder.graph
        assert {g.degree(v) for v in range(g.n)} == {3, 4}
        assert g.is_bipartite()
        assert sorted(cylinder.face_sizes) == [4] * 12 + [6, 6]

    def test_configuration_has_heavy_neighbour(self, setup):
        emb, config, _ = setup
        g = emb.graph
        assert isinstance(config, CaseII)
        assert g.degree(config.v) == 3
        assert any(g.degree(y) > 3 for y in g.neighbours(config.u))
        assert config.w not in g.neighbours(config.u)

    def test_equalize_skips_heavy_colour(self, setup):
        emb, config, alpha = setup
        alpha[config.u] = alpha[config.w] = 2
        alpha = tuple(alpha)
        result, seq = equalize_vw(emb, config, alpha)
        # the heavy neighbour of u holds 0, so u takes 1
        assert list(seq) == [(config.u, 1), (config.v, 2)]
        assert result[config.v] == result[config.w] == 2
        assert validate_sequence(_palette(emb.graph), alpha, seq, result).ok

    def test_equalize_cascades_through_light_neighbours(self, setup):
        emb, config, alpha = setup
        g = emb.graph
        heavy = next(y for y in g.neighbours(config.u) if g.degree(y) > 3)
        light = next(y for y in g.neighbours(config.u) if y != config.v and g.degree(y) == 3)
        alpha[config.u] = alpha[config.w] = 2
        alpha[heavy] = 3
        alpha = tuple(alpha)
        result, seq = equalize_vw(emb, config, alpha)
        assert list(seq) == [(config.v, 3), (light, 3), (config.u, 0), (config.v, 2)]
        assert seq.max_per_vertex() == 2
        assert result[config.v] == result[config.w]
        assert validate_sequence(_palette(g), alpha, seq, result).ok

    @pytest.mark.parametrize('rings,m', CYLINDERS)
    def test_every_merge_stays_plane(self, rings, m):
        emb = gen_graph(GenSpec('cylinder', rows=rings, cols=m)).embedding
        merges = 0
        while emb.graph.n:
            config = find_configuration(emb)
            if isinstance(config, CaseII):
                emb = merge(emb, config).embedding
                merges += 1
                assert emb.graph.is_bipartite()
                assert euler_audit(emb)
                assert emb.is_plane()
            else:
                emb, _ = delete_vertex(emb, config.v)
        assert merges >= 1

    @pytest.mark.parametrize('rings,m', CYLINDERS)
    @pytest.mark.parametrize('seed', range(4))
    def test_random_walk_colourings(self, rings, m, seed):
        emb = gen_graph(GenSpec('cylinder', rows=rings, cols=m)).embedding
        g = emb.graph
        start = tuple(_parity(g))
        alpha = _random_walk(g, start, 300, seed)
        beta = _random_walk(g, start, 300, seed + 50)
        seq = transform_planar_bipartite(emb, alpha, beta)
        assert validate_sequence(_palette(g), alpha, seq, beta).ok
        assert seq.max_per_vertex() <= 4 * g.n
        assert len(seq) <= 4 * g.n ** 2


class TestDischarge:
    def test_cube_keeps_initial_charges(self, cube):
        result = discharge(cube.embedding)
        assert result.vertex == (Fraction(-1),) * 8
        assert result.face == (Fraction(0),) * 6
        assert result.deficient == list(range(8))

    def test_large_faces_feed_their_corners(self):
        emb = gen_graph(GenSpec('cylinder', rows=3, cols=6)).embedding
        result = discharge(emb)
        assert result.total == -8
        assert all(charge >= 0 for charge in result.face)
        assert result.vertex[0] == Fraction(-2, 3)
        assert result.vertex[6] == 0
        assert result.deficient == list(range(6)) + list(range(12, 18))

    @pytest.mark.parametrize('seed', range(6))
    def test_deficient_vertices_are_reducible(self, seed):
        emb = gen_graph(GenSpec('random-planar-bipartite', n=30, seed=seed)).embedding
        g = emb.graph
        lm = levels(g)
        at = emb.face_incidence()
        result = discharge(emb)
        isolated = sum(1 for v in range(g.n) if g.degree(v) == 0)
        assert result.total == audit_embedding(emb).total_weight + 4 * isolated
        for v in result.deficient:
            if g.degree(v) <= 2:
                continue
            assert g.degree(v) == 3
            assert all(lm.level[u] <= 2 for u in g.neighbours(v))
            assert any(len(emb.faces[f]) == 4 for f in at[v])
