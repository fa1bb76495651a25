# services/generator_service.py
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from models.embedding_model import Embedding, faces, forest_embedding
from models.graph_model import Colouring, Graph, degeneracy_ordering
from models.instance_model import ListInstance, build_instance, greedy_colouring, require_feasible
from utils.errors import InputError

FAMILIES = (
    'path', 'cycle', 'tree', 'grid', 'cylinder', 'random-d-degenerate',
    'random-planar-bipartite', 'cube',
)
LIST_POLICIES = ('uniform', 'random')

# Probability a grid vertex survives in the random planar bipartite family.
KEEP_PROBABILITY = 0.8


@dataclass(frozen=True)
class GenSpec:
    family: str
    n: int = 0
    d: int | None = None
    seed: int = 0
    k: int | None = None
    a: int | None = None
    rows: int | None = None
    cols: int | None = None
    policy: str = 'uniform'
    subdivisions: int = 2
    diagonals: int = 1

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise InputError(f"unknown family {self.family!r}; expected one of {', '.join(FAMILIES)}")
        if self.policy not in LIST_POLICIES:
            raise InputError(f"unknown list policy {self.policy!r}")
        if self.n < 0 or self.seed < 0:
            raise InputError("n and seed must be non-negative")
        if self.family == 'random-d-degenerate' and (self.d is None or self.d < 0):
            raise InputError("random-d-degenerate needs d >= 0")
        if self.family in ('grid', 'cylinder') and (not self.rows or not self.cols):
            raise InputError(f"{self.family} needs rows and cols")
        if self.k is not None and self.k < 1:
            raise InputError("k must be positive")
        if self.a is not None and self.a < 0:
            raise InputError("a must be non-negative")
        if self.subdivisions < 0 or self.diagonals < 0:
            raise InputError("subdivisions and diagonals must be non-negative")

    def rng(self) -> np.random.Generator:
        return np.random.default_rng(self.seed)


@dataclass(frozen=True)
class Generated:
    graph: Graph
    embedding: Embedding | None = None


def _embed(n: int, edges, pos: dict[int, tuple[float, float]]) -> Generated:
    """Rotation from a straight-line drawing: neighbours by angle around each vertex."""
    g = Graph.from_edges(n, edges)
    rotation = []
    for v in range(n):
        x, y = pos[v]
        rotation.append(tuple(sorted(
            g.neighbours(v),
            key=lambda u: math.atan2(pos[u][1] - y, pos[u][0] - x),
        )))
    return Generated(g, faces(g, rotation))


def _path(n: int) -> Generated:
    return _embed(n, [(i, i + 1) for i in range(n - 1)], {i: (float(i), 0.0) for i in range(n)})


def _cycle(n: int) -> Generated:
    if n < 3:
        raise InputError("a cycle needs at least 3 vertices")
    pos = {i: (math.cos(2 * math.pi * i / n), math.sin(2 * math.pi * i / n)) for i in range(n)}
    return _embed(n, [(i, (i + 1) % n) for i in range(n)], pos)


def _tree(n: int, rng: np.random.Generator) -> Generated:
    edges = [(int(rng.integers(0, i)), i) for i in range(1, n)]
    g = Graph.from_edges(n, edges)
    return Generated(g, forest_embedding(g))


def _grid(rows: int, cols: int) -> Generated:
    edges = []
    for r in range(rows):
        for c in range(cols):
            v = r * cols + c
            if c + 1 < cols:
                edges.append((v, v + 1))
            if r + 1 < rows:
                edges.append((v, v + cols))
    pos = {r * cols + c: (float(c), float(r)) for r in range(rows) for c in range(cols)}
    return _embed(rows * cols, edges, pos)


def _cylinder(rings: int, m: int) -> Generated:
    """m-cycles on concentric rings, spoke edges between consecutive rings."""
    if m < 3:
        raise InputError("a cylinder ring needs at least 3 vertices")
    edges = []
    pos = {}
    for i in range(rings):
        for j in range(m):
            v = i * m + j
            angle = 2 * math.pi * j / m
            pos[v] = ((i + 1) * math.cos(angle), (i + 1) * math.sin(angle))
            edges.append((v, i * m + (j + 1) % m))
            if i + 1 < rings:
                edges.append((v, v + m))
    return _embed(rings * m, edges, pos)


def _cube() -> Generated:
    outer = {0: (-2, -2), 1: (2, -2), 3: (2, 2), 2: (-2, 2)}
    pos = {v: (float(x), float(y)) for v, (x, y) in outer.items()}
    pos.update({v + 4: (x / 2, y / 2) for v, (x, y) in outer.items()})
    edges = [(v, v ^ bit) for v in range(8) for bit in (1, 2, 4) if v < v ^ bit]
    return _embed(8, edges, pos)


def _degenerate(n: int, d: int, rng: np.random.Generator) -> Generated:
    edges = []
    for v in range(1, n):
        picks = rng.choice(v, size=min(d, v), replace=False)
        edges.extend((int(u), v) for u in picks)
    return Generated(Graph.from_edges(n, edges))


def _planar_bipartite(spec: GenSpec, rng: np.random.Generator) -> Generated:
    """Induced subgraph of a grid, a few 4-faces split by a two-edge path
    between opposite corners, a few edges replaced by paths of length three."""
    rows = spec.rows or max(2, math.isqrt(max(spec.n, 4)))
    cols = spec.cols or max(2, -(-max(spec.n, 4) // rows))
    kept = rng.random(rows * cols) < KEEP_PROBABILITY
    if not kept.any():
        kept[0] = True
    pos: dict[tuple, tuple[float, float]] = {}
    for r in range(rows):
        for c in range(cols):
            if kept[r * cols + c]:
                pos[('g', r, c)] = (float(c), float(r))

    grid_edges = []
    for (_, r, c) in list(pos):
        if ('g', r, c + 1) in pos:
            grid_edges.append((('g', r, c), ('g', r, c + 1)))
        if ('g', r + 1, c) in pos:
            grid_edges.append((('g', r, c), ('g', r + 1, c)))

    edges = []
    chosen = set()
    if grid_edges and spec.subdivisions:
        count = min(spec.subdivisions, len(grid_edges))
        chosen = {int(i) for i in rng.choice(len(grid_edges), size=count, replace=False)}
    for i, (p, q) in enumerate(grid_edges):
        if i not in chosen:
            edges.append((p, q))
            continue
        (px, py), (qx, qy) = pos[p], pos[q]
        s1, s2 = ('s', i, 1), ('s', i, 2)
        pos[s1] = (px + (qx - px) / 3, py + (qy - py) / 3)
        pos[s2] = (px + 2 * (qx - px) / 3, py + 2 * (qy - py) / 3)
        edges.extend([(p, s1), (s1, s2), (s2, q)])

    squares = [
        (r, c) for r in range(rows - 1) for c in range(cols - 1)
        if all(('g', r + dr, c + dc) in pos for dr in (0, 1) for dc in (0, 1))
    ]
    if squares and spec.diagonals:
        count = min(spec.diagonals, len(squares))
        for i in rng.choice(len(squares), size=count, replace=False):
            r, c = squares[int(i)]
            z = ('z', r, c)
            pos[z] = (c + 0.5, r + 0.5)
            edges.extend([(('g', r, c), z), (z, ('g', r + 1, c + 1))])

    names = sorted(pos)
    ids = {name: i for i, name in enumerate(names)}
    return _embed(
        len(names),
        [(ids[p], ids[q]) for p, q in edges],
        {ids[name]: xy for name, xy in pos.items()},
    )


def gen_graph(spec: GenSpec) -> Generated:
    """Graph of the requested family; plane families carry their rotation system."""
    rng = spec.rng()
    if spec.family == 'path':
        return _path(spec.n)
    if spec.family == 'cycle':
        return _cycle(spec.n)
    if spec.family == 'tree':
        return _tree(spec.n, rng)
    if spec.family == 'grid':
        return _grid(spec.rows, spec.cols)
    if spec.family == 'cylinder':
        return _cylinder(spec.rows, spec.cols)
    if spec.family == 'cube':
        return _cube()
    if spec.family == 'random-d-degenerate':
        return _degenerate(spec.n, spec.d, rng)
    return _planar_bipartite(spec, rng)


def gen_instance(spec: GenSpec, g: Graph) -> ListInstance:
    """Lists for g under the family's list policy, checked feasible for the declared a."""
    if spec.k is None:
        raise InputError("an instance needs a colour count k")
    ordering = degeneracy_ordering(g)
    if spec.policy == 'uniform':
        inst = build_instance(g, k=spec.k, a=spec.a, ordering=ordering)
    else:
        a = 1 if spec.a is None else spec.a
        # seeded apart from the graph draw
        rng = np.random.default_rng([spec.seed, 1])
        lists = []
        for v in range(g.n):
            size = len(ordering.out_neighbours[v]) + a + 1
            if size > spec.k:
                raise InputError(f"vertex {v} needs {size} colours but k = {spec.k}")
            lists.append(sorted(int(c) for c in rng.choice(spec.k, size=size, replace=False)))
        inst = build_instance(g, lists=lists, a=a, ordering=ordering)
    require_feasible(inst)
    return inst


def gen_colouring(inst: ListInstance, seed: int) -> Colouring:
    """Greedy colouring under a seeded random preference order."""
    rng = np.random.default_rng(seed)
    preference = [int(c) for c in rng.permutation(np.array(inst.colours, dtype=np.int64))]
    return greedy_colouring(inst, preference)
