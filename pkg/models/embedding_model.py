# models/embedding_model.py
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import networkx as nx

from models.graph_model import Graph
from utils.errors import InputError


@dataclass(frozen=True)
class Embedding:
    """Plane embedding of a graph with its face walks.

    rotation[v] is the counter-clockwise order of v's neighbours, kept in
    `plane` as a networkx PlanarEmbedding. A face walk arriving at v from u
    leaves along the neighbour that follows u in rotation[v].
    """

    graph: Graph
    rotation: tuple[tuple[int, ...], ...]
    faces: tuple[tuple[int, ...], ...]
    plane: nx.PlanarEmbedding = field(compare=False, repr=False)

    @property
    def face_sizes(self) -> tuple[int, ...]:
        return tuple(len(f) for f in self.faces)

    def face_incidence(self) -> dict[int, list[int]]:
        """Vertex -> ids of the faces through it, in face id order."""
        at: dict[int, list[int]] = {v: [] for v in range(self.graph.n)}
        for i, walk in enumerate(self.faces):
            for v in dict.fromkeys(walk):
                at[v].append(i)
        return at

    def is_plane(self) -> bool:
        """networkx's own structure and Euler check of the half-edge orders."""
        try:
            self.plane.check_structure()
        except nx.NetworkXException:
            return False
        return True

    def to_dict(self) -> dict:
        return {
            'rotation': [list(r) for r in self.rotation],
            'faces': [list(f) for f in self.faces],
            'face_sizes': list(self.face_sizes),
        }


def plane_embedding(rotation: Sequence[Sequence[int]]) -> nx.PlanarEmbedding:
    plane = nx.PlanarEmbedding()
    plane.add_nodes_from(range(len(rotation)))
    for v, order in enumerate(rotation):
        if not order:
            continue
        plane.add_half_edge_first(v, order[0])
        for prev, u in zip(order, order[1:]):
            plane.add_half_edge_ccw(v, u, prev)
    return plane


def ccw_order(plane: nx.PlanarEmbedding, v) -> list:
    return list(plane.neighbors_cw_order(v))[::-1]


def faces(g: Graph, rotation: Sequence[Sequence[int]]) -> Embedding:
    """Trace every face of the rotation system; each half-edge is used exactly once."""
    if len(rotation) != g.n:
        raise InputError(f"rotation has {len(rotation)} entries for {g.n} vertices")
    rot = tuple(tuple(int(u) for u in r) for r in rotation)
    for v in range(g.n):
        if len(rot[v]) != g.degree(v) or set(rot[v]) != g.neighbours(v):
            raise InputError(f"rotation at vertex {v} is not a permutation of its neighbours")
    plane = plane_embedding(rot)
    walks = []
    marked: set[tuple[int, int]] = set()
    for u in range(g.n):
        for v in rot[u]:
            if (u, v) not in marked:
                walks.append(tuple(plane.traverse_face(u, v, mark_half_edges=marked)))
    return Embedding(g, rot, tuple(walks), plane)


def forest_embedding(g: Graph) -> Embedding:
    """Sorted-neighbour rotation; any rotation of a forest is plane."""
    if not g.is_forest():
        raise InputError("only a forest can be embedded without a rotation system")
    return faces(g, [sorted(g.neighbours(v)) for v in range(g.n)])


def relabelled(plane: nx.PlanarEmbedding, origin: Iterable[int]) -> Embedding:
    """Embedding of the surviving vertices renumbered 0.. in the order of origin."""
    origin = tuple(origin)
    local = {old: new for new, old in enumerate(origin)}
    rotation = [tuple(local[u] for u in ccw_order(plane, old)) for old in origin]
    edges = {(min(v, u), max(v, u)) for v, r in enumerate(rotation) for u in r}
    return faces(Graph.from_edges(len(origin), edges), rotation)


@dataclass(frozen=True)
class ComponentAudit:
    vertices: int
    edges: int
    faces: int
    weight: int

    @property
    def ok(self) -> bool:
        return self.vertices - self.edges + self.faces == 2 and self.weight == -8


@dataclass(frozen=True)
class EulerAudit:
    components: tuple[ComponentAudit, ...] = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.components)

    @property
    def total_weight(self) -> int:
        return sum(c.weight for c in self.components)

    def to_dict(self) -> dict:
        return {
            'ok': self.ok,
            'total_weight': self.total_weight,
            'components': [
                {'n': c.vertices, 'edges': c.edges, 'faces': c.faces,
                 'weight': c.weight, 'ok': c.ok}
                for c in self.components
            ],
        }


def audit_embedding(emb: Embedding) -> EulerAudit:
    """Euler's formula and the vertex/face weight sum, per connected component.

    Weights are deg(v) - 4 on vertices and size(f) - 4 on faces; on a plane
    component they add up to -8. An isolated vertex counts one face of size 0.
    """
    g = emb.graph
    component_of = {}
    comps = g.components()
    for i, comp in enumerate(comps):
        for v in comp:
            component_of[v] = i
    face_count = [0] * len(comps)
    face_weight = [0] * len(comps)
    for walk in emb.faces:
        i = component_of[walk[0]]
        face_count[i] += 1
        face_weight[i] += len(walk) - 4
    audits = []
    for i, comp in enumerate(comps):
        edges = sum(g.degree(v) for v in comp) // 2
        count, weight = face_count[i], face_weight[i]
        if edges == 0:
            count, weight = 1, -4
        weight += sum(g.degree(v) - 4 for v in comp)
        audits.append(ComponentAudit(len(comp), edges, count, weight))
    return EulerAudit(tuple(audits))


def euler_audit(emb: Embedding) -> bool:
    """True iff every component satisfies n - |E| + |F| = 2 and weighs -8."""
    return audit_embedding(emb).ok


def delete_vertex(emb: Embedding, v: int) -> tuple[Embedding, tuple[int, ...]]:
    """Remove v, keeping the cyclic order of everything else.

    Returns the new embedding and the tuple mapping new ids to old ids.
    """
    plane = emb.plane.copy()
    plane.remove_node(v)
    origin = tuple(u for u in range(emb.graph.n) if u != v)
    return relabelled(plane, origin), origin
