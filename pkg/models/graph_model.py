# models/graph_model.py
from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Iterable

import networkx as nx

from utils.errors import InputError

# A colouring is a tuple indexed by vertex id.
Colouring = tuple[int, ...]


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on the vertices 0..n-1."""

    n: int
    edges: frozenset[tuple[int, int]]
    adjacency: tuple[frozenset[int], ...]

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Iterable[int]]) -> Graph:
        """Build a graph, rejecting loops, parallel edges and bad endpoints."""
        if n < 0:
            raise InputError(f"vertex count must be non-negative, got {n}")
        neighbours: list[set[int]] = [set() for _ in range(n)]
        normalized: set[tuple[int, int]] = set()
        for edge in edges:
            pair = tuple(edge)
            if len(pair) != 2:
                raise InputError(f"edge {list(pair)} does not have two endpoints")
            u, v = int(pair[0]), int(pair[1])
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            key = (min(u, v), max(u, v))
            if key in normalized:
                raise InputError(f"parallel edge ({key[0]}, {key[1]})")
            normalized.add(key)
            neighbours[u].add(v)
            neighbours[v].add(u)
        return cls(n, frozenset(normalized), tuple(frozenset(s) for s in neighbours))

    @classmethod
    def empty(cls, n: int = 0) -> Graph:
        return cls.from_edges(n, ())

    def neighbours(self, v: int) -> frozenset[int]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def induced(self, keep: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
        """Induced subgraph on `keep`, relabelled 0..m-1 in increasing id order.

        Returns the subgraph and the tuple mapping new ids to old ids.
        """
        origin = tuple(sorted(set(keep)))
        local = {old: new for new, old in enumerate(origin)}
        edges = [
            (local[u], local[v])
            for u, v in self.edges
            if u in local and v in local
        ]
        return Graph.from_edges(len(origin), edges), origin

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges)
        return g

    def components(self) -> list[list[int]]:
        """Connected components, each sorted, ordered by smallest vertex."""
        comps = [sorted(c) for c in nx.connected_components(self.to_networkx())]
        return sorted(comps, key=lambda c: c[0])

    def is_bipartite(self) -> bool:
        return nx.is_bipartite(self.to_networkx())

    def is_forest(self) -> bool:
        return self.n == 0 or nx.is_forest(self.to_networkx())


@dataclass(frozen=True)
class DegeneracyOrdering:
    """Vertex ordering v_1..v_n with the later-neighbour sets d+(v)."""

    order: tuple[int, ...]
    position: tuple[int, ...]
    out_neighbours: tuple[frozenset[int], ...]
    d: int

    @property
    def outdeg(self) -> tuple[int, ...]:
        return tuple(len(s) for s in self.out_neighbours)

    @classmethod
    def from_order(cls, g: Graph, order: Iterable[int]) -> DegeneracyOrdering:
        """Wrap an explicit ordering of g, computing the out-neighbour sets."""
        order = tuple(order)
        if sorted(order) != list(range(g.n)):
            raise InputError("ordering is not a permutation of the vertices")
        position = [0] * g.n
        for i, v in enumerate(order):
            position[v] = i
        out = tuple(
            frozenset(u for u in g.neighbours(v) if position[u] > position[v])
            for v in range(g.n)
        )
        d = max((len(s) for s in out), default=0)
        return cls(order, tuple(position), out, d)

    def restricted(self, g: Graph, origin: tuple[int, ...]) -> DegeneracyOrdering:
        """The induced ordering on a subgraph whose vertex i was origin[i] here."""
        local = {old: new for new, old in enumerate(origin)}
        order = [local[v] for v in self.order if v in local]
        return DegeneracyOrdering.from_order(g, order)


def degeneracy_ordering(g: Graph) -> DegeneracyOrdering:
    """Min-degree peeling order; ties go to the lowest vertex id.

    v_1 is the first vertex removed, so every vertex has at most d neighbours
    later in the order, d being the exact degeneracy of g.
    """
    degree = [g.degree(v) for v in range(g.n)]
    heap = [(degree[v], v) for v in range(g.n)]
    heapq.heapify(heap)
    removed = [False] * g.n
    order: list[int] = []
    while heap:
        deg, v = heapq.heappop(heap)
        if removed[v] or deg != degree[v]:
            continue
        removed[v] = True
        order.append(v)
        for u in g.neighbours(v):
            if not removed[u]:
                degree[u] -= 1
                heapq.heappush(heap, (degree[u], u))
    return DegeneracyOrdering.from_order(g, order)


def is_proper(g: Graph, c: Colouring) -> bool:
    """True iff no edge of g is monochromatic under c."""
    if len(c) != g.n:
        raise InputError(f"colouring has {len(c)} entries for {g.n} vertices")
    return all(c[u] != c[v] for u, v in g.edges)
