# services/oracle_service.py
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterator

from config.settings import settings
from models.graph_model import Colouring
from models.instance_model import ListInstance, require_colouring

OK = 'ok'
DISCONNECTED = 'disconnected'
CAP_EXCEEDED = 'cap_exceeded'


@dataclass(frozen=True)
class SearchResult:
    status: str
    value: int | bool | None = None
    visited: int = 0

    @property
    def ok(self) -> bool:
        return self.status == OK

    def to_dict(self) -> dict:
        return {'status': self.status, 'value': self.value, 'visited': self.visited}


class StateSpace:
    """Proper list colourings of an instance, keyed by a mixed-radix integer
    over per-vertex list indices."""

    def __init__(self, inst: ListInstance):
        self.inst = inst
        self.lists = [tuple(sorted(lst)) for lst in inst.lists]
        self.index = [{c: i for i, c in enumerate(lst)} for lst in self.lists]
        self.stride = []
        acc = 1
        for lst in self.lists:
            self.stride.append(acc)
            acc *= max(len(lst), 1)
        self.size = acc

    def encode(self, c: Colouring) -> int:
        return sum(self.index[v][c[v]] * self.stride[v] for v in range(self.inst.n))

    def decode(self, key: int) -> Colouring:
        colour = []
        for lst in self.lists:
            key, i = divmod(key, len(lst))
            colour.append(lst[i])
        return tuple(colour)

    def neighbours(self, key: int) -> Iterator[int]:
        """Keys of every colouring one proper recolouring away."""
        c = self.decode(key)
        adjacency = self.inst.graph.adjacency
        for v in range(self.inst.n):
            taken = {c[u] for u in adjacency[v]}
            base = key - self.index[v][c[v]] * self.stride[v]
            for i, colour in enumerate(self.lists[v]):
                if colour != c[v] and colour not in taken:
                    yield base + i * self.stride[v]

    def all_keys(self, cap: int) -> list[int] | None:
        """All proper colourings by backtracking, or None past `cap` states."""
        n = self.inst.n
        adjacency = self.inst.graph.adjacency
        found: list[int] = []
        colour: list[int | None] = [None] * n

        def extend(v: int, key: int) -> bool:
            if v == n:
                found.append(key)
                return len(found) <= cap
            for i, c in enumerate(self.lists[v]):
                if any(colour[u] == c for u in adjacency[v] if u < v):
                    continue
                colour[v] = c
                if not extend(v + 1, key + i * self.stride[v]):
                    return False
            colour[v] = None
            return True

        if not extend(0, 0):
            return None
        return found


def _cap(cap: int | None) -> int:
    return settings.state_cap if cap is None else cap


def bfs_distance(inst: ListInstance, alpha: Colouring, beta: Colouring,
                 cap: int | None = None) -> SearchResult:
    """Exact recolouring distance by bidirectional BFS.

    The smaller frontier grows one full layer at a time; the answer is settled
    once a layer meets the other side.
    """
    require_colouring(inst, alpha, 'alpha')
    require_colouring(inst, beta, 'beta')
    cap = _cap(cap)
    space = StateSpace(inst)
    source, target = space.encode(alpha), space.encode(beta)
    if source == target:
        return SearchResult(OK, 0, 1)
    near = {source: 0}
    far = {target: 0}
    near_frontier, far_frontier = [source], [target]
    while near_frontier and far_frontier:
        if len(near_frontier) > len(far_frontier):
            near, far = far, near
            near_frontier, far_frontier = far_frontier, near_frontier
        best = None
        layer = []
        for key in near_frontier:
            depth = near[key] + 1
            for nxt in space.neighbours(key):
                if nxt in near:
                    continue
                near[nxt] = depth
                layer.append(nxt)
                if nxt in far and (best is None or depth + far[nxt] < best):
                    best = depth + far[nxt]
        visited = len(near) + len(far)
        if best is not None:
            return SearchResult(OK, best, visited)
        if visited > cap:
            return SearchResult(CAP_EXCEEDED, None, visited)
        near_frontier = layer
    return SearchResult(DISCONNECTED, None, len(near) + len(far))


def _eccentricity(space: StateSpace, source: int) -> tuple[int, int]:
    """(number of states reached, largest BFS depth) from source."""
    dist = {source: 0}
    queue = deque([source])
    far = 0
    while queue:
        key = queue.popleft()
        for nxt in space.neighbours(key):
            if nxt not in dist:
                dist[nxt] = dist[key] + 1
                far = max(far, dist[nxt])
                queue.append(nxt)
    return len(dist), far


def exact_diameter(inst: ListInstance, cap: int | None = None) -> SearchResult:
    """Largest shortest-path distance over all pairs of proper colourings."""
    cap = _cap(cap)
    space = StateSpace(inst)
    states = space.all_keys(cap)
    if states is None:
        return SearchResult(CAP_EXCEEDED, None, cap)
    diameter = 0
    for key in states:
        reached, far = _eccentricity(space, key)
        if reached != len(states):
            return SearchResult(DISCONNECTED, None, len(states))
        diameter = max(diameter, far)
    return SearchResult(OK, diameter, len(states))


def is_connected(inst: ListInstance, cap: int | None = None) -> SearchResult:
    """One BFS must reach every proper colouring counted by backtracking."""
    cap = _cap(cap)
    space = StateSpace(inst)
    states = space.all_keys(cap)
    if states is None:
        return SearchResult(CAP_EXCEEDED, None, cap)
    if not states:
        return SearchResult(OK, True, 0)
    reached, _ = _eccentricity(space, states[0])
    return SearchResult(OK, reached == len(states), len(states))
