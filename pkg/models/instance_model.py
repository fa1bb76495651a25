# models/instance_model.py
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from models.graph_model import Colouring, DegeneracyOrdering, Graph, degeneracy_ordering
from utils.errors import InfeasibleError, InputError, PreconditionError


@dataclass(frozen=True)
class ListInstance:
    """Graph, ordering, per-vertex colour lists and the slack parameter a.

    `origin[i]` is the id vertex i had in the instance this one was restricted
    from, so sequences found here lift to the parent by relabelling.
    """

    graph: Graph
    ordering: DegeneracyOrdering
    lists: tuple[frozenset[int], ...]
    a: int
    origin: tuple[int, ...] = field(default=())

    def __post_init__(self):
        if len(self.lists) != self.graph.n:
            raise InputError(f"{len(self.lists)} lists for {self.graph.n} vertices")
        if self.a < 0:
            raise InputError(f"slack a must be non-negative, got {self.a}")
        if any(c < 0 for lst in self.lists for c in lst):
            raise InputError("colours must be non-negative integers")
        if not self.origin:
            object.__setattr__(self, 'origin', tuple(range(self.graph.n)))

    @property
    def n(self) -> int:
        return self.graph.n

    @cached_property
    def colours(self) -> tuple[int, ...]:
        """Sorted union of all lists."""
        return tuple(sorted(set().union(*self.lists))) if self.lists else ()

    @property
    def k(self) -> int:
        return len(self.colours)

    def out_neighbours(self, v: int) -> frozenset[int]:
        return self.ordering.out_neighbours[v]

    def with_slack(self, a: int) -> ListInstance:
        return ListInstance(self.graph, self.ordering, self.lists, a, self.origin)

    def respects(self, c: Colouring) -> bool:
        """True iff c is a proper colouring with c(v) in lists(v)."""
        if len(c) != self.n:
            return False
        if any(c[v] not in self.lists[v] for v in range(self.n)):
            return False
        return all(c[u] != c[v] for u, v in self.graph.edges)


def max_slack(g: Graph, ordering: DegeneracyOrdering, lists: Sequence[Iterable[int]]) -> int:
    """Largest a for which the lists are a-feasible (may be negative)."""
    if g.n == 0:
        return 0
    return min(len(set(lists[v])) - len(ordering.out_neighbours[v]) - 1 for v in range(g.n))


def build_instance(g: Graph, lists: Sequence[Iterable[int]] | None = None,
                   k: int | None = None, a: int | None = None,
                   ordering: DegeneracyOrdering | None = None) -> ListInstance:
    """Build a ListInstance from explicit lists or a classical colour count.

    With `k` every list is {0..k-1}. Without `a` the largest feasible slack is
    used, clamped at 0.
    """
    if (lists is None) == (k is None):
        raise InputError("give exactly one of explicit lists or a colour count k")
    ordering = ordering or degeneracy_ordering(g)
    if lists is None:
        if k < 1:
            raise InputError(f"colour count must be positive, got {k}")
        frozen = tuple(frozenset(range(k)) for _ in range(g.n))
    else:
        if len(lists) != g.n:
            raise InputError(f"{len(lists)} lists for {g.n} vertices")
        frozen = tuple(frozenset(int(c) for c in lst) for lst in lists)
    if a is None:
        a = max(0, max_slack(g, ordering, frozen))
    return ListInstance(g, ordering, frozen, a)


def classical_instance(g: Graph, k: int) -> ListInstance:
    """Every list {0..k-1}, a = k - 1 - max outdeg clamped at 0."""
    return build_instance(g, k=k)


def check_feasible(inst: ListInstance) -> bool:
    """True iff |lists(v)| >= outdeg(v) + a + 1 for every vertex."""
    return all(
        len(inst.lists[v]) >= len(inst.out_neighbours(v)) + inst.a + 1
        for v in range(inst.n)
    )


def require_feasible(inst: ListInstance) -> None:
    if not check_feasible(inst):
        bad = next(
            v for v in range(inst.n)
            if len(inst.lists[v]) < len(inst.out_neighbours(v)) + inst.a + 1
        )
        raise PreconditionError(
            f"list assignment is not {inst.a}-feasible at vertex {bad}: "
            f"|L| = {len(inst.lists[bad])}, outdeg = {len(inst.out_neighbours(bad))}"
        )


def require_colouring(inst: ListInstance, c: Colouring, name: str = 'colouring') -> None:
    if len(c) != inst.n:
        raise InputError(f"{name} has {len(c)} entries for {inst.n} vertices")
    if not inst.respects(c):
        raise PreconditionError(f"{name} is not a proper list colouring")


def greedy_colouring(inst: ListInstance, preference: Sequence[int]) -> Colouring:
    """First-fit from v_n down to v_1 along the preference order.

    When v is coloured only its out-neighbours already carry colours, so on an
    a-feasible instance the last a colours of the preference are never used.
    """
    rank = {c: i for i, c in enumerate(preference)}
    missing = set(inst.colours) - rank.keys()
    if missing:
        raise PreconditionError(f"preference order misses colours {sorted(missing)}")
    colour: list[int | None] = [None] * inst.n
    for v in reversed(inst.ordering.order):
        taken = {colour[u] for u in inst.graph.neighbours(v) if colour[u] is not None}
        candidates = [c for c in inst.lists[v] if c not in taken]
        if not candidates:
            raise InfeasibleError(f"no admissible colour left for vertex {v}")
        colour[v] = min(candidates, key=rank.__getitem__)
    return tuple(colour)


def restrict_instance(inst: ListInstance, c: Colouring, keep: Iterable[int],
                      drop: Iterable[int] = ()) -> ListInstance:
    """Freeze the vertices outside `keep` at their colours under c.

    Each kept vertex loses the colours its deleted neighbours hold, and every
    colour of `drop`. Sequences on the result relabelled through `origin` are
    valid on the parent with the deleted vertices left untouched.
    """
    keep = set(keep)
    drop = frozenset(drop)
    sub, origin = inst.graph.induced(keep)
    lists = []
    for old in origin:
        frozen = {c[u] for u in inst.graph.neighbours(old) if u not in keep}
        lists.append(inst.lists[old] - frozen - drop)
    ordering = inst.ordering.restricted(sub, origin)
    return ListInstance(sub, ordering, tuple(lists), inst.a, origin)


def restrict_colouring(c: Colouring, origin: Sequence[int]) -> Colouring:
    return tuple(c[old] for old in origin)
