# models/sequence_model.py
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence

from models.graph_model import Colouring
from models.instance_model import ListInstance
from utils.errors import InvariantViolation


class Step(NamedTuple):
    v: int
    c: int


@dataclass(frozen=True)
class RecoloringSequence:
    """Ordered single-vertex recolourings."""

    steps: tuple[Step, ...] = ()

    @classmethod
    def of(cls, steps: Iterable[Iterable[int]]) -> RecoloringSequence:
        return cls(tuple(Step(int(v), int(c)) for v, c in steps))

    def __len__(self) -> int:
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)

    @property
    def total_length(self) -> int:
        return len(self.steps)

    @property
    def per_vertex_count(self) -> Counter:
        return Counter(step.v for step in self.steps)

    def max_per_vertex(self) -> int:
        return max(self.per_vertex_count.values(), default=0)

    def per_vertex_list(self, n: int) -> list[int]:
        counts = self.per_vertex_count
        return [counts.get(v, 0) for v in range(n)]

    def relabel(self, origin: Sequence[int]) -> RecoloringSequence:
        """Lift a sequence from a restricted instance to its parent ids."""
        return RecoloringSequence(tuple(Step(origin[s.v], s.c) for s in self.steps))

    def __add__(self, other: RecoloringSequence) -> RecoloringSequence:
        return RecoloringSequence(self.steps + other.steps)

    def apply(self, start: Colouring) -> Colouring:
        colour = list(start)
        for v, c in self.steps:
            colour[v] = c
        return tuple(colour)

    def inverted(self, start: Colouring) -> RecoloringSequence:
        """The sequence played backwards from its final colouring to `start`.

        Each reversed step restores the colour the vertex had before that step.
        """
        colour = list(start)
        previous = []
        for v, c in self.steps:
            previous.append(Step(v, colour[v]))
            colour[v] = c
        return RecoloringSequence(tuple(reversed(previous)))

    def compact(self, start: Colouring) -> RecoloringSequence:
        """Merge runs of consecutive steps on one vertex into a single step."""
        colour = list(start)
        out: list[Step] = []
        i = 0
        steps = self.steps
        while i < len(steps):
            v = steps[i].v
            j = i
            while j + 1 < len(steps) and steps[j + 1].v == v:
                j += 1
            final = steps[j].c
            if final != colour[v]:
                out.append(Step(v, final))
                colour[v] = final
            i = j + 1
        if len(out) == len(steps):
            return self
        # A dropped run can leave two runs of the same vertex adjacent.
        return RecoloringSequence(tuple(out)).compact(start)

    def to_dict(self, n: int) -> dict:
        return {
            'steps': [{'v': s.v, 'c': s.c} for s in self.steps],
            'meta': {'length': self.total_length, 'per_vertex': self.per_vertex_list(n)},
        }


class SequenceBuilder:
    """Mutable accumulator that tracks the current colouring as steps arrive."""

    def __init__(self, start: Colouring):
        self.colour = list(start)
        self.steps: list[Step] = []

    def recolour(self, v: int, c: int) -> None:
        if self.colour[v] == c:
            raise InvariantViolation(f"null step: vertex {v} already has colour {c}")
        self.steps.append(Step(v, c))
        self.colour[v] = c

    def recolour_if_needed(self, v: int, c: int) -> None:
        if self.colour[v] != c:
            self.recolour(v, c)

    def extend(self, seq: RecoloringSequence | Iterable[Step]) -> None:
        for v, c in seq:
            self.recolour(v, c)

    @property
    def current(self) -> Colouring:
        return tuple(self.colour)

    def build(self) -> RecoloringSequence:
        return RecoloringSequence(tuple(self.steps))


@dataclass(frozen=True)
class ValidationReport:
    valid: bool
    first_bad_index: int | None
    reason: str | None
    total_length: int
    per_vertex: dict[int, int] = field(default_factory=dict)
    reaches_target: bool = False

    @property
    def ok(self) -> bool:
        return self.valid and self.reaches_target

    def to_dict(self) -> dict:
        return {
            'valid': self.valid,
            'first_bad_index': self.first_bad_index,
            'reason': self.reason,
            'length': self.total_length,
            'per_vertex': {str(v): k for v, k in sorted(self.per_vertex.items())},
            'reaches_target': self.reaches_target,
        }


def validate_sequence(inst: ListInstance, start: Colouring, seq: RecoloringSequence,
                      target: Colouring | None = None) -> ValidationReport:
    """Replay seq from start, reporting the first step that breaks properness.

    A step must change exactly one vertex to a different colour from its list
    with no neighbour already holding that colour. Problems are reported, never
    raised.
    """
    counts = dict(seq.per_vertex_count)
    length = seq.total_length

    def report(valid, index=None, reason=None, reaches=False):
        return ValidationReport(valid, index, reason, length, counts, reaches)

    if len(start) != inst.n:
        return report(False, None, f"start colouring has {len(start)} entries for {inst.n} vertices")
    if not inst.respects(start):
        return report(False, None, "start colouring is not a proper list colouring")
    colour = list(start)
    for i, (v, c) in enumerate(seq.steps):
        if not 0 <= v < inst.n:
            return report(False, i, f"vertex {v} out of range")
        if colour[v] == c:
            return report(False, i, f"null step: vertex {v} already has colour {c}")
        if c not in inst.lists[v]:
            return report(False, i, f"colour {c} not in the list of vertex {v}")
        clash = next((u for u in inst.graph.neighbours(v) if colour[u] == c), None)
        if clash is not None:
            return report(False, i, f"vertex {v} and neighbour {clash} both coloured {c}")
        colour[v] = c
    reaches = target is not None and len(target) == inst.n and tuple(colour) == tuple(target)
    return report(True, None, None, reaches)
