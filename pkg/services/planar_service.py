# services/planar_service.py
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from models.embedding_model import Embedding, audit_embedding, delete_vertex, relabelled
from models.graph_model import Colouring, Graph, is_proper
from models.instance_model import build_instance, restrict_colouring
from models.sequence_model import RecoloringSequence, SequenceBuilder, Step, validate_sequence
from utils.errors import InputError, InvariantViolation, PreconditionError

PALETTE = (0, 1, 2, 3, 4)

EMPTY = RecoloringSequence()


@dataclass(frozen=True)
class LevelMap:
    level: tuple[int, ...]

    @property
    def depth(self) -> int:
        return max(self.level, default=0)

    def to_dict(self) -> dict:
        return {'level': list(self.level), 'depth': self.depth}


@dataclass(frozen=True)
class CaseI:
    v: int
    kind: str = 'CaseI'

    def to_dict(self) -> dict:
        return {'kind': self.kind, 'v': self.v}


@dataclass(frozen=True)
class CaseII:
    """v has degree 3 and sits on the 4-face (v, v1, w, v2); u is its third neighbour."""

    v: int
    u: int
    w: int
    v1: int
    v2: int
    face: int
    kind: str = 'CaseII'

    def to_dict(self) -> dict:
        return {'kind': self.kind, 'v': self.v, 'u': self.u, 'w': self.w,
                'v1': self.v1, 'v2': self.v2, 'face': self.face}


Configuration = Union[CaseI, CaseII]


def levels(g: Graph) -> LevelMap:
    """Peel the graph in strata: each stratum is every vertex of degree <= 3
    in what is left after removing the earlier strata."""
    level = [0] * g.n
    degree = [g.degree(v) for v in range(g.n)]
    remaining = set(range(g.n))
    current = 0
    while remaining:
        current += 1
        stratum = [v for v in sorted(remaining) if degree[v] <= 3]
        if not stratum:
            raise PreconditionError(
                f"graph is not 3-degenerate: {len(remaining)} vertices keep degree >= 4"
            )
        for v in stratum:
            level[v] = current
        remaining.difference_update(stratum)
        for v in stratum:
            for u in g.neighbours(v):
                if u in remaining:
                    degree[u] -= 1
    result = LevelMap(tuple(level))
    _check_levels(g, result)
    return result


def _check_levels(g: Graph, lm: LevelMap) -> None:
    for i in range(1, lm.depth + 1):
        alive = {v for v in range(g.n) if lm.level[v] >= i}
        for v in alive:
            deg = sum(1 for u in g.neighbours(v) if u in alive)
            if lm.level[v] == i and deg > 3:
                raise InvariantViolation(f"vertex {v} of level {i} keeps degree {deg}")
            if lm.level[v] > i and deg < 4:
                raise InvariantViolation(f"vertex {v} above level {i} has degree {deg} there")


def _face_corners(walk: tuple[int, ...], v: int) -> tuple[int, int, int] | None:
    if len(walk) != 4 or len(set(walk)) != 4:
        return None
    i = walk.index(v)
    return walk[(i + 1) % 4], walk[(i + 2) % 4], walk[(i + 3) % 4]


def find_configuration(emb: Embedding) -> Configuration:
    """A vertex of degree <= 2 (lowest id), else a degree-3 vertex whose
    neighbours all have level <= 2 and which lies on a face of size four."""
    g = emb.graph
    low = next((v for v in range(g.n) if g.degree(v) <= 2), None)
    if low is not None:
        return CaseI(low)
    lm = levels(g)
    at = emb.face_incidence()
    for v in range(g.n):
        if g.degree(v) != 3 or any(lm.level[u] > 2 for u in g.neighbours(v)):
            continue
        for fid in at[v]:
            corners = _face_corners(emb.faces[fid], v)
            if corners is None:
                continue
            v1, w, v2 = corners
            u = next(iter(g.neighbours(v) - {v1, v2}))
            return CaseII(v, u, w, v1, v2, fid)
    raise InvariantViolation("no reducible configuration found in a graph of minimum degree 3")


@dataclass(frozen=True)
class Discharge:
    vertex: tuple[Fraction, ...]
    face: tuple[Fraction, ...]

    @property
    def total(self) -> Fraction:
        return sum(self.vertex, Fraction(0)) + sum(self.face, Fraction(0))

    @property
    def deficient(self) -> list[int]:
        return [v for v, charge in enumerate(self.vertex) if charge < 0]

    def to_dict(self) -> dict:
        return {
            'vertex': [str(x) for x in self.vertex],
            'face': [str(x) for x in self.face],
            'total': str(self.total),
            'deficient': self.deficient,
        }


def discharge(emb: Embedding) -> Discharge:
    """Charges deg(v) - 4 and size(f) - 4 after redistribution.

    Every vertex of level >= 3 gives 1 to each degree-3 neighbour and every
    face of size >= 6 gives 1/3 per incidence. Afterwards only vertices of
    degree <= 2 and degree-3 vertices that qualify for CaseII can stay
    negative.
    """
    g = emb.graph
    lm = levels(g)
    vertex = [Fraction(g.degree(v) - 4) for v in range(g.n)]
    face = [Fraction(len(walk) - 4) for walk in emb.faces]
    for v in range(g.n):
        if lm.level[v] < 3:
            continue
        for u in g.neighbours(v):
            if g.degree(u) == 3:
                vertex[v] -= 1
                vertex[u] += 1
    for i, walk in enumerate(emb.faces):
        if len(walk) < 6:
            continue
        for v in walk:
            face[i] -= Fraction(1, 3)
            vertex[v] += Fraction(1, 3)
    return Discharge(tuple(vertex), tuple(face))


def _require_palette(g: Graph, c: Colouring, name: str) -> None:
    if len(c) != g.n:
        raise InputError(f"{name} has {len(c)} entries for {g.n} vertices")
    bad = next((x for x in c if x not in PALETTE), None)
    if bad is not None:
        raise InputError(f"{name} uses colour {bad} outside 0..4")
    if not is_proper(g, c):
        raise PreconditionError(f"{name} is not a proper colouring")


def _require_case_ii(g: Graph, config: CaseII) -> None:
    v, w = config.v, config.w
    if w in g.neighbours(v) or v == w:
        raise PreconditionError(f"merge endpoints {v} and {w} must be distinct and non-adjacent")
    shared = g.neighbours(v) & g.neighbours(w)
    if config.v1 not in shared or config.v2 not in shared:
        raise PreconditionError("v1 and v2 must be common neighbours of v and w")
    if config.u not in g.neighbours(v) or config.u in (config.v1, config.v2, w):
        raise PreconditionError(f"u = {config.u} is not the third neighbour of v = {v}")


def equalize_vw(emb: Embedding, config: CaseII, alpha: Colouring) -> tuple[Colouring, RecoloringSequence]:
    """Recolour so that v and w end up with the same colour.

    Only v, u and the degree <= 3 neighbours of u move; each at most twice.
    """
    g = emb.graph
    _require_palette(g, alpha, 'alpha')
    _require_case_ii(g, config)
    v, u, w = config.v, config.u, config.w
    builder = SequenceBuilder(alpha)
    target = alpha[w]
    if alpha[v] == target:
        return tuple(alpha), EMPTY
    if alpha[u] == target:
        heavy = {alpha[y] for y in g.neighbours(u) if g.degree(y) > 3}
        c = min(x for x in PALETTE if x != target and x not in heavy)
        for y in sorted(g.neighbours(u)):
            if g.degree(y) <= 3 and builder.colour[y] == c:
                taken = {builder.colour[z] for z in g.neighbours(y)}
                builder.recolour(y, min(x for x in PALETTE if x != c and x not in taken))
        builder.recolour(u, c)
    builder.recolour_if_needed(v, target)
    seq = builder.build()
    if seq.max_per_vertex() > 2:
        raise InvariantViolation("equalizing recoloured a vertex more than twice")
    return builder.current, seq


@dataclass(frozen=True)
class MergeResult:
    """Contracted embedding; vertex i of it was origin[i], and x stands for v and w."""

    embedding: Embedding
    origin: tuple[int, ...]
    x: int
    v: int
    w: int

    def lift(self, seq: RecoloringSequence) -> RecoloringSequence:
        steps: list[Step] = []
        for i, c in seq:
            if i == self.x:
                steps.extend((Step(self.v, c), Step(self.w, c)))
            else:
                steps.append(Step(self.origin[i], c))
        return RecoloringSequence(tuple(steps))


def merge_vertices(emb: Embedding, v: int, w: int, v1: int, v2: int) -> MergeResult:
    """Identify v and w across their common 4-face (v, v1, w, v2).

    w's neighbours strictly after v2 and before v1 in its rotation are joined
    to v right after v2, each taking w's place in its own rotation. Where v
    and w share a neighbour the edge coming from v survives at both ends.
    """
    g = emb.graph
    rot_v, rot_w = emb.rotation[v], emb.rotation[w]
    if v2 not in rot_w or v1 not in rot_w or v1 not in rot_v or v2 not in rot_v:
        raise PreconditionError(f"{v1} and {v2} must be neighbours of both {v} and {w}")
    shared = g.neighbours(v) & g.neighbours(w)
    i = rot_w.index(v2)
    between = []
    for step in range(1, len(rot_w)):
        y = rot_w[(i + step) % len(rot_w)]
        if y == v1:
            break
        if y not in shared:
            between.append(y)

    plane = emb.plane.copy()
    ref = v2
    for y in between:
        plane.add_half_edge_ccw(v, y, ref)
        plane.add_half_edge_ccw(y, v, w)
        ref = y
    plane.remove_node(w)
    origin = tuple(y for y in range(g.n) if y != w)
    contracted = relabelled(plane, origin)
    if not contracted.graph.is_bipartite():
        raise InvariantViolation(f"merging {v} and {w} broke bipartiteness")
    audit = audit_embedding(contracted)
    if not audit.ok:
        raise InvariantViolation(f"merging {v} and {w} broke the embedding: {audit.to_dict()}")
    return MergeResult(contracted, origin, origin.index(v), v, w)


def merge(emb: Embedding, config: CaseII) -> MergeResult:
    _require_case_ii(emb.graph, config)
    return merge_vertices(emb, config.v, config.w, config.v1, config.v2)


def _lift_low_degree(g: Graph, v: int, alpha: Colouring, beta: Colouring,
                     inner: RecoloringSequence) -> RecoloringSequence:
    """Thread v through the moves of its at most two neighbours.

    When a neighbour is about to take v's colour, v moves to the smallest
    colour avoiding its neighbours now and the next two neighbour moves.
    """
    nbrs = g.neighbours(v)
    steps = inner.steps
    touching = [i for i, s in enumerate(steps) if s.v in nbrs]
    builder = SequenceBuilder(alpha)
    seen = 0
    for x, c in steps:
        if x in nbrs:
            if c == builder.colour[v]:
                upcoming = {steps[j].c for j in touching[seen:seen + 2]}
                blocked = {builder.colour[y] for y in nbrs} | upcoming
                builder.recolour(v, min(col for col in PALETTE if col not in blocked))
            seen += 1
        builder.recolour(x, c)
    builder.recolour_if_needed(v, beta[v])
    return builder.build()


def _check_depth(seq: RecoloringSequence, m: int) -> None:
    if seq.max_per_vertex() > 4 * m:
        raise InvariantViolation(f"a vertex was recoloured {seq.max_per_vertex()} > 4*{m} times")
    if seq.total_length > 4 * m * m:
        raise InvariantViolation(f"sequence of length {seq.total_length} exceeds 4*{m}^2")


@dataclass(frozen=True)
class _Deletion:
    graph: Graph
    v: int
    origin: tuple[int, ...]
    alpha: Colouring
    beta: Colouring


@dataclass(frozen=True)
class _Merge:
    n: int
    merged: MergeResult
    towards: RecoloringSequence
    backwards: RecoloringSequence
    beta: Colouring


def _reduce(emb: Embedding, alpha: Colouring, beta: Colouring) -> RecoloringSequence:
    """Peel configurations until nothing is left, then lift back outwards."""
    frames: list[_Deletion | _Merge] = []
    while emb.graph.n:
        config = find_configuration(emb)
        if isinstance(config, CaseI):
            sub, origin = delete_vertex(emb, config.v)
            frames.append(_Deletion(emb.graph, config.v, origin, alpha, beta))
            emb = sub
        else:
            alpha_eq, towards = equalize_vw(emb, config, alpha)
            beta_eq, backwards = equalize_vw(emb, config, beta)
            merged = merge(emb, config)
            frames.append(_Merge(emb.graph.n, merged, towards, backwards, beta))
            alpha, beta, origin = alpha_eq, beta_eq, merged.origin
            emb = merged.embedding
        alpha = restrict_colouring(alpha, origin)
        beta = restrict_colouring(beta, origin)

    seq = EMPTY
    for frame in reversed(frames):
        if isinstance(frame, _Deletion):
            seq = _lift_low_degree(frame.graph, frame.v, frame.alpha, frame.beta,
                                   seq.relabel(frame.origin))
            _check_depth(seq, frame.graph.n)
        else:
            seq = frame.towards + frame.merged.lift(seq) + frame.backwards.inverted(frame.beta)
            _check_depth(seq, frame.n)
    return seq


def transform_planar_bipartite(emb: Embedding, alpha: Colouring, beta: Colouring) -> RecoloringSequence:
    """Recolour between two proper 5-colourings of a plane bipartite graph.

    Each component is reduced on its own; every vertex moves at most 4m times
    and the sequence has length at most 4m^2 on a component of m vertices.
    """
    g = emb.graph
    _require_palette(g, alpha, 'alpha')
    _require_palette(g, beta, 'beta')
    if not g.is_bipartite():
        raise PreconditionError("graph is not bipartite")
    audit = audit_embedding(emb)
    if not audit.ok or not emb.is_plane():
        raise PreconditionError(f"embedding fails the Euler audit: {audit.to_dict()}")

    total = EMPTY
    for comp in g.components():
        origin = tuple(sorted(comp))
        part = relabelled(emb.plane, origin)
        seq = _reduce(part, restrict_colouring(alpha, origin), restrict_colouring(beta, origin))
        total = total + seq.relabel(origin)

    total = total.compact(alpha)
    report = validate_sequence(build_instance(g, k=len(PALETTE), a=0), alpha, total, beta)
    if not report.ok:
        raise InvariantViolation(f"planar transform produced an invalid sequence: {report.reason}")
    return total
