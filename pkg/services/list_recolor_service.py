# services/list_recolor_service.py
"""Recolouring sequences between list colourings of degenerate graphs.

Every public entry point checks its preconditions, runs the internal
construction, and replays the result with validate_sequence before returning.
The internal helpers (underscored) trust their callers and only assert the
length guarantees, which are cheap.
"""
from __future__ import annotations

from typing import Iterable

from config.settings import settings
from models.graph_model import Colouring, Graph, degeneracy_ordering
from models.instance_model import (
    ListInstance,
    classical_instance,
    greedy_colouring,
    require_colouring,
    require_feasible,
    restrict_colouring,
    restrict_instance,
)
from models.sequence_model import RecoloringSequence, SequenceBuilder, Step, validate_sequence
from services.bound_service import bound_recursion, find_full_bound, transform_k_bound
from utils.errors import InvariantViolation, PreconditionError, UnsupportedError

EMPTY = RecoloringSequence()


# ---------------------------------------------------------------------------
# Full colour sets
# ---------------------------------------------------------------------------

def _satisfies(inst: ListInstance, c: Colouring, S: frozenset[int], v: int) -> bool:
    if c[v] in S:
        return True
    seen = {c[u] for u in inst.out_neighbours(v)}
    return all(s in seen or s not in inst.lists[v] for s in S)


def full_up_to(inst: ListInstance, c: Colouring, S: Iterable[int], i: int) -> bool:
    """True iff v_1..v_i each satisfy the full-set conditions for S."""
    S = frozenset(S)
    return all(_satisfies(inst, c, S, v) for v in inst.ordering.order[:i])


def is_full(inst: ListInstance, c: Colouring, S: Iterable[int]) -> bool:
    """Every vertex is coloured in S, or sees each s in S on an out-neighbour,
    or cannot take s at all."""
    return full_up_to(inst, c, S, inst.n)


def full_prefix(inst: ListInstance, c: Colouring, S: Iterable[int]) -> int:
    """Largest i such that c is full up to step i for S."""
    S = frozenset(S)
    for i, v in enumerate(inst.ordering.order):
        if not _satisfies(inst, c, S, v):
            return i
    return inst.n


def _pad(colours: Iterable[int], inst: ListInstance) -> frozenset[int]:
    """Extend a colour set to size a with the smallest unused colours."""
    chosen = set(colours)
    for c in inst.colours:
        if len(chosen) >= inst.a:
            break
        chosen.add(c)
    if len(chosen) != inst.a:
        raise InvariantViolation(f"cannot pad {sorted(chosen)} to {inst.a} colours")
    return frozenset(chosen)


# ---------------------------------------------------------------------------
# Bounds and self-checks
# ---------------------------------------------------------------------------

def _check_length(seq: RecoloringSequence, bound: int, what: str) -> None:
    if settings.check_bounds and seq.total_length > bound:
        raise InvariantViolation(f"{what}: length {seq.total_length} exceeds bound {bound}")


def _check_valid(inst: ListInstance, start: Colouring, seq: RecoloringSequence,
                 target: Colouring | None, what: str) -> None:
    report = validate_sequence(inst, start, seq, target)
    if not report.valid:
        raise InvariantViolation(f"{what} emitted an invalid step {report.first_bad_index}: {report.reason}")
    if target is not None and not report.reaches_target:
        raise InvariantViolation(f"{what} did not reach its target colouring")


def _require_slack(inst: ListInstance) -> None:
    if inst.a < 1:
        raise PreconditionError(f"slack a must be at least 1, got {inst.a}")


# ---------------------------------------------------------------------------
# Linear case: k <= 2a
# ---------------------------------------------------------------------------

def linear_transform(inst: ListInstance, alpha: Colouring, beta: Colouring) -> RecoloringSequence:
    """alpha -> beta recolouring every vertex at most k times (needs k <= 2a)."""
    _require_slack(inst)
    require_feasible(inst)
    require_colouring(inst, alpha, 'alpha')
    require_colouring(inst, beta, 'beta')
    if inst.k > 2 * inst.a:
        raise PreconditionError(f"linear transform needs k <= 2a (k = {inst.k}, a = {inst.a})")
    seq = _linear(inst, alpha, beta)
    _check_valid(inst, alpha, seq, beta, 'linear_transform')
    return seq


def _linear(inst: ListInstance, alpha: Colouring, beta: Colouring) -> RecoloringSequence:
    # Builds the sequence for the suffix v_i..v_n, i going down from n to 1;
    # adding v_i in front is the induction step that removes v_1.
    steps: list[Step] = []
    for v in reversed(inst.ordering.order):
        steps = _interleave(inst, v, alpha, beta[v], steps)
    seq = RecoloringSequence(tuple(steps))
    if settings.check_bounds and seq.max_per_vertex() > inst.k:
        raise InvariantViolation(
            f"linear transform recoloured a vertex {seq.max_per_vertex()} times, more than k = {inst.k}"
        )
    return seq.compact(alpha)


def _interleave(inst: ListInstance, v: int, alpha: Colouring, target: int,
                steps: list[Step]) -> list[Step]:
    nbrs = inst.out_neighbours(v)
    window = len(nbrs) + 1
    touching = [i for i, s in enumerate(steps) if s.v in nbrs]
    colour = dict((u, alpha[u]) for u in nbrs)
    current = alpha[v]
    out: list[Step] = []
    seen = 0
    for x, c in steps:
        if x in nbrs:
            if c == current:
                blocked = set(colour.values()) | {current}
                ahead = {steps[t].c for t in touching[seen:seen + window]}
                options = sorted(inst.lists[v] - blocked - ahead)
                if not options:
                    raise InvariantViolation(f"look-ahead found no free colour for vertex {v}")
                current = options[0]
                out.append(Step(v, current))
            colour[x] = c
            seen += 1
        out.append(Step(x, c))
    if current != target:
        out.append(Step(v, target))
    return out


# ---------------------------------------------------------------------------
# Changing the full set
# ---------------------------------------------------------------------------

def change_full(inst: ListInstance, alpha: Colouring, S: Iterable[int],
                Sprime: Iterable[int]) -> tuple[Colouring, RecoloringSequence]:
    """From alpha with S full, reach a colouring where Sprime is full."""
    _require_slack(inst)
    require_feasible(inst)
    require_colouring(inst, alpha, 'alpha')
    S, Sprime = frozenset(S), frozenset(Sprime)
    if len(S) != inst.a or len(Sprime) != inst.a:
        raise PreconditionError(f"full sets must have exactly a = {inst.a} colours")
    if not is_full(inst, alpha, S):
        raise PreconditionError(f"colour set {sorted(S)} is not full for alpha")
    result, seq = _change_full(inst, alpha, S, Sprime)
    _check_valid(inst, alpha, seq, result, 'change_full')
    return result, seq


def _change_full(inst: ListInstance, alpha: Colouring, S: frozenset[int],
                 Sprime: frozenset[int]) -> tuple[Colouring, RecoloringSequence]:
    if is_full(inst, alpha, Sprime):
        return alpha, EMPTY
    a, n = inst.a, inst.n
    order = inst.ordering.order
    builder = SequenceBuilder(alpha)

    others = [c for c in inst.colours if c not in S and c not in Sprime]
    gamma = greedy_colouring(inst, others + sorted(Sprime - S) + sorted(S))
    if any(c in S for c in gamma):
        raise InvariantViolation("greedy reference colouring used a colour of the full set")

    # Vertices outside S go to gamma inside the instance with S removed.
    keep = [v for v in range(n) if alpha[v] not in S]
    sub = restrict_instance(inst, alpha, keep, drop=S)
    inner = _transform_list(sub, restrict_colouring(alpha, sub.origin),
                            restrict_colouring(gamma, sub.origin))
    builder.extend(inner.relabel(sub.origin))
    for v in range(n):
        if alpha[v] in S:
            builder.recolour_if_needed(v, gamma[v])

    # Clear Sprime from the vertices holding it; at most 2a colours remain there.
    holding = [v for v in range(n) if gamma[v] in Sprime]
    linear_length = 0
    if holding:
        part = restrict_instance(inst, gamma, holding, drop=others)
        clear = greedy_colouring(part, sorted(S - Sprime) + sorted(Sprime))
        if any(c in Sprime for c in clear):
            raise InvariantViolation("could not clear the new full set from its holders")
        moves = _linear(part, restrict_colouring(gamma, part.origin), clear)
        linear_length = moves.total_length
        builder.extend(moves.relabel(part.origin))

    for v in reversed(order):
        if builder.colour[v] in Sprime:
            continue
        taken = {builder.colour[u] for u in inst.graph.neighbours(v)}
        options = sorted(c for c in Sprime if c in inst.lists[v] and c not in taken)
        if options:
            builder.recolour(v, options[0])

    result = builder.current
    if not is_full(inst, result, Sprime):
        raise InvariantViolation(f"colour set {sorted(Sprime)} is not full after change_full")
    seq = builder.build().compact(alpha)
    bound = bound_recursion(sub.n, sub.k, a) if sub.k else 0
    _check_length(seq, bound + (2 * a + 2) * n, 'change_full')
    if settings.check_bounds and linear_length > 2 * a * len(holding):
        raise InvariantViolation("clearing step exceeded its linear allowance")
    return result, seq


# ---------------------------------------------------------------------------
# Finding a full set
# ---------------------------------------------------------------------------

def find_full(inst: ListInstance, alpha: Colouring) -> tuple[Colouring, frozenset[int], RecoloringSequence]:
    """Reach a colouring with a full set of a colours."""
    _require_slack(inst)
    require_feasible(inst)
    require_colouring(inst, alpha, 'alpha')
    if inst.k < 2 * inst.a:
        raise PreconditionError(f"find_full needs k >= 2a (k = {inst.k}, a = {inst.a})")
    beta, S, seq = _find_full(inst, alpha)
    _check_valid(inst, alpha, seq, beta, 'find_full')
    return beta, S, seq


def _find_full(inst: ListInstance, alpha: Colouring) -> tuple[Colouring, frozenset[int], RecoloringSequence]:
    a, n = inst.a, inst.n
    order = inst.ordering.order
    builder = SequenceBuilder(alpha)
    S = _pad((alpha[v] for v in order[:a]), inst)
    reached = full_prefix(inst, alpha, S)
    while reached < n:
        current = builder.current
        Sprime = _pad((current[v] for v in order[reached:reached + a]), inst)
        prefix = restrict_instance(inst, current, order[:reached])
        _, moves = _change_full(prefix, restrict_colouring(current, prefix.origin), S, Sprime)
        builder.extend(moves.relabel(prefix.origin))
        S = Sprime
        progressed = full_prefix(inst, builder.current, S)
        if progressed < min(n, reached + a):
            raise InvariantViolation(f"full prefix stalled at {progressed} (was {reached})")
        reached = progressed
    seq = builder.build().compact(alpha)
    _check_length(seq, find_full_bound(n, inst.k, a), 'find_full')
    return builder.current, S, seq


# ---------------------------------------------------------------------------
# General list transform
# ---------------------------------------------------------------------------

def transform_list(inst: ListInstance, alpha: Colouring, beta: Colouring) -> RecoloringSequence:
    """alpha -> beta within B(n, k, a) steps on an a-feasible instance, a >= 1."""
    _require_slack(inst)
    require_feasible(inst)
    require_colouring(inst, alpha, 'alpha')
    require_colouring(inst, beta, 'beta')
    seq = _transform_list(inst, alpha, beta)
    _check_valid(inst, alpha, seq, beta, 'transform_list')
    return seq


def _transform_list(inst: ListInstance, alpha: Colouring, beta: Colouring) -> RecoloringSequence:
    if alpha == beta:
        return EMPTY
    if inst.n <= 1:
        return RecoloringSequence((Step(0, beta[0]),))
    if inst.k <= 2 * inst.a:
        return _linear(inst, alpha, beta)

    alpha1, full_set, to_full = _find_full(inst, alpha)
    beta1, beta_set, beta_to_full = _find_full(inst, beta)
    beta2, swap = _change_full(inst, beta1, beta_set, full_set)

    gamma = greedy_colouring(inst, [c for c in inst.colours if c not in full_set] + sorted(full_set))
    if any(c in full_set for c in gamma):
        raise InvariantViolation("reference colouring uses a colour of the full set")

    forward = SequenceBuilder(alpha)
    forward.extend(to_full)
    forward.extend(_to_reference(inst, alpha1, full_set, gamma))
    backward = SequenceBuilder(beta)
    backward.extend(beta_to_full)
    backward.extend(swap)
    backward.extend(_to_reference(inst, beta2, full_set, gamma))
    if forward.current != gamma or backward.current != gamma:
        raise InvariantViolation("the two halves did not meet at the reference colouring")

    seq = (forward.build() + backward.build().inverted(beta)).compact(alpha)
    _check_length(seq, bound_recursion(inst.n, inst.k, inst.a), 'transform_list')
    return seq


def _to_reference(inst: ListInstance, start: Colouring, full_set: frozenset[int],
                  gamma: Colouring) -> RecoloringSequence:
    """Move start to gamma: everything off the full set first, then the rest."""
    keep = [v for v in range(inst.n) if start[v] not in full_set]
    sub = restrict_instance(inst, start, keep, drop=full_set)
    builder = SequenceBuilder(start)
    inner = _transform_list(sub, restrict_colouring(start, sub.origin),
                            restrict_colouring(gamma, sub.origin))
    builder.extend(inner.relabel(sub.origin))
    for v in range(inst.n):
        if start[v] in full_set:
            builder.recolour_if_needed(v, gamma[v])
    return builder.build()


# ---------------------------------------------------------------------------
# Classical k-colourings
# ---------------------------------------------------------------------------

STRATEGIES = ('forget', 'direct')


def transform_k(g: Graph, k: int, alpha: Colouring, beta: Colouring,
                strategy: str = 'forget') -> RecoloringSequence:
    """alpha -> beta between proper k-colourings of g, for k >= d + 2.

    `forget` sends both ends to a (d+1)-colouring built by first-fit, ignoring
    the vertices holding colours above d+1 until the end; `direct` runs the
    list transform on the full palette with a = k - d - 1.
    """
    if strategy not in STRATEGIES:
        raise PreconditionError(f"unknown strategy {strategy!r}")
    d = degeneracy_ordering(g).d
    if k < d + 2:
        raise UnsupportedError(f"k = {k} is below d + 2 = {d + 2}; connectivity is not guaranteed")
    inst = classical_instance(g, k)
    require_colouring(inst, alpha, 'alpha')
    require_colouring(inst, beta, 'beta')
    if alpha == beta:
        return EMPTY
    if strategy == 'direct' or k == d + 2:
        seq = _transform_list(inst, alpha, beta)
    else:
        gamma = greedy_colouring(inst, list(range(k)))
        if max(gamma, default=0) > d:
            raise InvariantViolation("first-fit used more than d + 1 colours")
        forward = _forget_to(inst, alpha, gamma, d)
        backward = _forget_to(inst, beta, gamma, d)
        seq = (forward + backward.inverted(beta)).compact(alpha)
    _check_length(seq, transform_k_bound(g.n, k, d, strategy), 'transform_k')
    _check_valid(inst, alpha, seq, beta, 'transform_k')
    return seq


def _forget_to(inst: ListInstance, start: Colouring, gamma: Colouring, d: int) -> RecoloringSequence:
    high = range(d + 2, inst.k)
    keep = [v for v in range(inst.n) if start[v] <= d + 1]
    sub = restrict_instance(inst.with_slack(1), start, keep, drop=high)
    builder = SequenceBuilder(start)
    inner = _transform_list(sub, restrict_colouring(start, sub.origin),
                            restrict_colouring(gamma, sub.origin))
    builder.extend(inner.relabel(sub.origin))
    for v in range(inst.n):
        if start[v] > d + 1:
            builder.recolour(v, gamma[v])
    return builder.build()
