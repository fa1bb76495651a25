# utils/codec.py
"""JSON <-> model conversion for graphs, colourings and sequences.

Graph:      {"n": int, "edges": [[u, v], ...], "lists": [[...], ...]?, "rotation": [[...], ...]?}
Colouring:  [c_0, ..., c_{n-1}]
Sequence:   {"steps": [{"v": int, "c": int}, ...], "meta": {"length": int, "per_vertex": [...]}}
"""
import json
from dataclasses import dataclass
from typing import Any, Iterable, Sequence

from models.embedding_model import Embedding, faces, forest_embedding
from models.graph_model import Graph
from models.instance_model import ListInstance, build_instance
from models.sequence_model import RecoloringSequence
from utils.errors import InputError
from utils.helpers import load_json_file


@dataclass(frozen=True)
class GraphFile:
    graph: Graph
    lists: list[list[int]] | None = None
    rotation: list[list[int]] | None = None

    def embedding(self) -> Embedding:
        if self.rotation is not None:
            return faces(self.graph, self.rotation)
        if self.graph.is_forest():
            return forest_embedding(self.graph)
        raise InputError("graph file has no rotation system")


def _int(value: Any, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise InputError(f"{what} must be an integer, got {value!r}")
    return value


def _int_rows(rows: Any, what: str, n: int) -> list[list[int]]:
    if not isinstance(rows, list) or len(rows) != n:
        raise InputError(f"{what} must be a list of {n} lists")
    out = []
    for i, row in enumerate(rows):
        if not isinstance(row, list):
            raise InputError(f"{what}[{i}] must be a list")
        out.append([_int(x, f"{what}[{i}] entry") for x in row])
    return out


def graph_from_dict(data: Any) -> GraphFile:
    if not isinstance(data, dict):
        raise InputError("graph JSON must be an object")
    n = _int(data.get('n'), 'n')
    edges = data.get('edges', [])
    if not isinstance(edges, list):
        raise InputError("edges must be a list of pairs")
    pairs = []
    for e in edges:
        if not isinstance(e, list) or len(e) != 2:
            raise InputError(f"edge {e!r} is not a pair")
        pairs.append((_int(e[0], 'edge endpoint'), _int(e[1], 'edge endpoint')))
    graph = Graph.from_edges(n, pairs)
    lists = _int_rows(data['lists'], 'lists', n) if data.get('lists') is not None else None
    if lists and any(c < 0 for row in lists for c in row):
        raise InputError("colours must be non-negative")
    rotation = _int_rows(data['rotation'], 'rotation', n) if data.get('rotation') is not None else None
    return GraphFile(graph, lists, rotation)


def graph_to_dict(g: Graph, lists: Sequence[Iterable[int]] | None = None,
                  rotation: Sequence[Sequence[int]] | None = None) -> dict:
    data = {'n': g.n, 'edges': [list(e) for e in g.sorted_edges()]}
    if lists is not None:
        data['lists'] = [sorted(int(c) for c in lst) for lst in lists]
    if rotation is not None:
        data['rotation'] = [list(r) for r in rotation]
    return data


def colouring_from_json(data: Any) -> tuple[int, ...]:
    if not isinstance(data, list):
        raise InputError("a colouring must be a JSON array of integers")
    colour = tuple(_int(c, 'colour') for c in data)
    if any(c < 0 for c in colour):
        raise InputError("colours must be non-negative")
    return colour


def sequence_from_dict(data: Any) -> RecoloringSequence:
    if isinstance(data, dict):
        data = data.get('steps')
    if not isinstance(data, list):
        raise InputError("sequence JSON needs a 'steps' array")
    steps = []
    for i, step in enumerate(data):
        if isinstance(step, dict) and 'v' in step and 'c' in step:
            steps.append((_int(step['v'], f"steps[{i}].v"), _int(step['c'], f"steps[{i}].c")))
        elif isinstance(step, list) and len(step) == 2:
            steps.append((_int(step[0], f"steps[{i}][0]"), _int(step[1], f"steps[{i}][1]")))
        else:
            raise InputError(f"steps[{i}] must be {{'v': int, 'c': int}}")
    return RecoloringSequence.of(steps)


def _load(path: str) -> Any:
    try:
        return load_json_file(path)
    except FileNotFoundError:
        raise InputError(f"file not found: {path}") from None
    except json.JSONDecodeError as e:
        raise InputError(f"{path} is not valid JSON: {e}") from None


def load_graph(path: str) -> GraphFile:
    return graph_from_dict(_load(path))


def load_colouring(path: str) -> tuple[int, ...]:
    return colouring_from_json(_load(path))


def load_sequence(path: str) -> RecoloringSequence:
    return sequence_from_dict(_load(path))


def instance_for(gf: GraphFile, colors: int | None = None, a: int | None = None) -> ListInstance:
    """ListInstance from a graph file's lists, or {0..colors-1} on every vertex."""
    if gf.lists is not None:
        if colors is not None or a is not None:
            raise InputError("--colors and --a cannot be combined with explicit lists")
        return build_instance(gf.graph, lists=gf.lists)
    if colors is None:
        raise InputError("give --colors K or a graph file with lists")
    return build_instance(gf.graph, k=colors, a=a)
