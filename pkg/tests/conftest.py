# tests/conftest.py
import json

import pytest

from config.settings import settings
from models.graph_model import Graph
from services.generator_service import GenSpec, gen_graph


@pytest.fixture(autouse=True)
def _fresh_settings(monkeypatch):
    monkeypatch.delenv('RECOLOR_CHECK_BOUNDS', raising=False)
    monkeypatch.delenv('RECOLOR_QUIET', raising=False)
    settings.reload()
    yield
    settings.reload()


@pytest.fixture
def p2():
    return Graph.from_edges(2, [(0, 1)])


@pytest.fixture
def path3():
    return Graph.from_edges(3, [(0, 1), (1, 2)])


@pytest.fixture
def c4():
    return Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])


@pytest.fixture
def cube():
    return gen_graph(GenSpec('cube'))


@pytest.fixture
def square():
    """2x2 grid: the 4-cycle 0-1-3-2 with its plane rotation."""
    return gen_graph(GenSpec('grid', rows=2, cols=2))


@pytest.fixture
def write_json(tmp_path):
    def write(name, data):
        path = tmp_path / name
        path.write_text(json.dumps(data))
        return str(path)
    return write
