import sys
import random
from pathlib import Path

import pytest

# Add the project root to Python path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from chromagap.graph import Graph, atlas_graphs, from_edge_list, generate
from chromagap.listcolor import random_assignment


def pytest_collection_modifyitems(config, items):
    """Add markers based on test file location"""
    for item in items:
        path = Path(str(item.fspath))
        if "e2e" in path.parts:
            item.add_marker(pytest.mark.e2e)
        elif "integration" in path.name:
            item.add_marker(pytest.mark.integration)
        elif path.name.startswith("test_"):
            item.add_marker(pytest.mark.unit)


@pytest.fixture(autouse=True)
def isolated_config(tmp_path, monkeypatch):
    """Point config and data directories at a scratch location for every test"""
    monkeypatch.setenv("XDG_CONFIG_HOME", str(tmp_path / "config"))
    monkeypatch.setenv("XDG_DATA_HOME", str(tmp_path / "data"))
    monkeypatch.delenv("CHROMAGAP_CONFIG", raising=False)
    monkeypatch.delenv("CHROMAGAP_BUDGET", raising=False)
    monkeypatch.delenv("CHROMAGAP_WORKERS", raising=False)
    yield tmp_path


@pytest.fixture
def k3() -> Graph:
    return from_edge_list(3, [(0, 1), (0, 2), (1, 2)], name="K3")


@pytest.fixture
def k4() -> Graph:
    return generate("complete:4")


@pytest.fixture
def c4() -> Graph:
    return generate("cycle:4")


@pytest.fixture
def c5() -> Graph:
    return generate("cycle:5")


@pytest.fixture
def p3() -> Graph:
    return generate("path:3")


@pytest.fixture
def paw() -> Graph:
    return generate("paw")


@pytest.fixture
def k24() -> Graph:
    return generate("complete_bipartite:2,4")


@pytest.fixture(scope="session")
def small_connected():
    """Every connected graph on 2..5 vertices"""
    return list(atlas_graphs(max_n=5, min_n=2, connected_only=True))


@pytest.fixture
def rng():
    return random.Random(20240611)


@pytest.fixture
def random_lists():
    """Factory for seeded k-assignments drawn from {1..2k}"""
    def make(g: Graph, k: int, seed: int = 0, universe: int = None):
        return random_assignment(g.n, k, universe or 2 * k, seed)
    return make


@pytest.fixture
def write_file(tmp_path):
    """Write text to a file under the test directory and return its path"""
    def write(name: str, text: str) -> Path:
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return path
    return write
