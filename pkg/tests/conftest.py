import sys
from pathlib import Path

import pytest

from netview.graph import parse_edge_list

sys.path.insert(0, str(Path(__file__).resolve().parent))

DATA_DIR = Path(__file__).resolve().parent.parent / "data"


@pytest.fixture(scope="session")
def gbm_text() -> str:
    return (DATA_DIR / "gbm_edges.txt").read_text(encoding="utf-8")


@pytest.fixture(scope="session")
def gbm_graph(gbm_text):
    graph, _ = parse_edge_list(gbm_text)
    return graph


@pytest.fixture(scope="session")
def gbm_path() -> Path:
    return DATA_DIR / "gbm_edges.txt"


@pytest.fixture(scope="session")
def gbm_seeds_path() -> Path:
    return DATA_DIR / "gbm_seeds.txt"
