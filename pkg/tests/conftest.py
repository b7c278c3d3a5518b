from functools import lru_cache
from pathlib import Path

import pytest

from cdcwalk.graph import Graph, read_graph6_file

DATA = Path(__file__).resolve().parent.parent / "data"


@lru_cache(maxsize=None)
def graphs_of_order(n: int) -> tuple[Graph, ...]:
    """All non-isomorphic graphs on n vertices from the bundled corpus."""
    return tuple(read_graph6_file(DATA / f"graph{n}.g6"))


def graphs_up_to(n: int) -> list[Graph]:
    return [g for k in range(1, n + 1) for g in graphs_of_order(k)]


@pytest.fixture(scope="session")
def corpus8_path() -> Path:
    return DATA / "graph8.g6"


# One line per acceptance criterion, echoed in the terminal summary.
ACCEPTANCE: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
